#pragma once

// Framewise accuracy, segmental edit score and segmental F1@τ.

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lpl/data_io.hpp"

namespace lpl::metrics {

/// 100 · matching frames / T.
double frame_accuracy(std::span<const int> pred, std::span<const int> gt);

/// Unit-cost Levenshtein distance between two class-id sequences.
int levenshtein(std::span<const int> a, std::span<const int> b);

/// 100 · (1 - distance / max(#pred segments, #gt segments)).
double edit_score(std::span<const int> pred, std::span<const int> gt);

/// How predicted segments are paired with ground-truth segments.
enum class Matching {
  /// Maximum one-to-one matching over same-class pairs with IoU >= τ.
  optimal,
  /// Temporal-order greedy: each prediction takes its best unmatched IoU.
  greedy,
};

struct F1Result {
  double precision = 0.0;  // percent
  double recall = 0.0;     // percent
  double f1 = 0.0;         // percent
  int tp = 0;
  int fp = 0;
  int fn = 0;
};

/// Percentages from counts; F1 is 0 when precision + recall is 0.
F1Result f1_from_counts(int tp, int fp, int fn);

double segment_iou(const data::Segment& a, const data::Segment& b);

F1Result f1_at(std::span<const int> pred, std::span<const int> gt, double tau,
               Matching matching = Matching::optimal);

struct SequenceMetrics {
  std::string id;
  int frames = 0;
  double acc = 0.0;
  double edit = 0.0;
  std::map<double, F1Result> f1;
};

struct MetricsReport {
  double acc = 0.0;   // frame-pooled
  double edit = 0.0;  // mean over sequences
  std::map<double, F1Result> f1;  // from pooled counts
  std::vector<SequenceMetrics> per_sequence;

  std::string to_json() const;
  std::string to_table() const;
};

struct EvalOptions {
  std::vector<double> thresholds{0.1, 0.25, 0.5};
  std::set<int> exclude_classes;
  Matching matching = Matching::optimal;
  /// Evaluate sequences on worker threads.
  bool parallel = false;
};

struct LabeledPair {
  std::vector<int> pred;
  std::vector<int> gt;
  std::string id;
};

MetricsReport evaluate(std::span<const LabeledPair> pairs, const EvalOptions& options = {});

}  // namespace lpl::metrics
