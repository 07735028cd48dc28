#pragma once

// Training loop, validation, run records and evaluation over a manifest.

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpl/config.hpp"
#include "lpl/lda_align.hpp"
#include "lpl/losses.hpp"
#include "lpl/metrics.hpp"
#include "lpl/model.hpp"
#include "lpl/optim.hpp"

namespace lpl::harness {

struct Dataset {
  std::vector<std::string> classes;
  data::PartMap parts;
  std::vector<data::SkeletonSequence> sequences;

  int num_joints() const { return sequences.front().num_joints; }
  int channels() const { return sequences.front().num_channels; }

  /// Loads every sequence of a manifest; all sequences must share V and C.
  static Dataset load(const std::filesystem::path& manifest);
};

/// Called the first time the alignment loss needs text embeddings.
using TextBankProvider = std::function<const lda::TextBank&()>;

struct EpochRecord {
  int epoch = 0;
  loss::LossBreakdown loss;  // mean over batches
  double train_acc = 0.0;    // unsmoothed framewise accuracy on the training split after the epoch
  double soa_lr = 0.0;
  std::optional<metrics::MetricsReport> validation;
  double seconds = 0.0;
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::vector<EpochRecord> epochs;
  int best_epoch = -1;
  double best_f1 = -1.0;
  std::filesystem::path best_checkpoint;
  std::filesystem::path last_checkpoint;
  std::filesystem::path config_snapshot;
  double wall_clock = 0.0;

  std::string to_json() const;
};

/// Train / validation indices: the last max(1, floor(n * fraction)) sequences
/// validate when fraction > 0 and n > 1.
std::pair<std::vector<int>, std::vector<int>> split_indices(int n, double fraction);

class Trainer {
 public:
  /// Without a provider the text bank comes from config.text_bank or, when
  /// that is empty, from the deterministic stub.
  Trainer(TrainConfig config, Dataset data, TextBankProvider provider = {});

  /// Forward pass over the given sequences, optionally followed by one
  /// optimizer step. Throws NumericError naming a non-finite component.
  loss::LossBreakdown step(std::span<const int> batch, int epoch, bool update = true);

  EpochRecord run_epoch(int epoch);

  /// Full loop. With `write_outputs`, checkpoints, run.json and the config
  /// snapshot go to config.out_dir.
  RunRecord run(bool write_outputs = true,
                const std::function<void(const EpochRecord&)>& on_epoch = {});

  metrics::MetricsReport evaluate_indices(std::span<const int> indices, bool smooth);

  Model& model() { return *model_; }
  const Dataset& data() const { return data_; }
  const TrainConfig& config() const { return config_; }
  const std::vector<int>& train_indices() const { return train_; }
  const std::vector<int>& val_indices() const { return val_; }
  /// True once the alignment head (projections and adapter) has been built.
  bool alignment_ready() const { return align_ != nullptr; }

 private:
  struct AlignmentHead {
    lda::AlignmentParams params;
    lda::SemanticOffsetAdapter adapter;
  };

  AlignmentHead& alignment_head();
  std::vector<optim::NamedParameter> main_parameters();
  std::vector<optim::NamedParameter> soa_parameters();

  TrainConfig config_;
  Dataset data_;
  TextBankProvider provider_;
  std::optional<lda::TextBank> own_bank_;
  std::unique_ptr<Model> model_;
  std::unique_ptr<AlignmentHead> align_;
  std::vector<int> train_;
  std::vector<int> val_;
  optim::Adam adam_;
  optim::Sgd sgd_;
  std::mt19937_64 shuffle_rng_;
  std::mt19937_64 dropout_rng_;
};

/// Loads a checkpoint and scores its predictions on every manifest sequence.
metrics::MetricsReport evaluate_checkpoint(const std::filesystem::path& checkpoint,
                                           const std::filesystem::path& manifest, bool smooth,
                                           const metrics::EvalOptions& options = {});

}  // namespace lpl::harness
