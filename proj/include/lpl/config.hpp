#pragma once

// Training configuration in a small TOML-style format:
//
//   # comment
//   [section]
//   key = 1.5
//   name = "text"
//   flag = true
//   list = [0, 3]
//
// Every key is addressed as "section.key" and has a default; unknown keys
// are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>

#include "lpl/boundary.hpp"
#include "lpl/dpe_encoder.hpp"
#include "lpl/lda_align.hpp"
#include "lpl/losses.hpp"
#include "lpl/metrics.hpp"

namespace lpl::harness {

struct OptimizerConfig {
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct SoaOptimizerConfig {
  double lr = 0.01;
  double lr_final = 0.001;
  int decay_epochs = 50;
  double momentum = 0.9;
};

enum class SimilaritySource { input, fused };

struct TrainConfig {
  // data
  std::filesystem::path manifest;
  std::filesystem::path text_bank;  // empty: deterministic stub
  int stub_dim = 64;
  std::uint64_t stub_seed = 1;

  dpe::EncoderConfig encoder;
  boundary::BoundaryConfig boundary;
  bool smooth = true;

  loss::LossWeights loss;
  SimilaritySource similarity_source = SimilaritySource::input;

  double align_temperature = 0.1;
  bool invert_class_weights = false;

  lda::SOAConfig soa;
  SoaOptimizerConfig soa_optim;
  OptimizerConfig optim;

  int epochs = 100;
  int batch_size = 6;
  std::uint64_t seed = 0;
  double val_fraction = 0.2;
  std::filesystem::path out_dir = "runs/default";
  bool deterministic = true;
  bool shuffle = true;

  std::set<int> exclude_classes;
  metrics::Matching matching = metrics::Matching::optimal;

  /// Exact text the configuration was parsed from.
  std::string source_text;

  void validate() const;
};

/// Parses config text. Relative paths resolve against `base_dir`.
TrainConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
TrainConfig load_config(const std::filesystem::path& path);

/// Every key with its default value, one per line, grouped by section.
std::string default_config_text();

/// Cosine decay from soa.lr to soa.lr_final over soa.decay_epochs, then held.
double soa_learning_rate(const SoaOptimizerConfig& cfg, int epoch);

}  // namespace lpl::harness
