#pragma once

// Inference model (encoder plus boundary branch), its checkpoint archive,
// and prediction.

#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lpl/boundary.hpp"
#include "lpl/dpe_encoder.hpp"

namespace lpl::harness {

struct Model {
  Model(const dpe::EncoderConfig& encoder_config, const boundary::BoundaryConfig& boundary_config,
        const data::PartMap& parts, int num_joints, int channels,
        std::vector<std::string> class_names, std::mt19937_64& rng);

  std::vector<std::string> classes;
  dpe::Encoder encoder;
  boundary::BoundaryBranch boundary;

  /// Encoder parameters followed by boundary parameters, in a fixed order.
  void for_each_parameter(const std::function<void(const std::string&, ad::Parameter&)>& fn);
};

// Checkpoint layout: the 8 bytes "LPLCKPT1", a little-endian u64 header
// length, a JSON header (configs, dimensions, class names, part map and
// one {name, rows, cols, offset} entry per array) and then every array as
// column-major f64 values. offset counts doubles from the start of the data.
void save_checkpoint(Model& model, const std::filesystem::path& path);
/// Throws DataError on a malformed or truncated file.
Model load_checkpoint(const std::filesystem::path& path);

struct Prediction {
  std::vector<int> framewise;
  std::vector<int> boundaries;  // detected boundary frames, empty without smoothing
  std::optional<std::vector<int>> smoothed;

  const std::vector<int>& labels() const { return smoothed ? *smoothed : framewise; }
};

/// Argmax over the logits; with `smooth`, regions between detected
/// boundaries of the last refinement stage take their majority class.
Prediction predict(Model& model, const data::SkeletonSequence& seq, bool smooth);

}  // namespace lpl::harness
