#pragma once

// Boundary regression branch and majority-vote smoothing.

#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lpl/autograd.hpp"

namespace lpl::boundary {

using ad::Matrix;

struct BoundaryConfig {
  int stages = 3;   // refinement stages after the first prediction
  int layers = 10;  // dilated layers per stage, dilation 2^i
  int width = 64;
  double threshold = 0.5;
  int target_radius = 2;

  void validate() const;
};

struct RefineLayer {
  ad::Parameter w_dilated, b_dilated;  // [width x 3*width], [width x 1]
  ad::Parameter w_pointwise, b_pointwise;
};

struct RefineStage {
  ad::Parameter w_in, b_in;  // [width x 1]
  std::vector<RefineLayer> layers;
  ad::Parameter w_out, b_out;  // [1 x width], [1 x 1]
};

/// Stage-0 head: sigmoid of a pointwise projection of the fused features.
ad::Var boundary_probs(const ad::Var& features, ad::Parameter& weight, ad::Parameter& bias);

/// Applies each stage to the previous stage's probabilities. Returns one
/// 1 x T probability row per stage, not including the input.
std::vector<ad::Var> refine_boundary(const ad::Var& probs, std::span<RefineStage> stages);

/// Frames a stage output at t can see on either side.
int receptive_radius(int layers);

RefineStage init_refine_stage(int layers, int width, std::mt19937_64& rng);

class BoundaryBranch {
 public:
  BoundaryBranch() = default;
  BoundaryBranch(BoundaryConfig config, int hidden, std::mt19937_64& rng);

  /// Probabilities of stage 0 followed by every refinement stage.
  std::vector<ad::Var> forward(const ad::Var& features);

  void for_each_parameter(const std::function<void(const std::string&, ad::Parameter&)>& fn);

  const BoundaryConfig& config() const { return config_; }

  ad::Parameter head_w, head_b;
  std::vector<RefineStage> stages;

 private:
  BoundaryConfig config_;
};

/// Frames with P >= threshold; each run of consecutive candidates collapses
/// to its argmax (first maximum on ties).
std::vector<int> detect_boundaries(std::span<const double> probs, double threshold);

/// Each region [b_i, b_{i+1}) takes its modal prediction; ties go to the
/// lowest class id. The first region always starts at frame 0.
std::vector<int> majority_smooth(std::span<const int> frame_preds, std::span<const int> boundaries);

/// 1 where the label differs from the previous frame, dilated by ±radius.
std::vector<int> boundary_targets(std::span<const int> labels, int radius);

struct BoundaryOutput {
  std::vector<std::vector<double>> probs;  // per stage
  std::vector<int> detected;
};

BoundaryOutput infer_boundaries(BoundaryBranch& branch, const Matrix& features);

}  // namespace lpl::boundary
