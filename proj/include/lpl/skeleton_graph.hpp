#pragma once

// Multi-hop skeleton adjacency and the one-pass spatial feature bank.

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "lpl/autograd.hpp"
#include "lpl/data_io.hpp"

namespace lpl::graph {

using ad::Matrix;

/// Binary hop masks A^(1..Z) plus one trainable additive adjacency per hop.
struct MultiHopGraph {
  int num_joints = 0;
  int max_hops = 0;
  std::vector<Matrix> hop_masks;
  std::vector<ad::Parameter> trainable_adj;
};

/// All-pairs edge distances by BFS; -1 marks unreachable pairs.
std::vector<std::vector<int>> hop_distances(std::span<const std::pair<int, int>> edges, int num_joints);

/// Largest finite distance between any two joints (0 for an edgeless graph).
int graph_diameter(std::span<const std::pair<int, int>> edges, int num_joints);

/// Requested hop count clipped to the diameter (never below 1).
int effective_hops(std::span<const std::pair<int, int>> edges, int num_joints, int max_hops);

/// A^(z)(i, j) = 1 iff d(i, j) == z or i == j. Trainable adjacency starts at zero.
MultiHopGraph build_multihop(std::span<const std::pair<int, int>> edges, int num_joints, int max_hops);

/// Parameters of the bank graph convolution and its channel MLP.
struct SpatialParams {
  ad::Parameter input_projection;  // W^s: [mid x C]
  ad::Parameter mlp_w1;            // [hidden x Z*mid]
  ad::Parameter mlp_b1;            // [1 x hidden]
  ad::Parameter mlp_w2;            // [l x hidden]
  ad::Parameter mlp_b2;            // [1 x l]
  /// Test hook: replaces the MLP ReLU by the identity.
  bool linear_mlp = false;

  int layers() const { return static_cast<int>(mlp_w2.value.rows()); }
};

SpatialParams init_spatial_params(int channels, int mid_channels, int hops, int mlp_hidden,
                                  int layers, std::mt19937_64& rng);

/// Skeleton sequence as a (T*V) x C matrix, row t*V + v.
Matrix sequence_matrix(const data::SkeletonSequence& seq);

/// Per-frame graph aggregation: out(t*V + i, :) = Σ_j adj(i, j) x(t*V + j, :).
ad::Var graph_aggregate(const ad::Var& x, const ad::Var& adj);

/// Differentiable bank B̂ as a (T*V) x l matrix.
ad::Var spatial_bank_var(ad::Tape& tape, const Matrix& sequence, int num_joints,
                         MultiHopGraph& graph, SpatialParams& params);

/// Subgroup `layer` of the bank restricted to `joints`, as a T x |joints| matrix.
ad::Var bank_subgroup(const ad::Var& bank, int layer, std::span<const int> joints, int num_joints);

/// Materialised bank: body_bank[l] is T x V, part_banks[i][l] is T x |Q_i|.
struct SpatialBank {
  std::vector<Matrix> body_bank;
  std::vector<std::vector<Matrix>> part_banks;

  int num_layers() const { return static_cast<int>(body_bank.size()); }
};

SpatialBank spatial_bank(const data::SkeletonSequence& seq, MultiHopGraph& graph,
                         SpatialParams& params, const data::PartMap& parts);

/// Mean over the listed rows (joints) of a joints x D matrix.
Eigen::VectorXd part_pool(const Matrix& features, std::span<const int> joint_indices);

}  // namespace lpl::graph
