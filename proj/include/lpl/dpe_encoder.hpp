#pragma once

// Disentangled part encoder: one temporal stream per body part plus a
// whole-body stream, each fed layer by layer from the spatial bank, then
// part-global interaction, fusion and a framewise classifier.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lpl/autograd.hpp"
#include "lpl/data_io.hpp"
#include "lpl/skeleton_graph.hpp"

namespace lpl::dpe {

using ad::Matrix;

struct EncoderConfig {
  int hidden = 64;      // C_hid
  int bottleneck = 16;  // C_t
  int layers = 10;      // l: temporal layers and bank subgroups
  int num_classes = 2;  // K
  int max_hops = 13;    // Z before clipping to the skeleton diameter
  int bank_channels = 8;
  int bank_mlp_hidden = 64;
  bool part_global_per_layer = false;
  /// Divide φ(K)ᵀV and the cross-attention logits by T so activations do
  /// not scale with sequence length.
  bool length_normalized_attention = true;
  /// Standardize every stream's features over channels after each layer.
  bool normalize_layers = true;

  void validate() const;
};

struct TemporalLayerParams {
  ad::Parameter w_q, b_q;  // [C_t x C_hid], [C_t x 1]
  ad::Parameter w_k, b_k;
  ad::Parameter w_v, b_v;
  ad::Parameter w_out;     // W_t: [C_hid x C_t]
  ad::Parameter w_f;       // spatial interaction: [C_hid x J]
};

TemporalLayerParams init_temporal_layer(int hidden, int bottleneck, int joints, std::mt19937_64& rng);

/// Kernel-size-1 lift of the first bank subgroup (T x J) to C_hid x T.
ad::Var temporal_init(const ad::Var& subgroup, ad::Parameter& weight, ad::Parameter& bias);

/// ReLU(W_t φ(Q)(φ(K)ᵀV) + F) with frames as tokens and φ = sigmoid.
ad::Var linear_attention_layer(const ad::Var& features, TemporalLayerParams& p,
                               bool length_normalized = true);

struct AttentionResult {
  ad::Var output;
  ad::Var attention;  // C_hid x C_hid, rows sum to one
};

/// A = softmax(scale · (W^f Sᵀ) Fᵀ) over keys; output A·F + F.
AttentionResult st_cross_attention(const ad::Var& features, const ad::Var& subgroup,
                                   ad::Parameter& w_f, double scale = 1.0);

/// A = softmax(scale · (W^g F_g + b) F_iᵀ) over keys; output A·F_i + F_i.
AttentionResult part_global_interaction(const ad::Var& part, const ad::Var& body,
                                        ad::Parameter& w_g, ad::Parameter& b_g,
                                        double scale = 1.0);

/// Pointwise projection of [part_1; ...; part_I; body] back to C_hid.
ad::Var fuse(std::span<const ad::Var> parts, const ad::Var& body, ad::Parameter& weight,
             ad::Parameter& bias);

/// K x T logits.
ad::Var classify(const ad::Var& features, ad::Parameter& weight, ad::Parameter& bias);

struct StreamParams {
  std::string name;  // "body" or "part.<name>"
  std::vector<int> joints;
  ad::Parameter init_w, init_b;
  std::vector<TemporalLayerParams> layers;  // layers 2..l
};

struct PartGlobalParams {
  ad::Parameter w_g, b_g;
};

struct EncoderOutput {
  ad::Var logits;                          // K x T
  ad::Var fused;                           // C_hid x T
  ad::Var body;                            // F_g
  std::vector<ad::Var> parts;              // F_i after part-global interaction
  std::vector<ad::Var> parts_before_interaction;
  std::vector<ad::Var> attentions;         // every softmax attention map produced
};

class Encoder {
 public:
  Encoder(EncoderConfig config, const data::PartMap& parts, int num_joints, int channels,
          std::mt19937_64& rng);

  EncoderOutput forward(ad::Tape& tape, const data::SkeletonSequence& seq);

  /// Visits every trainable array with its stable checkpoint name.
  void for_each_parameter(const std::function<void(const std::string&, ad::Parameter&)>& fn);

  const EncoderConfig& config() const { return config_; }
  const data::PartMap& part_map() const { return parts_; }
  int num_joints() const { return num_joints_; }
  int channels() const { return channels_; }
  int hops() const { return graph_.max_hops; }
  graph::MultiHopGraph& graph() { return graph_; }
  graph::SpatialParams& spatial() { return spatial_; }
  StreamParams& body_stream() { return body_; }
  std::vector<StreamParams>& part_streams() { return part_streams_; }

 private:
  EncoderConfig config_;
  data::PartMap parts_;
  int num_joints_;
  int channels_;
  graph::MultiHopGraph graph_;
  graph::SpatialParams spatial_;
  StreamParams body_;
  std::vector<StreamParams> part_streams_;
  // [part][0] or [part][layer-2] when applied per layer.
  std::vector<std::vector<PartGlobalParams>> part_global_;
  ad::Parameter fuse_w_, fuse_b_;
  ad::Parameter cls_w_, cls_b_;
};

/// Value-level results of a forward pass without gradient tracking.
struct EncodedSequence {
  Matrix logits;
  Matrix fused;
  Matrix body;
  std::vector<Matrix> parts;
};

EncodedSequence encode(Encoder& encoder, const data::SkeletonSequence& seq);

/// Framewise argmax of K x T logits.
std::vector<int> argmax_labels(const Matrix& logits);

}  // namespace lpl::dpe
