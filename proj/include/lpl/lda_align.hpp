#pragma once

// Language-assisted distribution alignment: per-class, per-part text
// embeddings act as cluster centres for segment-pooled motion embeddings.

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lpl/autograd.hpp"
#include "lpl/data_io.hpp"

namespace lpl::lda {

using ad::Matrix;

/// Text embeddings laid out per stream: streams [0, I) are parts in part-map
/// order, stream I is the whole body. Each stream is a K x D matrix with
/// unit-norm rows.
class TextBank {
 public:
  TextBank() = default;
  TextBank(std::vector<std::string> classes, std::vector<std::string> parts,
           std::vector<Matrix> streams);

  int dim() const { return streams_.empty() ? 0 : static_cast<int>(streams_.front().cols()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int num_streams() const { return static_cast<int>(streams_.size()); }
  int body_stream() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<std::string>& parts() const { return parts_; }

  /// K x D class matrix of a stream. Every call counts as one access.
  const Matrix& stream(int s) const;
  /// Embedding of one class for a part name, or for the body when part is empty.
  Eigen::VectorXd vector(int class_id, const std::string& part = {}) const;

  std::uint64_t access_count() const { return accesses_->load(); }

 private:
  std::vector<std::string> classes_;
  std::vector<std::string> parts_;
  std::vector<Matrix> streams_;
  std::shared_ptr<std::atomic<std::uint64_t>> accesses_ =
      std::make_shared<std::atomic<std::uint64_t>>(0);
};

struct Prompt {
  std::string class_name;
  std::string target;  // part name or "body"
  std::string text;
};

std::vector<Prompt> emit_prompts(const std::vector<std::string>& class_names,
                                 const std::vector<std::string>& part_names);
/// One prompt per line as "<class>|<part-or-body>|<text>".
void write_prompts(const std::vector<Prompt>& prompts, const std::filesystem::path& path);

/// Validates completeness against the class and part names and L2-normalises rows.
TextBank load_text_bank(const std::filesystem::path& path, const std::vector<std::string>& classes,
                        const std::vector<std::string>& parts);
void save_text_bank(const TextBank& bank, const std::filesystem::path& path);

/// Deterministic unit-norm pseudo-embeddings keyed on (class, part, seed).
/// Distinct keys are redrawn until |cos| < 0.5 (dim must be >= 64).
TextBank stub_text_bank(const std::vector<std::string>& classes,
                        const std::vector<std::string>& parts, int dim, std::uint64_t seed);

struct PooledInstance {
  int class_id;
  Eigen::VectorXd embedding;
};

/// Frame-mean of stream features (C x T) over each segment.
std::vector<PooledInstance> segment_pool(const Matrix& features, const data::SegmentList& segs);
/// Differentiable variant: C x N matrix with one column per segment.
ad::Var segment_pool(const ad::Var& features, const data::SegmentList& segs);

enum class SoaVariant { none, residual, prompt, cross_domain };

SoaVariant parse_soa_variant(const std::string& name);
std::string to_string(SoaVariant v);

struct SOAConfig {
  SoaVariant variant = SoaVariant::residual;
  int hidden = 128;
  double dropout = 0.1;
  int tokens = 5;
  int attention_dim = 0;  // cross-domain key width; 0 means D_text
};

/// Semantic offset adapter applied to a K x D text matrix.
class SemanticOffsetAdapter {
 public:
  SemanticOffsetAdapter() = default;
  SemanticOffsetAdapter(SOAConfig config, int dim, std::mt19937_64& rng);

  /// `context` (K x D motion embeddings) is required by the cross-domain variant.
  /// Dropout is active only when `rng` is given.
  ad::Var apply(const ad::Var& text, const std::optional<ad::Var>& context,
                std::mt19937_64* rng = nullptr);

  void for_each_parameter(const std::function<void(const std::string&, ad::Parameter&)>& fn);

  const SOAConfig& config() const { return config_; }

  // residual: text + W2 drop(gelu(W1 text + b1)) + b2, W2/b2 start at zero.
  ad::Parameter res_w1, res_b1, res_w2, res_b2;
  // prompt: learnable token embeddings summed into each text vector.
  ad::Parameter prompt_tokens;
  // cross-domain: Q from motion, K and V from text.
  ad::Parameter cross_wq, cross_wk, cross_wv;

 private:
  SOAConfig config_;
  int dim_ = 0;
};

/// Eval-mode adapter application to every stream of a bank.
TextBank apply_soa(const TextBank& bank, SemanticOffsetAdapter& adapter,
                   const std::vector<Matrix>* context = nullptr);

struct AlignmentParams {
  std::vector<ad::Parameter> proj_w;  // per stream: D x C_hid
  std::vector<ad::Parameter> proj_b;  // per stream: D x 1
  double temperature = 0.1;
  bool invert_class_weights = false;
};

AlignmentParams init_alignment_params(int streams, int hidden, int dim, double temperature,
                                      std::mt19937_64& rng);

/// w_k = Count(k) / Count(instances); inverted: proportional to 1 / Count(k),
/// normalised over the classes present. Absent classes get weight 0.
std::vector<double> class_weights(std::span<const int> classes, int num_classes, bool invert);

struct StreamInstances {
  ad::Var embeddings;        // C_hid x N pooled segment features
  std::vector<int> classes;  // N class ids
};

/// Σ_streams Σ_instances w[class] · KL(onehot ‖ softmax(cos / τ)), with the
/// cosine taken between the projected instance and every class text vector.
/// `text[s]` is the (possibly adapted) K x D text matrix of stream s.
ad::Var alignment_loss(std::span<const StreamInstances> instances, std::span<const ad::Var> text,
                       AlignmentParams& params);

}  // namespace lpl::lda
