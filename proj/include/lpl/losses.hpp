#pragma once

#include <optional>
#include <span>

#include "lpl/autograd.hpp"

namespace lpl::loss {

using ad::Matrix;

struct LossWeights {
  double alpha = 1.0;   // GS-TMSE
  double beta = 0.1;    // boundary regression
  double gamma = 1.0;   // alignment
  std::optional<double> positive_weight;  // w_p; nullopt = negatives/positives per batch
  double sigma = 1.0;   // Gaussian bandwidth of the similarity weight
  double clamp = 4.0;   // truncation of log-probability differences

  void validate() const;
};

/// Mean over frames of -log softmax(logits)[label].
ad::Var ce_loss(const ad::Var& logits, std::span<const int> labels);

/// Gaussian similarity-weighted truncated MSE over adjacent frames:
/// (1 / ((T-1) K)) Σ_t exp(-|x_t - x_{t-1}|² / 2σ²) Σ_c min(|Δ log p|, clamp)².
/// `features` is D x T and carries no gradient. Returns 0 when T < 2.
ad::Var gs_tmse(const ad::Var& logits, const Matrix& features, double sigma, double clamp);

/// Per-stage weighted binary log-loss averaged over stages. Probabilities are
/// clamped to [1e-7, 1 - 1e-7]; NaNs raise NumericError.
ad::Var boundary_loss(std::span<const ad::Var> stage_probs, std::span<const int> targets,
                      double positive_weight);

/// negatives / positives, floored at 1 (1 when there are no positives).
double auto_positive_weight(std::span<const int> targets);

struct LossBreakdown {
  double ce = 0.0;
  double gs_tmse = 0.0;
  double boundary = 0.0;
  double alignment = 0.0;
  double classification = 0.0;  // ce + α gs_tmse + β boundary
  double total = 0.0;           // classification + γ alignment
};

struct TotalLoss {
  ad::Var total;
  LossBreakdown breakdown;
};

/// L = L_ce + α L_gs-tmse + β L_brb + γ L_aln. A missing alignment term counts as 0.
TotalLoss total_loss(const ad::Var& ce, const ad::Var& gs, const ad::Var& brb,
                     const std::optional<ad::Var>& aln, const LossWeights& weights);

}  // namespace lpl::loss
