#pragma once

// First-order optimizers over named parameters.

#include <map>
#include <string>
#include <vector>

#include "lpl/autograd.hpp"

namespace lpl::optim {

using ad::Matrix;

struct NamedParameter {
  std::string name;
  ad::Parameter* param;
};

class Adam {
 public:
  Adam(double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  /// Parameters with an empty gradient are left untouched.
  void step(std::span<const NamedParameter> params);
  int steps() const { return step_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  int step_ = 0;
  std::map<std::string, std::pair<Matrix, Matrix>> moments_;
};

/// SGD with heavy-ball momentum; the learning rate is set per step.
class Sgd {
 public:
  explicit Sgd(double momentum = 0.9) : momentum_(momentum) {}

  void step(std::span<const NamedParameter> params, double lr);

 private:
  double momentum_;
  std::map<std::string, Matrix> velocity_;
};

/// Clears gradients so untouched parameters are skipped by the next step.
void zero_grad(std::span<const NamedParameter> params);

}  // namespace lpl::optim
