#pragma once

#include <cmath>
#include <random>

#include "lpl/autograd.hpp"

namespace lpl {

/// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights, as in common 1x1 conv layers.
inline ad::Parameter uniform_weight(ad::Index rows, ad::Index cols, std::mt19937_64& rng,
                                    double fan_in = 0.0) {
  const double bound = 1.0 / std::sqrt(fan_in > 0 ? fan_in : static_cast<double>(cols));
  std::uniform_real_distribution<double> u(-bound, bound);
  ad::Parameter p;
  p.value.resize(rows, cols);
  for (ad::Index i = 0; i < p.value.size(); ++i) p.value.data()[i] = u(rng);
  return p;
}

inline ad::Parameter zeros(ad::Index rows, ad::Index cols) {
  ad::Parameter p;
  p.value = ad::Matrix::Zero(rows, cols);
  return p;
}

}  // namespace lpl
