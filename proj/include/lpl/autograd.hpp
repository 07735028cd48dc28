#pragma once

// Minimal tape-based reverse-mode differentiation over dense double matrices.
//
// A Tape records every operation of one forward pass. Values live in the
// tape and are addressed through lightweight Var handles; calling
// Tape::backward on a 1x1 Var propagates gradients to every node that
// requires them and finally accumulates into the bound Parameters.

#include <Eigen/Dense>

#include <cstddef>
#include <deque>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace lpl::ad {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// A trainable array with its gradient accumulator.
struct Parameter {
  Matrix value;
  Matrix grad;

  void zero_grad() { grad = Matrix::Zero(value.rows(), value.cols()); }
};

class Tape;

class Var {
 public:
  Var() = default;

  const Matrix& value() const;
  Index rows() const { return value().rows(); }
  Index cols() const { return value().cols(); }
  /// Scalar value of a 1x1 Var.
  double item() const;

  Tape* tape() const { return tape_; }
  std::size_t id() const { return id_; }
  bool valid() const { return tape_ != nullptr; }

 private:
  friend class Tape;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

class Tape {
 public:
  using Backward = std::function<void(const Matrix& grad_out, const Matrix& out)>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Matrix value);
  /// Leaf bound to `p`; backward adds into p.grad (allocating it if empty).
  Var parameter(Parameter& p);
  /// Records a derived node. `backward` is only kept when an input needs it.
  Var record(Matrix value, std::initializer_list<Var> inputs, Backward backward);
  Var record(Matrix value, std::span<const Var> inputs, Backward backward);

  bool requires_grad(const Var& v) const { return nodes_[v.id()].requires_grad; }
  const Matrix& value(const Var& v) const { return nodes_[v.id()].value; }

  template <typename Derived>
  void accumulate(const Var& v, const Eigen::MatrixBase<Derived>& g) {
    Node& n = nodes_[v.id()];
    if (!n.requires_grad) return;
    if (n.grad.size() == 0) {
      n.grad = g;
    } else {
      n.grad += g;
    }
  }

  /// Reverse sweep from a 1x1 output.
  void backward(const Var& output);

  /// Gradient stored on a node after backward (empty if none reached it).
  const Matrix& grad(const Var& v) const { return nodes_[v.id()].grad; }

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    bool requires_grad = false;
    Parameter* param = nullptr;
    Backward backward;
  };
  std::deque<Node> nodes_;
};

// Arithmetic.
Var operator+(const Var& a, const Var& b);
Var operator-(const Var& a, const Var& b);
Var operator*(double s, const Var& a);
Var hadamard(const Var& a, const Var& b);
Var add_scalar(const Var& a, double s);

// Products: matmul = a·b, matmul_tn = aᵀ·b, matmul_nt = a·bᵀ.
Var matmul(const Var& a, const Var& b);
Var matmul_tn(const Var& a, const Var& b);
Var matmul_nt(const Var& a, const Var& b);
Var transpose(const Var& a);

/// X + b·1ᵀ with b a column vector (rows x 1).
Var add_col_broadcast(const Var& x, const Var& b);
/// X + 1·b with b a row vector (1 x cols).
Var add_row_broadcast(const Var& x, const Var& b);

// Elementwise nonlinearities.
Var sigmoid(const Var& a);
Var relu(const Var& a);
Var gelu(const Var& a);
Var log(const Var& a);
Var exp(const Var& a);
Var square(const Var& a);
Var abs(const Var& a);
/// Clamp into [lo, hi]; gradient is zero where clamping is active.
Var clamp(const Var& a, double lo, double hi);

/// Softmax along each row (every row sums to one).
Var softmax_rows(const Var& a);
/// Log-softmax along each column.
Var log_softmax_cols(const Var& a);

// Reductions.
Var sum(const Var& a);
Var mean(const Var& a);
/// Σ w ⊙ a with constant weights of the same shape.
Var weighted_sum(const Var& a, const Matrix& weights);
/// Column vector holding the mean of each row over the columns.
Var mean_cols(const Var& a);

// Reshaping and indexing.
Var slice_rows(const Var& a, Index start, Index count);
Var slice_cols(const Var& a, Index start, Index count);
Var concat_rows(std::span<const Var> parts);
Var concat_cols(std::span<const Var> parts);
Var gather_cols(const Var& a, std::span<const int> cols);
Var gather_rows(const Var& a, std::span<const int> rows);
/// Row vector r with r(t) = a(rows[t], t).
Var pick_per_col(const Var& a, std::span<const int> rows);
/// L2-normalises every row. Rows must be non-zero.
Var normalize_rows(const Var& a);
/// Zero mean, unit variance down every column (no affine part).
Var standardize_cols(const Var& a, double eps = 1e-5);
/// out(:, t) = a(:, t - offset), zero where t - offset is out of range.
Var shift_cols(const Var& a, Index offset);

/// Inverted dropout. Identity when rate == 0.
Var dropout(const Var& a, double rate, std::mt19937_64& rng);

}  // namespace lpl::ad
