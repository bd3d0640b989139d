#pragma once

#include <vector>

#include "bihom/vec.hpp"

namespace bihom {

/// Square rational matrix in column convention: at(r, c) is the coefficient
/// of e_r in the image of e_c, and application is y = M x.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}

  static LinearMap identity(int dim);
  /// cols[c] is the image of e_c.
  static LinearMap from_columns(const std::vector<Vec>& cols);

  int dim() const { return dim_; }
  Rational& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * dim_ + c]; }

  Vec column(int c) const;
  Vec apply(const Vec& x) const;

  /// (f.compose(g))(x) = f(g(x)); same as the matrix product f * g.
  LinearMap compose(const LinearMap& g) const;
  friend LinearMap operator*(const LinearMap& f, const LinearMap& g) { return f.compose(g); }

  /// Exact inverse; throws SingularMap when the determinant is zero.
  LinearMap inverse() const;
  bool invertible() const;

  /// f^n, n may be negative (uses the exact inverse).
  LinearMap power(int n) const;

  bool commutes_with(const LinearMap& g) const;
  bool is_identity() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }

 private:
  // Gauss-Jordan on [this | I]; returns false at the first zero pivot.
  bool try_invert(LinearMap& out) const;

  int dim_ = 0;
  std::vector<Rational> e_;  // row-major
};

}  // namespace bihom
