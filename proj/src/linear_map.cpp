#include "bihom/linear_map.hpp"

#include <utility>

namespace bihom {

LinearMap LinearMap::identity(int dim) {
  LinearMap m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Rational(1);
  return m;
}

LinearMap LinearMap::from_columns(const std::vector<Vec>& cols) {
  const int n = static_cast<int>(cols.size());
  LinearMap m(n);
  for (int c = 0; c < n; ++c) {
    if (cols[static_cast<std::size_t>(c)].dim() != n)
      throw DimensionMismatch("column length does not match matrix size");
    for (int r = 0; r < n; ++r) m.at(r, c) = cols[static_cast<std::size_t>(c)][r];
  }
  return m;
}

Vec LinearMap::column(int c) const {
  Vec v(dim_);
  for (int r = 0; r < dim_; ++r) v[r] = at(r, c);
  return v;
}

Vec LinearMap::apply(const Vec& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("map and vector dimensions differ");
  Vec y(dim_);
  for (int c = 0; c < dim_; ++c) {
    const Rational& xc = x[c];
    if (xc.is_zero()) continue;
    for (int r = 0; r < dim_; ++r) {
      const Rational& m = at(r, c);
      if (!m.is_zero()) y[r] += m * xc;
    }
  }
  return y;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
  if (g.dim_ != dim_) throw DimensionMismatch("composed maps have different dimensions");
  LinearMap h(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      const Rational& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) {
        const Rational& b = g.at(k, c);
        if (!b.is_zero()) h.at(r, c) += a * b;
      }
    }
  return h;
}

bool LinearMap::try_invert(LinearMap& out) const {
  LinearMap a = *this;
  LinearMap inv = identity(dim_);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int r = col; r < dim_; ++r)
      if (!a.at(r, col).is_zero()) { pivot = r; break; }
    if (pivot < 0) return false;
    if (pivot != col) {
      for (int c = 0; c < dim_; ++c) {
        std::swap(a.at(pivot, c), a.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Rational p = a.at(col, col);
    for (int c = 0; c < dim_; ++c) {
      a.at(col, c) /= p;
      inv.at(col, c) /= p;
    }
    for (int r = 0; r < dim_; ++r) {
      if (r == col) continue;
      const Rational f = a.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 0; c < dim_; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  out = std::move(inv);
  return true;
}

LinearMap LinearMap::inverse() const {
  LinearMap out;
  if (!try_invert(out)) throw SingularMap("map is singular (determinant is zero)");
  return out;
}

bool LinearMap::invertible() const {
  LinearMap out;
  return try_invert(out);
}

LinearMap LinearMap::power(int n) const {
  if (n < 0) return inverse().power(-n);
  LinearMap r = identity(dim_);
  for (int i = 0; i < n; ++i) r = r.compose(*this);
  return r;
}

bool LinearMap::commutes_with(const LinearMap& g) const {
  if (g.dim_ != dim_) throw DimensionMismatch("maps have different dimensions");
  return compose(g) == g.compose(*this);
}

bool LinearMap::is_identity() const { return *this == identity(dim_); }

}  // namespace bihom
