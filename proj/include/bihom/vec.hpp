#pragma once

#include <string>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

/// Coordinate vector in the fixed basis e_0 .. e_{dim-1}.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int dim) : c_(static_cast<std::size_t>(dim)) {}

  static Vec basis(int dim, int i) {
    Vec v(dim);
    v.c_[static_cast<std::size_t>(i)] = Rational(1);
    return v;
  }

  int dim() const { return static_cast<int>(c_.size()); }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Indices of the nonzero coordinates, ascending.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < dim(); ++i)
      if (!c_[static_cast<std::size_t>(i)].is_zero()) s.push_back(i);
    return s;
  }

  Vec& operator+=(const Vec& o) {
    require_same_dim(o);
    for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    require_same_dim(o);
    for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(const Rational& a) {
    for (auto& x : c_) x *= a;
    return *this;
  }
  /// Adds a * v; avoids a temporary.
  Vec& add_scaled(const Rational& a, const Vec& v) {
    require_same_dim(v);
    if (a.is_zero()) return *this;
    for (int i = 0; i < dim(); ++i) {
      if (!v.c_[i].is_zero()) c_[i] += a * v.c_[i];
    }
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& a, Vec v) { return v *= a; }
  friend Vec operator-(const Vec& v) {
    Vec r(v.dim());
    return r -= v;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ", ";
      s += c_[static_cast<std::size_t>(i)].str();
    }
    return s + ")";
  }

 private:
  void require_same_dim(const Vec& o) const {
    if (o.dim() != dim()) throw DimensionMismatch("vector dimensions differ");
  }
  std::vector<Rational> c_;
};

}  // namespace bihom
