#pragma once

#include <gmpxx.h>

#include <string>

#include "bihom/errors.hpp"

namespace bihom {

/// Exact rational scalar. Always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose, scalars read naturally
  Rational(long num, long den) {
    if (den == 0) throw BadParameter("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p" (base 10, optional leading '-', q > 0).
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Canonical text form: "p/q", or "p" when the denominator is 1.
  std::string str() const {
    return q_.get_den() == 1 ? q_.get_num().get_str() : q_.get_str();
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw BadParameter("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

inline Rational Rational::parse(const std::string& s) {
  const auto bad = [&] { throw BadParameter("not a rational: '" + s + "'"); };
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
  if (digits == 0) bad();
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    std::size_t den_digits = 0;
    bool den_nonzero = false;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      if (s[i] != '0') den_nonzero = true;
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != s.size()) bad();
    if (!den_nonzero) throw BadParameter("rational with zero denominator: '" + s + "'");
  }
  mpq_class q(s, 10);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace bihom
