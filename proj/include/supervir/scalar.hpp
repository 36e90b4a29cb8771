#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace supervir {

using Rational = mpq_class;
using Integer = mpz_class;

/// True if d is square-free and not 0 or 1.
bool valid_field_parameter(std::int64_t d);

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// Rational scalars (b == 0) carry d == 0 and combine with any field;
/// two irrational scalars must agree on d. Coordinates are always kept in
/// lowest terms, so equality is coordinate-wise.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b, std::int64_t d);

  static Scalar rational(long num, long den = 1);
  /// sqrt(d) itself.
  static Scalar root(std::int64_t d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// a^2 - d b^2
  Rational norm() const;
  Scalar conjugate() const;
  Scalar inverse() const;
  Scalar pow(long n) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Total order on (d, a, b); used only for canonical sorting.
  friend bool operator<(const Scalar& x, const Scalar& y);

  /// Literal form: "p/q" or "p/q + r/s*sqrt(d)".
  std::string str() const;

  /// Re-establish lowest terms; idempotent.
  void normalize();

 private:
  std::int64_t joint_d(const Scalar& o) const;

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Parses a scalar literal such as "3/2", "-1 + 1/2*sqrt(2)", "sqrt(2)",
/// "1 - sqrt(2)". Whitespace is ignored. When session_d is nonzero, any
/// sqrt(k) with k != session_d is rejected with ConfigError.
Scalar parse_scalar(std::string_view text, std::int64_t session_d = 0);

}  // namespace supervir
