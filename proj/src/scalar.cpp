#include "supervir/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "supervir/error.hpp"

namespace supervir {

bool valid_field_parameter(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::int64_t m = d < 0 ? -d : d;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (sgn(b_) != 0 && !valid_field_parameter(d_)) {
    throw ConfigError("field parameter d = " + std::to_string(d_) + " is not square-free or is 0/1");
  }
  normalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator in rational literal");
  return Scalar(Rational(num, den));
}

Scalar Scalar::root(std::int64_t d) { return Scalar(Rational(0), Rational(1), d); }

void Scalar::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) d_ = 0;
}

std::int64_t Scalar::joint_d(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw ConfigError("scalars from different quadratic fields: sqrt(" + std::to_string(d_) + ") vs sqrt(" +
                    std::to_string(o.d_) + ")");
}

Rational Scalar::norm() const {
  Rational n = a_ * a_;
  if (d_ != 0) n -= Rational(Integer(static_cast<long>(d_))) * b_ * b_;
  return n;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  Rational n = norm();
  Scalar r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1L);
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = joint_d(o);
  a_ += o.a_;
  b_ += o.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = joint_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_one()) return *this;
  if (is_one()) return *this = o;
  std::int64_t d = joint_d(o);
  if (o.d_ == 0) {
    a_ *= o.a_;
    if (d_ != 0) b_ *= o.a_;
  } else if (d_ == 0) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
  } else {
    // (a + b r)(c + e r) = (ac + d be) + (ae + bc) r
    thread_local Rational t1, t2;
    mpq_mul(t1.get_mpq_t(), a_.get_mpq_t(), o.a_.get_mpq_t());
    mpq_mul(t2.get_mpq_t(), b_.get_mpq_t(), o.b_.get_mpq_t());
    mpz_mul_si(mpq_numref(t2.get_mpq_t()), mpq_numref(t2.get_mpq_t()), static_cast<long>(d));
    mpq_canonicalize(t2.get_mpq_t());
    mpq_add(t1.get_mpq_t(), t1.get_mpq_t(), t2.get_mpq_t());
    mpq_mul(t2.get_mpq_t(), a_.get_mpq_t(), o.b_.get_mpq_t());
    mpq_mul(b_.get_mpq_t(), b_.get_mpq_t(), o.a_.get_mpq_t());
    mpq_add(b_.get_mpq_t(), b_.get_mpq_t(), t2.get_mpq_t());
    mpq_swap(a_.get_mpq_t(), t1.get_mpq_t());
  }
  d_ = d;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

bool operator<(const Scalar& x, const Scalar& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  if (x.a_ != y.a_) return x.a_ < y.a_;
  return x.b_ < y.b_;
}

std::string Scalar::str() const {
  if (is_rational()) return a_.get_str();
  std::ostringstream os;
  os << a_.get_str();
  if (sgn(b_) < 0) {
    os << " - " << Rational(-b_).get_str();
  } else {
    os << " + " << b_.get_str();
  }
  os << "*sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, std::int64_t session_d) : session_d_(session_d) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
    }
    original_ = std::string(text);
  }

  Scalar parse() {
    if (s_.empty()) fail("empty scalar literal");
    Scalar total;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar t = term();
      total += sign > 0 ? t : -t;
      first = false;
    }
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    std::string tok = pos_ < s_.size() ? s_.substr(pos_) : std::string("<end>");
    throw InputError("bad scalar literal \"" + original_ + "\": " + why + " at '" + tok + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool starts_with_sqrt() const { return s_.compare(pos_, 5, "sqrt(") == 0; }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(s_.substr(start, pos_ - start));
  }

  Rational rational() {
    Integer num = integer();
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Scalar root() {
    pos_ += 5;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Integer k = integer();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    if (!k.fits_slong_p()) fail("sqrt argument too large");
    std::int64_t d = k.get_si();
    if (neg) d = -d;
    if (session_d_ != 0 && d != session_d_) {
      throw ConfigError("scalar literal \"" + original_ + "\" uses sqrt(" + std::to_string(d) +
                        ") but the session field is sqrt(" + std::to_string(session_d_) + ")");
    }
    return Scalar::root(d);
  }

  Scalar term() {
    if (starts_with_sqrt()) {
      Scalar r = root();
      if (peek() == '*') {
        ++pos_;
        return r * Scalar(rational());
      }
      return r;
    }
    Rational q = rational();
    if (peek() == '*') {
      ++pos_;
      if (!starts_with_sqrt()) fail("expected sqrt(...)");
      return Scalar(q) * root();
    }
    return Scalar(q);
  }

  std::string s_;
  std::string original_;
  std::size_t pos_ = 0;
  std::int64_t session_d_;
};

}  // namespace

Scalar parse_scalar(std::string_view text, std::int64_t session_d) {
  return ScalarParser(text, session_d).parse();
}

}  // namespace supervir
