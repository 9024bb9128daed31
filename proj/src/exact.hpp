#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace selfsim {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  Parse,
  Degenerate,
  MixedRadicals,
  DivisionByZero,
  NotApplicable,
  EnumerationGuard,
  BoundExceeded,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Canonical rational with positive denominator; throws on zero denominator.
Rational make_rational(BigInt num, BigInt den);
Rational rational_pow(const Rational& base, unsigned exp);
std::string rational_str(const Rational& q);
Rational parse_rational(const std::string& text);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t to_int64(const BigInt& v);

// Exact scalar p + r*sqrt(d).  Invariant: d is square-free and >= 2 whenever
// r != 0; purely rational values carry r == 0, d == 0.  Values from one
// problem instance share a single radicand; mixing radicands in arithmetic
// raises MixedRadicals.
class ExactReal {
 public:
  ExactReal() : p_(0), r_(0), d_(0) {}
  ExactReal(long value) : p_(value), r_(0), d_(0) {}
  ExactReal(Rational value) : p_(std::move(value)), r_(0), d_(0) {}
  ExactReal(Rational p, Rational r, unsigned long d);

  static ExactReal sqrt_of(unsigned long n);
  static ExactReal parse(const std::string& text);

  bool is_rational() const { return d_ == 0; }
  const Rational& rational_part() const { return p_; }
  const Rational& radical_coeff() const { return r_; }
  unsigned long radicand() const { return d_; }
  const Rational& as_rational() const;

  bool is_zero() const { return d_ == 0 && p_ == 0; }
  int sign() const;
  ExactReal abs() const;
  double to_double() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);

  bool operator==(const ExactReal& o) const {
    return d_ == o.d_ && p_ == o.p_ && r_ == o.r_;
  }
  bool operator!=(const ExactReal& o) const { return !(*this == o); }
  bool operator<(const ExactReal& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const ExactReal& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const ExactReal& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const ExactReal& o) const { return (*this - o).sign() >= 0; }

  std::string str() const;

 private:
  Rational p_;
  Rational r_;
  unsigned long d_;
  void normalize_radical();
};

// Greatest delta > 0 with every value in delta*Z; throws Degenerate when all
// values are zero (delta unbounded).
Rational rational_set_gcd(const std::vector<Rational>& values);

// a/b in Q, decided exactly; throws DivisionByZero on b == 0.
bool ratio_is_rational(const ExactReal& a, const ExactReal& b);

}  // namespace selfsim
