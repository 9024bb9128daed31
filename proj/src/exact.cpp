#include "exact.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <utility>

namespace selfsim {

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational acc = base;
  while (exp != 0) {
    if (exp & 1u) out *= acc;
    exp >>= 1u;
    if (exp != 0) acc *= acc;
  }
  return out;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::EnumerationGuard,
                "enumeration magnitude exceeds 64-bit range");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::EnumerationGuard,
                "enumeration magnitude exceeds 64-bit range");
  }
  return r;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorCode::EnumerationGuard,
                "integer does not fit a 64-bit value");
  }
  return static_cast<std::int64_t>(v.get_si());
}

namespace {

bool is_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  bool negative = false;
  if (start < text.size() && (text[start] == '-' || text[start] == '+')) {
    negative = text[start] == '-';
    ++start;
  }
  std::size_t slash = text.find('/', start);
  BigInt num, den(1);
  if (slash == std::string::npos) {
    if (!is_digits(text, start, text.size())) {
      throw Error(ErrorCode::Parse, "invalid rational literal '" + text + "'");
    }
    num = BigInt(text.substr(start), 10);
  } else {
    if (!is_digits(text, start, slash) ||
        !is_digits(text, slash + 1, text.size())) {
      throw Error(ErrorCode::Parse, "invalid rational literal '" + text + "'");
    }
    num = BigInt(text.substr(start, slash - start), 10);
    den = BigInt(text.substr(slash + 1), 10);
    if (den == 0) {
      throw Error(ErrorCode::Parse,
                  "zero denominator in rational literal '" + text + "'");
    }
  }
  if (negative) num = -num;
  return make_rational(std::move(num), std::move(den));
}

// Splits n = s^2 * d with d square-free.  Trial division extracts all square
// factors with prime <= 10^6, which is exhaustive for n <= 10^12; larger
// radicands are rejected.
static void squarefree_split(unsigned long n, unsigned long& s,
                             unsigned long& d) {
  if (n > 1000000000000UL) {
    throw Error(ErrorCode::BoundExceeded,
                "radicand too large for square-free normalization");
  }
  s = 1;
  d = 1;
  unsigned long rest = n;
  for (unsigned long f = 2; f * f <= rest; ++f) {
    if (rest % f != 0) continue;
    unsigned e = 0;
    while (rest % f == 0) {
      rest /= f;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= f;
    if (e % 2 == 1) d *= f;
  }
  d *= rest;
}

void ExactReal::normalize_radical() {
  if (r_ == 0 || d_ == 0) {
    r_ = 0;
    d_ = 0;
    return;
  }
  unsigned long s = 1, df = d_;
  if (d_ > 1) squarefree_split(d_, s, df);
  if (s != 1) r_ *= BigInt(s);
  if (df <= 1) {
    p_ += r_ * static_cast<long>(df);  // df == 1: fold; df == 0 unreachable
    r_ = 0;
    d_ = 0;
  } else {
    d_ = df;
  }
}

ExactReal::ExactReal(Rational p, Rational r, unsigned long d)
    : p_(std::move(p)), r_(std::move(r)), d_(d) {
  normalize_radical();
}

ExactReal ExactReal::sqrt_of(unsigned long n) {
  return ExactReal(Rational(0), Rational(1), n);
}

const Rational& ExactReal::as_rational() const {
  if (!is_rational()) {
    throw Error(ErrorCode::NotApplicable,
                "irrational value used where a rational is required");
  }
  return p_;
}

int ExactReal::sign() const {
  const int sp = sgn(p_);
  if (d_ == 0) return sp;
  const int sr = sgn(r_);
  if (sp == 0) return sr;
  if (sp == sr) return sp;
  // Opposite signs: compare p^2 against r^2*d.  Equality would force sqrt(d)
  // rational, impossible for square-free d >= 2.
  Rational lhs = p_ * p_;
  Rational rhs = r_ * r_ * BigInt(d_);
  const int c = cmp(lhs, rhs);
  if (c == 0) {
    throw Error(ErrorCode::Internal, "sqrt(d) collapsed to a rational");
  }
  return sp > 0 ? (c > 0 ? 1 : -1) : (c > 0 ? -1 : 1);
}

ExactReal ExactReal::abs() const { return sign() < 0 ? -*this : *this; }

double ExactReal::to_double() const {
  double v = p_.get_d();
  if (d_ != 0) v += r_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

ExactReal ExactReal::operator-() const {
  ExactReal out;
  out.p_ = -p_;
  out.r_ = -r_;
  out.d_ = d_;
  return out;
}

static void require_same_field(const ExactReal& a, const ExactReal& b) {
  if (a.radicand() != 0 && b.radicand() != 0 &&
      a.radicand() != b.radicand()) {
    throw Error(ErrorCode::MixedRadicals,
                "values from different quadratic extensions");
  }
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  require_same_field(a, b);
  return ExactReal(a.p_ + b.p_, a.r_ + b.r_,
                   a.d_ != 0 ? a.d_ : b.d_);
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  return a + (-b);
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  require_same_field(a, b);
  if (a.d_ == 0) return ExactReal(a.p_ * b.p_, a.p_ * b.r_, b.d_);
  if (b.d_ == 0) return ExactReal(a.p_ * b.p_, a.r_ * b.p_, a.d_);
  BigInt d(a.d_);
  return ExactReal(a.p_ * b.p_ + a.r_ * b.r_ * d,
                   a.p_ * b.r_ + a.r_ * b.p_, a.d_);
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero");
  }
  require_same_field(a, b);
  if (b.d_ == 0) {
    return ExactReal(a.p_ / b.p_, a.r_ / b.p_, a.d_);
  }
  // Multiply by the conjugate; b * conj(b) = pb^2 - rb^2 d is rational and
  // nonzero.
  ExactReal conj;
  conj.p_ = b.p_;
  conj.r_ = -b.r_;
  conj.d_ = b.d_;
  Rational denom = b.p_ * b.p_ - b.r_ * b.r_ * BigInt(b.d_);
  if (denom == 0) {
    throw Error(ErrorCode::Internal, "conjugate norm vanished");
  }
  ExactReal num = a * conj;
  return ExactReal(num.p_ / denom, num.r_ / denom, num.d_);
}

std::string ExactReal::str() const {
  if (is_rational()) return rational_str(p_);
  const std::string ds = std::to_string(d_);
  Rational ra = r_ < 0 ? Rational(-r_) : r_;
  std::string radical =
      ra == 1 ? "sqrt(" + ds + ")" : rational_str(ra) + "*sqrt(" + ds + ")";
  if (p_ == 0) return (sgn(r_) < 0 ? "-" : "") + radical;
  return rational_str(p_) + (sgn(r_) < 0 ? "-" : "+") + radical;
}

ExactReal ExactReal::parse(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty scalar literal");
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "whitespace in scalar literal '" + text + "'");
    }
  }
  const std::size_t pos = text.find("sqrt(");
  if (pos == std::string::npos) return ExactReal(parse_rational(text));
  if (text.back() != ')') {
    throw Error(ErrorCode::Parse, "malformed radical in '" + text + "'");
  }
  const std::string arg = text.substr(pos + 5, text.size() - pos - 6);
  if (!is_digits(arg, 0, arg.size())) {
    throw Error(ErrorCode::Parse, "radicand must be a nonnegative integer in '" +
                                      text + "'");
  }
  unsigned long d = 0;
  try {
    d = std::stoul(arg);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BoundExceeded, "radicand out of range in '" + text + "'");
  }

  Rational p(0), r(1);
  std::string prefix = text.substr(0, pos);
  if (!prefix.empty()) {
    if (prefix == "-") {
      r = -1;
    } else {
      bool has_coeff = false;
      std::string coeff_text;
      if (prefix.back() == '*') {
        has_coeff = true;
        prefix.pop_back();
        if (prefix.empty()) {
          throw Error(ErrorCode::Parse, "empty coefficient in '" + text + "'");
        }
      }
      // A sign at index >= 1 separates the rational part from the radical
      // term; a '-' at index 0 belongs to the leading number.
      std::size_t sep = std::string::npos;
      for (std::size_t i = prefix.size(); i-- > 1;) {
        if (prefix[i] == '+' || prefix[i] == '-') {
          sep = i;
          break;
        }
      }
      if (has_coeff) {
        if (sep == std::string::npos) {
          r = parse_rational(prefix);
        } else {
          p = parse_rational(prefix.substr(0, sep));
          r = parse_rational(prefix.substr(sep + 1));
          if (prefix[sep] == '-') r = -r;
        }
      } else {
        if (sep == std::string::npos || sep + 1 != prefix.size()) {
          throw Error(ErrorCode::Parse,
                      "missing '*' before radical in '" + text + "'");
        }
        p = parse_rational(prefix.substr(0, sep));
        r = prefix[sep] == '-' ? Rational(-1) : Rational(1);
      }
    }
  }
  return ExactReal(std::move(p), std::move(r), d);
}

Rational rational_set_gcd(const std::vector<Rational>& values) {
  if (values.empty()) {
    throw Error(ErrorCode::Degenerate, "common divisor of an empty set");
  }
  BigInt den_lcm(1);
  for (const auto& v : values) den_lcm = lcm(den_lcm, v.get_den());
  BigInt g(0);
  for (const auto& v : values) {
    BigInt scaled = v.get_num() * (den_lcm / v.get_den());
    g = gcd(g, scaled);
  }
  if (g == 0) {
    throw Error(ErrorCode::Degenerate,
                "all values are zero: common divisor unbounded");
  }
  return make_rational(std::move(g), std::move(den_lcm));
}

bool ratio_is_rational(const ExactReal& a, const ExactReal& b) {
  if (b.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "ratio with zero divisor");
  }
  if (!a.is_rational() && !b.is_rational() && a.radicand() != b.radicand()) {
    return false;
  }
  // a = t*b with t rational forces componentwise proportionality.
  return a.rational_part() * b.radical_coeff() ==
         b.rational_part() * a.radical_coeff();
}

}  // namespace selfsim
