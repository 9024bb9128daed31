#include <gmpxx.h>

#include <random>

#include "doctest.h"
#include "exact.hpp"

using namespace selfsim;

namespace {

ExactReal quad(long pn, long pd, long rn, long rd, unsigned long d) {
  return ExactReal(make_rational(BigInt(pn), BigInt(pd)),
                   make_rational(BigInt(rn), BigInt(rd)), d);
}

// 128-bit floating evaluation, independent of the exact sign analysis.
mpf_class to_mpf(const ExactReal& v) {
  mpf_class out(0, 128);
  mpf_class p(0, 128), r(0, 128);
  mpf_set_q(p.get_mpf_t(), v.rational_part().get_mpq_t());
  out = p;
  if (!v.is_rational()) {
    mpf_set_q(r.get_mpf_t(), v.radical_coeff().get_mpq_t());
    mpf_class root(0, 128);
    mpf_sqrt_ui(root.get_mpf_t(), v.radicand());
    out += r * root;
  }
  return out;
}

}  // namespace

TEST_CASE("rational parse and canonical printing") {
  CHECK(rational_str(parse_rational("6/4")) == "3/2");
  CHECK(rational_str(parse_rational("-6/4")) == "-3/2");
  CHECK(rational_str(parse_rational("0")) == "0");
  CHECK(rational_str(parse_rational("-0")) == "0");
  CHECK(rational_str(parse_rational("10")) == "10");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("1 /2"), Error);
}

TEST_CASE("scalar literals round-trip") {
  const char* cases[] = {"0",       "-3/4",       "sqrt(2)",
                         "-sqrt(2)", "2*sqrt(2)", "1/2*sqrt(5)",
                         "-1/2*sqrt(5)", "1+sqrt(2)", "1-2*sqrt(3)",
                         "1/2+3/4*sqrt(5)", "3-1/3*sqrt(7)"};
  for (const char* text : cases) {
    ExactReal v = ExactReal::parse(text);
    CHECK(v.str() == text);
    CHECK(ExactReal::parse(v.str()) == v);
  }
}

TEST_CASE("radical normalization") {
  CHECK(ExactReal::parse("sqrt(8)") == ExactReal::parse("2*sqrt(2)"));
  CHECK(ExactReal::parse("sqrt(9)") == ExactReal(3));
  CHECK(ExactReal::parse("sqrt(0)") == ExactReal(0));
  CHECK(ExactReal::parse("sqrt(1)") == ExactReal(1));
  CHECK(ExactReal::parse("sqrt(12)").radicand() == 3);
  CHECK_THROWS_AS(ExactReal::parse("sqrt(2)+sqrt(3)"), Error);
  CHECK_THROWS_AS(ExactReal::parse("1 + sqrt(2)"), Error);
}

TEST_CASE("arithmetic in one quadratic extension") {
  ExactReal root2 = ExactReal::sqrt_of(2);
  CHECK(root2 * root2 == ExactReal(2));
  CHECK((root2 + root2) == quad(0, 1, 2, 1, 2));
  CHECK((ExactReal(1) + root2) * (ExactReal(1) - root2) == ExactReal(-1));
  CHECK((ExactReal(2) / root2) == root2);
  CHECK_THROWS_AS(root2 + ExactReal::sqrt_of(3), Error);
  CHECK_THROWS_AS(ExactReal(1) / ExactReal(0), Error);
}

TEST_CASE("exact ordering by sign analysis") {
  // 7/5 < sqrt(2) < 3/2 and 99/70 > sqrt(2) (continued-fraction neighbors).
  ExactReal root2 = ExactReal::sqrt_of(2);
  CHECK(ExactReal(make_rational(7, 5)) < root2);
  CHECK(root2 < ExactReal(make_rational(3, 2)));
  CHECK(root2 < ExactReal(make_rational(99, 70)));
  CHECK(quad(1, 1, -1, 1, 2).sign() < 0);   // 1 - sqrt(2) < 0
  CHECK(quad(3, 2, -1, 1, 2).sign() > 0);   // 3/2 - sqrt(2) > 0
  CHECK(quad(0, 1, 1, 1, 2) > ExactReal(1));
}

TEST_CASE("ordering agrees with 128-bit floating evaluation") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<long> num(-10000, 10000);
  std::uniform_int_distribution<long> den(1, 10000);
  const unsigned long radicands[] = {2, 3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick(0, 5);
  for (int i = 0; i < 10000; ++i) {
    const unsigned long d = radicands[pick(rng)];
    ExactReal a = quad(num(rng), den(rng), num(rng), den(rng), d);
    ExactReal b = quad(num(rng), den(rng), num(rng), den(rng), d);
    const int exact = (a - b).sign();
    const int approx = cmp(to_mpf(a), to_mpf(b));
    CHECK(exact == (approx > 0 ? 1 : approx < 0 ? -1 : 0));
  }
}

TEST_CASE("construction round-trip and additive inverse") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    Rational q = make_rational(BigInt(num(rng)), BigInt(den(rng)));
    ExactReal v{q};
    CHECK(ExactReal::parse(v.str()) == v);
    CHECK((v + (-v)).is_zero());
  }
}

TEST_CASE("rational_set_gcd on the worked examples") {
  CHECK(rational_set_gcd({Rational(4), Rational(6), Rational(10)}) ==
        Rational(2));
  CHECK(rational_set_gcd({make_rational(1, 2), make_rational(3, 2),
                          Rational(5)}) == make_rational(1, 2));
  CHECK_THROWS_AS(rational_set_gcd({Rational(0), Rational(0)}), Error);
}

TEST_CASE("rational_set_gcd divides exactly and maximally") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rational> values;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
      values.push_back(make_rational(BigInt(num(rng)), BigInt(den(rng))));
    }
    bool all_zero = true;
    for (const auto& v : values) all_zero = all_zero && v == 0;
    if (all_zero) continue;
    const Rational delta = rational_set_gcd(values);
    CHECK(delta > 0);
    BigInt quot_gcd(0);
    for (const auto& v : values) {
      Rational t = v / delta;
      REQUIRE(t.get_den() == 1);  // delta divides every input
      quot_gcd = gcd(quot_gcd, BigInt(t.get_num()));
    }
    CHECK(quot_gcd == 1);  // no multiple k*delta, k >= 2, divides
  }
}

TEST_CASE("ratio_is_rational on the worked examples") {
  CHECK(ratio_is_rational(ExactReal(3), ExactReal(6)));
  CHECK_FALSE(ratio_is_rational(ExactReal::sqrt_of(2), ExactReal(1)));
  ExactReal two_root2 = ExactReal(2) * ExactReal::sqrt_of(2);
  CHECK(ratio_is_rational(two_root2, ExactReal::sqrt_of(2)));
  CHECK(ratio_is_rational(ExactReal(0), ExactReal::sqrt_of(2)));
  CHECK_FALSE(ratio_is_rational(ExactReal(1) + ExactReal::sqrt_of(2),
                                ExactReal(1)));
  CHECK_THROWS_AS(ratio_is_rational(ExactReal(1), ExactReal(0)), Error);
}
