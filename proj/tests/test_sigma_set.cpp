#include <random>

#include "doctest.h"
#include "sigma_set.hpp"

using namespace selfsim;

namespace {

SigmaSet ints(std::initializer_list<long> digits) {
  std::vector<ExactReal> out;
  for (long d : digits) out.emplace_back(d);
  return SigmaSet::from_digits(std::move(out));
}

std::vector<long> longs(const std::vector<ExactReal>& values) {
  std::vector<long> out;
  for (const auto& v : values) out.push_back(v.as_rational().get_num().get_si());
  return out;
}

}  // namespace

TEST_CASE("construction validates digits") {
  CHECK_THROWS_AS(ints({3}), Error);
  CHECK_THROWS_AS(ints({1, 1}), Error);
  CHECK_THROWS_AS(SigmaSet::parse("0,sqrt(2),sqrt(3)"), Error);
  CHECK(SigmaSet::parse("9,0,1,8").str() == "0,1,8,9");
  CHECK(ints({0, 1, 2}).ratio() == make_rational(1, 3));
  CHECK(ints({0, 1, 2}).critical_ratio());
  CHECK_FALSE(ints({0, 1}).with_ratio(make_rational(1, 3)).critical_ratio());
}

TEST_CASE("difference_set examples") {
  CHECK(longs(difference_set(ints({0, 1}))) == std::vector<long>{-1, 0, 1});
  CHECK(longs(difference_set(ints({0, 1, 3}))) ==
        std::vector<long>{-3, -2, -1, 0, 1, 2, 3});
  // Direct enumeration gives 9 distinct differences for {0,1,8,9}.
  CHECK(longs(difference_set(ints({0, 1, 8, 9}))) ==
        std::vector<long>{-9, -8, -7, -1, 0, 1, 7, 8, 9});
}

TEST_CASE("common_divisor examples") {
  CHECK(common_divisor(ints({3, 5, 7})) == ExactReal(2));
  CHECK(common_divisor(ints({0, 1, 8, 9})) == ExactReal(1));
  // Sigma_u = {0,1,1+u,u*sqrt(2)} at u = 1.
  SigmaSet su = SigmaSet::parse("0,1,2,sqrt(2)");
  CHECK_FALSE(common_divisor(su).has_value());
  // All differences rational multiples of sqrt(2).
  SigmaSet scaled = SigmaSet::parse("0,sqrt(2),2*sqrt(2)");
  CHECK(common_divisor(scaled) == ExactReal::sqrt_of(2));
}

TEST_CASE("normalize examples") {
  Normalization n1 = normalize(ints({0, 1, 2}));
  CHECK(n1.sigma_star == std::vector<BigInt>{0, 1, 2});
  CHECK(n1.shift == ExactReal(0));
  CHECK(n1.delta == ExactReal(1));

  Normalization n2 = normalize(ints({3, 5, 7}));
  CHECK(n2.sigma_star == std::vector<BigInt>{0, 1, 2});
  CHECK(n2.shift == ExactReal(3));
  CHECK(n2.delta == ExactReal(2));

  Normalization n3 = normalize(SigmaSet::parse("0,1/2,3/2"));
  CHECK(n3.sigma_star == std::vector<BigInt>{0, 1, 3});
  CHECK(n3.delta == ExactReal(make_rational(1, 2)));

  CHECK_THROWS_AS(normalize(SigmaSet::parse("0,1,2,sqrt(2)")), Error);
}

TEST_CASE("normalize is idempotent") {
  for (const char* text : {"3,5,7", "0,1/2,3/2", "0,2,9,15"}) {
    Normalization once = normalize(SigmaSet::parse(text));
    std::vector<ExactReal> digits;
    for (const auto& v : once.sigma_star) digits.emplace_back(Rational(v));
    Normalization twice = normalize(SigmaSet::from_digits(digits));
    CHECK(twice.shift == ExactReal(0));
    CHECK(twice.delta == ExactReal(1));
    CHECK(twice.sigma_star == once.sigma_star);
  }
}

TEST_CASE("residue_profile examples") {
  CHECK(residue_profile(normalize(ints({0, 1, 2})), 3).complete);
  ResidueProfile r2 = residue_profile(normalize(ints({0, 1, 8, 9})), 4);
  CHECK(r2.residues == std::vector<unsigned>{0, 1, 0, 1});
  CHECK_FALSE(r2.complete);
  ResidueProfile r3 = residue_profile(normalize(ints({0, 1, 5})), 3);
  CHECK(r3.residues == std::vector<unsigned>{0, 1, 2});
  CHECK(r3.complete);
}

TEST_CASE("max_gap and thresholds") {
  CHECK(max_gap(ints({0, 1, 2})) == ExactReal(1));
  CHECK(max_gap(ints({0, 1, 8, 9})) == ExactReal(7));
  CHECK(max_gap(ints({0, 3})) == ExactReal(3));

  CHECK(interval_threshold(ints({0, 1})) == ExactReal(make_rational(1, 2)));
  CHECK(interval_threshold(ints({0, 1, 2})) == ExactReal(make_rational(1, 3)));
  CHECK(interval_threshold(ints({0, 1, 8, 9})) ==
        ExactReal(make_rational(7, 16)));

  CHECK(containment_threshold(ints({0, 1})) == ExactReal(make_rational(1, 2)));
  CHECK(containment_threshold(ints({0, 1, 2})) ==
        ExactReal(make_rational(1, 3)));
  CHECK(containment_threshold(ints({0, 1, 8, 9})) ==
        ExactReal(make_rational(7, 16)));
  CHECK(containment_threshold(ints({0, 1, 8, 9})) <=
        interval_threshold(ints({0, 1, 8, 9})));
}

TEST_CASE("containment equals the best window over digit pairs") {
  // Independent route: the minimum over subsets is attained by taking all
  // digits between some pair, so min over pairs of I(Sigma intersected with
  // [digit_i, digit_j]) must agree with the exhaustive enumeration.
  std::mt19937 rng(123);
  std::uniform_int_distribution<long> digit(0, 40);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<ExactReal> digits;
    std::uniform_int_distribution<int> len(2, 7);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) digits.emplace_back(digit(rng));
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    if (digits.size() < 2) continue;
    SigmaSet sigma = SigmaSet::from_digits(digits);

    std::optional<ExactReal> best;
    const auto& ds = sigma.digits();
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = i + 1; j < ds.size(); ++j) {
        ExactReal gap = ds[i + 1] - ds[i];
        for (std::size_t t = i + 1; t <= j; ++t) {
          ExactReal g = ds[t] - ds[t - 1];
          if (g > gap) gap = g;
        }
        ExactReal diam = ds[j] - ds[i];
        ExactReal val = gap / (gap + diam);
        if (!best || val < *best) best = val;
      }
    }
    CHECK(containment_threshold(sigma) == *best);
  }
}

TEST_CASE("affine invariance of thresholds and residues") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<long> digit(0, 30);
  std::uniform_int_distribution<long> scale_num(1, 9);
  std::uniform_int_distribution<long> scale_den(1, 9);
  std::uniform_int_distribution<long> off(-20, 20);
  for (int trial = 0; trial < 80; ++trial) {
    std::vector<ExactReal> digits;
    std::uniform_int_distribution<int> len(2, 6);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) digits.emplace_back(digit(rng));
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    if (digits.size() < 2) continue;
    SigmaSet sigma = SigmaSet::from_digits(digits);

    ExactReal a{make_rational(BigInt(scale_num(rng)), BigInt(scale_den(rng)))};
    ExactReal b{Rational(off(rng))};
    SigmaSet image = sigma.affine_image(a, b);

    CHECK(interval_threshold(image) == interval_threshold(sigma));
    CHECK(containment_threshold(image) == containment_threshold(sigma));
    const unsigned m = static_cast<unsigned>(sigma.size());
    CHECK(residue_profile(normalize(image), m).residues ==
          residue_profile(normalize(sigma), m).residues);
    // delta scales by |a|.
    CHECK(normalize(image).delta == a.abs() * normalize(sigma).delta);
  }
}

TEST_CASE("subset enumeration bound") {
  std::vector<ExactReal> digits;
  for (long i = 0; i < 21; ++i) digits.emplace_back(i);
  CHECK_THROWS_AS(containment_threshold(SigmaSet::from_digits(digits)), Error);
}
