#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "cyclotomic.hpp"
#include "doctest.h"

using namespace selfsim;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

std::vector<BigInt> exps(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Independent check: direct complex summation.
double direct_magnitude(const std::vector<unsigned long>& exponents,
                        unsigned long order) {
  std::complex<double> sum(0.0, 0.0);
  const double two_pi = 2.0 * M_PI;
  for (unsigned long e : exponents) {
    const double arg = two_pi * static_cast<double>(e) /
                       static_cast<double>(order);
    sum += std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return std::abs(sum);
}

IntPoly digit_poly(const std::vector<unsigned long>& exponents,
                   unsigned long order) {
  std::vector<BigInt> c(order, BigInt(0));
  for (unsigned long e : exponents) c[e % order] += 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly({1, 1}));
  CHECK(cyclotomic_poly(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_poly(9) == poly({1, 0, 0, 1, 0, 0, 1}));  // X^6+X^3+1
  CHECK(cyclotomic_poly(16).degree() == 8);
  CHECK(cyclotomic_poly(105).degree() == 48);  // first order with |coeff| 2
}

TEST_CASE("cyclotomic value at 1 detects prime powers") {
  for (unsigned long n = 2; n <= 200; ++n) {
    BigInt at_one = cyclotomic_poly(n).eval_one();
    unsigned long base = 0;
    unsigned long rest = n;
    for (unsigned long f = 2; f <= rest; ++f) {
      if (rest % f == 0) {
        base = f;
        while (rest % f == 0) rest /= f;
        break;
      }
    }
    if (rest == 1) {
      CHECK(at_one == BigInt(base));  // prime power
    } else {
      CHECK(at_one == 1);
    }
  }
}

TEST_CASE("vanishing_sum worked examples") {
  VanishCertificate full = vanishing_sum(exps({0, 1, 2}), 3);
  CHECK(full.vanishes);
  CHECK(full.quotient == poly({1}));

  VanishCertificate mg = vanishing_sum(exps({0, 1, 8, 9}), 16);
  CHECK(mg.vanishes);
  CHECK(mg.quotient * cyclotomic_poly(16) ==
        digit_poly({0, 1, 8, 9}, 16));

  VanishCertificate no = vanishing_sum(exps({0, 1, 3}), 9);
  CHECK_FALSE(no.vanishes);

  // Exponents reduce mod N.
  CHECK(vanishing_sum(exps({9, 10, 17, 18}), 16).vanishes);
  CHECK_FALSE(vanishing_sum(exps({0, 0, 1}), 3).vanishes);
  CHECK(vanishing_sum(exps({0, 1, 2, 0, 1, 2}), 3).vanishes);
}

TEST_CASE("vanishing_sum agrees with direct complex summation") {
  std::mt19937 rng(424242);
  const unsigned long orders[] = {9, 16, 27, 64, 81, 243, 729};
  std::uniform_int_distribution<int> pick(0, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned long order = orders[pick(rng)];
    std::vector<unsigned long> exponents;
    if (trial % 2 == 0) {
      std::uniform_int_distribution<int> len(1, 18);
      std::uniform_int_distribution<unsigned long> e(0, order - 1);
      const int n = len(rng);
      for (int i = 0; i < n; ++i) exponents.push_back(e(rng));
    } else {
      // Union of cosets of a nontrivial subgroup: a guaranteed zero.
      std::vector<unsigned long> divisors;
      for (unsigned long c = 2; c <= order; ++c) {
        if (order % c == 0) divisors.push_back(c);
      }
      std::uniform_int_distribution<std::size_t> di(0, divisors.size() - 1);
      const unsigned long c = divisors[di(rng)];
      std::uniform_int_distribution<int> cosets(1, 3);
      std::uniform_int_distribution<unsigned long> offset(0, order - 1);
      const int reps = cosets(rng);
      for (int r = 0; r < reps; ++r) {
        const unsigned long x = offset(rng);
        for (unsigned long j = 0; j < c; ++j) {
          exponents.push_back((x + j * (order / c)) % order);
        }
      }
    }
    std::vector<BigInt> big;
    for (unsigned long e : exponents) big.emplace_back(static_cast<long>(e));
    VanishCertificate cert = vanishing_sum(big, order);
    const double mag = direct_magnitude(exponents, order);
    CHECK(cert.vanishes == (mag < 1e-9));
    if (cert.vanishes) {
      CHECK(cert.quotient * cyclotomic_poly(order) ==
            digit_poly(exponents, order));
    }
  }
}

TEST_CASE("vanishing is invariant under the Galois action") {
  std::mt19937 rng(555);
  const unsigned long orders[] = {9, 12, 16, 27, 36, 64};
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned long order = orders[pick(rng)];
    std::uniform_int_distribution<int> len(2, 12);
    std::uniform_int_distribution<unsigned long> e(0, order - 1);
    std::vector<unsigned long> exponents;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) exponents.push_back(e(rng));
    unsigned long a = 0;
    std::uniform_int_distribution<unsigned long> av(1, order - 1);
    do {
      a = av(rng);
    } while (std::gcd(a, order) != 1);

    std::vector<BigInt> base, mapped;
    for (unsigned long x : exponents) {
      base.emplace_back(static_cast<long>(x));
      mapped.emplace_back(static_cast<long>((x * a) % order));
    }
    CHECK(vanishing_sum(base, order).vanishes ==
          vanishing_sum(mapped, order).vanishes);
  }
}

TEST_CASE("coset unions vanish") {
  std::mt19937 rng(77);
  const unsigned long orders[] = {8, 9, 12, 16, 27, 30};
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned long order = orders[pick(rng)];
    std::vector<unsigned long> sub;
    for (unsigned long c = 2; c <= order; ++c) {
      if (order % c == 0) sub.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> di(0, sub.size() - 1);
    const unsigned long c = sub[di(rng)];
    std::uniform_int_distribution<unsigned long> offset(0, order - 1);
    std::vector<BigInt> exponents;
    const unsigned long x = offset(rng);
    for (unsigned long j = 0; j < c; ++j) {
      exponents.emplace_back(static_cast<long>((x + j * (order / c)) % order));
    }
    CHECK(vanishing_sum(exponents, order).vanishes);
  }
}

TEST_CASE("condition_ix_search tables") {
  // {0,1,2}: smallest k is the 3-adic valuation of n plus one.
  IxSearchResult r1 = condition_ix_search({0, 1, 2}, 3, 9, 4);
  CHECK(r1.failures.empty());
  for (const auto& entry : r1.table) {
    unsigned v = 0, rest = entry.n;
    while (rest % 3 == 0) {
      rest /= 3;
      ++v;
    }
    CHECK(entry.k == v + 1);
  }

  IxSearchResult r2 = condition_ix_search({0, 1, 8, 9}, 4, 4, 4);
  REQUIRE(r2.failures.empty());
  REQUIRE(r2.table.size() == 4);
  CHECK(r2.table[0].k == 2);
  CHECK(r2.table[1].k == 1);
  CHECK(r2.table[2].k == 2);
  CHECK(r2.table[3].k == 3);

  IxSearchResult r3 = condition_ix_search({0, 1, 3}, 3, 1, 6);
  CHECK(r3.table.empty());
  CHECK(r3.failures == std::vector<unsigned>{1});
}

TEST_CASE("heuristic level bound covers the residue-complete case") {
  // With k_max = 0 the per-frequency bound is v_m(n) + 3.
  IxSearchResult r = condition_ix_search({0, 1, 5}, 3, 27, 0);
  CHECK(r.failures.empty());
}
