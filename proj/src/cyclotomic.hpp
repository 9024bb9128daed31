#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exact.hpp"

namespace selfsim {

// Dense integer polynomial, coefficients_[i] is the coefficient of X^i.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  static IntPoly monomial(unsigned degree, BigInt coeff = BigInt(1));
  static IntPoly xn_minus_one(unsigned n);

  bool is_zero() const { return coeffs_.empty(); }
  unsigned degree() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt eval_one() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  // Division by a monic divisor; exact over the integers.
  static void divmod_monic(const IntPoly& num, const IntPoly& div,
                           IntPoly& quotient, IntPoly& remainder);

  std::string str() const;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

// Phi_N, computed by exact division of X^N - 1 by the proper-divisor
// cyclotomics; memoized and safe for concurrent use.
const IntPoly& cyclotomic_poly(unsigned long n);

struct VanishCertificate {
  unsigned long order = 0;
  std::vector<unsigned long> exponents;  // reduced mod order, sorted
  bool vanishes = false;
  IntPoly quotient;  // quotient * Phi_order == digit polynomial when vanishing
};

// Decides sum over the multiset of zeta_N^e == 0 by divisibility of the digit
// polynomial by Phi_N.  Prime-power orders use the uniform-count criterion;
// general orders fall back to polynomial division (bounded order).
VanishCertificate vanishing_sum(const std::vector<BigInt>& exponents,
                                unsigned long order);

struct IxEntry {
  unsigned n = 0;
  unsigned k = 0;
};

struct IxSearchResult {
  std::vector<IxEntry> table;      // per n, smallest k with a vanishing sum
  std::vector<unsigned> failures;  // n values with no k within bounds
  unsigned n_max = 0;
  unsigned k_max = 0;  // 0 means the per-n heuristic bound v_m(n) + 3
};

IxSearchResult condition_ix_search(const std::vector<std::int64_t>& sigma_star,
                                   unsigned m, unsigned n_max, unsigned k_max);

bool is_prime(unsigned long n);

}  // namespace selfsim
