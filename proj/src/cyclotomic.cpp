#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace selfsim {

namespace {
constexpr unsigned long kGeneralOrderCap = 6000;
constexpr unsigned long kPrimePowerOrderCap = 1u << 20;
}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(unsigned degree, BigInt coeff) {
  std::vector<BigInt> c(degree + 1, BigInt(0));
  c[degree] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::xn_minus_one(unsigned n) {
  std::vector<BigInt> c(n + 1, BigInt(0));
  c[0] = -1;
  c[n] = 1;
  return IntPoly(std::move(c));
}

unsigned IntPoly::degree() const {
  if (is_zero()) {
    throw Error(ErrorCode::Internal, "degree of the zero polynomial");
  }
  return static_cast<unsigned>(coeffs_.size() - 1);
}

BigInt IntPoly::eval_one() const {
  BigInt s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                        BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                        BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(c));
}

void IntPoly::divmod_monic(const IntPoly& num, const IntPoly& div,
                           IntPoly& quotient, IntPoly& remainder) {
  if (div.is_zero() || div.coeffs_.back() != 1) {
    throw Error(ErrorCode::Internal, "divisor must be monic");
  }
  std::vector<BigInt> rem = num.coeffs_;
  const std::size_t dd = div.coeffs_.size() - 1;
  if (rem.size() <= dd) {
    quotient = IntPoly();
    remainder = num;
    return;
  }
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    BigInt c = rem[i];
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[i - dd + j] -= c * div.coeffs_[j];
    }
  }
  quotient = IntPoly(std::move(quot));
  remainder = IntPoly(std::move(rem));
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    BigInt c = coeffs_[i];
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (i == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += i == 1 ? "X" : "X^" + std::to_string(i);
    }
  }
  return out;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

std::vector<unsigned long> proper_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d && n / d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Returns p when n = p^k, otherwise 0.
unsigned long prime_power_base(unsigned long n) {
  if (n < 2) return 0;
  unsigned long p = 0;
  unsigned long rest = n;
  for (unsigned long f = 2; f * f <= rest; ++f) {
    if (rest % f == 0) {
      p = f;
      while (rest % f == 0) rest /= f;
      break;
    }
  }
  if (p == 0) return n;       // n itself prime
  return rest == 1 ? p : 0;   // composite leftover means >= 2 prime factors
}

}  // namespace

const IntPoly& cyclotomic_poly(unsigned long n) {
  static std::map<unsigned long, IntPoly> cache;
  static std::mutex mutex;
  if (n == 0) {
    throw Error(ErrorCode::Degenerate, "cyclotomic polynomial of order 0");
  }
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly value;
  if (n == 1) {
    value = IntPoly({BigInt(-1), BigInt(1)});
  } else {
    IntPoly acc = IntPoly::xn_minus_one(static_cast<unsigned>(n));
    for (unsigned long d : proper_divisors(n)) {
      const IntPoly& phi = cyclotomic_poly(d);
      IntPoly quot, rem;
      IntPoly::divmod_monic(acc, phi, quot, rem);
      if (!rem.is_zero()) {
        throw Error(ErrorCode::Internal, "cyclotomic recursion left a remainder");
      }
      acc = std::move(quot);
    }
    value = std::move(acc);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

VanishCertificate vanishing_sum(const std::vector<BigInt>& exponents,
                                unsigned long order) {
  if (order == 0) {
    throw Error(ErrorCode::Degenerate, "vanishing sum with order 0");
  }
  VanishCertificate cert;
  cert.order = order;
  for (const auto& e : exponents) {
    cert.exponents.push_back(mpz_fdiv_ui(e.get_mpz_t(), order));
  }
  std::sort(cert.exponents.begin(), cert.exponents.end());
  if (cert.exponents.empty()) {
    cert.vanishes = true;
    return cert;
  }
  if (order == 1) {
    cert.vanishes = false;  // sum of |multiset| ones
    return cert;
  }

  const unsigned long p = prime_power_base(order);
  if (p != 0) {
    if (order > kPrimePowerOrderCap) {
      throw Error(ErrorCode::BoundExceeded, "vanishing-sum order too large");
    }
    // Phi_{p^k} = 1 + Y + ... + Y^{p-1} with Y = X^{p^{k-1}}: the sum
    // vanishes iff, per residue class mod p^{k-1}, every top digit occurs
    // equally often.  The quotient collects the per-class counts.
    const unsigned long block = order / p;
    std::vector<std::int64_t> counts(order, 0);
    for (unsigned long e : cert.exponents) ++counts[e];
    std::vector<BigInt> quot(block, BigInt(0));
    bool ok = true;
    for (unsigned long r = 0; r < block && ok; ++r) {
      const std::int64_t c0 = counts[r];
      for (unsigned long t = 1; t < p; ++t) {
        if (counts[r + t * block] != c0) {
          ok = false;
          break;
        }
      }
      quot[r] = c0;
    }
    cert.vanishes = ok;
    if (ok) cert.quotient = IntPoly(std::move(quot));
    return cert;
  }

  if (order > kGeneralOrderCap) {
    throw Error(ErrorCode::BoundExceeded,
                "vanishing-sum order too large for polynomial division");
  }
  std::vector<BigInt> coeffs(order, BigInt(0));
  for (unsigned long e : cert.exponents) coeffs[e] += 1;
  IntPoly digit_poly{std::move(coeffs)};
  IntPoly quot, rem;
  IntPoly::divmod_monic(digit_poly, cyclotomic_poly(order), quot, rem);
  cert.vanishes = rem.is_zero();
  if (cert.vanishes) cert.quotient = std::move(quot);
  return cert;
}

IxSearchResult condition_ix_search(const std::vector<std::int64_t>& sigma_star,
                                   unsigned m, unsigned n_max,
                                   unsigned k_max) {
  if (m < 2) {
    throw Error(ErrorCode::Degenerate, "digit count must be at least 2");
  }
  IxSearchResult out;
  out.n_max = n_max;
  out.k_max = k_max;
  for (unsigned n = 1; n <= n_max; ++n) {
    unsigned cap = k_max;
    if (cap == 0) {
      // Heuristic bound: v_m(n) + 3, where m^{v} | n exactly.
      unsigned v = 0;
      unsigned rest = n;
      while (rest % m == 0) {
        rest /= m;
        ++v;
      }
      cap = v + 3;
    }
    bool found = false;
    unsigned long modulus = 1;
    for (unsigned k = 1; k <= cap; ++k) {
      if (modulus > kPrimePowerOrderCap / m) break;  // bounded search
      modulus *= m;
      std::vector<BigInt> exps;
      exps.reserve(sigma_star.size());
      for (std::int64_t s : sigma_star) {
        exps.push_back(BigInt(static_cast<long>(n)) * BigInt(static_cast<long>(s)));
      }
      VanishCertificate cert;
      try {
        cert = vanishing_sum(exps, modulus);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BoundExceeded) break;
        throw;
      }
      if (cert.vanishes) {
        out.table.push_back({n, k});
        found = true;
        break;
      }
    }
    if (!found) out.failures.push_back(n);
  }
  return out;
}

}  // namespace selfsim
