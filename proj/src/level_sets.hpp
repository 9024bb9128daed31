#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "intervals.hpp"
#include "sigma_set.hpp"

namespace selfsim {

// Scaled-integer image of F_n: stored value v corresponds to the real point
// offset + v*scale; counts carry the multiplicity of each value among the
// m^n digit strings.
struct LevelSet {
  int level = 0;
  Rational scale;
  Rational offset;
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> counts;
  BigInt total;

  Rational value_at(std::size_t i) const {
    return offset + Rational(static_cast<long>(values[i])) * scale;
  }
};

// Drives the integer recurrence V' = den(q)*V + num(q)^{n+1}*sigma_star in
// normalized coordinates.  Requires a digit set whose difference set has a
// common divisor; the affine frame back to original coordinates is kept only
// for all-rational digit sets.
class LevelWalker {
 public:
  explicit LevelWalker(const SigmaSet& sigma);

  const LevelSet& current() const { return level_; }
  const std::vector<std::int64_t>& sigma_star() const { return sigma_star_; }
  unsigned digit_count() const { return m_; }
  bool has_frame() const { return frame_; }
  void step();

 private:
  std::vector<std::int64_t> sigma_star_;
  unsigned m_ = 0;
  std::int64_t q_num_ = 1;
  std::int64_t q_den_ = 1;
  std::int64_t num_pow_ = 1;
  Rational q_;
  Rational q_pow_;  // q^level
  Rational shift_;
  bool frame_ = false;
  LevelSet level_;
};

LevelSet level_zero(const SigmaSet& sigma);
LevelSet level_at(const SigmaSet& sigma, int level);

struct EnvelopeBounds {
  Rational e_min;
  Rational e_max;
};

EnvelopeBounds envelope(const SigmaSet& sigma);
IntervalUnion level_intervals(const SigmaSet& sigma, int level);
// Unions for levels 1..max_level in one enumeration pass.
std::vector<IntervalUnion> level_interval_sequence(const SigmaSet& sigma,
                                                   int max_level);
Rational level_measure(const SigmaSet& sigma, int level);

struct CollisionWitness {
  int level = 0;
  std::vector<ExactReal> first;   // digit strings over the original digits
  std::vector<ExactReal> second;
};

// Smallest level with |F_n| < m^n plus two digit strings of equal value;
// falls back to exact quadratic sums (level cap 12) when the difference set
// has no common divisor.
std::optional<CollisionWitness> first_collision(const SigmaSet& sigma,
                                                int n_max);

struct DimensionBound {
  int level = 0;
  BigInt distinct;
  double value = 1.0;  // log(|F_n|) / (n log m)
};

DimensionBound hausdorff_upper(const SigmaSet& sigma, int level);

// Exact Kolmogorov-Smirnov distance between the mod-delta pushforward of the
// level-n measure and the uniform distribution on [0,1).
Rational pushforward_discrepancy(const SigmaSet& sigma, const Rational& delta,
                                 int level);

struct FourierPartial {
  std::complex<long double> value{0.0L, 0.0L};
  bool exact_zero = false;
  int zero_level = 0;  // smallest k <= K with an exactly vanishing factor
};

// Partial product over k = 1..K of q * sum_sigma exp(2*pi*i*n*sigma*q^k / delta).
// Zero factors are certified exactly through the cyclotomic module whenever
// the arguments are rational.
FourierPartial fourier_partial(const SigmaSet& sigma, const Rational& delta,
                               const BigInt& freq, int terms);

}  // namespace selfsim
