#include "level_sets.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cyclotomic.hpp"

namespace selfsim {

namespace {
constexpr std::size_t kValueCountGuard = 100000000;  // 1e8 stored values

void guard_count(std::size_t n) {
  if (n > kValueCountGuard) {
    throw Error(ErrorCode::EnumerationGuard,
                "level enumeration exceeds 1e8 stored values");
  }
}
}  // namespace

LevelWalker::LevelWalker(const SigmaSet& sigma) : q_(sigma.ratio()) {
  Normalization norm = normalize(sigma);
  m_ = static_cast<unsigned>(sigma.size());
  sigma_star_.reserve(norm.sigma_star.size());
  for (const auto& v : norm.sigma_star) sigma_star_.push_back(to_int64(v));
  q_num_ = to_int64(BigInt(q_.get_num()));
  q_den_ = to_int64(BigInt(q_.get_den()));
  q_pow_ = 1;
  frame_ = sigma.all_rational();
  level_.level = 0;
  level_.values = {0};
  level_.counts = {1};
  level_.total = 1;
  if (frame_) {
    level_.scale = norm.delta.as_rational();
    shift_ = norm.shift.as_rational();
  } else {
    level_.scale = 1;
    shift_ = 0;
  }
  level_.offset = 0;
}

void LevelWalker::step() {
  num_pow_ = checked_mul(num_pow_, q_num_);
  const std::size_t m = sigma_star_.size();
  std::vector<std::int64_t> shifts(m);
  for (std::size_t j = 0; j < m; ++j) {
    shifts[j] = checked_mul(num_pow_, sigma_star_[j]);
  }

  LevelSet next;
  next.level = level_.level + 1;
  next.total = level_.total * m;
  next.scale = level_.scale / q_den_;
  q_pow_ *= q_;
  next.offset = level_.offset + shift_ * q_pow_;

  // m-way merge of the shifted streams q_den*V + shifts[j]; the digit count
  // is small, so a linear scan per output beats a heap.
  const auto& values = level_.values;
  const auto& counts = level_.counts;
  std::vector<std::size_t> pos(m, 0);
  while (true) {
    bool any = false;
    std::int64_t best = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (pos[j] >= values.size()) continue;
      const std::int64_t cand =
          checked_add(checked_mul(q_den_, values[pos[j]]), shifts[j]);
      if (!any || cand < best) {
        best = cand;
        any = true;
      }
    }
    if (!any) break;
    std::int64_t count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      while (pos[j] < values.size() &&
             checked_add(checked_mul(q_den_, values[pos[j]]), shifts[j]) ==
                 best) {
        count = checked_add(count, counts[pos[j]]);
        ++pos[j];
      }
    }
    next.values.push_back(best);
    next.counts.push_back(count);
    guard_count(next.values.size());
  }
  level_ = std::move(next);
}

LevelSet level_zero(const SigmaSet& sigma) {
  return LevelWalker(sigma).current();
}

LevelSet level_at(const SigmaSet& sigma, int level) {
  if (level < 0) {
    throw Error(ErrorCode::Degenerate, "negative level");
  }
  LevelWalker walker(sigma);
  for (int i = 0; i < level; ++i) walker.step();
  return walker.current();
}

EnvelopeBounds envelope(const SigmaSet& sigma) {
  if (!sigma.all_rational()) {
    throw Error(ErrorCode::NotApplicable,
                "interval bounds need all-rational digits");
  }
  const Rational q = sigma.ratio();
  const Rational factor = q / (1 - q);
  return {sigma.min().as_rational() * factor,
          sigma.max().as_rational() * factor};
}

namespace {

IntervalUnion intervals_from_level(const LevelSet& level,
                                   const EnvelopeBounds& env,
                                   const Rational& q_pow) {
  const Rational lo_pad = q_pow * env.e_min;
  const Rational hi_pad = q_pow * env.e_max;
  // Values ascend, so the merged union can be built in one pass.
  std::vector<Interval> parts;
  for (std::size_t i = 0; i < level.values.size(); ++i) {
    const Rational base = level.value_at(i);
    Rational lo = base + lo_pad;
    Rational hi = base + hi_pad;
    if (!parts.empty() && lo <= parts.back().hi) {
      if (hi > parts.back().hi) parts.back().hi = std::move(hi);
    } else {
      parts.push_back({std::move(lo), std::move(hi)});
    }
  }
  IntervalUnion out = IntervalUnion::of(std::move(parts));
  return out;
}

}  // namespace

std::vector<IntervalUnion> level_interval_sequence(const SigmaSet& sigma,
                                                   int max_level) {
  if (max_level < 0) {
    throw Error(ErrorCode::Degenerate, "negative level");
  }
  const EnvelopeBounds env = envelope(sigma);
  LevelWalker walker(sigma);
  if (!walker.has_frame()) {
    throw Error(ErrorCode::NotApplicable,
                "interval bounds need all-rational digits");
  }
  const Rational q = sigma.ratio();
  Rational q_pow(1);
  std::vector<IntervalUnion> out;
  for (int n = 1; n <= max_level; ++n) {
    walker.step();
    q_pow *= q;
    out.push_back(intervals_from_level(walker.current(), env, q_pow));
  }
  return out;
}

IntervalUnion level_intervals(const SigmaSet& sigma, int level) {
  if (level == 0) {
    const EnvelopeBounds env = envelope(sigma);
    return IntervalUnion::of({{env.e_min, env.e_max}});
  }
  auto seq = level_interval_sequence(sigma, level);
  return seq.back();
}

Rational level_measure(const SigmaSet& sigma, int level) {
  return level_intervals(sigma, level).total_length();
}

namespace {

bool divides_exactly(std::int64_t value, std::int64_t divisor,
                     std::int64_t& quotient) {
  if (value % divisor != 0) return false;
  quotient = value / divisor;
  return true;
}

// Depth-first reconstruction of up to `want` digit strings reaching `target`
// through the stored per-level value sets.
void collect_strings(const std::vector<std::vector<std::int64_t>>& levels,
                     const std::vector<std::int64_t>& sigma_star,
                     std::int64_t q_den, std::int64_t target, int level,
                     std::vector<std::size_t>& digits,
                     std::vector<std::vector<std::size_t>>& found,
                     std::size_t want) {
  if (found.size() >= want) return;
  if (level == 0) {
    std::vector<std::size_t> str(digits.rbegin(), digits.rend());
    found.push_back(std::move(str));
    return;
  }
  const auto& prev = levels[static_cast<std::size_t>(level - 1)];
  for (std::size_t j = 0; j < sigma_star.size(); ++j) {
    const std::int64_t rem = target - sigma_star[j];
    std::int64_t q;
    if (!divides_exactly(rem, q_den, q)) continue;
    if (!std::binary_search(prev.begin(), prev.end(), q)) continue;
    digits.push_back(j);
    collect_strings(levels, sigma_star, q_den, q, level - 1, digits, found,
                    want);
    digits.pop_back();
    if (found.size() >= want) return;
  }
}

std::optional<CollisionWitness> integer_collision(const SigmaSet& sigma,
                                                  int n_max) {
  LevelWalker walker(sigma);
  const auto& sig = walker.sigma_star();
  const unsigned m = walker.digit_count();
  std::vector<std::vector<std::int64_t>> history;
  history.push_back(walker.current().values);
  for (int n = 1; n <= n_max; ++n) {
    walker.step();
    const LevelSet& cur = walker.current();
    history.push_back(cur.values);
    if (mpz_cmp_ui(cur.total.get_mpz_t(), cur.values.size()) == 0) continue;
    // Smallest duplicated value is deterministic.
    std::int64_t target = 0;
    bool picked = false;
    for (std::size_t i = 0; i < cur.values.size(); ++i) {
      if (cur.counts[i] >= 2) {
        target = cur.values[i];
        picked = true;
        break;
      }
    }
    if (!picked) {
      throw Error(ErrorCode::Internal, "collision without duplicated value");
    }
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> scratch;
    collect_strings(history, sig, static_cast<std::int64_t>(m), target, n,
                    scratch, found, 2);
    if (found.size() < 2) {
      throw Error(ErrorCode::Internal, "failed to reconstruct witness pair");
    }
    CollisionWitness w;
    w.level = n;
    for (std::size_t idx : found[0]) w.first.push_back(sigma.digits()[idx]);
    for (std::size_t idx : found[1]) w.second.push_back(sigma.digits()[idx]);
    return w;
  }
  return std::nullopt;
}

// Exact fallback for digit sets without a common divisor: digits scaled to
// integer pairs (x, y) representing x + y*sqrt(d).
struct PairValue {
  std::int64_t x;
  std::int64_t y;
  auto operator<=>(const PairValue&) const = default;
};

std::optional<CollisionWitness> quadratic_collision(const SigmaSet& sigma,
                                                    int n_max) {
  if (n_max > 12) {
    throw Error(ErrorCode::BoundExceeded,
                "collision search without a common divisor is capped at level 12");
  }
  BigInt den_lcm(1);
  for (const auto& digit : sigma.digits()) {
    den_lcm = lcm(den_lcm, digit.rational_part().get_den());
    den_lcm = lcm(den_lcm, digit.radical_coeff().get_den());
  }
  std::vector<PairValue> digit_pairs;
  for (const auto& digit : sigma.digits()) {
    const Rational px = digit.rational_part() * den_lcm;
    const Rational py = digit.radical_coeff() * den_lcm;
    digit_pairs.push_back({to_int64(BigInt(px.get_num())),
                           to_int64(BigInt(py.get_num()))});
  }
  const std::int64_t m = static_cast<std::int64_t>(sigma.size());
  std::vector<std::vector<PairValue>> history;
  history.push_back({{0, 0}});
  BigInt total(1);
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = history.back();
    std::vector<PairValue> next;
    next.reserve(prev.size() * sigma.size());
    guard_count(prev.size() * sigma.size());
    PairValue dup{0, 0};
    bool has_dup = false;
    for (const auto& v : prev) {
      for (const auto& dp : digit_pairs) {
        next.push_back({checked_add(checked_mul(m, v.x), dp.x),
                        checked_add(checked_mul(m, v.y), dp.y)});
      }
    }
    std::sort(next.begin(), next.end());
    for (std::size_t i = 1; i < next.size(); ++i) {
      if (next[i] == next[i - 1]) {
        dup = next[i];
        has_dup = true;
        break;
      }
    }
    next.erase(std::unique(next.begin(), next.end()), next.end());
    history.push_back(std::move(next));
    total *= m;
    if (!has_dup) continue;

    // Reconstruct two strings for the smallest duplicate.
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> scratch;
    auto search = [&](auto&& self, PairValue target, int level) -> void {
      if (found.size() >= 2) return;
      if (level == 0) {
        found.emplace_back(scratch.rbegin(), scratch.rend());
        return;
      }
      const auto& layer = history[static_cast<std::size_t>(level - 1)];
      for (std::size_t j = 0; j < digit_pairs.size(); ++j) {
        const std::int64_t rx = target.x - digit_pairs[j].x;
        const std::int64_t ry = target.y - digit_pairs[j].y;
        if (rx % m != 0 || ry % m != 0) continue;
        PairValue q{rx / m, ry / m};
        if (!std::binary_search(layer.begin(), layer.end(), q)) continue;
        scratch.push_back(j);
        self(self, q, level - 1);
        scratch.pop_back();
        if (found.size() >= 2) return;
      }
    };
    search(search, dup, n);
    if (found.size() < 2) {
      throw Error(ErrorCode::Internal, "failed to reconstruct witness pair");
    }
    CollisionWitness w;
    w.level = n;
    for (std::size_t idx : found[0]) w.first.push_back(sigma.digits()[idx]);
    for (std::size_t idx : found[1]) w.second.push_back(sigma.digits()[idx]);
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<CollisionWitness> first_collision(const SigmaSet& sigma,
                                                int n_max) {
  if (n_max < 0) {
    throw Error(ErrorCode::Degenerate, "negative search depth");
  }
  if (common_divisor(sigma)) return integer_collision(sigma, n_max);
  return quadratic_collision(sigma, n_max);
}

DimensionBound hausdorff_upper(const SigmaSet& sigma, int level) {
  if (level <= 0) {
    throw Error(ErrorCode::Degenerate,
                "dimension bound undefined at level 0");
  }
  LevelWalker walker(sigma);
  for (int i = 0; i < level; ++i) walker.step();
  DimensionBound out;
  out.level = level;
  out.distinct = BigInt(static_cast<unsigned long>(walker.current().values.size()));
  out.value = std::log(static_cast<double>(walker.current().values.size())) /
              (static_cast<double>(level) *
               std::log(static_cast<double>(sigma.size())));
  return out;
}

Rational pushforward_discrepancy(const SigmaSet& sigma, const Rational& delta,
                                 int level) {
  if (delta <= 0) {
    throw Error(ErrorCode::Degenerate, "pushforward modulus must be positive");
  }
  LevelWalker walker(sigma);
  if (!walker.has_frame()) {
    throw Error(ErrorCode::NotApplicable,
                "pushforward needs all-rational digits");
  }
  for (int i = 0; i < level; ++i) walker.step();
  const LevelSet& cur = walker.current();

  std::map<Rational, Rational> atoms;  // fractional part -> weight
  const Rational total(cur.total);
  for (std::size_t i = 0; i < cur.values.size(); ++i) {
    Rational t = cur.value_at(i) / delta;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num().get_mpz_t(),
               t.get_den().get_mpz_t());
    Rational frac = t - Rational(fl);
    Rational weight = Rational(static_cast<long>(cur.counts[i])) / total;
    atoms[frac] += weight;
  }

  Rational best(0);
  Rational cum(0);
  for (const auto& [x, w] : atoms) {
    Rational below = x - cum;  // F_emp just left of the atom vs uniform
    if (below > best) best = below;
    cum += w;
    Rational above = cum - x;
    if (above > best) best = above;
  }
  return best;
}

namespace {

long double rational_to_ld(const Rational& q) {
  return static_cast<long double>(q.get_num().get_d()) /
         static_cast<long double>(q.get_den().get_d());
}

// Fractional part of an exact rational, as long double.
long double frac_ld(const Rational& q) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return rational_to_ld(q - Rational(fl));
}

}  // namespace

FourierPartial fourier_partial(const SigmaSet& sigma, const Rational& delta,
                               const BigInt& freq, int terms) {
  if (delta <= 0) {
    throw Error(ErrorCode::Degenerate, "delta must be positive");
  }
  if (terms < 1) {
    throw Error(ErrorCode::Degenerate, "partial product needs K >= 1");
  }
  if (!sigma.critical_ratio()) {
    throw Error(ErrorCode::NotApplicable,
                "partial product assumes q*|Sigma| = 1");
  }
  const Rational q = sigma.ratio();
  const long double qd = rational_to_ld(q);
  constexpr long double kTwoPi = 6.283185307179586476925286766559L;

  // delta_gcd-normalized arguments when digits carry a radical: the radical
  // coefficient contributes a common phase of modulus one.
  FourierPartial out;
  std::complex<long double> product(1.0L, 0.0L);
  Rational q_pow(1);
  for (int k = 1; k <= terms; ++k) {
    q_pow *= q;
    std::vector<Rational> args;  // rational parts of n*sigma*q^k/delta
    bool all_rational_args = sigma.all_rational();
    args.reserve(sigma.size());
    for (const auto& digit : sigma.digits()) {
      args.push_back(Rational(freq) * digit.rational_part() * q_pow / delta);
    }
    if (all_rational_args) {
      // Exact zero test via roots of unity.
      BigInt den_lcm(1);
      for (const auto& a : args) den_lcm = lcm(den_lcm, a.get_den());
      if (den_lcm.fits_ulong_p()) {
        const unsigned long order = den_lcm.get_ui();
        std::vector<BigInt> exps;
        exps.reserve(args.size());
        for (const auto& a : args) {
          exps.push_back(BigInt(a.get_num() * (den_lcm / a.get_den())));
        }
        try {
          if (vanishing_sum(exps, order).vanishes) {
            out.exact_zero = true;
            out.zero_level = k;
            out.value = {0.0L, 0.0L};
            return out;
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::BoundExceeded) throw;
        }
      }
    }
    std::complex<long double> factor(0.0L, 0.0L);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      long double arg = frac_ld(args[i]);
      if (!sigma.digits()[i].is_rational()) {
        const Rational coeff =
            Rational(freq) * sigma.digits()[i].radical_coeff() * q_pow / delta;
        arg += rational_to_ld(coeff) *
               std::sqrt(static_cast<long double>(sigma.digits()[i].radicand()));
      }
      factor += std::complex<long double>(std::cos(kTwoPi * arg),
                                          std::sin(kTwoPi * arg));
    }
    product *= qd * factor;
  }
  out.value = product;
  return out;
}

}  // namespace selfsim
