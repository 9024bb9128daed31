#include "decide.hpp"

#include <algorithm>

namespace selfsim {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PositiveMeasure:
      return "PositiveMeasure";
    case Verdict::MeasureZero:
      return "MeasureZero";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

const char* kakeya_name(KakeyaOutcome k) {
  switch (k) {
    case KakeyaOutcome::CantorCondition:
      return "CantorCondition";
    case KakeyaOutcome::IntervalUnionCondition:
      return "IntervalUnionCondition";
    case KakeyaOutcome::Neither:
      return "Neither";
  }
  return "Neither";
}

std::optional<std::pair<int, IntervalUnion>> interval_fixed_point(
    const SigmaSet& sigma, int cap) {
  if (!sigma.all_rational()) return std::nullopt;
  IntervalUnion prev = level_intervals(sigma, 0);
  const EnvelopeBounds env = envelope(sigma);
  LevelWalker walker(sigma);
  const Rational q = sigma.ratio();
  Rational q_pow(1);
  for (int n = 1; n <= cap; ++n) {
    try {
      walker.step();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EnumerationGuard) return std::nullopt;
      throw;
    }
    q_pow *= q;
    std::vector<Interval> parts;
    const LevelSet& cur = walker.current();
    const Rational lo_pad = q_pow * env.e_min;
    const Rational hi_pad = q_pow * env.e_max;
    for (std::size_t i = 0; i < cur.values.size(); ++i) {
      const Rational base = cur.value_at(i);
      parts.push_back({base + lo_pad, base + hi_pad});
    }
    IntervalUnion next = IntervalUnion::of(std::move(parts));
    if (next == prev) return std::make_pair(n - 1, std::move(next));
    prev = std::move(next);
  }
  return std::nullopt;
}

namespace {

void attach_measure_bounds(DecisionReport& report, const SigmaSet& sigma,
                           int depth) {
  if (!sigma.all_rational()) return;
  try {
    auto seq = level_interval_sequence(sigma, depth);
    for (int n = 1; n <= static_cast<int>(seq.size()); ++n) {
      report.measure_bounds.emplace_back(
          n, seq[static_cast<std::size_t>(n - 1)].total_length());
    }
    if (!report.measure_bounds.empty()) {
      report.lambda_upper = report.measure_bounds.back();
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationGuard) throw;
  }
}

void attach_exact_lambda_from_fixed_point(DecisionReport& report,
                                          const SigmaSet& sigma) {
  auto fp = interval_fixed_point(sigma, 12);
  if (!fp) return;
  report.exact_interval_level = fp->first;
  report.exact_intervals = fp->second;
  report.lambda_exact = ExactReal(fp->second.total_length());
  report.lambda_source = "interval-fixed-point";
}

}  // namespace

DecisionReport decide_critical(const SigmaSet& sigma, unsigned n_max,
                               unsigned k_max) {
  if (!sigma.critical_ratio()) {
    throw Error(ErrorCode::NotApplicable,
                "critical-ratio assumption violated: q*|Sigma| != 1");
  }
  DecisionReport report;
  report.n_max = n_max;
  report.k_max = k_max;

  auto delta = common_divisor(sigma);
  if (!delta) {
    report.verdict = Verdict::MeasureZero;
    report.fired_condition = "no-common-divisor";
    // Witness: a pair of nonzero differences with an irrational ratio.
    std::vector<ExactReal> nonzero;
    for (const auto& d : difference_set(sigma)) {
      if (!d.is_zero() && d.sign() > 0) nonzero.push_back(d);
    }
    for (const auto& d : nonzero) {
      if (!ratio_is_rational(d, nonzero.front())) {
        report.irrational_pair = std::make_pair(d, nonzero.front());
        break;
      }
    }
    return report;
  }

  Normalization norm = normalize(sigma);
  const unsigned m = static_cast<unsigned>(sigma.size());
  ResidueProfile residues = residue_profile(norm, m);
  report.normalization = norm;
  report.residues = residues;

  if (residues.complete) {
    report.verdict = Verdict::PositiveMeasure;
    report.fired_condition = "residue-complete";
    report.lambda_exact = norm.delta;
    report.lambda_source = "common-divisor";
    return report;
  }

  if (is_prime(m)) {
    report.verdict = Verdict::MeasureZero;
    report.fired_condition = "prime-incomplete-residues";
    return report;
  }

  try {
    if (auto witness = first_collision(sigma, static_cast<int>(n_max))) {
      report.verdict = Verdict::MeasureZero;
      report.fired_condition = "level-collision";
      report.dimension = hausdorff_upper(sigma, witness->level);
      report.collision = std::move(witness);
      return report;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationGuard) throw;
    // Collision search hit the enumeration guard; continue with the
    // remaining certificates.
  }

  std::vector<std::int64_t> sigma_star;
  sigma_star.reserve(norm.sigma_star.size());
  for (const auto& v : norm.sigma_star) sigma_star.push_back(to_int64(v));
  IxSearchResult ix = condition_ix_search(sigma_star, m, n_max, k_max);
  report.ix = ix;
  if (ix.failures.empty()) {
    report.verdict = Verdict::PositiveMeasure;
    report.fired_condition = "vanishing-sums (bounded)";
    report.bounded_evidence = true;
    attach_exact_lambda_from_fixed_point(report, sigma);
    if (!report.lambda_exact) {
      attach_measure_bounds(report, sigma, std::min<int>(n_max, 10));
    }
    return report;
  }

  report.verdict = Verdict::Unknown;
  report.fired_condition = "inconclusive";
  try {
    report.dimension = hausdorff_upper(sigma, static_cast<int>(n_max));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EnumerationGuard) throw;
  }
  attach_measure_bounds(report, sigma, std::min<int>(n_max, 10));
  return report;
}

DecisionReport decide(const SigmaSet& sigma, unsigned n_max, unsigned k_max) {
  if (sigma.critical_ratio()) return decide_critical(sigma, n_max, k_max);

  DecisionReport report;
  report.n_max = n_max;
  report.k_max = k_max;
  const Rational q = sigma.ratio();
  const Rational critical =
      make_rational(1, BigInt(static_cast<unsigned long>(sigma.size())));
  if (q < critical) {
    report.verdict = Verdict::MeasureZero;
    report.fired_condition = "subcritical-cantor";
    return report;
  }
  const ExactReal qv{q};
  if (qv >= interval_threshold(sigma)) {
    report.verdict = Verdict::PositiveMeasure;
    report.fired_condition = "interval-threshold";
    if (sigma.all_rational()) {
      const EnvelopeBounds env = envelope(sigma);
      report.lambda_exact = ExactReal(env.e_max - env.e_min);
      report.lambda_source = "interval-threshold";
    }
    return report;
  }
  if (sigma.size() <= 20 && qv >= containment_threshold(sigma)) {
    report.verdict = Verdict::PositiveMeasure;
    report.fired_condition = "containment-threshold";
    attach_measure_bounds(report, sigma, 10);
    return report;
  }
  report.verdict = Verdict::Unknown;
  report.fired_condition = "supercritical-unknown";
  attach_measure_bounds(report, sigma, 10);
  return report;
}

bool prime_decide(const SigmaSet& sigma) {
  const unsigned long m = sigma.size();
  if (!is_prime(m)) {
    throw Error(ErrorCode::NotApplicable,
                "prime characterization needs |Sigma| prime");
  }
  if (!common_divisor(sigma)) return false;
  return residue_profile(normalize(sigma), static_cast<unsigned>(m)).complete;
}

TilingCertificate tiling_certificate(const SigmaSet& sigma, int level,
                                     const Rational& window) {
  if (!sigma.critical_ratio()) {
    throw Error(ErrorCode::NotApplicable,
                "tiling certificate assumes q*|Sigma| = 1");
  }
  auto delta = common_divisor(sigma);
  if (!delta) {
    throw Error(ErrorCode::NotApplicable,
                "tiling certificate needs a common divisor");
  }
  Normalization norm = normalize(sigma);
  if (!residue_profile(norm, static_cast<unsigned>(sigma.size())).complete) {
    throw Error(ErrorCode::NotApplicable,
                "tiling certificate needs complete residues");
  }
  if (!sigma.all_rational()) {
    throw Error(ErrorCode::NotApplicable,
                "tiling verification needs rational digits");
  }

  TilingCertificate cert;
  cert.delta = *delta;
  cert.window = window;
  cert.level = level;

  const Rational d = delta->as_rational();
  const EnvelopeBounds env = envelope(sigma);
  IntervalUnion base = level_intervals(sigma, level);
  cert.level_measure = base.total_length();

  BigInt j_max_big;
  {
    Rational ratio = window / d;
    mpz_fdiv_q(j_max_big.get_mpz_t(), ratio.get_num().get_mpz_t(),
               ratio.get_den().get_mpz_t());
  }
  const std::int64_t j_max = to_int64(j_max_big);
  std::vector<Interval> parts;
  for (std::int64_t j = -j_max; j <= j_max; ++j) {
    const Rational offset = Rational(static_cast<long>(j)) * d;
    for (const auto& part : base.parts()) {
      parts.push_back({part.lo + offset, part.hi + offset});
    }
  }
  IntervalUnion cover = IntervalUnion::of(std::move(parts));
  const Rational w_lo = -window + env.e_max;
  const Rational w_hi = window - env.e_max;
  if (w_lo > w_hi) {
    throw Error(ErrorCode::Degenerate, "window too small for the envelope");
  }
  cert.covered = cover.contains(w_lo, w_hi);

  // Worst pairwise overlap among translates equals the worst overlap of the
  // base union with one of its own delta-shifts.
  Rational worst(0);
  const Rational diam = base.max() - base.min();
  for (Rational shift = d; shift < diam; shift += d) {
    Rational o = overlap_length(base, base.translated(shift));
    if (o > worst) worst = o;
  }
  cert.max_overlap = worst;
  cert.overlap_ok = worst <= 2 * (cert.level_measure - d);
  return cert;
}

KakeyaOutcome kakeya_check(const std::vector<Rational>& terms,
                           const Rational& q) {
  if (terms.empty()) {
    throw Error(ErrorCode::Degenerate, "empty multigeometric term list");
  }
  for (const auto& t : terms) {
    if (t <= 0) {
      throw Error(ErrorCode::Degenerate, "terms must be positive");
    }
  }
  if (q <= 0 || q >= 1) {
    throw Error(ErrorCode::Degenerate, "ratio must lie in (0,1)");
  }

  Rational k_min = terms.front(), k_max = terms.front();
  for (const auto& t : terms) {
    if (t < k_min) k_min = t;
    if (t > k_max) k_max = t;
  }
  // Depth at which scale blocks interleave stably: k_max*q^J <= k_min.
  int j = 0;
  Rational probe = k_max;
  while (probe > k_min) {
    probe *= q;
    ++j;
  }
  const int stable = j + 2;
  const int depth = 2 * stable + 2;
  const int test_scale = stable + 1;

  struct Term {
    Rational value;
    int scale;
  };
  std::vector<Term> all;
  Rational q_pow(1);
  Rational total_sum(0);
  for (const auto& t : terms) total_sum += t;
  for (int s = 1; s <= depth; ++s) {
    q_pow *= q;
    for (const auto& t : terms) all.push_back({t * q_pow, s});
  }
  std::sort(all.begin(), all.end(), [](const Term& a, const Term& b) {
    int c = cmp(a.value, b.value);
    return c != 0 ? c > 0 : a.scale < b.scale;
  });

  // Geometric remainder beyond the enumerated depth.
  Rational remainder = total_sum * q_pow * q / (1 - q);
  Rational suffix = remainder;
  // Walk from the smallest term upward, so suffix sums are available; check
  // every term of the test scale (one full period of the stable region).
  bool all_cantor = true, all_interval = true;
  for (std::size_t i = all.size(); i-- > 0;) {
    if (all[i].scale == test_scale) {
      if (all[i].value > suffix) {
        all_interval = false;
      } else {
        all_cantor = false;
      }
    }
    suffix += all[i].value;
  }
  if (all_interval) return KakeyaOutcome::IntervalUnionCondition;
  if (all_cantor) return KakeyaOutcome::CantorCondition;
  return KakeyaOutcome::Neither;
}

}  // namespace selfsim
