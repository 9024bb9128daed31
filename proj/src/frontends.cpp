#include "frontends.hpp"

#include <algorithm>
#include <numeric>

namespace selfsim {

Multigeometric parse_multigeometric(const std::string& k_csv, unsigned base) {
  if (base < 2) {
    throw Error(ErrorCode::Parse, "base must be at least 2");
  }
  Multigeometric mg;
  mg.base = base;
  std::size_t start = 0;
  while (start <= k_csv.size()) {
    std::size_t comma = k_csv.find(',', start);
    std::size_t end = comma == std::string::npos ? k_csv.size() : comma;
    const Rational v = parse_rational(k_csv.substr(start, end - start));
    if (v.get_den() != 1 || v <= 0) {
      throw Error(ErrorCode::Parse, "terms must be positive integers");
    }
    mg.k.push_back(v.get_num());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (mg.k.empty()) {
    throw Error(ErrorCode::Parse, "empty term list");
  }
  return mg;
}

SigmaBuild build_sigma(const Multigeometric& mg) {
  if (mg.k.size() > 24) {
    throw Error(ErrorCode::BoundExceeded,
                "subset-sum enumeration too large (m > 24)");
  }
  std::vector<BigInt> sums{BigInt(0)};
  for (const auto& k : mg.k) {
    const std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + k);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  const bool matches = sums.size() == mg.base;
  std::vector<ExactReal> digits;
  digits.reserve(sums.size());
  for (auto& s : sums) digits.emplace_back(Rational(std::move(s)));
  return {SigmaSet::from_digits(std::move(digits),
                                make_rational(1, BigInt(mg.base))),
          matches};
}

Multigeometric reduce_multigeometric(Multigeometric mg) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& k : mg.k) {
      if (k % mg.base == 0) {
        k /= mg.base;
        changed = true;
      }
    }
  }
  return mg;
}

NiteckiResult nitecki_classify(const Multigeometric& mg) {
  SigmaBuild built = build_sigma(mg);
  NiteckiResult out;
  if (!built.size_matches_base) return out;
  std::vector<BigInt> digits;
  for (const auto& d : built.sigma.digits()) {
    digits.push_back(d.as_rational().get_num());
  }
  if (!residue_profile(digits, mg.base).complete) return out;
  // Case (i): the sorted digits form the arithmetic progression i*sigma_1.
  bool arithmetic = true;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != digits[1] * BigInt(static_cast<unsigned long>(i))) {
      arithmetic = false;
      break;
    }
  }
  if (arithmetic) {
    // Total sum of the series: (sum k_i) * q/(1-q).
    BigInt k_sum(0);
    for (const auto& k : mg.k) k_sum += k;
    const Rational q = make_rational(1, BigInt(mg.base));
    out.outcome = NiteckiCase::Interval;
    out.interval = Interval{Rational(0), Rational(k_sum) * q / (1 - q)};
    return out;
  }
  out.outcome = NiteckiCase::Cantorval;
  return out;
}

const char* achievement_name(AchievementClass c) {
  switch (c) {
    case AchievementClass::FiniteUnionOfIntervals:
      return "FiniteUnionOfIntervals";
    case AchievementClass::CantorSet:
      return "CantorSet";
    case AchievementClass::Cantorval:
      return "Cantorval";
    case AchievementClass::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

ClassifyResult classify_multigeometric(const Multigeometric& mg,
                                       unsigned n_max, unsigned k_max) {
  SigmaBuild built = build_sigma(mg);
  ClassifyResult out;
  std::vector<Rational> terms;
  terms.reserve(mg.k.size());
  for (const auto& k : mg.k) terms.emplace_back(k);
  const Rational q = make_rational(1, BigInt(mg.base));
  out.kakeya = kakeya_check(terms, q);
  out.critical = built.sigma.critical_ratio();

  if (out.kakeya == KakeyaOutcome::IntervalUnionCondition) {
    out.cls = AchievementClass::FiniteUnionOfIntervals;
    out.route = "kakeya-interval-condition";
    return out;
  }
  if (out.critical) {
    out.decision = decide_critical(built.sigma, n_max, k_max);
    switch (out.decision->verdict) {
      case Verdict::MeasureZero:
        out.cls = AchievementClass::CantorSet;
        out.route = "measure-zero";
        break;
      case Verdict::PositiveMeasure:
        out.cls = AchievementClass::Cantorval;
        out.route = "positive-measure-not-interval-union";
        break;
      case Verdict::Unknown:
        out.cls = AchievementClass::Unknown;
        out.route = "measure-inconclusive";
        break;
    }
    return out;
  }
  // Non-critical ratio: Kakeya and threshold evidence only.
  if (out.kakeya == KakeyaOutcome::CantorCondition) {
    out.cls = AchievementClass::CantorSet;
    out.route = "kakeya-cantor-condition";
    return out;
  }
  out.decision = decide(built.sigma, n_max, k_max);
  if (out.decision->verdict == Verdict::MeasureZero) {
    out.cls = AchievementClass::CantorSet;
    out.route = "subcritical-measure-zero";
  } else if (out.decision->verdict == Verdict::PositiveMeasure) {
    // Contains an interval but the interval-union condition failed.
    out.cls = AchievementClass::Cantorval;
    out.route = "threshold-positive-not-interval-union";
  } else {
    out.cls = AchievementClass::Unknown;
    out.route = "no-evidence";
  }
  return out;
}

PlanarIfs parse_ifs(const std::string& points_text) {
  PlanarIfs out;
  std::size_t start = 0;
  while (start <= points_text.size()) {
    std::size_t colon = points_text.find(':', start);
    std::size_t end = colon == std::string::npos ? points_text.size() : colon;
    const std::string pair_text = points_text.substr(start, end - start);
    const std::size_t comma = pair_text.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::Parse,
                  "IFS point must be 'a,b', got '" + pair_text + "'");
    }
    out.points.emplace_back(ExactReal::parse(pair_text.substr(0, comma)),
                            ExactReal::parse(pair_text.substr(comma + 1)));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (out.points.size() < 2) {
    throw Error(ErrorCode::Parse, "IFS needs at least 2 maps");
  }
  return out;
}

IfsProjection ifs_project(const PlanarIfs& ifs, const ExactReal& u) {
  IfsProjection out;
  out.map_count = static_cast<unsigned>(ifs.points.size());
  std::vector<ExactReal> digits;
  digits.reserve(ifs.points.size());
  for (const auto& [a, b] : ifs.points) digits.push_back(a + u * b);
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
  out.degenerate = digits.size() < ifs.points.size();
  if (digits.size() >= 2) {
    out.sigma = SigmaSet::from_digits(
        digits, make_rational(1, BigInt(out.map_count)));
  }
  out.digits = std::move(digits);
  return out;
}

std::vector<SweepEntry> ifs_sweep(const PlanarIfs& ifs, unsigned height,
                                  unsigned n_max, unsigned k_max) {
  if (height == 0) {
    throw Error(ErrorCode::Degenerate, "sweep height must be positive");
  }
  for (const auto& [a, b] : ifs.points) {
    if (!a.is_rational() || !b.is_rational()) {
      throw Error(ErrorCode::NotApplicable,
                  "sweep needs rational IFS coordinates");
    }
  }
  // Lowest-terms rationals p/s with |p|, s <= height (the Stern-Brocot set
  // of bounded height), ascending.
  std::vector<Rational> candidates;
  for (long p = -static_cast<long>(height); p <= static_cast<long>(height);
       ++p) {
    for (long s = 1; s <= static_cast<long>(height); ++s) {
      if (gcd(BigInt(p), BigInt(s)) != 1) continue;
      candidates.push_back(make_rational(BigInt(p), BigInt(s)));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<SweepEntry> out;
  out.reserve(candidates.size());
  for (const auto& u : candidates) {
    SweepEntry entry;
    entry.u = u;
    entry.projection = ifs_project(ifs, ExactReal(u));
    if (entry.projection.sigma) {
      entry.report = decide(*entry.projection.sigma, n_max, k_max);
    } else {
      // Projection collapsed to a single point: measure zero outright.
      entry.report.verdict = Verdict::MeasureZero;
      entry.report.fired_condition = "subcritical-cantor";
      entry.report.n_max = n_max;
      entry.report.k_max = k_max;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<SearchHit> counterexample_search(unsigned size, unsigned bound,
                                             unsigned n_max, unsigned k_max) {
  if (size < 2) {
    throw Error(ErrorCode::Degenerate, "size must be at least 2");
  }
  if (bound < size) {
    throw Error(ErrorCode::Degenerate, "bound must be at least the size");
  }
  std::vector<SearchHit> hits;
  // Subsets of {1..bound} of size-1 entries, plus the fixed digit 0.
  std::vector<unsigned> pick(size - 1);
  std::iota(pick.begin(), pick.end(), 1);
  const auto advance_combination = [&]() -> bool {
    std::size_t i = pick.size();
    while (i-- > 0) {
      if (pick[i] != bound - (pick.size() - 1 - i)) {
        ++pick[i];
        for (std::size_t j = i + 1; j < pick.size(); ++j) {
          pick[j] = pick[j - 1] + 1;
        }
        return true;
      }
    }
    return false;
  };

  while (true) {
    BigInt g(0);
    for (unsigned v : pick) g = gcd(g, BigInt(v));
    if (g == 1) {
      std::vector<BigInt> digits{BigInt(0)};
      for (unsigned v : pick) digits.emplace_back(v);
      if (!residue_profile(digits, size).complete) {
        std::vector<ExactReal> reals;
        reals.reserve(digits.size());
        for (const auto& d : digits) reals.emplace_back(Rational(d));
        SigmaSet sigma = SigmaSet::from_digits(std::move(reals));
        if (!first_collision(sigma, static_cast<int>(n_max))) {
          std::vector<std::int64_t> sigma_star;
          for (const auto& d : digits) sigma_star.push_back(to_int64(d));
          IxSearchResult ix =
              condition_ix_search(sigma_star, size, n_max, k_max);
          if (ix.failures.empty()) {
            hits.push_back({digits, std::move(ix)});
          }
        }
      }
    }
    if (!advance_combination()) break;
  }
  return hits;
}

}  // namespace selfsim
