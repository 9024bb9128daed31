#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "level_sets.hpp"
#include "sigma_set.hpp"

namespace selfsim {

enum class Verdict { PositiveMeasure, MeasureZero, Unknown };

const char* verdict_name(Verdict v);

// Verdict plus the certificate trail that justifies it.
struct DecisionReport {
  Verdict verdict = Verdict::Unknown;
  std::string fired_condition = "inconclusive";
  bool bounded_evidence = false;
  unsigned n_max = 0;
  unsigned k_max = 0;

  std::optional<Normalization> normalization;
  std::optional<ResidueProfile> residues;
  // Two differences whose ratio is irrational (no-common-divisor route).
  std::optional<std::pair<ExactReal, ExactReal>> irrational_pair;
  std::optional<CollisionWitness> collision;
  std::optional<IxSearchResult> ix;
  std::optional<DimensionBound> dimension;
  std::vector<std::pair<int, Rational>> measure_bounds;

  std::optional<ExactReal> lambda_exact;
  std::string lambda_source;
  std::optional<std::pair<int, Rational>> lambda_upper;
  std::optional<IntervalUnion> exact_intervals;
  int exact_interval_level = -1;
};

// Decision chain for the critical ratio q*|Sigma| = 1: no common divisor,
// residue completeness, the prime characterization, level collisions, then
// the bounded vanishing-sum search.
DecisionReport decide_critical(const SigmaSet& sigma, unsigned n_max,
                               unsigned k_max);

// Total dispatcher: critical sets go through decide_critical; explicit
// non-critical ratios fall back to the threshold classifiers.
DecisionReport decide(const SigmaSet& sigma, unsigned n_max, unsigned k_max);

// Prime cardinality: positive measure iff the normalized digits cover every
// residue class.  False when no common divisor exists.
bool prime_decide(const SigmaSet& sigma);

struct TilingCertificate {
  ExactReal delta;
  Rational window;
  int level = 0;
  bool covered = false;
  Rational max_overlap;
  bool overlap_ok = false;
  Rational level_measure;
};

// Verifies on [-M, M] that the translates j*delta + U_n cover the shrunken
// window, where U_n is the level-n outer approximation of E.
TilingCertificate tiling_certificate(const SigmaSet& sigma, int level,
                                     const Rational& window);

enum class KakeyaOutcome { CantorCondition, IntervalUnionCondition, Neither };

const char* kakeya_name(KakeyaOutcome k);

// Exact decision of the gap conditions for the multigeometric sequence
// (k_1..k_m; q): every term of one stable period against its tail sum.
KakeyaOutcome kakeya_check(const std::vector<Rational>& terms,
                           const Rational& q);

// Smallest level (up to cap) where the outer interval union is a fixed point
// of S -> q*(Sigma + S); the fixed point equals E exactly.
std::optional<std::pair<int, IntervalUnion>> interval_fixed_point(
    const SigmaSet& sigma, int cap);

}  // namespace selfsim
