#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decide.hpp"
#include "sigma_set.hpp"

namespace selfsim {

// Multigeometric input (k_1..k_m; 1/base).
struct Multigeometric {
  std::vector<BigInt> k;
  unsigned base = 0;
};

Multigeometric parse_multigeometric(const std::string& k_csv, unsigned base);

struct SigmaBuild {
  SigmaSet sigma;
  bool size_matches_base = false;
};

// All subset sums of the k_i, deduplicated, with q = 1/base attached.
SigmaBuild build_sigma(const Multigeometric& mg);

// Repeatedly replaces base-divisible terms k by k/base; preserves the
// topological type of the achievement set.
Multigeometric reduce_multigeometric(Multigeometric mg);

enum class NiteckiCase { Interval, Cantorval, NotApplicable };

struct NiteckiResult {
  NiteckiCase outcome = NiteckiCase::NotApplicable;
  std::optional<Interval> interval;  // arithmetic-progression case
};

NiteckiResult nitecki_classify(const Multigeometric& mg);

enum class AchievementClass {
  FiniteUnionOfIntervals,
  CantorSet,
  Cantorval,
  Unknown
};

const char* achievement_name(AchievementClass c);

struct ClassifyResult {
  AchievementClass cls = AchievementClass::Unknown;
  KakeyaOutcome kakeya = KakeyaOutcome::Neither;
  bool critical = false;  // |Sigma| * q == 1
  std::optional<DecisionReport> decision;
  std::string route;
};

ClassifyResult classify_multigeometric(const Multigeometric& mg,
                                       unsigned n_max, unsigned k_max);

// Planar IFS x -> ((x+a_i)/k, (y+b_i)/k); the projection along direction u
// is the digit set {a_i + u*b_i} with ratio 1/k.
struct PlanarIfs {
  std::vector<std::pair<ExactReal, ExactReal>> points;
};

PlanarIfs parse_ifs(const std::string& points_text);

struct IfsProjection {
  std::vector<ExactReal> digits;  // deduplicated
  bool degenerate = false;        // |digits| < map count
  unsigned map_count = 0;
  std::optional<SigmaSet> sigma;  // present when |digits| >= 2
};

IfsProjection ifs_project(const PlanarIfs& ifs, const ExactReal& u);

struct SweepEntry {
  Rational u;
  IfsProjection projection;
  DecisionReport report;
};

// Decides the projection for every lowest-terms rational u = p/s with
// |p|, s <= height, in ascending order.
std::vector<SweepEntry> ifs_sweep(const PlanarIfs& ifs, unsigned height,
                                  unsigned n_max, unsigned k_max);

struct SearchHit {
  std::vector<BigInt> digits;
  IxSearchResult ix;
};

// Candidates for positive measure without residue completeness: subsets of
// {0..bound} with min 0, gcd 1, incomplete residues, no collision up to
// n_max, and a full vanishing-sum table.
std::vector<SearchHit> counterexample_search(unsigned size, unsigned bound,
                                             unsigned n_max, unsigned k_max);

}  // namespace selfsim
