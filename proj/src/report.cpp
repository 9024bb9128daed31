#include "report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace selfsim {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json digits_json(const SigmaSet& sigma) {
  Json out = Json::array();
  for (const auto& d : sigma.digits()) out.push_back(d.str());
  return out;
}

Json segments_json(const IntervalUnion& u) {
  Json out = Json::array();
  for (const auto& part : u.parts()) {
    out.push_back(Json::array({rational_str(part.lo), rational_str(part.hi)}));
  }
  return out;
}

Json report_json(const DecisionReport& report) {
  Json out;
  out["verdict"] = verdict_name(report.verdict);
  out["fired_condition"] = report.fired_condition;
  out["bounded_evidence"] = report.bounded_evidence;

  Json certs = Json::object();
  if (report.irrational_pair) {
    certs["irrational_ratio_witness"] = {
        {"a", report.irrational_pair->first.str()},
        {"b", report.irrational_pair->second.str()}};
  }
  if (report.normalization) {
    Json norm;
    norm["shift"] = report.normalization->shift.str();
    norm["delta"] = report.normalization->delta.str();
    Json star = Json::array();
    for (const auto& v : report.normalization->sigma_star) {
      star.push_back(v.get_str());
    }
    norm["sigma_star"] = star;
    certs["normalization"] = norm;
  }
  if (report.residues) {
    certs["residue_profile"] = {{"modulus", report.residues->modulus},
                                {"residues", report.residues->residues},
                                {"complete", report.residues->complete}};
  }
  if (report.collision) {
    Json first = Json::array(), second = Json::array();
    for (const auto& d : report.collision->first) first.push_back(d.str());
    for (const auto& d : report.collision->second) second.push_back(d.str());
    certs["collision"] = {{"level", report.collision->level},
                          {"first", first},
                          {"second", second}};
  }
  if (report.ix) {
    Json table = Json::array();
    for (const auto& e : report.ix->table) {
      table.push_back(Json::array({e.n, e.k}));
    }
    certs["vanishing_sums"] = {{"n_max", report.ix->n_max},
                               {"k_max", report.ix->k_max},
                               {"table", table},
                               {"failures", report.ix->failures}};
  }
  if (report.dimension) {
    certs["dimension_bound"] = {
        {"level", report.dimension->level},
        {"distinct", report.dimension->distinct.get_str()},
        {"value_float", report.dimension->value}};
  }
  if (!report.measure_bounds.empty()) {
    Json bounds = Json::array();
    for (const auto& [level, bound] : report.measure_bounds) {
      bounds.push_back(Json::array({level, rational_str(bound)}));
    }
    certs["measure_upper_bounds"] = bounds;
  }
  if (report.exact_intervals) {
    certs["exact_intervals"] = {
        {"level", report.exact_interval_level},
        {"segments", segments_json(*report.exact_intervals)}};
  }
  out["certificates"] = certs;

  if (report.lambda_exact) {
    out["lambda_E"] = {{"exact", report.lambda_exact->str()},
                       {"source", report.lambda_source}};
  } else if (report.lambda_upper) {
    out["lambda_E"] = {{"upper_bound", rational_str(report.lambda_upper->second)},
                       {"level", report.lambda_upper->first}};
  } else {
    out["lambda_E"] = nullptr;
  }
  return out;
}

Json interval_levels_json(const SigmaSet& sigma, int levels) {
  Json out = Json::array();
  auto seq = level_interval_sequence(sigma, levels);
  for (int n = 1; n <= static_cast<int>(seq.size()); ++n) {
    out.push_back(
        {{"level", n},
         {"segments", segments_json(seq[static_cast<std::size_t>(n - 1)])}});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json decide_json(const SigmaSet& sigma, unsigned n_max, unsigned k_max,
                 int levels, Verdict& verdict_out) {
  Stopwatch timer;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "decide";
  doc["input"] = {{"sigma", digits_json(sigma)},
                  {"q", rational_str(sigma.ratio())},
                  {"n_max", n_max},
                  {"k_max", k_max}};
  DecisionReport report = decide(sigma, n_max, k_max);
  verdict_out = report.verdict;
  doc.update(report_json(report));
  if (levels > 0 && sigma.all_rational()) {
    doc["intervals"] = interval_levels_json(sigma, levels);
  }
  doc["timing_ms"] = timer.elapsed_ms();
  return doc;
}

}  // namespace

DecideOutcome decide_document(const SigmaSet& sigma, unsigned n_max,
                              unsigned k_max, int levels) {
  DecideOutcome out;
  Json doc = decide_json(sigma, n_max, k_max, levels, out.verdict);
  out.json = dump(doc);
  return out;
}

std::string multigeo_document(const Multigeometric& mg, unsigned n_max,
                              unsigned k_max) {
  Stopwatch timer;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "multigeo";
  Json kj = Json::array();
  for (const auto& k : mg.k) kj.push_back(k.get_str());
  doc["input"] = {{"k", kj},
                  {"base", mg.base},
                  {"n_max", n_max},
                  {"k_max", k_max}};

  SigmaBuild built = build_sigma(mg);
  doc["sigma"] = digits_json(built.sigma);
  doc["sigma_size_matches_base"] = built.size_matches_base;

  Multigeometric reduced = reduce_multigeometric(mg);
  Json rj = Json::array();
  for (const auto& k : reduced.k) rj.push_back(k.get_str());
  doc["reduced_k"] = rj;

  ClassifyResult result = classify_multigeometric(mg, n_max, k_max);
  doc["kakeya"] = kakeya_name(result.kakeya);
  doc["classification"] = achievement_name(result.cls);
  doc["route"] = result.route;

  NiteckiResult nitecki = nitecki_classify(mg);
  Json nj;
  switch (nitecki.outcome) {
    case NiteckiCase::Interval: {
      nj["case"] = "Interval";
      nj["endpoints"] = Json::array({rational_str(nitecki.interval->lo),
                                     rational_str(nitecki.interval->hi)});
      // The endpoint printed in the classical statement, n/(n-1)*sum(k),
      // disagrees with the largest subsum; the total series sum is what the
      // terms add up to, so that is the reported endpoint.
      nj["endpoint_note"] =
          "endpoint is the total series sum (sum k_i)*q/(1-q); the "
          "classically printed n/(n-1)*sum(k_i) exceeds the largest subsum";
      break;
    }
    case NiteckiCase::Cantorval:
      nj["case"] = "Cantorval";
      break;
    case NiteckiCase::NotApplicable:
      nj["case"] = "NotApplicable";
      break;
  }
  doc["nitecki"] = nj;

  if (result.decision) {
    doc["decision"] = report_json(*result.decision);
  }

  if (auto fp = interval_fixed_point(built.sigma, 12)) {
    doc["intervals"] = {{"exact", true},
                        {"level", fp->first},
                        {"segments", segments_json(fp->second)}};
  } else {
    try {
      IntervalUnion approx = level_intervals(built.sigma, 8);
      doc["intervals"] = {{"exact", false},
                          {"level", 8},
                          {"segments", segments_json(approx)}};
    } catch (const Error&) {
      doc["intervals"] = nullptr;
    }
  }
  doc["timing_ms"] = timer.elapsed_ms();
  return dump(doc);
}

DecideOutcome ifs_single_document(const PlanarIfs& ifs,
                                  const std::string& u_text, unsigned n_max,
                                  unsigned k_max) {
  Stopwatch timer;
  const ExactReal u = ExactReal::parse(u_text);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "ifs";
  Json pts = Json::array();
  for (const auto& [a, b] : ifs.points) {
    pts.push_back(Json::array({a.str(), b.str()}));
  }
  doc["input"] = {{"points", pts},
                  {"u", u.str()},
                  {"n_max", n_max},
                  {"k_max", k_max}};

  IfsProjection projection = ifs_project(ifs, u);
  Json digits = Json::array();
  for (const auto& d : projection.digits) digits.push_back(d.str());
  doc["projection"] = {{"digits", digits},
                       {"degenerate", projection.degenerate},
                       {"map_count", projection.map_count}};

  DecideOutcome out;
  if (projection.sigma) {
    DecisionReport report = decide(*projection.sigma, n_max, k_max);
    out.verdict = report.verdict;
    doc.update(report_json(report));
  } else {
    out.verdict = Verdict::MeasureZero;
    doc["verdict"] = verdict_name(out.verdict);
    doc["fired_condition"] = "subcritical-cantor";
    doc["bounded_evidence"] = false;
    doc["certificates"] = Json::object();
    doc["lambda_E"] = {{"exact", "0"}, {"source", "single-point"}};
  }
  doc["timing_ms"] = timer.elapsed_ms();
  out.json = dump(doc);
  return out;
}

std::string ifs_sweep_document(const PlanarIfs& ifs, unsigned height,
                               unsigned n_max, unsigned k_max) {
  Stopwatch timer;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "ifs";
  Json pts = Json::array();
  for (const auto& [a, b] : ifs.points) {
    pts.push_back(Json::array({a.str(), b.str()}));
  }
  doc["input"] = {{"points", pts},
                  {"sweep_height", height},
                  {"n_max", n_max},
                  {"k_max", k_max}};

  Json results = Json::array();
  for (const auto& entry : ifs_sweep(ifs, height, n_max, k_max)) {
    Json digits = Json::array();
    for (const auto& d : entry.projection.digits) digits.push_back(d.str());
    Json item = {{"u", rational_str(entry.u)},
                 {"digits", digits},
                 {"degenerate", entry.projection.degenerate},
                 {"verdict", verdict_name(entry.report.verdict)},
                 {"fired_condition", entry.report.fired_condition}};
    if (entry.report.lambda_exact) {
      item["lambda_E"] = entry.report.lambda_exact->str();
    }
    results.push_back(item);
  }
  doc["results"] = results;
  doc["timing_ms"] = timer.elapsed_ms();
  return dump(doc);
}

std::string search_document(unsigned size, unsigned bound, unsigned n_max,
                            unsigned k_max) {
  Stopwatch timer;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "search";
  doc["input"] = {{"size", size},
                  {"bound", bound},
                  {"n_max", n_max},
                  {"k_max", k_max}};
  Json results = Json::array();
  for (const auto& hit : counterexample_search(size, bound, n_max, k_max)) {
    Json digits = Json::array();
    for (const auto& d : hit.digits) digits.push_back(d.get_str());
    Json table = Json::array();
    for (const auto& e : hit.ix.table) {
      table.push_back(Json::array({e.n, e.k}));
    }
    results.push_back({{"sigma", digits},
                       {"vanishing_sums",
                        {{"n_max", hit.ix.n_max},
                         {"k_max", hit.ix.k_max},
                         {"table", table}}}});
  }
  doc["results"] = results;
  doc["timing_ms"] = timer.elapsed_ms();
  return dump(doc);
}

namespace {

SigmaSet sigma_from_input(const Json& input) {
  std::vector<ExactReal> digits;
  for (const auto& d : input.at("sigma")) {
    digits.push_back(ExactReal::parse(d.get<std::string>()));
  }
  const Rational q = parse_rational(input.at("q").get<std::string>());
  SigmaSet implied = SigmaSet::from_digits(digits);
  if (implied.ratio() == q) return implied;
  return SigmaSet::from_digits(std::move(digits), q);
}

SigmaSet sigma_from_document(const Json& doc) {
  if (doc.at("command") == "ifs") {
    // Rebuild the projected digit set.
    std::vector<std::pair<ExactReal, ExactReal>> points;
    for (const auto& p : doc.at("input").at("points")) {
      points.emplace_back(ExactReal::parse(p.at(0).get<std::string>()),
                          ExactReal::parse(p.at(1).get<std::string>()));
    }
    PlanarIfs ifs{std::move(points)};
    const ExactReal u =
        ExactReal::parse(doc.at("input").at("u").get<std::string>());
    IfsProjection projection = ifs_project(ifs, u);
    if (!projection.sigma) {
      throw Error(ErrorCode::Degenerate,
                  "projection collapsed to fewer than 2 digits");
    }
    return *projection.sigma;
  }
  return sigma_from_input(doc.at("input"));
}

void require(bool condition, const std::string& reason) {
  if (!condition) throw Error(ErrorCode::NotApplicable, reason);
}

// Re-derives the certificate named by fired_condition and checks it against
// the document.
void verify_certificates(const Json& doc) {
  const std::string fired = doc.at("fired_condition").get<std::string>();
  const std::string verdict = doc.at("verdict").get<std::string>();
  const Json& certs = doc.at("certificates");

  if (fired == "subcritical-cantor") {
    require(verdict == "MeasureZero", "subcritical route must be MeasureZero");
    const Json& input = doc.at("input");
    if (input.contains("sigma")) {
      SigmaSet sigma = sigma_from_document(doc);
      require(sigma.ratio() * BigInt(static_cast<unsigned long>(sigma.size())) <
                  1,
              "ratio is not subcritical");
    }
    return;
  }

  SigmaSet sigma = sigma_from_document(doc);
  const unsigned m = static_cast<unsigned>(sigma.size());

  if (fired == "no-common-divisor") {
    require(verdict == "MeasureZero", "route must be MeasureZero");
    require(!common_divisor(sigma).has_value(),
            "difference set has a common divisor after all");
    const Json& w = certs.at("irrational_ratio_witness");
    const ExactReal a = ExactReal::parse(w.at("a").get<std::string>());
    const ExactReal b = ExactReal::parse(w.at("b").get<std::string>());
    auto diffs = difference_set(sigma);
    auto member = [&](const ExactReal& v) {
      for (const auto& d : diffs) {
        if (d == v) return true;
      }
      return false;
    };
    require(member(a) && member(b), "witness values are not differences");
    require(!ratio_is_rational(a, b), "witness ratio is rational");
    return;
  }

  if (fired == "residue-complete") {
    require(verdict == "PositiveMeasure", "route must be PositiveMeasure");
    Normalization norm = normalize(sigma);
    require(residue_profile(norm, m).complete, "residues are not complete");
    require(norm.delta.str() ==
                certs.at("normalization").at("delta").get<std::string>(),
            "delta mismatch");
    require(doc.at("lambda_E").at("exact").get<std::string>() ==
                norm.delta.str(),
            "lambda != delta");
    return;
  }

  if (fired == "prime-incomplete-residues") {
    require(verdict == "MeasureZero", "route must be MeasureZero");
    require(is_prime(m), "cardinality is not prime");
    require(!residue_profile(normalize(sigma), m).complete,
            "residues are complete");
    return;
  }

  if (fired == "level-collision") {
    require(verdict == "MeasureZero", "route must be MeasureZero");
    const Json& c = certs.at("collision");
    const int level = c.at("level").get<int>();
    auto parse_string = [&](const Json& arr) {
      std::vector<ExactReal> out;
      for (const auto& d : arr) out.push_back(ExactReal::parse(d.get<std::string>()));
      return out;
    };
    auto first = parse_string(c.at("first"));
    auto second = parse_string(c.at("second"));
    require(static_cast<int>(first.size()) == level &&
                static_cast<int>(second.size()) == level,
            "witness length does not match the level");
    require(first != second, "witness strings are identical");
    auto is_digit = [&](const ExactReal& v) {
      for (const auto& d : sigma.digits()) {
        if (d == v) return true;
      }
      return false;
    };
    for (const auto& d : first) require(is_digit(d), "unknown digit in witness");
    for (const auto& d : second) require(is_digit(d), "unknown digit in witness");
    const Rational q = sigma.ratio();
    ExactReal va(0), vb(0);
    Rational q_pow(1);
    for (int i = 0; i < level; ++i) {
      q_pow *= q;
      va = va + first[static_cast<std::size_t>(i)] * ExactReal(q_pow);
      vb = vb + second[static_cast<std::size_t>(i)] * ExactReal(q_pow);
    }
    require(va == vb, "witness strings evaluate to different points");
    return;
  }

  if (fired == "vanishing-sums (bounded)") {
    require(verdict == "PositiveMeasure", "route must be PositiveMeasure");
    Normalization norm = normalize(sigma);
    const Json& v = certs.at("vanishing_sums");
    require(v.at("failures").empty(), "certificate lists failures");
    const unsigned n_max = v.at("n_max").get<unsigned>();
    std::vector<bool> seen(n_max + 1, false);
    for (const auto& row : v.at("table")) {
      const unsigned n = row.at(0).get<unsigned>();
      const unsigned k = row.at(1).get<unsigned>();
      require(n >= 1 && n <= n_max, "table frequency out of range");
      seen[n] = true;
      unsigned long modulus = 1;
      for (unsigned i = 0; i < k; ++i) modulus *= m;
      std::vector<BigInt> exps;
      for (const auto& s : norm.sigma_star) {
        exps.push_back(BigInt(static_cast<long>(n)) * s);
      }
      require(vanishing_sum(exps, modulus).vanishes,
              "claimed vanishing sum does not vanish");
      unsigned long smaller = 1;
      for (unsigned kk = 1; kk < k; ++kk) {
        smaller *= m;
        require(!vanishing_sum(exps, smaller).vanishes,
                "claimed level k is not minimal");
      }
    }
    for (unsigned n = 1; n <= n_max; ++n) {
      require(seen[n], "table does not cover every frequency");
    }
    return;
  }

  if (fired == "interval-threshold") {
    require(verdict == "PositiveMeasure", "route must be PositiveMeasure");
    require(ExactReal(sigma.ratio()) >= interval_threshold(sigma),
            "ratio below the interval threshold");
    return;
  }

  if (fired == "containment-threshold") {
    require(verdict == "PositiveMeasure", "route must be PositiveMeasure");
    require(ExactReal(sigma.ratio()) >= containment_threshold(sigma),
            "ratio below the containment threshold");
    return;
  }

  if (fired == "inconclusive" || fired == "supercritical-unknown") {
    require(verdict == "Unknown", "route must be Unknown");
    if (certs.contains("dimension_bound")) {
      const Json& d = certs.at("dimension_bound");
      DimensionBound recomputed =
          hausdorff_upper(sigma, d.at("level").get<int>());
      require(recomputed.distinct.get_str() ==
                  d.at("distinct").get<std::string>(),
              "dimension bound count mismatch");
    }
    return;
  }

  throw Error(ErrorCode::NotApplicable, "unknown fired_condition '" + fired + "'");
}

}  // namespace

VerifyOutcome verify_document(const std::string& report_json) {
  Stopwatch timer;
  Json doc;
  try {
    doc = Json::parse(report_json);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::Parse, std::string("invalid report JSON: ") + e.what());
  }
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = "verify";
  VerifyOutcome result;
  try {
    if (!doc.contains("schema_version") ||
        doc.at("schema_version") != kSchemaVersion) {
      throw Error(ErrorCode::NotApplicable, "unsupported schema_version");
    }
    verify_certificates(doc);
    result.accepted = true;
    out["accepted"] = true;
    out["fired_condition"] = doc.at("fired_condition");
    out["verdict"] = doc.at("verdict");
  } catch (const Error& e) {
    result.accepted = false;
    out["accepted"] = false;
    out["reason"] = e.what();
  } catch (const std::exception& e) {
    result.accepted = false;
    out["accepted"] = false;
    out["reason"] = std::string("malformed report: ") + e.what();
  }
  out["timing_ms"] = timer.elapsed_ms();
  result.json = dump(out);
  return result;
}

std::string intervals_csv(const SigmaSet& sigma, int levels) {
  std::string out = "level,lo_num,lo_den,hi_num,hi_den\n";
  auto seq = level_interval_sequence(sigma, levels);
  for (int n = 1; n <= static_cast<int>(seq.size()); ++n) {
    for (const auto& part : seq[static_cast<std::size_t>(n - 1)].parts()) {
      out += std::to_string(n);
      out += ',';
      out += part.lo.get_num().get_str();
      out += ',';
      out += part.lo.get_den().get_str();
      out += ',';
      out += part.hi.get_num().get_str();
      out += ',';
      out += part.hi.get_den().get_str();
      out += '\n';
    }
  }
  return out;
}

std::string render_svg(const SigmaSet& sigma, int levels) {
  if (levels < 1) {
    throw Error(ErrorCode::Degenerate, "rendering needs at least one level");
  }
  const EnvelopeBounds env = envelope(sigma);
  const Rational span = env.e_max - env.e_min;
  auto seq = level_interval_sequence(sigma, levels);

  const int height = 40 * levels;
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"" +
         std::to_string(height) + "\" viewBox=\"0 0 1000 " +
         std::to_string(height) + "\">\n";
  out += "<rect width=\"1000\" height=\"" + std::to_string(height) +
         "\" fill=\"#ffffff\"/>\n";
  char buf[64];
  for (int n = 1; n <= static_cast<int>(seq.size()); ++n) {
    const int y = 40 * (n - 1) + 8;
    for (const auto& part : seq[static_cast<std::size_t>(n - 1)].parts()) {
      const double x0 = Rational((part.lo - env.e_min) / span).get_d() * 1000.0;
      const double x1 = Rational((part.hi - env.e_min) / span).get_d() * 1000.0;
      std::snprintf(buf, sizeof(buf), "%.4f", x0);
      std::string xs = buf;
      std::snprintf(buf, sizeof(buf), "%.4f", std::max(x1 - x0, 0.05));
      std::string ws = buf;
      out += "<rect x=\"" + xs + "\" y=\"" + std::to_string(y) +
             "\" width=\"" + ws + "\" height=\"24\" fill=\"#2b6cb0\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace selfsim
