#include "selfsim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "report.hpp"

using namespace selfsim;

struct ss_problem {
  SigmaSet sigma;
};

namespace {

thread_local std::string g_last_error;

ss_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return SS_ERROR_PARSE;
    case ErrorCode::Degenerate:
      return SS_ERROR_DEGENERATE;
    case ErrorCode::MixedRadicals:
      return SS_ERROR_MIXED_RADICALS;
    case ErrorCode::DivisionByZero:
      return SS_ERROR_DIVISION_BY_ZERO;
    case ErrorCode::NotApplicable:
      return SS_ERROR_NOT_APPLICABLE;
    case ErrorCode::EnumerationGuard:
      return SS_ERROR_ENUMERATION_GUARD;
    case ErrorCode::BoundExceeded:
      return SS_ERROR_BOUND_EXCEEDED;
    case ErrorCode::Internal:
      return SS_ERROR_INTERNAL;
  }
  return SS_ERROR_INTERNAL;
}

template <typename Fn>
ss_status guarded(Fn&& fn) {
  try {
    fn();
    return SS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SS_ERROR_ENUMERATION_GUARD;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SS_ERROR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ss_status require_arg(bool ok, const char* message) {
  if (ok) return SS_OK;
  g_last_error = message;
  return SS_ERROR_INVALID_ARGUMENT;
}

constexpr unsigned kDefaultNMax = 8;

unsigned pick_n_max(int n_max) {
  return n_max <= 0 ? kDefaultNMax : static_cast<unsigned>(n_max);
}

unsigned pick_k_max(int k_max) {
  return k_max <= 0 ? 0u : static_cast<unsigned>(k_max);
}

ss_verdict map_verdict(Verdict v) {
  switch (v) {
    case Verdict::PositiveMeasure:
      return SS_POSITIVE_MEASURE;
    case Verdict::MeasureZero:
      return SS_MEASURE_ZERO;
    case Verdict::Unknown:
      return SS_VERDICT_UNKNOWN;
  }
  return SS_VERDICT_UNKNOWN;
}

}  // namespace

extern "C" {

const char* ss_version(void) { return "1.0.0"; }

const char* ss_status_name(ss_status status) {
  switch (status) {
    case SS_OK:
      return "ok";
    case SS_ERROR_PARSE:
      return "parse error";
    case SS_ERROR_DEGENERATE:
      return "degenerate input";
    case SS_ERROR_MIXED_RADICALS:
      return "mixed radicals";
    case SS_ERROR_DIVISION_BY_ZERO:
      return "division by zero";
    case SS_ERROR_NOT_APPLICABLE:
      return "not applicable";
    case SS_ERROR_ENUMERATION_GUARD:
      return "enumeration guard";
    case SS_ERROR_BOUND_EXCEEDED:
      return "bound exceeded";
    case SS_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case SS_ERROR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ss_last_error(void) { return g_last_error.c_str(); }

void ss_string_free(char* text) { std::free(text); }

ss_status ss_problem_from_digits(const char* digits_csv, ss_problem** out) {
  if (auto bad = require_arg(digits_csv && out, "null argument")) return bad;
  *out = nullptr;
  return guarded([&] {
    *out = new ss_problem{SigmaSet::parse(digits_csv)};
  });
}

ss_status ss_problem_from_multigeometric(const char* k_csv, int base,
                                         ss_problem** out) {
  if (auto bad = require_arg(k_csv && out, "null argument")) return bad;
  if (auto bad = require_arg(base >= 2, "base must be at least 2")) return bad;
  *out = nullptr;
  return guarded([&] {
    Multigeometric mg =
        parse_multigeometric(k_csv, static_cast<unsigned>(base));
    *out = new ss_problem{build_sigma(mg).sigma};
  });
}

ss_status ss_problem_set_ratio(ss_problem* problem, const char* ratio) {
  if (auto bad = require_arg(problem && ratio, "null argument")) return bad;
  return guarded([&] {
    problem->sigma = problem->sigma.with_ratio(parse_rational(ratio));
  });
}

ss_status ss_problem_digits(const ss_problem* problem, char** digits_csv) {
  if (auto bad = require_arg(problem && digits_csv, "null argument")) return bad;
  return guarded([&] { *digits_csv = copy_string(problem->sigma.str()); });
}

void ss_problem_free(ss_problem* problem) { delete problem; }

ss_status ss_decide(const ss_problem* problem, int n_max, int k_max,
                    int levels, ss_verdict* verdict, char** json) {
  if (auto bad = require_arg(problem && json, "null argument")) return bad;
  *json = nullptr;
  return guarded([&] {
    DecideOutcome outcome = decide_document(
        problem->sigma, pick_n_max(n_max), pick_k_max(k_max), levels);
    if (verdict) *verdict = map_verdict(outcome.verdict);
    *json = copy_string(outcome.json);
  });
}

ss_status ss_intervals_csv(const ss_problem* problem, int levels, char** csv) {
  if (auto bad = require_arg(problem && csv, "null argument")) return bad;
  if (auto bad = require_arg(levels >= 1, "levels must be at least 1")) {
    return bad;
  }
  *csv = nullptr;
  return guarded([&] {
    *csv = copy_string(intervals_csv(problem->sigma, levels));
  });
}

ss_status ss_render_svg(const ss_problem* problem, int levels, char** svg) {
  if (auto bad = require_arg(problem && svg, "null argument")) return bad;
  if (auto bad = require_arg(levels >= 1, "levels must be at least 1")) {
    return bad;
  }
  *svg = nullptr;
  return guarded([&] {
    *svg = copy_string(render_svg(problem->sigma, levels));
  });
}

ss_status ss_multigeo_classify(const char* k_csv, int base, int n_max,
                               int k_max, char** json) {
  if (auto bad = require_arg(k_csv && json, "null argument")) return bad;
  if (auto bad = require_arg(base >= 2, "base must be at least 2")) return bad;
  *json = nullptr;
  return guarded([&] {
    Multigeometric mg =
        parse_multigeometric(k_csv, static_cast<unsigned>(base));
    *json = copy_string(
        multigeo_document(mg, pick_n_max(n_max), pick_k_max(k_max)));
  });
}

ss_status ss_ifs_decide(const char* points_text, const char* u, int n_max,
                        int k_max, ss_verdict* verdict, char** json) {
  if (auto bad = require_arg(points_text && u && json, "null argument")) {
    return bad;
  }
  *json = nullptr;
  return guarded([&] {
    PlanarIfs ifs = parse_ifs(points_text);
    DecideOutcome outcome =
        ifs_single_document(ifs, u, pick_n_max(n_max), pick_k_max(k_max));
    if (verdict) *verdict = map_verdict(outcome.verdict);
    *json = copy_string(outcome.json);
  });
}

ss_status ss_ifs_sweep(const char* points_text, int height, int n_max,
                       int k_max, char** json) {
  if (auto bad = require_arg(points_text && json, "null argument")) return bad;
  if (auto bad = require_arg(height >= 1, "height must be at least 1")) {
    return bad;
  }
  *json = nullptr;
  return guarded([&] {
    PlanarIfs ifs = parse_ifs(points_text);
    *json = copy_string(ifs_sweep_document(ifs, static_cast<unsigned>(height),
                                           pick_n_max(n_max),
                                           pick_k_max(k_max)));
  });
}

ss_status ss_search(int size, int bound, int n_max, int k_max, char** json) {
  if (auto bad = require_arg(json != nullptr, "null argument")) return bad;
  if (auto bad = require_arg(size >= 2, "size must be at least 2")) return bad;
  if (auto bad = require_arg(bound >= size, "bound must be >= size")) {
    return bad;
  }
  *json = nullptr;
  return guarded([&] {
    *json = copy_string(search_document(
        static_cast<unsigned>(size), static_cast<unsigned>(bound),
        pick_n_max(n_max), pick_k_max(k_max)));
  });
}

ss_status ss_verify(const char* report_json, int* accepted, char** json) {
  if (auto bad = require_arg(report_json && json, "null argument")) return bad;
  *json = nullptr;
  return guarded([&] {
    VerifyOutcome outcome = verify_document(report_json);
    if (accepted) *accepted = outcome.accepted ? 1 : 0;
    *json = copy_string(outcome.json);
  });
}

}  // extern "C"
