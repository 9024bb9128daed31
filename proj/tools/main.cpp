// Command-line front end for the selfsim shared library.  All math runs
// behind the C API; this binary only parses flags, routes output, and maps
// verdicts to exit codes (0 positive measure, 1 measure zero, 2 unknown,
// 3 rejected certificate, 64 usage, 70 guard/internal).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "selfsim.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitFailure = 70;
constexpr int kExitRejected = 3;

int status_exit_code(ss_status status) {
  switch (status) {
    case SS_OK:
      return 0;
    case SS_ERROR_PARSE:
    case SS_ERROR_INVALID_ARGUMENT:
    case SS_ERROR_DEGENERATE:
    case SS_ERROR_MIXED_RADICALS:
      return kExitUsage;  // malformed input values
    default:
      return kExitFailure;
  }
}

int fail(ss_status status) {
  std::cerr << "error: " << ss_status_name(status) << ": " << ss_last_error()
            << "\n";
  return status_exit_code(status);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << text;
  return true;
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { ss_string_free(text); }
};

struct OwnedProblem {
  ss_problem* handle = nullptr;
  ~OwnedProblem() { ss_problem_free(handle); }
};

int verdict_exit_code(ss_verdict verdict) {
  switch (verdict) {
    case SS_POSITIVE_MEASURE:
      return 0;
    case SS_MEASURE_ZERO:
      return 1;
    case SS_VERDICT_UNKNOWN:
      return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decisions for self-similar digit sets E(Sigma,q)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ss_version());

  std::string sigma_text, q_text, json_path, svg_path, csv_path;
  std::string k_text, points_text, u_text, report_path;
  int n_max = 0, k_max = 0, levels = 0, base = 0, height = 0;
  int size = 0, bound = 0;

  auto* cmd_decide = app.add_subcommand(
      "decide", "verdict on positive Lebesgue measure, with certificate");
  cmd_decide->add_option("--sigma", sigma_text, "digit set, e.g. 0,1,8,9")
      ->required();
  cmd_decide->add_option("--q", q_text, "explicit ratio (default 1/|sigma|)");
  cmd_decide->add_option("--nmax", n_max, "search depth (default 8)");
  cmd_decide->add_option("--kmax", k_max, "per-frequency level bound");
  cmd_decide->add_option("--levels", levels, "interval levels in the report");
  cmd_decide->add_option("--json", json_path, "also write the report here");

  auto* cmd_render = app.add_subcommand(
      "render", "SVG/CSV of the level interval approximations");
  cmd_render->add_option("--sigma", sigma_text, "digit set")->required();
  cmd_render->add_option("--q", q_text, "ratio (default 1/|sigma|)");
  cmd_render->add_option("--levels", levels, "levels to draw")->required();
  cmd_render->add_option("--svg", svg_path, "SVG output path");
  cmd_render->add_option("--csv", csv_path, "CSV output path");

  auto* cmd_multigeo = app.add_subcommand(
      "multigeo", "classify the achievement set of (k_1..k_m; 1/base)");
  cmd_multigeo->add_option("--k", k_text, "terms, e.g. 1,8")->required();
  cmd_multigeo->add_option("--base", base, "base n, ratio is 1/n")->required();
  cmd_multigeo->add_option("--nmax", n_max, "search depth (default 8)");
  cmd_multigeo->add_option("--kmax", k_max, "per-frequency level bound");

  auto* cmd_ifs = app.add_subcommand(
      "ifs", "projections of a planar IFS attractor along u");
  cmd_ifs->add_option("--points", points_text, "maps, e.g. 0,0:1,0:0,1")
      ->required();
  cmd_ifs->add_option("--u", u_text, "projection direction (exact scalar)");
  cmd_ifs->add_option("--sweep", height, "sweep rationals of this height");
  cmd_ifs->add_option("--nmax", n_max, "search depth (default 8)");
  cmd_ifs->add_option("--kmax", k_max, "per-frequency level bound");

  auto* cmd_search = app.add_subcommand(
      "search", "digit sets that pass every positive-measure filter "
                "without residue completeness");
  cmd_search->add_option("--size", size, "digit count")->required();
  cmd_search->add_option("--bound", bound, "largest digit")->required();
  cmd_search->add_option("--nmax", n_max, "search depth (default 8)");
  cmd_search->add_option("--kmax", k_max, "per-frequency level bound");

  auto* cmd_verify = app.add_subcommand(
      "verify", "recompute and check the certificate of a report");
  cmd_verify->add_option("report", report_path, "report JSON path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  if (cmd_decide->parsed()) {
    OwnedProblem problem;
    if (ss_status s = ss_problem_from_digits(sigma_text.c_str(), &problem.handle)) {
      return fail(s);
    }
    if (!q_text.empty()) {
      if (ss_status s = ss_problem_set_ratio(problem.handle, q_text.c_str())) {
        return fail(s);
      }
    }
    ss_verdict verdict = SS_VERDICT_UNKNOWN;
    OwnedString json;
    if (ss_status s = ss_decide(problem.handle, n_max, k_max, levels, &verdict,
                                &json.text)) {
      return fail(s);
    }
    std::fputs(json.text, stdout);
    if (!json_path.empty() && !write_file(json_path, json.text)) {
      return kExitFailure;
    }
    return verdict_exit_code(verdict);
  }

  if (cmd_render->parsed()) {
    OwnedProblem problem;
    if (ss_status s = ss_problem_from_digits(sigma_text.c_str(), &problem.handle)) {
      return fail(s);
    }
    if (!q_text.empty()) {
      if (ss_status s = ss_problem_set_ratio(problem.handle, q_text.c_str())) {
        return fail(s);
      }
    }
    OwnedString csv;
    if (ss_status s = ss_intervals_csv(problem.handle, levels, &csv.text)) {
      return fail(s);
    }
    if (!svg_path.empty()) {
      OwnedString svg;
      if (ss_status s = ss_render_svg(problem.handle, levels, &svg.text)) {
        return fail(s);
      }
      if (!write_file(svg_path, svg.text)) return kExitFailure;
    }
    if (!csv_path.empty()) {
      if (!write_file(csv_path, csv.text)) return kExitFailure;
    }
    if (svg_path.empty() && csv_path.empty()) std::fputs(csv.text, stdout);
    return 0;
  }

  if (cmd_multigeo->parsed()) {
    OwnedString json;
    if (ss_status s = ss_multigeo_classify(k_text.c_str(), base, n_max, k_max,
                                           &json.text)) {
      return fail(s);
    }
    std::fputs(json.text, stdout);
    return 0;
  }

  if (cmd_ifs->parsed()) {
    if (u_text.empty() == (height == 0)) {
      std::cerr << "error: pass exactly one of --u or --sweep\n";
      return kExitUsage;
    }
    OwnedString json;
    if (!u_text.empty()) {
      ss_verdict verdict = SS_VERDICT_UNKNOWN;
      if (ss_status s = ss_ifs_decide(points_text.c_str(), u_text.c_str(),
                                      n_max, k_max, &verdict, &json.text)) {
        return fail(s);
      }
      std::fputs(json.text, stdout);
      return verdict_exit_code(verdict);
    }
    if (ss_status s = ss_ifs_sweep(points_text.c_str(), height, n_max, k_max,
                                   &json.text)) {
      return fail(s);
    }
    std::fputs(json.text, stdout);
    return 0;
  }

  if (cmd_search->parsed()) {
    OwnedString json;
    if (ss_status s = ss_search(size, bound, n_max, k_max, &json.text)) {
      return fail(s);
    }
    std::fputs(json.text, stdout);
    return 0;
  }

  if (cmd_verify->parsed()) {
    std::ifstream in(report_path, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << report_path << "'\n";
      return kExitUsage;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string report = buffer.str();
    int accepted = 0;
    OwnedString json;
    if (ss_status s = ss_verify(report.c_str(), &accepted, &json.text)) {
      return fail(s);
    }
    std::fputs(json.text, stdout);
    return accepted ? 0 : kExitRejected;
  }

  return kExitUsage;
}
