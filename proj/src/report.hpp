#pragma once

#include <optional>
#include <string>

#include "decide.hpp"
#include "frontends.hpp"

namespace selfsim {

// Builders for the JSON report documents emitted by the C API and the CLI.
// Scalars are serialized as exact num/den strings; floating summaries
// (dimension bound, discrepancy) are labeled as such.  Re-running a command
// yields a byte-identical document except for timing_ms.

struct DecideOutcome {
  Verdict verdict = Verdict::Unknown;
  std::string json;
};

DecideOutcome decide_document(const SigmaSet& sigma, unsigned n_max,
                              unsigned k_max, int levels);

std::string multigeo_document(const Multigeometric& mg, unsigned n_max,
                              unsigned k_max);

DecideOutcome ifs_single_document(const PlanarIfs& ifs,
                                  const std::string& u_text, unsigned n_max,
                                  unsigned k_max);

std::string ifs_sweep_document(const PlanarIfs& ifs, unsigned height,
                               unsigned n_max, unsigned k_max);

std::string search_document(unsigned size, unsigned bound, unsigned n_max,
                            unsigned k_max);

struct VerifyOutcome {
  bool accepted = false;
  std::string json;
};

// Recomputes the certificate of a decide-style report and accepts or rejects.
VerifyOutcome verify_document(const std::string& report_json);

// CSV of the merged level intervals, levels 1..levels, lowest terms.
std::string intervals_csv(const SigmaSet& sigma, int levels);

// Static SVG, one 40-unit row per level, scaled to a 1000-unit width.
std::string render_svg(const SigmaSet& sigma, int levels);

}  // namespace selfsim
