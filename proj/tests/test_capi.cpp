#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "selfsim.h"

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  ss_string_free(text);
  return out;
}

// The timing field is the one legitimate difference between reruns.
std::string strip_timing(const std::string& json) {
  std::string out;
  std::size_t start = 0;
  while (start < json.size()) {
    std::size_t end = json.find('\n', start);
    if (end == std::string::npos) end = json.size();
    const std::string line = json.substr(start, end - start);
    if (line.find("\"timing_ms\"") == std::string::npos) {
      out += line;
      out += '\n';
    }
    start = end + 1;
  }
  return out;
}

struct Problem {
  ss_problem* handle = nullptr;
  ~Problem() { ss_problem_free(handle); }
};

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(ss_version() != nullptr);
  CHECK(std::strcmp(ss_status_name(SS_OK), "ok") == 0);
  CHECK(ss_status_name(SS_ERROR_PARSE) != nullptr);
}

TEST_CASE("problem lifecycle and decide") {
  Problem p;
  REQUIRE(ss_problem_from_digits("0,1,8,9", &p.handle) == SS_OK);
  char* digits = nullptr;
  REQUIRE(ss_problem_digits(p.handle, &digits) == SS_OK);
  CHECK(take(digits) == "0,1,8,9");

  ss_verdict verdict = SS_VERDICT_UNKNOWN;
  char* json = nullptr;
  REQUIRE(ss_decide(p.handle, 0, 0, 2, &verdict, &json) == SS_OK);
  const std::string doc = take(json);
  CHECK(verdict == SS_POSITIVE_MEASURE);
  CHECK(doc.find("\"verdict\": \"PositiveMeasure\"") != std::string::npos);
  CHECK(doc.find("vanishing-sums (bounded)") != std::string::npos);
  CHECK(doc.find("\"schema_version\": \"1\"") != std::string::npos);
  CHECK(doc.find("\"intervals\"") != std::string::npos);
}

TEST_CASE("reports are byte-identical across reruns except timing") {
  Problem p;
  REQUIRE(ss_problem_from_digits("0,2,3,5", &p.handle) == SS_OK);
  char* first = nullptr;
  char* second = nullptr;
  REQUIRE(ss_decide(p.handle, 0, 0, 3, nullptr, &first) == SS_OK);
  REQUIRE(ss_decide(p.handle, 0, 0, 3, nullptr, &second) == SS_OK);
  CHECK(strip_timing(take(first)) == strip_timing(take(second)));
}

TEST_CASE("verdict exit mapping inputs") {
  Problem zero;
  REQUIRE(ss_problem_from_digits("0,1,4", &zero.handle) == SS_OK);
  ss_verdict verdict = SS_VERDICT_UNKNOWN;
  char* json = nullptr;
  REQUIRE(ss_decide(zero.handle, 0, 0, 0, &verdict, &json) == SS_OK);
  take(json);
  CHECK(verdict == SS_MEASURE_ZERO);
}

TEST_CASE("explicit ratio") {
  Problem p;
  REQUIRE(ss_problem_from_digits("0,1", &p.handle) == SS_OK);
  REQUIRE(ss_problem_set_ratio(p.handle, "1/3") == SS_OK);
  ss_verdict verdict = SS_VERDICT_UNKNOWN;
  char* json = nullptr;
  REQUIRE(ss_decide(p.handle, 0, 0, 0, &verdict, &json) == SS_OK);
  const std::string doc = take(json);
  CHECK(verdict == SS_MEASURE_ZERO);
  CHECK(doc.find("subcritical-cantor") != std::string::npos);
  CHECK(ss_problem_set_ratio(p.handle, "5/4") == SS_ERROR_PARSE);
}

TEST_CASE("error reporting") {
  ss_problem* handle = nullptr;
  CHECK(ss_problem_from_digits("0,1,", &handle) == SS_ERROR_PARSE);
  CHECK(handle == nullptr);
  CHECK(std::string(ss_last_error()).size() > 0);
  CHECK(ss_problem_from_digits("5", &handle) == SS_ERROR_DEGENERATE);
  CHECK(ss_problem_from_digits("0,sqrt(2),sqrt(3)", &handle) ==
        SS_ERROR_MIXED_RADICALS);
  CHECK(ss_problem_from_digits(nullptr, &handle) ==
        SS_ERROR_INVALID_ARGUMENT);

  Problem p;
  REQUIRE(ss_problem_from_digits("0,1,5000000000000000000", &p.handle) ==
          SS_OK);
  char* csv = nullptr;
  CHECK(ss_intervals_csv(p.handle, 3, &csv) == SS_ERROR_ENUMERATION_GUARD);
}

TEST_CASE("csv and svg rendering") {
  Problem p;
  REQUIRE(ss_problem_from_digits("0,1,8,9", &p.handle) == SS_OK);
  char* csv = nullptr;
  REQUIRE(ss_intervals_csv(p.handle, 2, &csv) == SS_OK);
  const std::string table = take(csv);
  CHECK(table.rfind("level,lo_num,lo_den,hi_num,hi_den\n", 0) == 0);
  CHECK(table.find("2,0,1,1,1\n") != std::string::npos);
  CHECK(table.find("2,2,1,3,1\n") != std::string::npos);

  char* svg = nullptr;
  REQUIRE(ss_render_svg(p.handle, 3, &svg) == SS_OK);
  const std::string picture = take(svg);
  CHECK(picture.rfind("<svg", 0) == 0);
  CHECK(picture.find("height=\"120\"") != std::string::npos);
  CHECK(picture.find("<rect") != std::string::npos);

  // Irrational digits cannot be rendered with rational endpoints.
  Problem irr;
  REQUIRE(ss_problem_from_digits("0,1,sqrt(2)", &irr.handle) == SS_OK);
  char* out = nullptr;
  CHECK(ss_render_svg(irr.handle, 2, &out) == SS_ERROR_NOT_APPLICABLE);
}

TEST_CASE("multigeometric classification document") {
  char* json = nullptr;
  REQUIRE(ss_multigeo_classify("1,8", 4, 0, 0, &json) == SS_OK);
  const std::string doc = take(json);
  CHECK(doc.find("\"classification\": \"FiniteUnionOfIntervals\"") !=
        std::string::npos);
  CHECK(doc.find("\"reduced_k\"") != std::string::npos);
  CHECK(doc.find("\"exact\": true") != std::string::npos);
}

TEST_CASE("ifs drivers") {
  ss_verdict verdict = SS_VERDICT_UNKNOWN;
  char* json = nullptr;
  REQUIRE(ss_ifs_decide("0,0:1,0:1,1:0,sqrt(2)", "1", 0, 0, &verdict,
                        &json) == SS_OK);
  const std::string doc = take(json);
  CHECK(verdict == SS_MEASURE_ZERO);
  CHECK(doc.find("no-common-divisor") != std::string::npos);

  char* sweep = nullptr;
  REQUIRE(ss_ifs_sweep("0,0:1,0:0,1", 2, 0, 0, &sweep) == SS_OK);
  const std::string sweep_doc = take(sweep);
  CHECK(sweep_doc.find("\"u\": \"2\"") != std::string::npos);
  CHECK(sweep_doc.find("\"u\": \"-2\"") != std::string::npos);
}

TEST_CASE("search driver") {
  char* json = nullptr;
  REQUIRE(ss_search(4, 9, 0, 0, &json) == SS_OK);
  const std::string doc = take(json);
  CHECK(doc.find("\"8\"") != std::string::npos);
  CHECK(doc.find("\"9\"") != std::string::npos);
}

TEST_CASE("verify accepts fresh reports across certificate routes") {
  // One digit set per decision route.
  const char* inputs[] = {
      "0,1,2",           // residue-complete
      "0,1,4",           // prime-incomplete-residues
      "0,1,2,9",         // level-collision
      "0,1,8,9",         // vanishing-sums (bounded)
      "0,1,2,sqrt(2)",   // no-common-divisor
      "0,sqrt(2),2*sqrt(2)",  // residue-complete with radical delta
  };
  for (const char* digits : inputs) {
    CAPTURE(digits);
    Problem p;
    REQUIRE(ss_problem_from_digits(digits, &p.handle) == SS_OK);
    char* json = nullptr;
    REQUIRE(ss_decide(p.handle, 0, 0, 0, nullptr, &json) == SS_OK);
    const std::string doc = take(json);
    int accepted = 0;
    char* verify_json = nullptr;
    REQUIRE(ss_verify(doc.c_str(), &accepted, &verify_json) == SS_OK);
    const std::string outcome = take(verify_json);
    CHECK(accepted == 1);
    if (accepted != 1) MESSAGE(outcome);
  }

  // A projection report (command "ifs") verifies through the rebuilt
  // digit set.
  ss_verdict verdict = SS_VERDICT_UNKNOWN;
  char* ifs_json = nullptr;
  REQUIRE(ss_ifs_decide("0,0:1,0:1,1:0,sqrt(2)", "sqrt(2)", 0, 0, &verdict,
                        &ifs_json) == SS_OK);
  const std::string ifs_doc = take(ifs_json);
  int accepted = 0;
  char* verify_json = nullptr;
  REQUIRE(ss_verify(ifs_doc.c_str(), &accepted, &verify_json) == SS_OK);
  take(verify_json);
  CHECK(accepted == 1);
}

TEST_CASE("verify rejects tampering") {
  Problem p;
  REQUIRE(ss_problem_from_digits("0,1,2", &p.handle) == SS_OK);
  char* json = nullptr;
  REQUIRE(ss_decide(p.handle, 0, 0, 0, nullptr, &json) == SS_OK);
  const std::string doc = take(json);

  int accepted = 0;
  char* verdict_json = nullptr;

  // Flip the verdict; the recomputation must reject it.
  std::string tampered = doc;
  const std::string from = "\"verdict\": \"PositiveMeasure\"";
  const std::string to = "\"verdict\": \"MeasureZero\"";
  tampered.replace(tampered.find(from), from.size(), to);
  REQUIRE(ss_verify(tampered.c_str(), &accepted, &verdict_json) == SS_OK);
  const std::string rejection = take(verdict_json);
  CHECK(accepted == 0);
  CHECK(rejection.find("\"accepted\": false") != std::string::npos);

  // Forge the digit set behind a residue-complete certificate.
  std::string forged = doc;
  const std::string digit = "\"2\"";
  forged.replace(forged.find(digit), digit.size(), "\"4\"");
  REQUIRE(ss_verify(forged.c_str(), &accepted, &verdict_json) == SS_OK);
  take(verdict_json);
  CHECK(accepted == 0);

  CHECK(ss_verify("not json", &accepted, &verdict_json) == SS_ERROR_PARSE);
}
