#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "witt/kac.hpp"

namespace witt::report {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::uint32_t p = 3, m = 1, n = 1;
  std::vector<std::string> lambdas;  // csv weights; empty means all of F_p^{m+n}
  std::string chi_text;              // contents of the character file
  std::string gradation = "both";    // I | II | both
  std::uint64_t seed = 1;
  std::uint32_t max_ext = 6;
  std::size_t max_dim = 20000;
  double sample = 1.0;  // fraction of Jacobi triples checked by verify
  bool corrupt = false;  // verify against a corrupted structure constant
  bool timings = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Outcome {
  json report;
  int exit_code = 0;  // 0 ok, 1 a consistency check failed
};

void validate(const RunConfig& cfg);

Outcome cmd_info(const RunConfig& cfg);
Outcome cmd_verify(const RunConfig& cfg);
Outcome cmd_kac_table(const RunConfig& cfg);
Outcome cmd_nonres(const RunConfig& cfg);

/// json | csv
std::string render(const json& report, const std::string& format);

/// Character file: {"label": int | [int], ...}. Unknown or odd labels and
/// values outside F_p are rejected.
Character parse_character(const WittAlgebra& W, const std::string& text);

json field_json(const Field& F);
json weight_json(const Weight& w);
json verdict_json(const SimplicityVerdict& v);
SimplicityVerdict verdict_from_json(const json& j);

}  // namespace witt::report
