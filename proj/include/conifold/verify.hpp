#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "conifold/geometry.hpp"
#include "conifold/mirror.hpp"

namespace conifold {
namespace verify {

using Json = nlohmann::json;

/// One config block drives every suite; defaults reproduce the shipped
/// construction with zero flags.
struct RunConfig {
  Rational w1 = 1;
  Rational w2 = 0;
  Rational delta = Rational(1, 4);
  std::string psi_model = "rational";  // rational | exp
  std::string mode = "exact";          // exact | float
  Rational trunc_order = 12;
  long samples = 1000;
  std::uint64_t seed = 1;

  void validate() const;
  /// Applies the numeric mode globally and builds the atlas.
  ChartAtlas make_atlas() const;
};

/// Suites runnable individually; "all" expands to this list.
const std::vector<std::string>& suite_names();

/// Runs one suite; report schema:
/// {schema, suite, samples_or_cells, passed, failed, first_failures, elapsed_ms}.
Json run_suite(const std::string& name, const RunConfig& cfg);

/// Runs every suite; {"schema":1, "suites":[...], "passed", "failed"}.
Json run_all(const RunConfig& cfg);

bool report_ok(const Json& report);

}  // namespace verify
}  // namespace conifold
