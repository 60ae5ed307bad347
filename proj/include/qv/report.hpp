#pragma once

#include <string>

#include "json.hpp"
#include "qv/verify.hpp"

namespace qv {

using ordered_json = nlohmann::ordered_json;

// Run report: plan echo + per-check entries.  JSON output is byte-identical
// for identical (plan, seed): wall time appears only in the text rendering.
struct Report {
  ordered_json plan;   // echoed plan, stable key order
  CheckReport checks;
  ordered_json result;  // optional structured result (e.g. classification)
  double wall_seconds = 0.0;

  bool passed() const { return checks.all_passed(); }
  ordered_json to_json() const;  // schema: 1
  std::string to_text() const;   // aligned table, includes wall time
};

}  // namespace qv
