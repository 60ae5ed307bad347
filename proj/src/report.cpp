#include "qv/report.hpp"

#include <cstdio>
#include <sstream>

namespace qv {

ordered_json Report::to_json() const {
  ordered_json j;
  j["schema"] = 1;
  j["plan"] = plan;
  j["overall"] = passed() ? "pass" : "fail";
  if (!result.is_null()) j["result"] = result;
  ordered_json arr = ordered_json::array();
  for (const auto& e : checks.entries) {
    ordered_json c;
    c["name"] = e.name;
    c["status"] = status_name(e.status);
    c["residual"] = e.residual;
    c["context"] = e.context;
    arr.push_back(std::move(c));
  }
  j["checks"] = std::move(arr);
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "plan: " << plan.dump() << "\n";
  if (!result.is_null()) os << "result: " << result.dump() << "\n";
  size_t w = 4;
  for (const auto& e : checks.entries) w = std::max(w, e.name.size());
  for (const auto& e : checks.entries) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", e.residual);
    os << e.name << std::string(w - e.name.size() + 2, ' ')
       << status_name(e.status);
    os << std::string(14 - std::string(status_name(e.status)).size(), ' ');
    os << buf;
    if (!e.context.empty()) os << "  " << e.context;
    os << "\n";
  }
  char t[32];
  std::snprintf(t, sizeof t, "%.2f", wall_seconds);
  os << "overall: " << (passed() ? "pass" : "fail") << " ("
     << checks.entries.size() << " checks, " << t << "s)\n";
  return os.str();
}

}  // namespace qv
