#include "seqloc/report.hpp"

#include <cstdio>
#include <sstream>

namespace seqloc {

nlohmann::json TestReport::to_json() const {
  return {{"statistic", statistic},
          {"null_model", null_model},
          {"sidedness", sidedness},
          {"observed", observed},
          {"z", z},
          {"p_value", p_value},
          {"alpha", alpha},
          {"decision", reject ? "reject" : "not-reject"},
          {"details", details}};
}

std::string TestReport::to_text() const {
  char buf[256];
  std::ostringstream out;
  out << "statistic:  " << statistic << "\n";
  out << "null model: " << null_model << " (" << sidedness << ")\n";
  std::snprintf(buf, sizeof(buf), "observed:   %.12g\n", observed);
  out << buf;
  std::snprintf(buf, sizeof(buf), "z:          %.12g\n", z);
  out << buf;
  std::snprintf(buf, sizeof(buf), "p-value:    %.12g   (alpha %.12g)\n",
                p_value, alpha);
  out << buf;
  out << "decision:   " << (reject ? "reject" : "not-reject") << "\n";
  if (!details.empty()) out << "details:    " << details.dump() << "\n";
  return out.str();
}

}  // namespace seqloc
