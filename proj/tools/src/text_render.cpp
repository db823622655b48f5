#include <sstream>

#include "racgk/cli.hpp"

namespace racgk::cli {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

// Scalars, and arrays or small objects built only from flat values, print on one line.
bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  if (j.is_object() && j.size() > 4) return false;
  for (const auto& x : j)
    if (!is_scalar(x) && !(x.is_array() && is_flat(x))) return false;
  return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string flat_text(const Json& j) {
  if (is_scalar(j)) return scalar_text(j);
  const bool object = j.is_object();
  std::string out = object ? "{" : "[";
  bool first = true;
  for (const auto& [k, v] : j.items()) {
    if (!first) out += ", ";
    first = false;
    if (object) out += k + ": ";
    out += flat_text(v);
  }
  return out + (object ? "}" : "]");
}

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << k << ": " << flat_text(v) << '\n';
      } else {
        os << pad << k << ":\n";
        render(os, v, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (is_flat(x)) {
        os << pad << "- " << flat_text(x) << '\n';
      } else {
        os << pad << "-\n";
        render(os, x, depth + 1);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "racgk " << report.value("subcommand", "") << " (seed " << report.value("seed", 0ULL) << ")\n";
  for (const auto& [key, value] : report.items()) {
    if (key == "tool" || key == "subcommand" || key == "seed" || key == "checks" || key == "status") continue;
    os << "\n== " << key << " ==\n";
    render(os, value, 0);
  }
  os << "\n== checks ==\n";
  for (const auto& c : report.value("checks", Json::array())) {
    os << (c.value("passed", false) ? "[PASS] " : "[FAIL] ") << c.value("name", "");
    if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
    os << '\n';
  }
  os << "\nstatus: " << report.value("status", "") << '\n';
  return os.str();
}

}  // namespace racgk::cli
