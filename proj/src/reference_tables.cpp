#include "k3br/reference_tables.hpp"

#include <sstream>

#include "k3br/errors.hpp"

namespace k3br {

namespace detail {
extern const std::string_view kReferenceTablesText;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto pos = s.find(';', start);
    const auto piece = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!piece.empty()) out.push_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Integer parse_int(const std::string& value, int lineno) {
  Integer v;
  if (value.empty() || v.set_str(value, 10) != 0) {
    throw ValidationError("reference tables: bad integer '" + value + "' on line " + std::to_string(lineno));
  }
  return v;
}

}  // namespace

std::vector<ReferenceCase> parse_reference_tables(std::string_view text) {
  std::vector<ReferenceCase> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ValidationError("reference tables: bad section header on line " + std::to_string(lineno));
      out.push_back({});
      out.back().key = t.substr(1, t.size() - 2);
      continue;
    }
    if (out.empty()) throw ValidationError("reference tables: entry outside a section on line " + std::to_string(lineno));
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ValidationError("reference tables: expected key = value on line " + std::to_string(lineno));
    const std::string key = trim(std::string_view(t).substr(0, eq));
    const std::string value = trim(std::string_view(t).substr(eq + 1));
    ReferenceCase& c = out.back();
    if (key == "title") c.title = value;
    else if (key == "d") c.d = to_int64(parse_int(value, lineno));
    else if (key == "n") c.n = value == "base" ? std::nullopt : std::optional<Integer>(parse_int(value, lineno));
    else if (key == "kept") c.kept = split_list(value);
    else if (key == "groups") c.groups = split_list(value);
    else throw ValidationError("reference tables: unknown key '" + key + "' on line " + std::to_string(lineno));
  }
  return out;
}

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> cases = parse_reference_tables(detail::kReferenceTablesText);
  return cases;
}

const ReferenceCase& reference_case(std::string_view key) {
  for (const auto& c : reference_cases()) {
    if (c.key == key) return c;
  }
  throw ValidationError("no reference case '" + std::string(key) + "'");
}

}  // namespace k3br
