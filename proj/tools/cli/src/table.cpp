#include "arcwidom_cli/table.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "arcwidom/errors.hpp"

namespace arcwidom::cli {

namespace {

std::string number_text(const json& v) {
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  return format_real(v.get<double>());
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const json& v) {
  if (v.is_string()) return quote(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return number_text(v);
  if (v.is_null()) return "";
  throw DomainError("table cells must be scalars");
}

std::vector<std::string> split_csv(const std::string& line, std::vector<bool>& quoted) {
  std::vector<std::string> out;
  quoted.clear();
  std::string cur;
  bool in_quotes = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = true;
      was_quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      quoted.push_back(was_quoted);
      cur.clear();
      was_quoted = false;
    } else {
      cur += c;
    }
  }
  if (in_quotes) throw DomainError("unterminated quote in CSV line: " + line);
  out.push_back(cur);
  quoted.push_back(was_quoted);
  return out;
}

json parse_cell(const std::string& text, bool quoted) {
  if (quoted) return text;
  if (text.empty()) return nullptr;
  if (text == "true") return true;
  if (text == "false") return false;
  const bool integral = text.find_first_of(".eEnN") == std::string::npos;
  char* end = nullptr;
  errno = 0;
  if (integral && text.front() != '-') {
    const unsigned long long u = std::strtoull(text.c_str(), &end, 10);
    if (end == text.c_str() + text.size() && errno == 0) return static_cast<std::uint64_t>(u);
  } else if (integral) {
    const long long s = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str() + text.size() && errno == 0) return static_cast<std::int64_t>(s);
  }
  errno = 0;
  const double d = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw DomainError("malformed CSV cell: '" + text + "'");
  return d;
}

// nlohmann writes non-finite doubles as null; keep them readable as strings.
json encode_json_cell(const json& v) {
  if (v.is_number_float() && !std::isfinite(v.get<double>())) return format_real(v.get<double>());
  return v;
}

}  // namespace

void Table::set(const std::string& key, json value) {
  for (auto& [k, v] : meta) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  meta.emplace_back(key, std::move(value));
}

const json& Table::get(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  throw std::out_of_range("no metadata key '" + key + "'");
}

void Table::add_row(std::vector<json> row) {
  if (row.size() != columns.size()) {
    throw DomainError("row has " + std::to_string(row.size()) + " cells, table has " +
                      std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& t) {
  os << "# " << kSchema << '\n';
  os << "# command: " << json(t.command).dump() << '\n';
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << encode_json_cell(v).dump() << '\n';
  for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << cell_text(row[j]);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& t) {
  // Floats go through format_real so that every value carries 17 digits.
  std::ostringstream body;
  body << "{\n  \"schema\": " << json(kSchema).dump() << ",\n  \"command\": " << json(t.command).dump()
       << ",\n  \"meta\": {";
  for (std::size_t i = 0; i < t.meta.size(); ++i) {
    body << (i ? "," : "") << "\n    " << json(t.meta[i].first).dump() << ": "
         << encode_json_cell(t.meta[i].second).dump();
  }
  body << (t.meta.empty() ? "" : "\n  ") << "},\n  \"columns\": " << json(t.columns).dump() << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    body << (r ? "," : "") << "\n    [";
    for (std::size_t j = 0; j < t.rows[r].size(); ++j) {
      const json& v = t.rows[r][j];
      body << (j ? ", " : "");
      if (v.is_number_float() && std::isfinite(v.get<double>())) {
        body << format_real(v.get<double>());
      } else {
        body << encode_json_cell(v).dump();
      }
    }
    body << "]";
  }
  body << (t.rows.empty() ? "" : "\n  ") << "]\n}\n";
  os << body.str();
}

void write_table(std::ostream& os, const Table& t, OutputFormat format) {
  if (format == OutputFormat::Json) {
    write_json(os, t);
  } else {
    write_csv(os, t);
  }
}

std::string to_string(const Table& t, OutputFormat format) {
  std::ostringstream os;
  write_table(os, t, format);
  return os.str();
}

Table parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != std::string("# ") + kSchema) {
    throw DomainError("missing '# " + std::string(kSchema) + "' header");
  }
  Table t;
  bool have_columns = false;
  std::vector<bool> quoted;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!have_columns && line.rfind("# ", 0) == 0) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) throw DomainError("malformed metadata line: " + line);
      const std::string key = line.substr(2, colon - 2);
      json value = json::parse(line.substr(colon + 2));
      if (key == "command") {
        t.command = value.get<std::string>();
      } else {
        t.meta.emplace_back(key, std::move(value));
      }
      continue;
    }
    if (!have_columns) {
      t.columns = split_csv(line, quoted);
      have_columns = true;
      continue;
    }
    const std::vector<std::string> cells = split_csv(line, quoted);
    std::vector<json> row;
    row.reserve(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) row.push_back(parse_cell(cells[j], quoted[j]));
    t.add_row(std::move(row));
  }
  if (!have_columns) throw DomainError("CSV has no column header");
  return t;
}

Table parse_json(const std::string& text) {
  // ordered_json keeps the metadata in file order.
  try {
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    if (j.at("schema") != kSchema) throw DomainError("unknown schema " + j.at("schema").dump());
    Table t;
    t.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("meta").items()) t.meta.emplace_back(k, json(v));
    t.columns = j.at("columns").get<std::vector<std::string>>();
    for (const auto& row : j.at("rows")) {
      std::vector<json> cells;
      for (const auto& c : row) cells.emplace_back(c);
      t.add_row(std::move(cells));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed JSON table: ") + e.what());
  }
}

VerificationRow& VerificationReport::add(std::string label, std::size_t n, double computed, double asymptote,
                                         double error, double tolerance) {
  VerificationRow r;
  r.label = std::move(label);
  r.n = n;
  r.computed = computed;
  r.asymptote = asymptote;
  r.ratio = computed / asymptote;
  r.error = error;
  r.tolerance = tolerance;
  r.passed = error <= tolerance;
  rows.push_back(std::move(r));
  return rows.back();
}

bool VerificationReport::all_rows_pass() const {
  for (const auto& r : rows) {
    if (!r.passed) return false;
  }
  return true;
}

Table VerificationReport::to_table() const {
  Table t;
  t.command = "verify";
  t.set("suite", suite);
  t.set("alpha", alpha);
  t.set("rule", rule);
  t.set("passed", passed);
  t.columns = {"label", "n", "computed", "asymptote", "ratio", "error", "tolerance", "passed"};
  for (const auto& r : rows) {
    t.add_row({r.label, r.n, r.computed, r.asymptote, r.ratio, r.error, r.tolerance, r.passed});
  }
  return t;
}

VerificationReport VerificationReport::from_table(const Table& t) {
  VerificationReport rep;
  rep.suite = t.get("suite").get<std::string>();
  rep.alpha = t.get("alpha").get<double>();
  rep.rule = t.get("rule").get<std::string>();
  rep.passed = t.get("passed").get<bool>();
  auto real = [](const json& v) {
    return v.is_string() ? std::strtod(v.get<std::string>().c_str(), nullptr) : v.get<double>();
  };
  for (const auto& row : t.rows) {
    VerificationRow r;
    r.label = row.at(0).get<std::string>();
    r.n = row.at(1).get<std::size_t>();
    r.computed = real(row.at(2));
    r.asymptote = real(row.at(3));
    r.ratio = real(row.at(4));
    r.error = real(row.at(5));
    r.tolerance = real(row.at(6));
    r.passed = row.at(7).get<bool>();
    rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace arcwidom::cli
