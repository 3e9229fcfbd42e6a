#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arcwidom_cli/run_config.hpp"

namespace arcwidom::cli {

using nlohmann::json;

// Output of every subcommand: ordered metadata plus a rectangular table whose
// cells are numbers, booleans or strings.
//
// CSV layout (schema "arc-widom v1"):
//   # arc-widom v1
//   # command: "<name>"
//   # <key>: <json value>
//   col1,col2,...
//   rows; strings double-quoted, numbers with 17 significant digits
struct Table {
  std::string command;
  std::vector<std::pair<std::string, json>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void set(const std::string& key, json value);
  /// Throws std::out_of_range for a missing key.
  const json& get(const std::string& key) const;
  void add_row(std::vector<json> row);
};

inline constexpr const char* kSchema = "arc-widom v1";

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);
void write_table(std::ostream& os, const Table& t, OutputFormat format);
std::string to_string(const Table& t, OutputFormat format);

/// Inverse of write_csv / write_json. Throws DomainError on malformed input.
Table parse_csv(const std::string& text);
Table parse_json(const std::string& text);

struct VerificationRow {
  std::string label;
  std::size_t n = 0;
  double computed = 0.0;
  double asymptote = 0.0;
  double ratio = 0.0;  ///< computed / asymptote
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;  ///< error <= tolerance
};

struct VerificationReport {
  std::string suite;
  double alpha = 0.0;
  std::string rule;  ///< how rows combine into the verdict
  std::vector<VerificationRow> rows;
  bool passed = false;
  double wall_seconds = 0.0;  ///< not serialised, so reports stay deterministic

  VerificationRow& add(std::string label, std::size_t n, double computed, double asymptote, double error,
                       double tolerance);
  bool all_rows_pass() const;

  Table to_table() const;
  static VerificationReport from_table(const Table& t);
};

}  // namespace arcwidom::cli
