#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arcwidom/extremal.hpp"
#include "json.hpp"

namespace arcwidom::cli {

// Persistent record of one extremal solve.
struct SolveRecord {
  double alpha = 0.0;
  std::size_t n = 0;
  std::string u0;  ///< "inf" or a complex literal
  std::size_t grid_m = 0;
  std::size_t grid_k = 0;
  double tol = 0.0;

  double value = 0.0;
  double upper_bound = 0.0;
  double norm_cert = 0.0;
  double phase = 0.0;
  bool converged = false;
  std::size_t rounds = 0;
  std::size_t lp_iterations = 0;
  std::size_t active_peaks = 0;
  std::vector<cplx> coeffs;

  nlohmann::json to_json() const;
  static SolveRecord from_json(const nlohmann::json& j);
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes);

// One JSON file per solve, named by the hash of the canonical key. Writes go
// to a temporary file in the same directory and are renamed into place.
class SolveCache {
 public:
  explicit SolveCache(std::optional<std::filesystem::path> dir);

  bool enabled() const { return dir_.has_value(); }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

  SolveRecord solve(const ArcGeometry& geom, std::size_t n, const ChartPoint& u0, std::size_t grid_m,
                    std::size_t grid_k, double tol);

  /// Canonical key text and its file path.
  static std::string key(double alpha, std::size_t n, const std::string& u0, std::size_t grid_m,
                         std::size_t grid_k, double tol);
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::optional<SolveRecord> load(const std::string& key) const;
  void store(const std::string& key, const SolveRecord& rec) const;

  std::optional<std::filesystem::path> dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace arcwidom::cli
