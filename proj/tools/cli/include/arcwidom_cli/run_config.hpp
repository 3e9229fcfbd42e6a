#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arcwidom/conformal.hpp"

namespace arcwidom::cli {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  double alpha = 1.5707963267948966;
  std::optional<std::size_t> n;
  std::optional<std::size_t> nmax;
  std::vector<ChartPoint> u0s;       ///< empty selects {0}
  std::vector<ChartPoint> points;    ///< explicit evaluation points for limit/envelope
  std::size_t grid_m = 0;            ///< 0 selects the solver default 8(n+1)
  std::size_t grid_k = 64;
  double tol = 1e-6;
  std::filesystem::path out;         ///< empty writes to stdout
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::filesystem::path> cache_dir;

  static constexpr std::size_t kMaxDegree = 64;

  /// Throws DomainError on out-of-range values.
  void validate() const;

  ArcGeometry geometry() const { return ArcGeometry(alpha); }
  std::size_t degree(std::size_t fallback = 10) const { return n.value_or(fallback); }
  std::size_t max_degree(std::size_t fallback) const { return nmax.value_or(n.value_or(fallback)); }
  std::vector<ChartPoint> u0_list() const;
};

/// "a+bi", "a-bi", "bi", "a" or "inf" (any case).
ChartPoint parse_u_point(const std::string& text);
std::string format_u_point(const ChartPoint& u);

OutputFormat parse_format(const std::string& text);

/// An explicit --cache-dir wins; otherwise ARCWIDOM_CACHE, if set and non-empty.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

}  // namespace arcwidom::cli
