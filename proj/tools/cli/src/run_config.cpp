#include "arcwidom_cli/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "arcwidom/errors.hpp"

namespace arcwidom::cli {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha < std::numbers::pi)) {
    throw DomainError("--alpha must lie in (0, pi), got " + format_real(alpha));
  }
  if (n && *n > kMaxDegree) throw DomainError("--n exceeds the guard " + std::to_string(kMaxDegree));
  if (nmax && *nmax > kMaxDegree) throw DomainError("--nmax exceeds the guard " + std::to_string(kMaxDegree));
  if (nmax && *nmax == 0) throw DomainError("--nmax must be positive");
  if (!(tol > 0.0 && tol < 1.0)) throw DomainError("--tol must lie in (0, 1), got " + format_real(tol));
  if (grid_k < 8) throw DomainError("--grid-k must be at least 8");
  const ArcGeometry geom(alpha);
  for (const ChartPoint& u : u0s) {
    if (!u.is_infinite() && geom.on_arc(u.value())) {
      throw DomainError("--u0 lies on the arc: " + format_complex(u.value()));
    }
  }
}

std::vector<ChartPoint> RunConfig::u0_list() const {
  if (u0s.empty()) return {ChartPoint::u(0.0)};
  return u0s;
}

ChartPoint parse_u_point(const std::string& text) {
  const std::string t = lower(text);
  if (t == "inf" || t == "infinity" || t == "oo") return ChartPoint::infinity(Chart::U);
  const cplx v = parse_complex(text);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError("non-finite point '" + text + "'; use 'inf' for the point at infinity");
  }
  return ChartPoint::u(v);
}

std::string format_u_point(const ChartPoint& u) {
  return u.is_infinite() ? std::string("inf") : format_complex(u.value());
}

OutputFormat parse_format(const std::string& text) {
  const std::string t = lower(text);
  if (t == "csv") return OutputFormat::Csv;
  if (t == "json") return OutputFormat::Json;
  throw DomainError("--format must be csv or json, got '" + text + "'");
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
  if (flag && !flag->empty()) return flag;
  if (const char* env = std::getenv("ARCWIDOM_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

}  // namespace arcwidom::cli
