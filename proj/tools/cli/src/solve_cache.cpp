#include "arcwidom_cli/solve_cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "arcwidom/errors.hpp"
#include "arcwidom_cli/run_config.hpp"

namespace arcwidom::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kCacheVersion = 1;

std::atomic<unsigned> temp_counter{0};

}  // namespace

json SolveRecord::to_json() const {
  json coeff_rows = json::array();
  for (const cplx& c : coeffs) coeff_rows.push_back({c.real(), c.imag()});
  return json{{"alpha", alpha},
              {"n", n},
              {"u0", u0},
              {"grid_m", grid_m},
              {"grid_k", grid_k},
              {"tol", tol},
              {"value", value},
              {"upper_bound", upper_bound},
              {"norm_cert", norm_cert},
              {"phase", phase},
              {"converged", converged},
              {"rounds", rounds},
              {"lp_iterations", lp_iterations},
              {"active_peaks", active_peaks},
              {"coeffs", coeff_rows}};
}

SolveRecord SolveRecord::from_json(const json& j) {
  SolveRecord r;
  r.alpha = j.at("alpha").get<double>();
  r.n = j.at("n").get<std::size_t>();
  r.u0 = j.at("u0").get<std::string>();
  r.grid_m = j.at("grid_m").get<std::size_t>();
  r.grid_k = j.at("grid_k").get<std::size_t>();
  r.tol = j.at("tol").get<double>();
  r.value = j.at("value").get<double>();
  r.upper_bound = j.at("upper_bound").get<double>();
  r.norm_cert = j.at("norm_cert").get<double>();
  r.phase = j.at("phase").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.rounds = j.at("rounds").get<std::size_t>();
  r.lp_iterations = j.at("lp_iterations").get<std::size_t>();
  r.active_peaks = j.at("active_peaks").get<std::size_t>();
  for (const auto& c : j.at("coeffs")) r.coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  return r;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SolveCache::SolveCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {
  if (dir_) {
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    if (ec) throw DomainError("cannot create cache directory " + dir_->string() + ": " + ec.message());
  }
}

std::string SolveCache::key(double alpha, std::size_t n, const std::string& u0, std::size_t grid_m,
                            std::size_t grid_k, double tol) {
  return json{{"version", kCacheVersion}, {"alpha", alpha}, {"n", n},        {"u0", u0},
              {"grid_m", grid_m},         {"grid_k", grid_k}, {"tol", tol}}
      .dump();
}

fs::path SolveCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return dir_.value_or(fs::path()) / name;
}

std::optional<SolveRecord> SolveCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    // A hash collision or a stale format simply counts as a miss.
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return SolveRecord::from_json(j.at("record"));
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void SolveCache::store(const std::string& key, const SolveRecord& rec) const {
  const fs::path target = path_for(key);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid()) + "." +
                       std::to_string(temp_counter.fetch_add(1));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DomainError("cannot write cache file " + tmp.string());
    out << json{{"key", key}, {"record", rec.to_json()}}.dump(1) << '\n';
    if (!out) throw DomainError("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DomainError("cannot publish cache file " + target.string());
  }
}

SolveRecord SolveCache::solve(const ArcGeometry& geom, std::size_t n, const ChartPoint& u0, std::size_t grid_m,
                              std::size_t grid_k, double tol) {
  const std::string u0_text = format_u_point(u0);
  const std::string k = key(geom.alpha(), n, u0_text, grid_m, grid_k, tol);
  if (dir_) {
    if (auto rec = load(k)) {
      ++hits_;
      return *rec;
    }
  }
  ++misses_;
  ExtremalProblem prob;
  prob.geom = geom;
  prob.n = n;
  prob.u0 = u0;
  prob.grid_m = grid_m;
  prob.grid_k = grid_k;
  prob.tol = tol;
  const ExtremalSolution sol = solve_extremal(prob);

  SolveRecord rec;
  rec.alpha = geom.alpha();
  rec.n = n;
  rec.u0 = u0_text;
  rec.grid_m = grid_m;
  rec.grid_k = grid_k;
  rec.tol = tol;
  rec.value = sol.value;
  rec.upper_bound = sol.upper_bound;
  rec.norm_cert = sol.norm_cert;
  rec.phase = sol.phase;
  rec.converged = sol.converged;
  rec.rounds = sol.rounds;
  rec.lp_iterations = sol.lp_iterations;
  rec.active_peaks = sol.active_peaks;
  rec.coeffs = sol.poly.coeffs();
  if (dir_) store(k, rec);
  return rec;
}

}  // namespace arcwidom::cli
