// arcwidom: command-line front end for the arc extremal problem.
//
//   arcwidom capacity --alpha 1.5707963267948966
//   arcwidom solve --n 10 --u0 0.3+0.1i --format json
//   arcwidom limit --u0 0.5i --points 2,-3i
//   arcwidom envelope --n 20 --u0 0 --u0=-0.4+0.2i
//   arcwidom verify thiran-detaille --nmax 30
//
// Exit codes: 0 success, 1 verification or numerical failure, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arcwidom/errors.hpp"
#include "arcwidom_cli/commands.hpp"

namespace {

using namespace arcwidom;
using namespace arcwidom::cli;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

struct RawOptions {
  std::vector<std::string> u0;
  std::vector<std::string> points;
  std::string format = "csv";
  std::string out;
  std::string cache_dir;
  std::size_t n = 0;
  std::size_t nmax = 0;
};

void add_common(CLI::App* cmd, RunConfig& cfg, RawOptions& raw) {
  cmd->add_option("--alpha", cfg.alpha, "half-angle of the arc in radians, 0 < alpha < pi")->capture_default_str();
  cmd->add_option("--n", raw.n, "polynomial degree");
  cmd->add_option("--nmax", raw.nmax, "largest degree of a convergence table");
  cmd->add_option("--u0", raw.u0, "evaluation point(s): a+bi, a-bi or inf")->delimiter(',');
  cmd->add_option("--points", raw.points, "explicit u points for limit/envelope")->delimiter(',');
  cmd->add_option("--grid-m", cfg.grid_m, "arc angles of the LP grid (0 = 8(n+1))")->capture_default_str();
  cmd->add_option("--grid-k", cfg.grid_k, "phases per angle of the LP grid")->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "relative certificate gap of the solver")->capture_default_str();
  cmd->add_option("--out", raw.out, "output file (default stdout)");
  cmd->add_option("--format", raw.format, "csv or json")->capture_default_str();
  cmd->add_option("--cache-dir", raw.cache_dir, "solve cache directory (overrides ARCWIDOM_CACHE)");
}

void finalize(CLI::App* cmd, RunConfig& cfg, const RawOptions& raw) {
  if (cmd->count("--n")) cfg.n = raw.n;
  if (cmd->count("--nmax")) cfg.nmax = raw.nmax;
  for (const auto& s : raw.u0) cfg.u0s.push_back(parse_u_point(s));
  for (const auto& s : raw.points) cfg.points.push_back(parse_u_point(s));
  cfg.format = parse_format(raw.format);
  cfg.out = raw.out;
  if (!raw.cache_dir.empty()) cfg.cache_dir = raw.cache_dir;
  cfg.cache_dir = resolve_cache_dir(cfg.cache_dir);
  cfg.validate();
}

void emit(const Table& t, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    write_table(std::cout, t, cfg.format);
    std::cout.flush();
    return;
  }
  std::ofstream os(cfg.out, std::ios::trunc);
  if (!os) throw DomainError("cannot open --out file " + cfg.out.string());
  write_table(os, t, cfg.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev and Szego-Widom asymptotics on a circular arc"};
  app.require_subcommand(1);

  RunConfig cfg;
  RawOptions raw;
  std::string suite;

  auto* capacity = app.add_subcommand("capacity", "capacity and chart constants of the arc");
  auto* solve = app.add_subcommand("solve", "extremal polynomial maximising |P(u0)|");
  auto* limit = app.add_subcommand("limit", "limit function and kernel over a grid");
  auto* envelope = app.add_subcommand("envelope", "L_n(u) against its asymptote");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  for (auto* cmd : {capacity, solve, limit, envelope, verify}) add_common(cmd, cfg, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    finalize(cmd, cfg, raw);
    SolveCache cache(cfg.cache_dir);
    if (cmd == capacity) {
      emit(cmd_capacity(cfg), cfg);
    } else if (cmd == solve) {
      emit(cmd_solve(cfg, cache), cfg);
    } else if (cmd == limit) {
      emit(cmd_limit(cfg), cfg);
    } else if (cmd == envelope) {
      emit(cmd_envelope(cfg, cache), cfg);
    } else {
      const VerificationReport rep = cmd_verify(suite, cfg, cache);
      emit(rep.to_table(), cfg);
      std::fprintf(stderr, "%s: %s (%zu rows, %.2f s)\n", rep.suite.c_str(), rep.passed ? "PASS" : "FAIL",
                   rep.rows.size(), rep.wall_seconds);
      return rep.passed ? kExitOk : kExitFailed;
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailed;
  }
  return kExitOk;
}
