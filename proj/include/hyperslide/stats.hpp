#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <vector>

#include "hyperslide/generator.hpp"
#include "hyperslide/planner.hpp"

namespace hyperslide {

struct StatsRow {
  std::size_t n = 0;
  std::size_t trial = 0;
  std::size_t moves = 0;
  double elapsed_ms = 0.0;
};

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t trial) {
  // splitmix64 finaliser over the combined inputs
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(n) * 1000003ULL + trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Canonicalizes generated instances and records move counts and wall time.
/// Rows come out ordered by (n, trial).
inline std::vector<StatsRow> stats_run(std::size_t d, const std::vector<std::size_t>& n_list, std::size_t trials, std::uint64_t seed,
                                       GenStyle style = GenStyle::Serpentine, PlannerOptions options = {false, false}) {
  std::vector<StatsRow> rows;
  for (std::size_t n : n_list) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Configuration v = random_connected({n, d, trial_seed(seed, n, trial), style});
      auto t0 = std::chrono::steady_clock::now();
      CanonicalResult result = canonicalize(v, options);
      auto t1 = std::chrono::steady_clock::now();
      rows.push_back({n, trial, result.trace.moves.size(), std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }
  }
  return rows;
}

inline void write_stats_csv(std::ostream& out, const std::vector<StatsRow>& rows) {
  out << "n,trial,moves,elapsed_ms\n";
  for (const StatsRow& r : rows) {
    out << r.n << ',' << r.trial << ',' << r.moves << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << '\n';
  }
}

/// Least-squares slope of log(mean moves) against log(n).
inline double loglog_slope(const std::vector<StatsRow>& rows) {
  std::map<std::size_t, std::pair<double, std::size_t>> by_n;
  for (const StatsRow& r : rows) {
    auto& [sum, count] = by_n[r.n];
    sum += static_cast<double>(r.moves);
    ++count;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  double k = 0;
  for (const auto& [n, acc] : by_n) {
    double x = std::log(static_cast<double>(n));
    double y = std::log(acc.first / static_cast<double>(acc.second));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    k += 1;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace hyperslide
