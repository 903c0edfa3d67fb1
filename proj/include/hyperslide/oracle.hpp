#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"
#include "hyperslide/kinematics.hpp"
#include "hyperslide/lattice.hpp"

namespace hyperslide {

struct OracleResult {
  bool reachable = false;
  std::optional<std::size_t> min_moves;  // set iff reachable
  std::size_t states_explored = 0;
  bool budget_exhausted = false;
};

namespace detail {

using StateKey = std::vector<Coord>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Coord v : k) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

// Sorted cells shifted so the lexicographically smallest sits at the origin, flattened.
inline StateKey translation_key(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  StateKey key;
  key.reserve(cells.size() * cells.front().dim());
  for (const Cell& c : cells) {
    for (std::size_t a = 0; a < c.dim(); ++a) key.push_back(c[a] - cells.front()[a]);
  }
  return key;
}

inline CellSet cells_of(const StateKey& key, std::size_t dim) {
  CellSet out;
  for (std::size_t i = 0; i < key.size(); i += dim) {
    out.insert(Cell(std::vector<Coord>(key.begin() + static_cast<std::ptrdiff_t>(i), key.begin() + static_cast<std::ptrdiff_t>(i + dim))));
  }
  return out;
}

}  // namespace detail

/// Exhaustive breadth-first search over connected configurations reachable by
/// single legal moves, with states identified up to translation.
///
/// A lone module cannot move, so for n = 1 only the identical cell is reachable.
inline OracleResult oracle_reachable(const Configuration& v, const Configuration& v2, std::size_t max_states = 5'000'000) {
  if (v.dim() != v2.dim()) throw InfeasibleError("configurations differ in dimension");
  if (v.size() != v2.size()) throw InfeasibleError("configurations differ in size");
  if (!is_connected(v) || !is_connected(v2)) throw InfeasibleError("both configurations must be connected");
  const std::size_t dim = v.dim();
  OracleResult out;
  if (v.size() == 1) {
    out.states_explored = 1;
    out.reachable = v == v2;
    if (out.reachable) out.min_moves = 0;
    return out;
  }

  const auto goal = detail::translation_key(v2.cells());
  std::unordered_map<detail::StateKey, std::size_t, detail::StateKeyHash> distance;
  std::deque<detail::StateKey> queue;
  auto start = detail::translation_key(v.cells());
  distance.emplace(start, 0);
  queue.push_back(std::move(start));
  while (!queue.empty()) {
    detail::StateKey key = std::move(queue.front());
    queue.pop_front();
    ++out.states_explored;
    const std::size_t dist = distance.at(key);
    if (key == goal) {
      out.reachable = true;
      out.min_moves = dist;
      return out;
    }
    CellSet occupied = detail::cells_of(key, dim);
    for (const Cell& a : sorted_cells(occupied)) {
      for (const Move& m : legal_moves(occupied, dim, a)) {
        CellSet next = occupied;
        next.erase(m.from);
        next.insert(m.to);
        if (!is_connected(next, dim)) continue;
        auto next_key = detail::translation_key(std::vector<Cell>(next.begin(), next.end()));
        if (distance.contains(next_key)) continue;
        if (distance.size() >= max_states) {
          out.budget_exhausted = true;
          return out;
        }
        distance.emplace(next_key, dist + 1);
        queue.push_back(std::move(next_key));
      }
    }
  }
  return out;
}

}  // namespace hyperslide
