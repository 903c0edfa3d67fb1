#pragma once

// Test-only builders and brute-force oracles. Nothing here calls into the
// library's geometry code, so the suites can compare against it.

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "hyperslide.hpp"

namespace fx {

using hyperslide::Cell;
using hyperslide::CellSet;
using hyperslide::Configuration;
using hyperslide::Coord;

inline Configuration cfg(std::size_t dim, std::initializer_list<Cell> cells) {
  return Configuration(dim, std::vector<Cell>(cells));
}

inline CellSet set_of(const std::vector<Cell>& cells) { return CellSet(cells.begin(), cells.end()); }

inline std::set<Cell> ordered(const CellSet& cells) { return {cells.begin(), cells.end()}; }
inline std::set<Cell> ordered(const Configuration& v) { return {v.cells().begin(), v.cells().end()}; }

// Perimeter of the square [lo, hi]^2.
inline CellSet ring(Coord lo, Coord hi) {
  CellSet out;
  for (Coord t = lo; t <= hi; ++t) {
    out.insert(Cell{t, lo});
    out.insert(Cell{t, hi});
    out.insert(Cell{lo, t});
    out.insert(Cell{hi, t});
  }
  return out;
}

// Surface of the box [lo, hi] in any dimension, optionally without its corner cells
// (corners touch no interior cell, so the shell stays sealed without them).
inline CellSet hollow_box(const std::vector<Coord>& lo, const std::vector<Coord>& hi, bool corners = true) {
  const std::size_t d = lo.size();
  CellSet out;
  std::vector<Coord> c(d);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == d) {
      std::size_t extreme = 0;
      for (std::size_t i = 0; i < d; ++i) extreme += (c[i] == lo[i] || c[i] == hi[i]);
      if (extreme >= 1 && (corners || extreme < d)) out.insert(Cell(c));
      return;
    }
    for (Coord v = lo[a]; v <= hi[a]; ++v) {
      c[a] = v;
      rec(a + 1);
    }
  };
  rec(0);
  return out;
}

// The 5x5 ring with a plug y=(2,1) hanging inward from x=(2,0).
inline Configuration ring_plus_plug() {
  CellSet cells = ring(0, 4);
  cells.insert(Cell{2, 1});
  return Configuration(2, cells);
}

// Concentric rings [2j, w-2j]^2 for j < levels. Each ring carries a one-cell stem
// pointing into its hole; the stems line up with the cells where a depth-first
// search from the bump (w+1, b) first gets stuck, so every level of freeing has to
// reach through the next ring. Needs b >= levels + 4 and b <= w - 2*levels.
inline Configuration nested_rings(int levels, Coord w, Coord b) {
  CellSet cells;
  for (int j = 0; j < levels; ++j) {
    const Coord lo = 2 * j;
    const Coord hi = w - 2 * j;
    for (const Cell& c : ring(lo, hi)) cells.insert(c);
    cells.insert(Cell{hi - 1, b - 1 - j});
  }
  cells.insert(Cell{w + 1, b});
  return Configuration(2, cells);
}

// Closed 3D shell [0,6]^3 with a single plug cell inside, positioned where the
// search from `root` finishes first. Found by scanning roots.
struct ShellFixture {
  Configuration v;
  Cell root;
  Cell x;
  Cell plug;
};

inline ShellFixture plugged_shell_3d() {
  CellSet cells = hollow_box({0, 0, 0}, {6, 6, 6});
  cells.insert(Cell{2, 4, 1});
  return {Configuration(3, cells), Cell{4, 5, 0}, Cell{2, 4, 0}, Cell{2, 4, 1}};
}

// Ring or shell with a bump sticking out past the +x1 face, so the bump is the
// canonical anchor, plus a random blob hanging into the hole.
inline Configuration bumped_shell(std::size_t d, Coord w, std::size_t inner_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CellSet cells = hollow_box(std::vector<Coord>(d, 0), std::vector<Coord>(d, w));
  std::uniform_int_distribution<Coord> mid(2, w - 2);
  std::vector<Coord> bump(d);
  bump[0] = w + 1;
  for (std::size_t a = 1; a < d; ++a) bump[a] = mid(rng);
  cells.insert(Cell(bump));
  std::vector<Coord> stem(d);
  stem[0] = w - 1;
  for (std::size_t a = 1; a < d; ++a) stem[a] = mid(rng);
  std::vector<Cell> blob{Cell(stem)};
  std::set<Cell> in{Cell(stem)};
  std::size_t room = 1;
  for (std::size_t a = 0; a < d; ++a) room *= static_cast<std::size_t>(w - 3);
  inner_n = std::min(inner_n, room);
  while (in.size() < inner_n) {
    const Cell& base = blob[std::uniform_int_distribution<std::size_t>(0, blob.size() - 1)(rng)];
    Cell next = base.step(hyperslide::Direction::from_index(std::uniform_int_distribution<std::size_t>(0, 2 * d - 1)(rng)));
    bool inside = true;
    for (std::size_t a = 0; a < d; ++a) inside &= next[a] >= 2 && next[a] <= w - 2;
    if (!inside || !in.insert(next).second) continue;
    blob.push_back(next);
  }
  cells.insert(in.begin(), in.end());
  return Configuration(d, cells);
}

inline std::vector<Cell> unit_steps(const Cell& c) {
  std::vector<Cell> out;
  for (std::size_t a = 0; a < c.dim(); ++a) {
    for (Coord s : {Coord{1}, Coord{-1}}) {
      std::vector<Coord> v(c.coords().begin(), c.coords().end());
      v[a] += s;
      out.emplace_back(v);
    }
  }
  return out;
}

inline bool connected(const std::set<Cell>& cells) {
  if (cells.empty()) return true;
  std::set<Cell> seen{*cells.begin()};
  std::deque<Cell> queue{*cells.begin()};
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (const Cell& n : unit_steps(c)) {
      if (cells.count(n) && seen.insert(n).second) queue.push_back(n);
    }
  }
  return seen.size() == cells.size();
}

inline std::vector<std::set<Cell>> naive_components(const std::set<Cell>& cells) {
  std::vector<std::set<Cell>> out;
  std::set<Cell> left = cells;
  while (!left.empty()) {
    std::set<Cell> comp{*left.begin()};
    std::deque<Cell> queue{*left.begin()};
    while (!queue.empty()) {
      Cell c = queue.front();
      queue.pop_front();
      for (const Cell& n : unit_steps(c)) {
        if (left.count(n) && comp.insert(n).second) queue.push_back(n);
      }
    }
    for (const Cell& c : comp) left.erase(c);
    out.push_back(std::move(comp));
  }
  return out;
}

// An empty cell escapes if a walk through empty cells leaves the tight bounding
// box. Every cell the walk visits shares the answer, so results are memoised.
class EscapeOracle {
 public:
  explicit EscapeOracle(const std::set<Cell>& cells) : cells_(cells) {
    std::size_t d = cells.begin()->dim();
    lo_.assign(d, std::numeric_limits<Coord>::max());
    hi_.assign(d, std::numeric_limits<Coord>::min());
    for (const Cell& c : cells) {
      for (std::size_t a = 0; a < d; ++a) {
        lo_[a] = std::min(lo_[a], c[a]);
        hi_[a] = std::max(hi_[a], c[a]);
      }
    }
  }

  bool escapes(const Cell& start) {
    if (auto it = known_.find(start); it != known_.end()) return it->second;
    std::set<Cell> seen{start};
    std::deque<Cell> queue{start};
    bool out = false;
    while (!queue.empty() && !out) {
      Cell c = queue.front();
      queue.pop_front();
      if (outside(c)) out = true;
      for (const Cell& n : unit_steps(c)) {
        if (!cells_.count(n) && seen.insert(n).second) queue.push_back(n);
      }
    }
    for (const Cell& c : seen) known_[c] = out;
    return out;
  }

 private:
  bool outside(const Cell& c) const {
    for (std::size_t a = 0; a < c.dim(); ++a) {
      if (c[a] < lo_[a] || c[a] > hi_[a]) return true;
    }
    return false;
  }

  const std::set<Cell>& cells_;
  std::vector<Coord> lo_, hi_;
  std::map<Cell, bool> known_;
};

inline std::set<Cell> naive_boundary_modules(const std::set<Cell>& cells) {
  EscapeOracle oracle(cells);
  std::set<Cell> out;
  for (const Cell& c : cells) {
    for (const Cell& n : unit_steps(c)) {
      if (!cells.count(n) && oracle.escapes(n)) {
        out.insert(c);
        break;
      }
    }
  }
  return out;
}

enum class NaiveVerdict { NonArticulate, Nearly, Other };

struct NaiveSplit {
  NaiveVerdict verdict;
  std::set<Cell> inner;
};

inline NaiveSplit naive_split(const std::set<Cell>& cells, const Cell& x) {
  std::set<Cell> rest = cells;
  rest.erase(x);
  auto comps = naive_components(rest);
  if (comps.size() <= 1) return {NaiveVerdict::NonArticulate, {}};
  if (comps.size() > 2) return {NaiveVerdict::Other, {}};
  std::set<Cell> boundary = naive_boundary_modules(cells);
  if (!boundary.count(x)) return {NaiveVerdict::Other, {}};
  auto meets = [&](const std::set<Cell>& comp) {
    return std::any_of(comp.begin(), comp.end(), [&](const Cell& c) { return boundary.count(c) > 0; });
  };
  bool m0 = meets(comps[0]);
  bool m1 = meets(comps[1]);
  if (m0 == m1) return {NaiveVerdict::Other, {}};
  return {NaiveVerdict::Nearly, m0 ? comps[1] : comps[0]};
}

// Planar rectangular-model moves, written with explicit quarter turns instead of
// axis bookkeeping. Rotation entries are (to, pivot); slide targets are listed once.
struct PlanarMoves {
  std::set<std::pair<Cell, Cell>> rotations;
  std::set<Cell> slides;
};

inline PlanarMoves planar_moves(const std::set<Cell>& cells, const Cell& a) {
  auto occ = [&](Coord x, Coord y) { return cells.count(Cell{x, y}) > 0; };
  const Coord x = a[0];
  const Coord y = a[1];
  PlanarMoves out;
  const Coord ux[4] = {1, 0, -1, 0};
  const Coord uy[4] = {0, 1, 0, -1};
  for (int i = 0; i < 4; ++i) {
    for (int turn : {1, 3}) {
      int j = (i + turn) % 4;
      // Slide along u with a wall on side v.
      if (!occ(x + ux[i], y + uy[i]) && occ(x + ux[j], y + uy[j]) && occ(x + ux[i] + ux[j], y + uy[i] + uy[j])) {
        out.slides.insert(Cell{x + ux[i], y + uy[i]});
      }
      // Swing around the neighbour at v, passing through the cell at u.
      if (occ(x + ux[j], y + uy[j]) && !occ(x + ux[i], y + uy[i]) && !occ(x + ux[i] + ux[j], y + uy[i] + uy[j])) {
        out.rotations.insert({Cell{x + ux[i] + ux[j], y + uy[i] + uy[j]}, Cell{x + ux[j], y + uy[j]}});
      }
    }
  }
  return out;
}

// Fewest planar moves from `from` to `to` (exact cells, no translation), keeping
// every intermediate state connected. Returns -1 when `to` is not reached within
// `limit` states.
inline long planar_distance(const std::set<Cell>& from, const std::set<Cell>& to, std::size_t limit = 200000) {
  std::map<std::set<Cell>, long> dist{{from, 0}};
  std::deque<std::set<Cell>> queue{from};
  while (!queue.empty() && dist.size() < limit) {
    std::set<Cell> cur = queue.front();
    queue.pop_front();
    if (cur == to) return dist[cur];
    for (const Cell& a : cur) {
      auto moves = planar_moves(cur, a);
      std::vector<Cell> targets(moves.slides.begin(), moves.slides.end());
      for (const auto& r : moves.rotations) targets.push_back(r.first);
      for (const Cell& t : targets) {
        std::set<Cell> next = cur;
        next.erase(a);
        next.insert(t);
        if (!connected(next) || dist.count(next)) continue;
        dist[next] = dist[cur] + 1;
        queue.push_back(std::move(next));
      }
    }
  }
  return -1;
}

// Fixed polyominoes of size k, each normalised so its minimum cell sits at the origin.
inline std::set<std::set<Cell>> fixed_polyominoes(std::size_t k) {
  auto normalise = [](const std::set<Cell>& s) {
    const Cell& m = *s.begin();
    std::set<Cell> out;
    for (const Cell& c : s) out.insert(Cell{c[0] - m[0], c[1] - m[1]});
    return out;
  };
  std::set<std::set<Cell>> level{{Cell{0, 0}}};
  for (std::size_t size = 1; size < k; ++size) {
    std::set<std::set<Cell>> next;
    for (const auto& shape : level) {
      for (const Cell& c : shape) {
        for (const Cell& n : unit_steps(c)) {
          if (shape.count(n)) continue;
          std::set<Cell> grown = shape;
          grown.insert(n);
          next.insert(normalise(grown));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

// True when `rank` (distinct values over `cells`) is the finishing order of some
// depth-first search of `cells` started at `root`. The parent of each module is
// its lowest-ranked later-finishing neighbour; the order is a DFS order exactly when
// every subtree occupies a contiguous block of ranks ending at its top and every
// adjacency joins an ancestor to a descendant.
inline bool is_dfs_postorder(const std::set<Cell>& cells, const Cell& root, const std::map<Cell, std::size_t>& rank) {
  std::vector<Cell> order(cells.begin(), cells.end());
  std::sort(order.begin(), order.end(), [&](const Cell& a, const Cell& b) { return rank.at(a) < rank.at(b); });
  if (order.back() != root) return false;
  std::map<Cell, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::size_t> size(order.size(), 1);
  std::vector<std::size_t> parent(order.size(), order.size());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    for (const Cell& n : unit_steps(order[i])) {
      auto it = pos.find(n);
      if (it != pos.end() && it->second > i && it->second < parent[i]) parent[i] = it->second;
    }
    if (parent[i] == order.size()) return false;
    size[parent[i]] += size[i];
  }
  auto ancestor = [&](std::size_t a, std::size_t b) { return a + 1 >= size[a] && a + 1 - size[a] <= b && b <= a; };
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = i; a != order.size(); a = parent[a]) {
      if (!ancestor(a, i)) return false;
    }
    for (const Cell& n : unit_steps(order[i])) {
      auto it = pos.find(n);
      if (it == pos.end()) continue;
      if (!ancestor(i, it->second) && !ancestor(it->second, i)) return false;
    }
  }
  return true;
}

inline Configuration to_config(const std::set<Cell>& cells) {
  return Configuration(cells.begin()->dim(), std::vector<Cell>(cells.begin(), cells.end()));
}

}  // namespace fx
