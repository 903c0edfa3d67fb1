#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"
#include "hyperslide/lattice.hpp"

namespace hyperslide {

/// DFS finishing ranks 1..n of a connected cell set, rooted at `root`.
struct PostOrderLabels {
  Cell root;
  std::unordered_map<Cell, std::size_t, CellHash> rank;

  std::size_t of(const Cell& c) const {
    auto it = rank.find(c);
    if (it == rank.end()) throw PreconditionError("no post-order label for " + to_string(c));
    return it->second;
  }
};

/// Iterative depth-first search; neighbours are explored in global direction order.
inline PostOrderLabels postorder(const CellSet& cells, std::size_t dim, const Cell& root) {
  if (!cells.contains(root)) throw PreconditionError("post-order root " + to_string(root) + " is not a module");
  PostOrderLabels out{root, {}};
  out.rank.reserve(cells.size());
  CellSet seen{root};
  struct Frame {
    Cell cell;
    std::size_t next_dir;
  };
  std::vector<Frame> stack{{root, 0}};
  std::size_t finished = 0;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_dir == 2 * dim) {
      out.rank.emplace(top.cell, ++finished);
      stack.pop_back();
      continue;
    }
    Cell next = top.cell.step(Direction::from_index(top.next_dir++));
    if (cells.contains(next) && !seen.contains(next)) {
      seen.insert(next);
      stack.push_back({std::move(next), 0});
    }
  }
  if (finished != cells.size()) throw PreconditionError("post-order requires a connected configuration");
  return out;
}

inline PostOrderLabels postorder(const Configuration& v, const Cell& root) {
  return postorder(v.occupancy(), v.dim(), root);
}

/// True iff |V| >= 2 and removing `m` disconnects V. Deletion plus flood fill.
inline bool is_articulate(const CellSet& cells, std::size_t dim, const Cell& m) {
  if (!cells.contains(m)) throw PreconditionError("no module at " + to_string(m));
  if (cells.size() <= 2) return false;
  const Cell* start = nullptr;
  for (const Cell& c : cells) {
    if (c != m) {
      start = &c;
      break;
    }
  }
  auto reached = flood_count(*start, dim, [&](const Cell& c) { return c != m && cells.contains(c); });
  return reached != cells.size() - 1;
}

inline bool is_articulate(const Configuration& v, const Cell& m) { return is_articulate(v.occupancy(), v.dim(), m); }

inline std::vector<Cell> nonarticulate_modules(const CellSet& cells, std::size_t dim) {
  std::vector<Cell> out;
  for (const Cell& c : sorted_cells(cells)) {
    if (!is_articulate(cells, dim, c)) out.push_back(c);
  }
  return out;
}

inline std::vector<Cell> nonarticulate_modules(const Configuration& v) {
  return nonarticulate_modules(v.occupancy(), v.dim());
}

inline std::vector<Cell> articulation_modules(const Configuration& v) {
  std::vector<Cell> out;
  for (const Cell& c : v.cells()) {
    if (is_articulate(v, c)) out.push_back(c);
  }
  return out;
}

enum class SplitVerdict { NonArticulate, NearlyNonArticulate, OtherArticulate };

inline const char* describe(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::NonArticulate: return "non-articulate";
    case SplitVerdict::NearlyNonArticulate: return "nearly-non-articulate";
    case SplitVerdict::OtherArticulate: return "other-articulate";
  }
  return "unknown";
}

/// How V splits when module `subject` is removed.
///
/// For a nearly non-articulate subject, `outer` is the component meeting B_out(V),
/// `inner` the one disjoint from it, and `inner_neighbour` the unique inner module
/// face-adjacent to the subject. For other articulate subjects `outer` holds
/// every component meeting B_out(V).
struct SplitClassification {
  Cell subject;
  SplitVerdict verdict = SplitVerdict::NonArticulate;
  std::vector<Cell> outer;
  std::vector<Cell> inner;
  std::optional<Cell> inner_neighbour;
};

inline SplitClassification split_at(const CellSet& cells, std::size_t dim, const Cell& x, const BoundarySummary& boundary,
                                    const ComplementMap& exterior) {
  if (!cells.contains(x)) throw PreconditionError("no module at " + to_string(x));
  SplitClassification out{x, SplitVerdict::NonArticulate, {}, {}, std::nullopt};
  CellSet rest = cells;
  rest.erase(x);
  if (rest.empty()) return out;
  auto parts = components(rest, dim);
  if (parts.size() == 1) return out;

  std::vector<std::size_t> sealed;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool meets = std::any_of(parts[i].begin(), parts[i].end(), [&](const Cell& c) { return boundary.on_boundary(c); });
    if (meets) {
      out.outer.insert(out.outer.end(), parts[i].begin(), parts[i].end());
    } else {
      sealed.push_back(i);
    }
  }
  std::sort(out.outer.begin(), out.outer.end());
  if (parts.size() != 2 || sealed.size() != 1 || !boundary.on_boundary(x)) {
    out.verdict = SplitVerdict::OtherArticulate;
    return out;
  }

  out.verdict = SplitVerdict::NearlyNonArticulate;
  out.inner = parts[sealed.front()];
  CellSet inner(out.inner.begin(), out.inner.end());
  CellSet outer(out.outer.begin(), out.outer.end());
  std::size_t outer_neighbours = 0;
  for (Direction d : directions(dim)) {
    Cell n = x.step(d);
    if (inner.contains(n)) {
      if (out.inner_neighbour) throw InternalError("module " + to_string(x) + " touches its sealed component twice");
      out.inner_neighbour = n;
      // The face opposite the sealed neighbour must be exposed.
      if (!exterior.exterior(x.step(d.opposite()))) {
        throw InternalError("face of " + to_string(x) + " opposite its sealed neighbour is not on the outer boundary");
      }
    } else if (outer.contains(n)) {
      ++outer_neighbours;
    }
  }
  if (!out.inner_neighbour) throw InternalError("sealed component is not adjacent to " + to_string(x));
  if (outer_neighbours == 0) throw InternalError("module " + to_string(x) + " has no neighbour outside its sealed component");
  return out;
}

inline SplitClassification split_at(const CellSet& cells, std::size_t dim, const Cell& x) {
  ComplementMap map(cells, dim);
  return split_at(cells, dim, x, outer_boundary(cells, dim, map), map);
}

inline SplitClassification split_at(const Configuration& v, const Cell& x) { return split_at(v.occupancy(), v.dim(), x); }

/// The B_out module with the smallest finishing rank, with its classification.
/// The construction guarantees it is non-articulate or nearly non-articulate.
///
/// `root` is the module the ranks are taken to start from. It differs from
/// labels.root when inherited labels are reused on a sealed component.
inline SplitClassification min_postorder_boundary(const CellSet& cells, std::size_t dim, const PostOrderLabels& labels,
                                                  const Cell& root, const BoundarySummary& boundary,
                                                  const ComplementMap& exterior) {
  if (cells.size() < 2) throw PreconditionError("min_postorder_boundary needs at least two modules");
  if (!boundary.on_boundary(root)) throw PreconditionError("post-order root " + to_string(root) + " is not on the outer boundary");
  const Cell* best = nullptr;
  std::size_t best_rank = 0;
  for (const Cell& c : boundary.modules) {
    std::size_t r = labels.of(c);
    if (!best || r < best_rank) {
      best = &c;
      best_rank = r;
    }
  }
  if (*best == root) throw InternalError("minimal boundary module is the post-order root");
  SplitClassification split = split_at(cells, dim, *best, boundary, exterior);
  if (split.verdict == SplitVerdict::OtherArticulate) {
    throw InternalError("minimal-rank boundary module " + to_string(*best) + " is articulate but not nearly non-articulate");
  }
  return split;
}

inline SplitClassification min_postorder_boundary(const CellSet& cells, std::size_t dim, const PostOrderLabels& labels) {
  ComplementMap map(cells, dim);
  return min_postorder_boundary(cells, dim, labels, labels.root, outer_boundary(cells, dim, map), map);
}

inline SplitClassification min_postorder_boundary(const Configuration& v, const PostOrderLabels& labels) {
  return min_postorder_boundary(v.occupancy(), v.dim(), labels);
}

}  // namespace hyperslide
