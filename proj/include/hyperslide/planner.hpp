#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"
#include "hyperslide/graph.hpp"
#include "hyperslide/kinematics.hpp"
#include "hyperslide/lattice.hpp"

namespace hyperslide {

/// Straight chain `anchor + k*e1`, k = 0..length-1.
struct ChainSpec {
  Cell anchor;
  std::size_t length = 0;

  Cell head() const { return anchor.step(Direction{0, 1}, static_cast<Coord>(length) - 1); }
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(length);
    for (std::size_t k = 0; k < length; ++k) out.push_back(anchor.step(Direction{0, 1}, static_cast<Coord>(k)));
    return out;
  }
  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

struct PlannerOptions {
  // Per-move checks: B_out of every enclosing level stays put, movers stay
  // inside holes, the world stays connected.
  bool check_invariants = true;
  // Recompute post-orders at every recursion level and compare the selection
  // with the one obtained from the inherited labels.
  bool recompute_labels = false;
};

struct PlannerStats {
  std::size_t locate_calls = 0;
  std::size_t max_depth = 0;        // deepest nesting of locate_and_free (top call = 1)
  std::size_t nearly_splits = 0;    // levels that had to free a sealed component
  std::size_t transits = 0;
  std::size_t transit_states = 0;   // BFS positions expanded over all transits
  std::size_t checked_moves = 0;    // moves verified against scope invariants
};

/// Goal predicate for a transit: occupancy with the mover placed at `position`.
using TransitGoal = std::function<bool(const CellSet& occupied, const Cell& position)>;

/// Shortest sequence of legal moves of `mover`, everything else held fixed,
/// until `goal` holds. Positions in `forbidden` are never entered.
///
/// Throws InternalError (transit-unreachable) if the goal cannot be reached.
inline std::vector<Move> boundary_transit(const CellSet& world, std::size_t dim, const Cell& mover, const TransitGoal& goal,
                                          const CellSet& forbidden = {}, std::size_t* expanded = nullptr) {
  if (!world.contains(mover)) throw PreconditionError("transit mover " + to_string(mover) + " is not a module");
  CellSet occupied = world;
  occupied.erase(mover);

  struct Step {
    Cell previous;
    Move move;
  };
  std::unordered_map<Cell, std::optional<Step>, CellHash> parent;
  parent.emplace(mover, std::nullopt);
  std::deque<Cell> queue{mover};
  while (!queue.empty()) {
    Cell here = std::move(queue.front());
    queue.pop_front();
    if (expanded) ++*expanded;
    occupied.insert(here);
    if (goal(occupied, here)) {
      std::vector<Move> path;
      for (Cell at = here; parent.at(at);) {
        const Step& step = *parent.at(at);
        path.push_back(step.move);
        at = step.previous;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Move& m : legal_moves(occupied, dim, here)) {
      if (parent.contains(m.to) || forbidden.contains(m.to)) continue;
      parent.emplace(m.to, Step{here, m});
      queue.push_back(m.to);
    }
    occupied.erase(here);
  }
  throw InternalError("transit-unreachable: module at " + to_string(mover) + " cannot reach its goal");
}

/// Mutable working state of one planning run: the global occupancy, the moves
/// emitted so far, and the stack of locate_and_free levels whose invariants
/// every move is checked against.
class PlannerState {
 public:
  explicit PlannerState(const Configuration& initial, PlannerOptions options = {})
      : initial_(initial), world_(initial.occupancy()), options_(options) {}

  std::size_t dim() const { return initial_.dim(); }
  const CellSet& world() const { return world_; }
  const std::vector<Move>& moves() const { return moves_; }
  const PlannerOptions& options() const { return options_; }
  PlannerStats& stats() { return stats_; }
  const PlannerStats& stats() const { return stats_; }
  Trace trace() const { return {initial_, moves_}; }

  void play(const Move& m) {
    MoveFault fault = check_move(world_, dim(), m);
    if (fault != MoveFault::None) {
      std::ostringstream msg;
      msg << "planner emitted an unplayable move (" << describe(fault) << "): " << m;
      throw InternalError(msg.str());
    }
    for (Level& level : levels_) {
      if (options_.check_invariants) {
        if (level.fixed.contains(m.from)) {
          throw InternalError("boundary module " + to_string(m.from) + " moved while freeing a sealed component");
        }
        if (level.map.exterior(m.to)) {
          throw InternalError("mover surfaced at " + to_string(m.to) + " outside the holes of its level");
        }
      }
      if (!level.local->erase(m.from)) throw InternalError("mover " + to_string(m.from) + " is foreign to an enclosing level");
      level.local->insert(m.to);
    }
    if (!levels_.empty()) ++stats_.checked_moves;
    world_.erase(m.from);
    world_.insert(m.to);
    if (options_.check_invariants && !is_connected(world_, dim())) {
      std::ostringstream msg;
      msg << "move disconnected the configuration: " << m;
      throw InternalError(msg.str());
    }
    moves_.push_back(m);
  }

  void play(const std::vector<Move>& ms) {
    for (const Move& m : ms) play(m);
  }

  /// Registers a locate_and_free level for the lifetime of the guard.
  class LevelGuard {
   public:
    LevelGuard(PlannerState& state, CellSet& local, const BoundarySummary& boundary, ComplementMap map) : state_(state) {
      state_.levels_.push_back({&local, CellSet(boundary.modules.begin(), boundary.modules.end()), std::move(map)});
    }
    ~LevelGuard() { state_.levels_.pop_back(); }
    LevelGuard(const LevelGuard&) = delete;
    LevelGuard& operator=(const LevelGuard&) = delete;

   private:
    PlannerState& state_;
  };

 private:
  struct Level {
    CellSet* local;
    CellSet fixed;      // B_out of the level at entry
    ComplementMap map;  // complement of the level at entry
  };

  Configuration initial_;
  CellSet world_;
  PlannerOptions options_;
  PlannerStats stats_;
  std::vector<Move> moves_;
  std::vector<Level> levels_;
};

namespace detail {

// Is `x` articulate in `local` once the module at `from` sits at `to`?
inline bool articulate_after(const CellSet& local, std::size_t dim, const Cell& x, const Cell& from, const Cell& to) {
  auto member = [&](const Cell& c) { return c == to || (c != from && c != x && local.contains(c)); };
  return flood_count(to, dim, member) != local.size() - 1;
}

}  // namespace detail

/// Rearranges the modules sealed inside `local` until a module x of B_out(local)
/// other than `root` is non-articulate in `local`, and returns x.
///
/// `local` is updated in place as moves are played. Modules of B_out(local)
/// never move, and every mover stays inside a hole of `local`.
inline Cell locate_and_free(PlannerState& state, CellSet& local, const Cell& root, const PostOrderLabels& labels,
                            std::size_t depth = 1) {
  PlannerStats& stats = state.stats();
  ++stats.locate_calls;
  stats.max_depth = std::max(stats.max_depth, depth);
  if (!local.contains(root)) throw PreconditionError("locate_and_free root " + to_string(root) + " is not a module");
  // A lone module is its own free module.
  if (local.size() == 1) return root;

  const std::size_t dim = state.dim();
  ComplementMap map(local, dim);
  BoundarySummary boundary = outer_boundary(local, dim, map);
  SplitClassification split = min_postorder_boundary(local, dim, labels, root, boundary, map);
  if (state.options().recompute_labels) {
    SplitClassification fresh = min_postorder_boundary(local, dim, postorder(local, dim, root), root, boundary, map);
    if (fresh.subject != split.subject || fresh.verdict != split.verdict) {
      throw InternalError("inherited post-order labels disagree with a fresh search at " + to_string(root));
    }
  }
  const Cell x = split.subject;
  if (split.verdict == SplitVerdict::NonArticulate) return x;

  ++stats.nearly_splits;
  PlannerState::LevelGuard guard(state, local, boundary, std::move(map));
  CellSet inner(split.inner.begin(), split.inner.end());
  const Cell freed = locate_and_free(state, inner, *split.inner_neighbour, labels, depth + 1);

  TransitGoal reconnects = [&](const CellSet&, const Cell& position) {
    return !detail::articulate_after(local, dim, x, freed, position);
  };
  ++stats.transits;
  state.play(boundary_transit(state.world(), dim, freed, reconnects, {}, &stats.transit_states));

  if (state.options().check_invariants) {
    if (is_articulate(local, dim, x)) throw InternalError("module " + to_string(x) + " is still articulate after freeing");
    for (const Cell& b : boundary.modules) {
      if (!local.contains(b)) throw InternalError("boundary cell " + to_string(b) + " was vacated");
    }
  }
  return x;
}

struct CanonicalResult {
  Trace trace;
  ChainSpec chain;
  PlannerStats stats;
};

/// Reconfigures V into the straight chain along +x1 anchored at its
/// lexicographically greatest module, which never moves.
inline CanonicalResult canonicalize(const Configuration& v, PlannerOptions options = {}) {
  if (!is_connected(v)) throw PreconditionError("cannot canonicalize a disconnected configuration");
  const std::size_t dim = v.dim();
  const Cell anchor = v.extremal();
  PlannerState state(v, options);
  CellSet remaining = v.occupancy();
  const Direction e1{0, 1};

  for (std::size_t i = 1; i < v.size(); ++i) {
    PostOrderLabels labels = postorder(remaining, dim, anchor);
    Cell x = locate_and_free(state, remaining, anchor, labels);
    if (x == anchor) throw InternalError("freed module coincides with the anchor");
    if (options.check_invariants && is_articulate(remaining, dim, x)) {
      throw InternalError("freed module " + to_string(x) + " is articulate");
    }
    const Cell target = anchor.step(e1, static_cast<Coord>(i));
    TransitGoal reach = [&](const CellSet&, const Cell& position) { return position == target; };
    ++state.stats().transits;
    state.play(boundary_transit(state.world(), dim, x, reach, {}, &state.stats().transit_states));
    remaining.erase(x);
  }

  ChainSpec chain{anchor, v.size()};
  Trace trace = state.trace();
  Configuration reached = validate_trace(trace);
  if (!(reached == Configuration(dim, chain.cells()))) throw InternalError("canonicalization did not end in the chain");
  return {std::move(trace), std::move(chain), state.stats()};
}

/// Simple lattice path carrying the source chain onto the target chain:
/// source cells, connector, target cells. Consecutive cells are face-adjacent.
inline std::vector<Cell> transport_path(const ChainSpec& from, const ChainSpec& to) {
  const std::size_t dim = from.anchor.dim();
  const Direction e1{0, 1};
  const Direction back{0, -1};
  auto lateral_equal = [&] {
    for (std::size_t a = 1; a < dim; ++a) {
      if (from.anchor[a] != to.anchor[a]) return false;
    }
    return true;
  };

  std::vector<Cell> path;
  if (lateral_equal()) {
    if (to.anchor[0] >= from.anchor[0]) {
      for (Cell c = from.anchor; c <= to.head(); c = c.step(e1)) path.push_back(c);
    } else {
      for (Cell c = from.head(); c >= to.anchor; c = c.step(back)) path.push_back(c);
    }
    return path;
  }

  const Coord turn = std::max(from.head()[0], to.head()[0]) + 2;
  for (Cell c = from.anchor; c[0] <= turn; c = c.step(e1)) path.push_back(c);
  // Walk the lateral coordinates over to the target line, one axis at a time.
  Cell c = path.back();
  for (std::size_t a = 1; a < dim; ++a) {
    while (c[a] != to.anchor[a]) {
      c = c.step(Direction{a, to.anchor[a] > c[a] ? 1 : -1});
      path.push_back(c);
    }
  }
  for (c = c.step(back); c[0] >= to.anchor[0]; c = c.step(back)) path.push_back(c);
  return path;
}

/// Moves a straight chain onto another by snaking it along transport_path:
/// the rearmost module repeatedly travels to the path cell ahead of the front.
inline Trace transport_chain(const ChainSpec& from, const ChainSpec& to, PlannerStats* stats = nullptr) {
  if (from.length != to.length) throw InfeasibleError("chains differ in length");
  if (from.anchor.dim() != to.anchor.dim()) throw InfeasibleError("chains differ in dimension");
  if (from.length < 2) throw InfeasibleError("a single module cannot be relocated");
  const std::size_t dim = from.anchor.dim();
  Configuration start(dim, from.cells());
  if (from == to) return {start, {}};

  std::vector<Cell> path = transport_path(from, to);
  const std::size_t n = from.length;
  PlannerState state(start);
  for (std::size_t k = 0; k + n < path.size(); ++k) {
    const Cell& target = path[k + n];
    TransitGoal reach = [&](const CellSet&, const Cell& position) { return position == target; };
    std::size_t expanded = 0;
    state.play(boundary_transit(state.world(), dim, path[k], reach, {}, &expanded));
    if (stats) {
      ++stats->transits;
      stats->transit_states += expanded;
    }
  }
  return state.trace();
}

/// A certified trace from V to V2: canonicalize V, transport its chain onto the
/// chain of V2, then play V2's canonicalization backwards.
inline Trace plan(const Configuration& v, const Configuration& v2, PlannerOptions options = {}) {
  if (v.dim() != v2.dim()) throw InfeasibleError("configurations differ in dimension");
  if (v.size() != v2.size()) {
    throw InfeasibleError("configurations differ in size (" + std::to_string(v.size()) + " vs " + std::to_string(v2.size()) + ")");
  }
  if (!is_connected(v) || !is_connected(v2)) throw InfeasibleError("both configurations must be connected");
  if (v.size() == 1) {
    if (v == v2) return {v, {}};
    throw InfeasibleError("a lone module has no legal moves");
  }

  CanonicalResult source = canonicalize(v, options);
  CanonicalResult target = canonicalize(v2, options);
  Trace transport = transport_chain(source.chain, target.chain);
  Trace back = reverse_trace(target.trace, Configuration(v.dim(), target.chain.cells()));

  Trace out{v, std::move(source.trace.moves)};
  out.moves.insert(out.moves.end(), transport.moves.begin(), transport.moves.end());
  out.moves.insert(out.moves.end(), back.moves.begin(), back.moves.end());
  if (!(validate_trace(out) == v2)) throw InternalError("plan does not end at the target configuration");
  return out;
}

}  // namespace hyperslide
