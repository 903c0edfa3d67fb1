#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"
#include "hyperslide/lattice.hpp"

namespace hyperslide {

enum class MoveKind { Rotation, Slide };

/// One rotation or slide of a single module, carrying its witnesses.
///
/// Rotation: `from` and `to` are both face-adjacent to `pivot` along orthogonal
/// axes; the cell `from + (to - pivot)` (the edge cell) must be empty.
/// Slide: `to = from + e`; `supports[0] = from + e''` and `supports[1] = to + e''`
/// for some lateral e'' orthogonal to e.
struct Move {
  MoveKind kind = MoveKind::Slide;
  Cell from;
  Cell to;
  Cell pivot;
  std::array<Cell, 2> supports;

  static Move rotation(Cell from, Cell pivot, Cell to) {
    Move m;
    m.kind = MoveKind::Rotation;
    m.from = std::move(from);
    m.pivot = std::move(pivot);
    m.to = std::move(to);
    return m;
  }

  static Move slide(Cell from, Cell support_from, Cell support_to, Cell to) {
    Move m;
    m.kind = MoveKind::Slide;
    m.from = std::move(from);
    m.supports = {std::move(support_from), std::move(support_to)};
    m.to = std::move(to);
    return m;
  }

  /// The same move played backwards. A rotation keeps its pivot; a slide keeps
  /// its supports, swapped so that supports[0] stays next to the new source.
  Move reversed() const {
    if (kind == MoveKind::Rotation) return rotation(to, pivot, from);
    return slide(to, supports[1], supports[0], from);
  }

  friend bool operator==(const Move& a, const Move& b) {
    if (a.kind != b.kind || a.from != b.from || a.to != b.to) return false;
    return a.kind == MoveKind::Rotation ? a.pivot == b.pivot : a.supports == b.supports;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Move& m) {
  if (m.kind == MoveKind::Rotation) return os << "R " << m.from << " about " << m.pivot << " -> " << m.to;
  return os << "S " << m.from << " along " << m.supports[0] << m.supports[1] << " -> " << m.to;
}

/// Why a move is not playable. Malformed means the witnesses have the wrong shape.
enum class MoveFault { None, Malformed, SourceAbsent, TargetOccupied, EdgeCellOccupied, MissingSupport };

inline const char* describe(MoveFault f) {
  switch (f) {
    case MoveFault::None: return "legal";
    case MoveFault::Malformed: return "malformed move";
    case MoveFault::SourceAbsent: return "source absent";
    case MoveFault::TargetOccupied: return "target occupied";
    case MoveFault::EdgeCellOccupied: return "edge cell occupied";
    case MoveFault::MissingSupport: return "missing support";
  }
  return "unknown";
}

/// Empty string when the witnesses have a valid rotation/slide shape in `dim`.
inline std::string shape_problem(const Move& m, std::size_t dim) {
  auto dims_ok = [&](const Cell& c) { return c.dim() == dim; };
  if (!dims_ok(m.from) || !dims_ok(m.to)) return "coordinates do not match dimension " + std::to_string(dim);
  if (m.kind == MoveKind::Rotation) {
    if (!dims_ok(m.pivot)) return "pivot does not match dimension " + std::to_string(dim);
    auto arm = unit_offset(m.pivot, m.from);
    auto swing = unit_offset(m.pivot, m.to);
    if (!arm) return "source is not face-adjacent to the pivot";
    if (!swing) return "target is not face-adjacent to the pivot";
    if (!arm->orthogonal_to(*swing)) return "source and target are not on orthogonal faces of the pivot";
    return {};
  }
  if (!dims_ok(m.supports[0]) || !dims_ok(m.supports[1])) return "supports do not match dimension " + std::to_string(dim);
  auto step = unit_offset(m.from, m.to);
  if (!step) return "slide target is not a unit step from the source";
  auto lateral = unit_offset(m.from, m.supports[0]);
  if (!lateral || !lateral->orthogonal_to(*step)) return "first support is not laterally adjacent to the source";
  if (unit_offset(m.supports[0], m.supports[1]) != step) return "second support is not the first support shifted by the slide";
  return {};
}

/// Checks a move against an occupancy, rechecking its witnesses rather than searching.
inline MoveFault check_move(const CellSet& occupied, std::size_t dim, const Move& m) {
  if (!shape_problem(m, dim).empty()) return MoveFault::Malformed;
  if (!occupied.contains(m.from)) return MoveFault::SourceAbsent;
  if (m.kind == MoveKind::Rotation) {
    if (!occupied.contains(m.pivot)) return MoveFault::MissingSupport;
    if (occupied.contains(m.to)) return MoveFault::TargetOccupied;
    Direction swing = *unit_offset(m.pivot, m.to);
    if (occupied.contains(m.from.step(swing))) return MoveFault::EdgeCellOccupied;
    return MoveFault::None;
  }
  if (!occupied.contains(m.supports[0]) || !occupied.contains(m.supports[1])) return MoveFault::MissingSupport;
  if (occupied.contains(m.to)) return MoveFault::TargetOccupied;
  return MoveFault::None;
}

/// Can the module at `a` rotate about its neighbour `pivot` into `to`?
/// Geometric only; connectivity is a property of the whole trace.
inline bool rotation_legal(const CellSet& occupied, std::size_t dim, const Cell& a, const Cell& pivot, const Cell& to) {
  if (a.dim() != dim || pivot.dim() != dim || to.dim() != dim) throw MalformedMoveError("rotation cells must be " + std::to_string(dim) + "-dimensional");
  if (!occupied.contains(a)) throw MalformedMoveError("no module at " + to_string(a));
  if (!occupied.contains(pivot)) throw MalformedMoveError("no pivot module at " + to_string(pivot));
  auto arm = unit_offset(pivot, a);
  if (!arm) throw MalformedMoveError(to_string(a) + " is not face-adjacent to pivot " + to_string(pivot));
  auto swing = unit_offset(pivot, to);
  if (!swing || !swing->orthogonal_to(*arm)) return false;
  return !occupied.contains(to) && !occupied.contains(a.step(*swing));
}

/// Supports witnessing a slide of `a` into `to`, or nullopt when no slide exists.
/// The first lateral direction in global order wins.
inline std::optional<std::pair<Cell, Cell>> slide_legal(const CellSet& occupied, std::size_t dim, const Cell& a, const Cell& to) {
  if (a.dim() != dim || to.dim() != dim) throw MalformedMoveError("slide cells must be " + std::to_string(dim) + "-dimensional");
  if (!occupied.contains(a)) throw MalformedMoveError("no module at " + to_string(a));
  auto step = unit_offset(a, to);
  if (!step || occupied.contains(to)) return std::nullopt;
  for (Direction lateral : directions(dim)) {
    if (!lateral.orthogonal_to(*step)) continue;
    Cell b = a.step(lateral);
    if (!occupied.contains(b)) continue;
    Cell b2 = to.step(lateral);
    if (occupied.contains(b2)) return std::make_pair(std::move(b), std::move(b2));
  }
  return std::nullopt;
}

/// Every legal move of the module at `a`.
///
/// Order: for each direction d (global order), the rotations about the pivot
/// a + d (swing directions in global order), then the slide toward a + d.
inline std::vector<Move> legal_moves(const CellSet& occupied, std::size_t dim, const Cell& a) {
  if (a.dim() != dim) throw MalformedMoveError("cell " + to_string(a) + " is not " + std::to_string(dim) + "-dimensional");
  if (!occupied.contains(a)) throw MalformedMoveError("no module at " + to_string(a));
  std::vector<Move> out;
  out.reserve(2 * dim * dim);
  for (Direction d : directions(dim)) {
    Cell neighbour = a.step(d);
    if (occupied.contains(neighbour)) {
      for (Direction swing : directions(dim)) {
        if (!swing.orthogonal_to(d)) continue;
        Cell to = neighbour.step(swing);
        if (!occupied.contains(to) && !occupied.contains(a.step(swing))) {
          out.push_back(Move::rotation(a, neighbour, std::move(to)));
        }
      }
      continue;
    }
    for (Direction lateral : directions(dim)) {
      if (!lateral.orthogonal_to(d)) continue;
      Cell b = a.step(lateral);
      if (!occupied.contains(b)) continue;
      Cell b2 = neighbour.step(lateral);
      if (!occupied.contains(b2)) continue;
      out.push_back(Move::slide(a, std::move(b), std::move(b2), neighbour));
      break;
    }
  }
  return out;
}

inline std::vector<Move> legal_moves(const Configuration& v, const Cell& a) { return legal_moves(v.occupancy(), v.dim(), a); }

class IllegalMoveError : public Error {
 public:
  IllegalMoveError(MoveFault fault, const std::string& what) : Error(what), fault_(fault) {}
  MoveFault fault() const { return fault_; }

 private:
  MoveFault fault_;
};

inline Configuration apply_move(const Configuration& v, const Move& m) {
  MoveFault fault = check_move(v.occupancy(), v.dim(), m);
  if (fault == MoveFault::Malformed) {
    throw IllegalMoveError(fault, "malformed move: " + shape_problem(m, v.dim()));
  }
  if (fault != MoveFault::None) throw IllegalMoveError(fault, std::string("illegal move: ") + describe(fault));
  std::vector<Cell> cells;
  cells.reserve(v.size());
  for (const Cell& c : v.cells()) {
    if (c != m.from) cells.push_back(c);
  }
  cells.push_back(m.to);
  return Configuration(v.dim(), std::move(cells));
}

/// An initial configuration plus the moves replayed from it.
struct Trace {
  Configuration initial;
  std::vector<Move> moves;
};

enum class TraceFailure { IllegalGeometry, Disconnected, Malformed };

inline const char* describe(TraceFailure f) {
  switch (f) {
    case TraceFailure::IllegalGeometry: return "illegal-geometry";
    case TraceFailure::Disconnected: return "disconnected";
    case TraceFailure::Malformed: return "malformed";
  }
  return "unknown";
}

class TraceError : public Error {
 public:
  TraceError(std::size_t index, TraceFailure kind, const std::string& detail)
      : Error("move " + std::to_string(index) + ": " + describe(kind) + ": " + detail), index_(index), kind_(kind) {}
  std::size_t index() const { return index_; }
  TraceFailure kind() const { return kind_; }

 private:
  std::size_t index_;
  TraceFailure kind_;
};

/// Replays the trace, checking every move's witnesses and the connectivity of
/// every intermediate configuration. Returns the final configuration.
inline Configuration validate_trace(const Trace& t) {
  const std::size_t dim = t.initial.dim();
  if (!is_connected(t.initial)) throw PreconditionError("initial configuration is disconnected");
  CellSet occupied = t.initial.occupancy();
  std::vector<Cell> touched = t.initial.cells();
  for (const Move& m : t.moves) touched.push_back(m.to);
  std::optional<OccupancyGrid> grid = OccupancyGrid::covering(dim, touched);
  if (grid) {
    for (const Cell& c : t.initial.cells()) grid->set(c, true);
  }
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const Move& m = t.moves[i];
    MoveFault fault = check_move(occupied, dim, m);
    if (fault == MoveFault::Malformed) throw TraceError(i, TraceFailure::Malformed, shape_problem(m, dim));
    if (fault != MoveFault::None) {
      std::ostringstream detail;
      detail << describe(fault) << " (" << m << ")";
      throw TraceError(i, TraceFailure::IllegalGeometry, detail.str());
    }
    occupied.erase(m.from);
    occupied.insert(m.to);
    if (grid) {
      grid->set(m.from, false);
      grid->set(m.to, true);
    }
    bool connected = grid ? grid->connected_from(m.to, occupied.size()) : is_connected(occupied, dim);
    if (!connected) {
      std::ostringstream detail;
      detail << "configuration splits after " << m;
      throw TraceError(i, TraceFailure::Disconnected, detail.str());
    }
  }
  return Configuration(dim, occupied);
}

/// Plays `t` backwards from its end state `final_state`.
inline Trace reverse_trace(const Trace& t, const Configuration& final_state) {
  Configuration reached = [&] {
    try {
      return validate_trace(t);
    } catch (const TraceError& e) {
      throw PreconditionError(std::string("cannot reverse an invalid trace: ") + e.what());
    }
  }();
  if (!(reached == final_state)) throw PreconditionError("cannot reverse: trace does not end at the given configuration");
  Trace out{final_state, {}};
  out.moves.reserve(t.moves.size());
  for (auto it = t.moves.rbegin(); it != t.moves.rend(); ++it) out.moves.push_back(it->reversed());
  return out;
}

}  // namespace hyperslide
