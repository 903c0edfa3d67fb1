#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hyperslide/error.hpp"

namespace hyperslide {

using Coord = std::int64_t;

/// Signed unit step along one lattice axis.
///
/// Directions are globally ordered +x1, -x1, +x2, -x2, ...; every enumeration
/// in the library follows that order so traces are reproducible.
struct Direction {
  std::size_t axis = 0;
  int sign = 1;

  constexpr std::size_t index() const { return 2 * axis + (sign < 0 ? 1 : 0); }
  constexpr Direction opposite() const { return {axis, -sign}; }
  constexpr bool orthogonal_to(Direction other) const { return axis != other.axis; }
  static constexpr Direction from_index(std::size_t i) {
    return {i / 2, (i % 2) != 0 ? -1 : 1};
  }

  friend constexpr bool operator==(Direction, Direction) = default;
};

inline std::vector<Direction> directions(std::size_t dim) {
  std::vector<Direction> out;
  out.reserve(2 * dim);
  for (std::size_t i = 0; i < 2 * dim; ++i) out.push_back(Direction::from_index(i));
  return out;
}

/// A point of the integer lattice; one module occupies one cell.
///
/// Coordinates are stored inline for d <= 4.
class Cell {
 public:
  using Storage = boost::container::small_vector<Coord, 4>;

  Cell() = default;
  explicit Cell(const std::vector<Coord>& coords) : coords_(coords.begin(), coords.end()) {}
  Cell(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t axis) const { return coords_[axis]; }
  const Storage& coords() const { return coords_; }

  /// The cell `amount` steps away along `dir`. Throws OverflowError instead of wrapping.
  Cell step(Direction dir, Coord amount = 1) const {
    Cell out = *this;
    Coord delta = dir.sign < 0 ? -amount : amount;
    if (__builtin_add_overflow(coords_[dir.axis], delta, &out.coords_[dir.axis])) {
      throw OverflowError("coordinate overflow stepping along axis " + std::to_string(dir.axis + 1));
    }
    return out;
  }

  // Lexicographic, x1 most significant.
  friend std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }
  friend bool operator==(const Cell& a, const Cell& b) { return a.coords_ == b.coords_; }

 private:
  Storage coords_;
};

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ c.dim();
    for (Coord v : c.coords()) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using CellSet = std::unordered_set<Cell, CellHash>;

/// Direction d with `to == from.step(d)`, if the two cells are face-adjacent.
inline std::optional<Direction> unit_offset(const Cell& from, const Cell& to) {
  if (from.dim() != to.dim()) return std::nullopt;
  std::optional<Direction> found;
  for (std::size_t axis = 0; axis < from.dim(); ++axis) {
    // Compare through differences of at most one so huge coordinates cannot overflow.
    if (from[axis] == to[axis]) continue;
    if (found) return std::nullopt;
    if (to[axis] > from[axis] && to[axis] - 1 == from[axis]) {
      found = Direction{axis, 1};
    } else if (to[axis] < from[axis] && to[axis] + 1 == from[axis]) {
      found = Direction{axis, -1};
    } else {
      return std::nullopt;
    }
  }
  return found;
}

inline bool face_adjacent(const Cell& a, const Cell& b) { return unit_offset(a, b).has_value(); }

/// Comma-separated coordinates, e.g. "1,0,-2" (the trace file spelling).
inline std::string to_string(const Cell& c) {
  std::string out;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << to_string(c) << ')';
}

inline std::vector<Cell> sorted_cells(const CellSet& cells) {
  std::vector<Cell> out(cells.begin(), cells.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperslide
