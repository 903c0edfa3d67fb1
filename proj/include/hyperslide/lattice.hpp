#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"

namespace hyperslide {

/// The 2d cells sharing a (d-1)-face with `c`, in global direction order.
inline std::vector<Cell> face_neighbors(const Cell& c, std::size_t dim) {
  if (c.dim() != dim) throw PreconditionError("cell " + to_string(c) + " is not " + std::to_string(dim) + "-dimensional");
  std::vector<Cell> out;
  out.reserve(2 * dim);
  for (Direction d : directions(dim)) out.push_back(c.step(d));
  return out;
}

/// The 2d(d-1) cells sharing a (d-2)-face but no (d-1)-face with `c`.
/// Ordered by the first axis step, then the second, both in direction order.
inline std::vector<Cell> edge_neighbors(const Cell& c, std::size_t dim) {
  if (dim < 2) throw PreconditionError("edge adjacency needs dimension >= 2");
  if (c.dim() != dim) throw PreconditionError("cell " + to_string(c) + " is not " + std::to_string(dim) + "-dimensional");
  std::vector<Cell> out;
  out.reserve(2 * dim * (dim - 1));
  for (Direction a : directions(dim)) {
    for (Direction b : directions(dim)) {
      if (b.axis <= a.axis) continue;
      out.push_back(c.step(a).step(b));
    }
  }
  return out;
}

/// Number of cells reachable from `start` through face-adjacent cells accepted by `member`.
template <typename Member>
std::size_t flood_count(const Cell& start, std::size_t dim, Member&& member) {
  CellSet seen{start};
  std::vector<Cell> stack{start};
  while (!stack.empty()) {
    Cell cur = std::move(stack.back());
    stack.pop_back();
    for (Direction d : directions(dim)) {
      Cell next = cur.step(d);
      if (!seen.contains(next) && member(next)) {
        seen.insert(next);
        stack.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

inline bool is_connected(const CellSet& cells, std::size_t dim) {
  if (cells.size() <= 1) return true;
  const Cell& start = *cells.begin();
  return flood_count(start, dim, [&](const Cell& c) { return cells.contains(c); }) == cells.size();
}

inline bool is_connected(const Configuration& v) { return is_connected(v.occupancy(), v.dim()); }

/// Face-connected components, each sorted, listed in order of their smallest cell.
inline std::vector<std::vector<Cell>> components(const CellSet& cells, std::size_t dim) {
  std::vector<std::vector<Cell>> out;
  CellSet seen;
  for (const Cell& root : sorted_cells(cells)) {
    if (seen.contains(root)) continue;
    std::vector<Cell> comp{root};
    seen.insert(root);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Direction d : directions(dim)) {
        Cell next = comp[i].step(d);
        if (cells.contains(next) && !seen.contains(next)) {
          seen.insert(next);
          comp.push_back(std::move(next));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// Occupancy bitmap over a fixed box with a one-cell margin, for repeated
/// connectivity checks while replaying many moves.
class OccupancyGrid {
 public:
  static constexpr std::uint64_t kMaxVolume = std::uint64_t{1} << 26;

  /// A grid whose interior covers every cell of `cells`, or nullopt if the box
  /// would be too large.
  template <typename Range>
  static std::optional<OccupancyGrid> covering(std::size_t dim, const Range& cells) {
    std::vector<Coord> lo(dim, std::numeric_limits<Coord>::max());
    std::vector<Coord> hi(dim, std::numeric_limits<Coord>::min());
    bool any = false;
    for (const Cell& c : cells) {
      if (c.dim() != dim) continue;
      any = true;
      for (std::size_t a = 0; a < dim; ++a) {
        lo[a] = std::min(lo[a], c[a]);
        hi[a] = std::max(hi[a], c[a]);
      }
    }
    if (!any) return std::nullopt;
    OccupancyGrid grid;
    grid.dim_ = dim;
    grid.lo_.resize(dim);
    grid.extent_.resize(dim);
    grid.stride_.resize(dim);
    std::uint64_t volume = 1;
    for (std::size_t a = dim; a-- > 0;) {
      Coord top = 0;
      if (__builtin_sub_overflow(lo[a], Coord{1}, &grid.lo_[a]) || __builtin_add_overflow(hi[a], Coord{1}, &top)) {
        return std::nullopt;
      }
      std::uint64_t span = static_cast<std::uint64_t>(top) - static_cast<std::uint64_t>(grid.lo_[a]) + 1;
      if (span > kMaxVolume || volume * span > kMaxVolume) return std::nullopt;
      grid.extent_[a] = span;
      grid.stride_[a] = volume;
      volume *= span;
    }
    grid.occupied_.assign(volume, 0);
    grid.stamp_.assign(volume, 0);
    return grid;
  }

  /// `c` must lie inside the covered box.
  void set(const Cell& c, bool occupied) { occupied_[index_of(c)] = occupied ? 1 : 0; }

  /// Whether the occupied cells face-connected to `start` number exactly `count`.
  bool connected_from(const Cell& start, std::size_t count) {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    std::uint64_t first = index_of(start);
    if (!occupied_[first]) return count == 0;
    stack_.assign(1, first);
    stamp_[first] = generation_;
    std::size_t reached = 0;
    while (!stack_.empty()) {
      std::uint64_t cur = stack_.back();
      stack_.pop_back();
      ++reached;
      for (std::uint64_t stride : stride_) {
        // The margin keeps every neighbour of an occupied cell inside the box.
        for (std::uint64_t next : {cur - stride, cur + stride}) {
          if (occupied_[next] && stamp_[next] != generation_) {
            stamp_[next] = generation_;
            stack_.push_back(next);
          }
        }
      }
    }
    return reached == count;
  }

 private:
  OccupancyGrid() = default;

  std::uint64_t index_of(const Cell& c) const {
    std::uint64_t idx = 0;
    for (std::size_t a = 0; a < dim_; ++a) idx += static_cast<std::uint64_t>(c[a] - lo_[a]) * stride_[a];
    return idx;
  }

  std::size_t dim_ = 0;
  std::vector<Coord> lo_;
  std::vector<std::uint64_t> extent_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::uint8_t> occupied_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::vector<std::uint64_t> stack_;
};

/// Labels every cell of the bounding box of V inflated by one cell on each side
/// as occupied, exterior (the unique infinite empty component), or hole.
///
/// Cells outside the box are exterior.
class ComplementMap {
 public:
  static constexpr std::uint64_t kMaxVolume = std::uint64_t{1} << 28;

  ComplementMap(const CellSet& cells, std::size_t dim) : dim_(dim) {
    if (cells.empty()) throw PreconditionError("complement of an empty configuration");
    lo_.assign(dim, std::numeric_limits<Coord>::max());
    std::vector<Coord> hi(dim, std::numeric_limits<Coord>::min());
    for (const Cell& c : cells) {
      if (c.dim() != dim) throw PreconditionError("cell " + to_string(c) + " has the wrong dimension");
      for (std::size_t a = 0; a < dim; ++a) {
        lo_[a] = std::min(lo_[a], c[a]);
        hi[a] = std::max(hi[a], c[a]);
      }
    }
    extent_.resize(dim);
    stride_.resize(dim);
    std::uint64_t volume = 1;
    for (std::size_t a = dim; a-- > 0;) {
      Coord lo = 0;
      Coord top = 0;
      if (__builtin_sub_overflow(lo_[a], Coord{1}, &lo) || __builtin_add_overflow(hi[a], Coord{1}, &top)) {
        throw OverflowError("inflating the bounding box overflows axis " + std::to_string(a + 1));
      }
      lo_[a] = lo;
      std::uint64_t span = static_cast<std::uint64_t>(top) - static_cast<std::uint64_t>(lo) + 1;
      if (span > kMaxVolume || volume * span > kMaxVolume) {
        throw Error("bounding box of the configuration exceeds " + std::to_string(kMaxVolume) + " cells");
      }
      extent_[a] = span;
      stride_[a] = volume;
      volume *= span;
    }
    label_.assign(volume, kEmpty);
    for (const Cell& c : cells) label_[index_of(c)] = kOccupied;

    infinite_size_ = fill(0, kExterior, nullptr);
    for (std::uint64_t i = 0; i < volume; ++i) {
      if (on_shell(i) && label_[i] != kExterior) {
        throw InternalError("inflated shell is not a single exterior component");
      }
    }
    for (std::uint64_t i = 0; i < volume; ++i) {
      if (label_[i] != kEmpty) continue;
      std::vector<std::uint64_t> members;
      fill(i, kHole, &members);
      std::sort(members.begin(), members.end());
      std::vector<Cell> hole;
      hole.reserve(members.size());
      for (std::uint64_t m : members) hole.push_back(cell_at(m));
      holes_.push_back(std::move(hole));
    }
  }

  std::size_t dim() const { return dim_; }
  std::uint64_t box_volume() const { return label_.size(); }
  std::uint64_t infinite_size() const { return infinite_size_; }
  /// Finite empty components, each sorted; listed in lexicographic order of their first cell.
  const std::vector<std::vector<Cell>>& holes() const { return holes_; }

  bool exterior(const Cell& c) const {
    auto idx = try_index(c);
    return !idx || label_[*idx] == kExterior;
  }
  bool in_hole(const Cell& c) const {
    auto idx = try_index(c);
    return idx && label_[*idx] == kHole;
  }

 private:
  static constexpr std::uint8_t kEmpty = 0;
  static constexpr std::uint8_t kOccupied = 1;
  static constexpr std::uint8_t kExterior = 2;
  static constexpr std::uint8_t kHole = 3;

  std::uint64_t index_of(const Cell& c) const {
    std::uint64_t idx = 0;
    for (std::size_t a = 0; a < dim_; ++a) idx += static_cast<std::uint64_t>(c[a] - lo_[a]) * stride_[a];
    return idx;
  }

  std::optional<std::uint64_t> try_index(const Cell& c) const {
    for (std::size_t a = 0; a < dim_; ++a) {
      if (c[a] < lo_[a]) return std::nullopt;
      if (static_cast<std::uint64_t>(c[a]) - static_cast<std::uint64_t>(lo_[a]) >= extent_[a]) return std::nullopt;
    }
    return index_of(c);
  }

  std::uint64_t coord_offset(std::uint64_t idx, std::size_t a) const { return (idx / stride_[a]) % extent_[a]; }

  bool on_shell(std::uint64_t idx) const {
    for (std::size_t a = 0; a < dim_; ++a) {
      std::uint64_t off = coord_offset(idx, a);
      if (off == 0 || off + 1 == extent_[a]) return true;
    }
    return false;
  }

  Cell cell_at(std::uint64_t idx) const {
    std::vector<Coord> coords(dim_);
    for (std::size_t a = 0; a < dim_; ++a) coords[a] = lo_[a] + static_cast<Coord>(coord_offset(idx, a));
    return Cell(std::move(coords));
  }

  std::uint64_t fill(std::uint64_t start, std::uint8_t mark, std::vector<std::uint64_t>* members) {
    std::vector<std::uint64_t> stack{start};
    label_[start] = mark;
    std::uint64_t count = 0;
    while (!stack.empty()) {
      std::uint64_t cur = stack.back();
      stack.pop_back();
      ++count;
      if (members) members->push_back(cur);
      for (std::size_t a = 0; a < dim_; ++a) {
        std::uint64_t off = coord_offset(cur, a);
        if (off > 0 && label_[cur - stride_[a]] == kEmpty) {
          label_[cur - stride_[a]] = mark;
          stack.push_back(cur - stride_[a]);
        }
        if (off + 1 < extent_[a] && label_[cur + stride_[a]] == kEmpty) {
          label_[cur + stride_[a]] = mark;
          stack.push_back(cur + stride_[a]);
        }
      }
    }
    return count;
  }

  std::size_t dim_;
  std::vector<Coord> lo_;
  std::vector<std::uint64_t> extent_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::uint8_t> label_;
  std::uint64_t infinite_size_ = 0;
  std::vector<std::vector<Cell>> holes_;
};

struct ComplementComponents {
  std::uint64_t box_volume = 0;
  std::uint64_t infinite_size = 0;  // cells of the infinite component inside the inflated box
  std::vector<std::vector<Cell>> holes;
};

inline ComplementComponents complement_components(const CellSet& cells, std::size_t dim) {
  ComplementMap map(cells, dim);
  return {map.box_volume(), map.infinite_size(), map.holes()};
}

inline ComplementComponents complement_components(const Configuration& v) {
  return complement_components(v.occupancy(), v.dim());
}

struct Face {
  Cell cell;
  Direction dir;
  friend bool operator==(const Face&, const Face&) = default;
};

/// Outer boundary of V: faces whose outward cell is exterior, the modules owning
/// them (B_out), and the holes of the complement.
struct BoundarySummary {
  std::vector<Face> faces;
  std::vector<Cell> modules;
  std::vector<std::vector<Cell>> holes;

  bool on_boundary(const Cell& c) const { return std::binary_search(modules.begin(), modules.end(), c); }
};

inline BoundarySummary outer_boundary(const CellSet& cells, std::size_t dim, const ComplementMap& map) {
  BoundarySummary out;
  for (const Cell& c : sorted_cells(cells)) {
    bool exposed = false;
    for (Direction d : directions(dim)) {
      if (map.exterior(c.step(d))) {
        out.faces.push_back({c, d});
        exposed = true;
      }
    }
    if (exposed) out.modules.push_back(c);
  }
  out.holes = map.holes();
  return out;
}

inline BoundarySummary outer_boundary(const CellSet& cells, std::size_t dim) {
  return outer_boundary(cells, dim, ComplementMap(cells, dim));
}

inline BoundarySummary outer_boundary(const Configuration& v) { return outer_boundary(v.occupancy(), v.dim()); }

}  // namespace hyperslide
