#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/error.hpp"

namespace hyperslide {

/// A finite set of occupied cells in a fixed dimension d >= 2.
///
/// Immutable value. Cells are kept sorted lexicographically alongside a hash
/// index for membership queries.
class Configuration {
 public:
  Configuration(std::size_t dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
    if (dim_ < 2) throw PreconditionError("dimension must be at least 2, got " + std::to_string(dim_));
    if (cells_.empty()) throw PreconditionError("a configuration needs at least one module");
    for (const Cell& c : cells_) {
      if (c.dim() != dim_) {
        throw PreconditionError("cell " + to_string(c) + " does not have " + std::to_string(dim_) +
                                " coordinates");
      }
    }
    std::sort(cells_.begin(), cells_.end());
    auto dup = std::adjacent_find(cells_.begin(), cells_.end());
    if (dup != cells_.end()) throw PreconditionError("duplicate cell " + to_string(*dup));
    index_.reserve(cells_.size());
    index_.insert(cells_.begin(), cells_.end());
  }

  Configuration(std::size_t dim, const CellSet& cells)
      : Configuration(dim, std::vector<Cell>(cells.begin(), cells.end())) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const CellSet& occupancy() const { return index_; }
  bool contains(const Cell& c) const { return index_.contains(c); }

  /// Lexicographically greatest cell: maximal x1, ties broken by the remaining axes.
  const Cell& extremal() const { return cells_.back(); }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.dim_ == b.dim_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t dim_;
  std::vector<Cell> cells_;
  CellSet index_;
};

}  // namespace hyperslide
