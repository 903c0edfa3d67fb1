#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"

namespace hyperslide {

enum class GenStyle { Blob, Tree, Serpentine };

inline const char* to_string(GenStyle s) {
  switch (s) {
    case GenStyle::Blob: return "blob";
    case GenStyle::Tree: return "tree";
    case GenStyle::Serpentine: return "serpentine";
  }
  return "unknown";
}

inline GenStyle parse_style(const std::string& name) {
  if (name == "blob") return GenStyle::Blob;
  if (name == "tree") return GenStyle::Tree;
  if (name == "serpentine") return GenStyle::Serpentine;
  throw PreconditionError("unknown style '" + name + "' (expected blob, tree or serpentine)");
}

struct GenSpec {
  std::size_t n = 1;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  GenStyle style = GenStyle::Blob;
};

namespace detail {

inline void grow_by_faces(std::set<Cell>& cells, std::size_t n, std::size_t d, std::mt19937_64& rng, bool prefer_leaves) {
  std::bernoulli_distribution leafward(0.85);
  while (cells.size() < n) {
    std::vector<Cell> faces;
    std::vector<Cell> leaf_faces;
    for (const Cell& c : cells) {
      for (Direction dir : directions(d)) {
        Cell out = c.step(dir);
        if (cells.contains(out)) continue;
        if (prefer_leaves) {
          int touching = 0;
          for (Direction k : directions(d)) touching += cells.contains(out.step(k)) ? 1 : 0;
          if (touching == 1) leaf_faces.push_back(out);
        }
        faces.push_back(std::move(out));
      }
    }
    const auto& pool = (prefer_leaves && !leaf_faces.empty() && leafward(rng)) ? leaf_faces : faces;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    cells.insert(pool[pick(rng)]);
  }
}

// Path running along +x2 in short runs, stepping sideways between runs along a
// random lateral axis; each axis alternates sign so the path stays narrow.
inline void grow_serpentine(std::set<Cell>& cells, std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> run_length(2, 4);
  std::uniform_int_distribution<std::size_t> lateral_pick(0, d - 2);
  std::map<std::size_t, int> next_sign;
  Cell head = *cells.begin();
  while (cells.size() < n) {
    for (int k = run_length(rng); k > 0 && cells.size() < n; --k) {
      head = head.step(Direction{1, 1});
      cells.insert(head);
    }
    if (cells.size() == n) break;
    std::size_t axis = lateral_pick(rng);
    if (axis >= 1) ++axis;  // skip x2
    int& sign = next_sign.try_emplace(axis, 1).first->second;
    head = head.step(Direction{axis, sign});
    sign = -sign;
    cells.insert(head);
  }
}

}  // namespace detail

/// Deterministic random connected configuration of exactly spec.n cells,
/// grown from the origin.
inline Configuration random_connected(const GenSpec& spec) {
  if (spec.n < 1) throw PreconditionError("generator needs n >= 1");
  if (spec.d < 2) throw PreconditionError("generator needs d >= 2");
  std::mt19937_64 rng(spec.seed);
  std::set<Cell> cells{Cell(std::vector<Coord>(spec.d, 0))};
  switch (spec.style) {
    case GenStyle::Blob: detail::grow_by_faces(cells, spec.n, spec.d, rng, false); break;
    case GenStyle::Tree: detail::grow_by_faces(cells, spec.n, spec.d, rng, true); break;
    case GenStyle::Serpentine: detail::grow_serpentine(cells, spec.n, spec.d, rng); break;
  }
  return Configuration(spec.d, std::vector<Cell>(cells.begin(), cells.end()));
}

}  // namespace hyperslide
