#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperslide/cell.hpp"
#include "hyperslide/configuration.hpp"
#include "hyperslide/error.hpp"
#include "hyperslide/kinematics.hpp"

namespace hyperslide {

namespace detail {

struct DataLine {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank lines not starting with '#', split on whitespace.
inline std::vector<DataLine> data_lines(std::istream& in) {
  std::vector<DataLine> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    DataLine data{number, {}};
    for (std::string w; words >> w;) data.tokens.push_back(w);
    out.push_back(std::move(data));
  }
  return out;
}

inline Coord parse_integer(std::string_view text, std::size_t line) {
  Coord value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

inline Cell parse_coords(std::string_view text, std::size_t dim, std::size_t line) {
  std::vector<Coord> coords;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    coords.push_back(parse_integer(text.substr(start, comma - start), line));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (coords.size() != dim) {
    throw ParseError(line, "'" + std::string(text) + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                               std::to_string(dim));
  }
  return Cell(std::move(coords));
}

inline std::pair<std::size_t, std::size_t> parse_header(const std::vector<DataLine>& lines, const char* what) {
  if (lines.empty()) throw ParseError(0, std::string("missing '") + what + "' header");
  const DataLine& h = lines.front();
  if (h.tokens.size() != 2) throw ParseError(h.number, std::string("header must be '") + what + "'");
  Coord d = parse_integer(h.tokens[0], h.number);
  Coord count = parse_integer(h.tokens[1], h.number);
  if (d < 2) throw ParseError(h.number, "dimension must be at least 2");
  if (count < 0) throw ParseError(h.number, "count must be non-negative");
  if (lines.size() - 1 != static_cast<std::size_t>(count)) {
    throw ParseError(h.number, "header announces " + std::to_string(count) + " entries but " +
                                   std::to_string(lines.size() - 1) + " follow");
  }
  return {static_cast<std::size_t>(d), static_cast<std::size_t>(count)};
}

}  // namespace detail

/// Reads the ".cfg" format: "d n" followed by n lines of d integers.
inline Configuration read_configuration(std::istream& in) {
  auto lines = detail::data_lines(in);
  auto [dim, n] = detail::parse_header(lines, "d n");
  if (n == 0) throw ParseError(lines.front().number, "a configuration needs at least one module");
  std::vector<Cell> cells;
  CellSet seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != dim) {
      throw ParseError(line.number, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(line.tokens.size()));
    }
    std::vector<Coord> coords;
    for (const auto& t : line.tokens) coords.push_back(detail::parse_integer(t, line.number));
    Cell c(std::move(coords));
    if (!seen.insert(c).second) throw ParseError(line.number, "duplicate cell " + to_string(c));
    cells.push_back(std::move(c));
  }
  return Configuration(dim, std::move(cells));
}

inline void write_configuration(std::ostream& out, const Configuration& v) {
  out << v.dim() << ' ' << v.size() << '\n';
  for (const Cell& c : v.cells()) {
    for (std::size_t a = 0; a < c.dim(); ++a) out << (a ? " " : "") << c[a];
    out << '\n';
  }
}

/// Moves of a ".trace" file and the dimension it declares.
struct TraceFile {
  std::size_t dim = 0;
  std::vector<Move> moves;
};

/// Reads the ".trace" format. Lines are "R from pivot to" or
/// "S from support1 support2 to" with comma-separated coordinates.
/// Witnesses without a rotation/slide shape are rejected here.
inline TraceFile read_trace(std::istream& in) {
  auto lines = detail::data_lines(in);
  auto [dim, m] = detail::parse_header(lines, "d m");
  TraceFile out{dim, {}};
  out.moves.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    auto coords = [&](std::size_t k) { return detail::parse_coords(t[k], dim, line.number); };
    Move move;
    if (t[0] == "R" && t.size() == 4) {
      move = Move::rotation(coords(1), coords(2), coords(3));
    } else if (t[0] == "S" && t.size() == 5) {
      move = Move::slide(coords(1), coords(2), coords(3), coords(4));
    } else {
      throw ParseError(line.number, "expected 'R from pivot to' or 'S from support1 support2 to'");
    }
    if (auto problem = shape_problem(move, dim); !problem.empty()) throw ParseError(line.number, problem);
    out.moves.push_back(std::move(move));
  }
  return out;
}

inline void write_trace(std::ostream& out, std::size_t dim, const std::vector<Move>& moves) {
  out << dim << ' ' << moves.size() << '\n';
  for (const Move& m : moves) {
    if (m.kind == MoveKind::Rotation) {
      out << "R " << to_string(m.from) << ' ' << to_string(m.pivot) << ' ' << to_string(m.to) << '\n';
    } else {
      out << "S " << to_string(m.from) << ' ' << to_string(m.supports[0]) << ' ' << to_string(m.supports[1]) << ' '
          << to_string(m.to) << '\n';
    }
  }
}

inline Configuration parse_configuration(const std::string& text) {
  std::istringstream in(text);
  return read_configuration(in);
}

inline TraceFile parse_trace(const std::string& text) {
  std::istringstream in(text);
  return read_trace(in);
}

inline Configuration load_configuration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_configuration(in);
}

inline TraceFile load_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_trace(in);
}

}  // namespace hyperslide
