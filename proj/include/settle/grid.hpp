#pragma once

// Configurations of houses on an m x n tract and the sunlight rules.
//
// Rows are numbered 1..m from the north, columns 1..n from the west. A house
// is blocked when its eastern, western and southern lots are all occupied.
// With a free border the off-grid lots to the east, south and west are open;
// with a bricked border they count as occupied. The northern border never
// matters.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include "row_ops.hpp"

namespace settle {

enum class BoundaryMode { free, bricked };

inline std::string_view to_string(BoundaryMode b) {
  return b == BoundaryMode::free ? "free" : "bricked";
}

inline BoundaryMode parse_boundary(std::string_view s) {
  if (s == "free") return BoundaryMode::free;
  if (s == "bricked") return BoundaryMode::bricked;
  throw std::invalid_argument("unknown boundary mode '" + std::string(s) + "'");
}

struct Dims {
  int rows = 1;
  int cols = 1;
  BoundaryMode boundary = BoundaryMode::free;

  bool bricked() const { return boundary == BoundaryMode::bricked; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

struct Coord {
  int i = 1;
  int j = 1;
  friend bool operator==(const Coord&, const Coord&) = default;
};

enum class Proposition { east, west, north, center };

using Rational = boost::rational<std::int64_t>;

class Configuration {
 public:
  using Row = boost::dynamic_bitset<std::uint64_t>;

  explicit Configuration(Dims dims) : dims_(validated(dims)) {
    rows_.assign(static_cast<std::size_t>(dims_.rows), Row(static_cast<std::size_t>(dims_.cols)));
  }

  Configuration(Dims dims, std::vector<Row> rows) : dims_(validated(dims)), rows_(std::move(rows)) {
    if (rows_.size() != static_cast<std::size_t>(dims_.rows))
      throw std::invalid_argument("row count does not match dims");
    for (const auto& r : rows_)
      if (r.size() != static_cast<std::size_t>(dims_.cols))
        throw std::invalid_argument("row width does not match dims");
  }

  // '#' is a house, '.' an empty lot.
  static Configuration from_strings(const std::vector<std::string>& lines,
                                    BoundaryMode boundary = BoundaryMode::free) {
    if (lines.empty()) throw std::invalid_argument("no rows");
    Dims d{static_cast<int>(lines.size()), static_cast<int>(lines.front().size()), boundary};
    std::vector<Row> rows;
    for (const auto& line : lines) {
      if (line.size() != lines.front().size()) throw std::invalid_argument("ragged rows");
      Row r(line.size());
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (line[c] == '#') r.set(c);
        else if (line[c] != '.') throw std::invalid_argument("unexpected cell character");
      }
      rows.push_back(std::move(r));
    }
    return Configuration(d, std::move(rows));
  }

  static Configuration full(Dims dims) {
    Configuration c(dims);
    for (auto& r : c.rows_) r.set();
    return c;
  }

  const Dims& dims() const { return dims_; }
  int rows() const { return dims_.rows; }
  int cols() const { return dims_.cols; }
  BoundaryMode boundary() const { return dims_.boundary; }

  bool contains(Coord at) const {
    return at.i >= 1 && at.i <= dims_.rows && at.j >= 1 && at.j <= dims_.cols;
  }

  void require(Coord at) const {
    if (!contains(at))
      throw std::out_of_range("coordinate (" + std::to_string(at.i) + "," + std::to_string(at.j) +
                              ") outside " + std::to_string(dims_.rows) + "x" +
                              std::to_string(dims_.cols) + " grid");
  }

  bool house(Coord at) const {
    require(at);
    return rows_[static_cast<std::size_t>(at.i - 1)].test(static_cast<std::size_t>(at.j - 1));
  }
  bool house(int i, int j) const { return house(Coord{i, j}); }

  // 1-based row access.
  const Row& row(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Row>& row_data() const { return rows_; }

  Configuration with_house(Coord at, bool occupied = true) const {
    require(at);
    Configuration c = *this;
    c.rows_[static_cast<std::size_t>(at.i - 1)].set(static_cast<std::size_t>(at.j - 1), occupied);
    return c;
  }

  Configuration with_boundary(BoundaryMode b) const {
    Configuration c = *this;
    c.dims_.boundary = b;
    return c;
  }

  // East-west reflection.
  Configuration mirrored() const {
    Configuration c(dims_);
    for (int i = 0; i < dims_.rows; ++i)
      for (int j = 0; j < dims_.cols; ++j)
        if (rows_[i].test(j)) c.rows_[i].set(dims_.cols - 1 - j);
    return c;
  }

  // Row strings, north first, '#' for houses.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& r : rows_) {
      std::string s(r.size(), '.');
      for (std::size_t c = 0; c < r.size(); ++c)
        if (r.test(c)) s[c] = '#';
      out.push_back(std::move(s));
    }
    return out;
  }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.dims_ == b.dims_ && a.rows_ == b.rows_;
  }

 private:
  static Dims validated(Dims d) {
    if (d.rows < 1 || d.cols < 1) throw std::invalid_argument("grid dimensions must be positive");
    return d;
  }

  Dims dims_;
  std::vector<Row> rows_;
};

namespace detail {

using Row = Configuration::Row;

inline Row below_of(const Configuration& c, int i) {
  return i < c.rows() ? c.row(i + 1) : south_border<Row>(c.cols(), c.dims().bricked());
}

inline Row above_of(const Configuration& c, int i) {
  return i > 1 ? c.row(i - 1) : row_traits<Row>::zero(c.cols());
}

inline PropositionMasks<Row> row_propositions(const Configuration& c, int i) {
  return propositions(above_of(c, i), c.row(i), below_of(c, i), c.cols(), c.dims().bricked());
}

}  // namespace detail

inline std::int64_t occupancy(const Configuration& c) {
  std::int64_t total = 0;
  for (const auto& r : c.row_data()) total += static_cast<std::int64_t>(r.count());
  return total;
}

inline Rational density(const Configuration& c) {
  return Rational(occupancy(c), static_cast<std::int64_t>(c.rows()) * c.cols());
}

inline bool is_blocked(const Configuration& c, Coord at) {
  if (!c.house(at)) return false;
  const auto blocked = blocked_houses(c.row(at.i), detail::below_of(c, at.i), c.cols(), c.dims().bricked());
  return blocked.test(static_cast<std::size_t>(at.j - 1));
}

inline std::vector<Coord> blocked_cells(const Configuration& c) {
  std::vector<Coord> out;
  for (int i = 1; i <= c.rows(); ++i) {
    const auto blocked = blocked_houses(c.row(i), detail::below_of(c, i), c.cols(), c.dims().bricked());
    for (auto b = blocked.find_first(); b != detail::Row::npos; b = blocked.find_next(b))
      out.push_back(Coord{i, static_cast<int>(b) + 1});
  }
  return out;
}

inline bool is_permissible(const Configuration& c) {
  for (int i = 1; i <= c.rows(); ++i)
    if (blocked_houses(c.row(i), detail::below_of(c, i), c.cols(), c.dims().bricked()).any())
      return false;
  return true;
}

inline bool proposition(const Configuration& c, Coord at, Proposition which) {
  c.require(at);
  const auto masks = detail::row_propositions(c, at.i);
  const auto col = static_cast<std::size_t>(at.j - 1);
  switch (which) {
    case Proposition::east: return masks.east.test(col);
    case Proposition::west: return masks.west.test(col);
    case Proposition::north: return masks.north.test(col);
    case Proposition::center: return masks.center.test(col);
  }
  return false;
}

// Whether a house can be built on the empty lot `at` without blocking
// itself or taking the last light from a neighbour.
inline bool is_addable(const Configuration& c, Coord at) {
  if (c.house(at)) throw std::invalid_argument("is_addable called on an occupied lot");
  return !detail::row_propositions(c, at.i).any().test(static_cast<std::size_t>(at.j - 1));
}

inline std::vector<Coord> addable_cells(const Configuration& c) {
  std::vector<Coord> out;
  for (int i = 1; i <= c.rows(); ++i) {
    const auto free = addable_lots(detail::above_of(c, i), c.row(i), detail::below_of(c, i), c.cols(),
                                   c.dims().bricked());
    for (auto b = free.find_first(); b != detail::Row::npos; b = free.find_next(b))
      out.push_back(Coord{i, static_cast<int>(b) + 1});
  }
  return out;
}

inline bool is_maximal(const Configuration& c) {
  if (!is_permissible(c)) return false;
  for (int i = 1; i <= c.rows(); ++i)
    if (addable_lots(detail::above_of(c, i), c.row(i), detail::below_of(c, i), c.cols(), c.dims().bricked())
            .any())
      return false;
  return true;
}

}  // namespace settle
