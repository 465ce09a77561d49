#pragma once

// Cell-by-cell reference implementations written straight from the
// definitions. They share nothing with the row-mask code in the library.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "settle/grid.hpp"

namespace oracle {

using settle::Configuration;
using settle::Coord;

// Occupancy of any lot; off-grid lots to the east, west and south follow the
// border. Row 0 (north of the grid) is never asked about.
inline bool occupied(const Configuration& c, int i, int j) {
  if (i > c.rows() || j < 1 || j > c.cols()) return c.dims().bricked();
  return c.house(i, j);
}

inline bool blocked(const Configuration& c, int i, int j) {
  return c.house(i, j) && occupied(c, i, j - 1) && occupied(c, i, j + 1) && occupied(c, i + 1, j);
}

inline bool permissible(const Configuration& c) {
  for (int i = 1; i <= c.rows(); ++i)
    for (int j = 1; j <= c.cols(); ++j)
      if (blocked(c, i, j)) return false;
  return true;
}

// Addable by definition: build the house and look again.
inline bool addable(const Configuration& c, int i, int j) {
  return !c.house(i, j) && permissible(c.with_house(Coord{i, j}));
}

inline bool maximal(const Configuration& c) {
  if (!permissible(c)) return false;
  for (int i = 1; i <= c.rows(); ++i)
    for (int j = 1; j <= c.cols(); ++j)
      if (addable(c, i, j)) return false;
  return true;
}

// The four reasons, read as "an on-grid occupied neighbour whose remaining
// two light sides are occupied" and "the lot itself would be enclosed".
inline bool east_reason(const Configuration& c, int i, int j) {
  return j + 1 <= c.cols() && c.house(i, j + 1) && occupied(c, i, j + 2) && occupied(c, i + 1, j + 1);
}
inline bool west_reason(const Configuration& c, int i, int j) {
  return j - 1 >= 1 && c.house(i, j - 1) && occupied(c, i, j - 2) && occupied(c, i + 1, j - 1);
}
inline bool north_reason(const Configuration& c, int i, int j) {
  return i - 1 >= 1 && c.house(i - 1, j) && occupied(c, i - 1, j - 1) && occupied(c, i - 1, j + 1);
}
inline bool center_reason(const Configuration& c, int i, int j) {
  return occupied(c, i, j - 1) && occupied(c, i, j + 1) && occupied(c, i + 1, j);
}

inline std::int64_t count(const Configuration& c) {
  std::int64_t k = 0;
  for (int i = 1; i <= c.rows(); ++i)
    for (int j = 1; j <= c.cols(); ++j) k += c.house(i, j);
  return k;
}

// The configuration whose cell p (row-major) is bit p of `bits`.
inline Configuration from_bits(settle::Dims d, std::uint64_t bits) {
  std::vector<std::string> rows;
  for (int i = 0; i < d.rows; ++i) {
    std::string r;
    for (int j = 0; j < d.cols; ++j) r.push_back((bits >> (i * d.cols + j)) & 1u ? '#' : '.');
    rows.push_back(r);
  }
  return Configuration::from_strings(rows, d.boundary);
}

inline Configuration random_config(settle::Dims d, std::mt19937_64& rng, double p = 0.6) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> rows;
  for (int i = 0; i < d.rows; ++i) {
    std::string r;
    for (int j = 0; j < d.cols; ++j) r.push_back(coin(rng) ? '#' : '.');
    rows.push_back(r);
  }
  return Configuration::from_strings(rows, d.boundary);
}

}  // namespace oracle
