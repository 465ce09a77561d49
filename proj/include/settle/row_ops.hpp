#pragma once

// Whole-row shift-and-intersect primitives shared by the configuration
// checker, the pattern generators and the exact solvers.
//
// A row is a set of occupied columns. Column j (1-based) lives at bit j-1.
// Every primitive takes the row width and whether off-grid cells to the
// east, west and south count as occupied (bricked border) or open.

#include <bit>
#include <concepts>
#include <cstdint>
#include <limits>

#include <boost/dynamic_bitset.hpp>

namespace settle {

template <class Row>
struct row_traits;

template <std::unsigned_integral U>
struct row_traits<U> {
  static constexpr int capacity = std::numeric_limits<U>::digits;

  static U full(int n) { return n >= capacity ? ~U{0} : static_cast<U>((U{1} << n) - 1); }
  static U zero(int) { return U{0}; }
  static U shl1(U r, int n) { return static_cast<U>(r << 1) & full(n); }
  static U shr1(U r, int) { return static_cast<U>(r >> 1); }
  static U complement(U r, int n) { return static_cast<U>(~r) & full(n); }
  static bool test(U r, int col) { return (r >> col) & U{1}; }
  static void set(U& r, int col) { r |= static_cast<U>(U{1} << col); }
  static bool none(U r) { return r == 0; }
  static int count(U r) { return std::popcount(r); }
};

template <class Block, class Alloc>
struct row_traits<boost::dynamic_bitset<Block, Alloc>> {
  using R = boost::dynamic_bitset<Block, Alloc>;

  static R full(int n) { return R(static_cast<std::size_t>(n)).set(); }
  static R zero(int n) { return R(static_cast<std::size_t>(n)); }
  static R shl1(const R& r, int) { return r << 1; }
  static R shr1(const R& r, int) { return r >> 1; }
  static R complement(const R& r, int) { return ~r; }
  static bool test(const R& r, int col) { return r.test(static_cast<std::size_t>(col)); }
  static void set(R& r, int col) { r.set(static_cast<std::size_t>(col)); }
  static bool none(const R& r) { return r.none(); }
  static int count(const R& r) { return static_cast<int>(r.count()); }
};

// Bit j holds the state of column j-1; the off-grid column 0 takes `bricked`.
template <class Row>
Row west_of(const Row& r, int n, bool bricked) {
  using T = row_traits<Row>;
  Row w = T::shl1(r, n);
  if (bricked) T::set(w, 0);
  return w;
}

// Bit j holds the state of column j+1; the off-grid column n+1 takes `bricked`.
template <class Row>
Row east_of(const Row& r, int n, bool bricked) {
  using T = row_traits<Row>;
  Row e = T::shr1(r, n);
  if (bricked) T::set(e, n - 1);
  return e;
}

// Houses whose eastern and western neighbours are both occupied.
template <class Row>
Row flanked(const Row& r, int n, bool bricked) {
  return west_of(r, n, bricked) & r & east_of(r, n, bricked);
}

// The virtual row south of the grid.
template <class Row>
Row south_border(int n, bool bricked) {
  return bricked ? row_traits<Row>::full(n) : row_traits<Row>::zero(n);
}

// Houses in `cur` that are blocked from sunlight given the row `below`.
template <class Row>
Row blocked_houses(const Row& cur, const Row& below, int n, bool bricked) {
  return flanked(cur, n, bricked) & below;
}

// Per-column truth of the four reasons an empty lot cannot take a house.
// `above` is the zero row when the lot has no northern neighbour. Off-grid
// terms take the border value; a proposition about an off-grid neighbour is
// false.
template <class Row>
struct PropositionMasks {
  Row east;    // sole light source of its eastern neighbour
  Row west;    // sole light source of its western neighbour
  Row north;   // sole light source of its northern neighbour
  Row center;  // the lot itself would be blocked

  Row any() const { return east | west | north | center; }
};

template <class Row>
PropositionMasks<Row> propositions(const Row& above, const Row& cur, const Row& below, int n,
                                   bool bricked) {
  using T = row_traits<Row>;
  const Row w = west_of(cur, n, bricked);
  const Row e = east_of(cur, n, bricked);
  const Row supported = cur & below;
  return PropositionMasks<Row>{
      .east = T::shr1(supported & e, n),
      .west = T::shl1(supported & w, n),
      .north = flanked(above, n, bricked),
      .center = w & e & below,
  };
}

// Empty lots of `cur` that could take a house without blocking anyone.
template <class Row>
Row addable_lots(const Row& above, const Row& cur, const Row& below, int n, bool bricked) {
  using T = row_traits<Row>;
  return T::complement(cur, n) & T::complement(propositions(above, cur, below, n, bricked).any(), n);
}

// Lexicographic order on row strings read west to east, empty before house.
template <std::unsigned_integral U>
constexpr bool row_lex_less(U a, U b) {
  const U diff = a ^ b;
  if (diff == 0) return false;
  const U lowest = diff & static_cast<U>(-diff);
  return (a & lowest) == 0;
}

}  // namespace settle
