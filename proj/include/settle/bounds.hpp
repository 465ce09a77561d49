#pragma once

// Analytic bounds on the extremal occupancies of maximal configurations and
// an empirical audit of the structural lemmas behind them. All arithmetic is
// exact.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grid.hpp"

namespace settle {

namespace detail {

inline void require_bound_dims(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("bounds need m, n >= 2, got " + std::to_string(m) + "x" + std::to_string(n));
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div_signed(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace detail

// Every empty lot lights at most three houses: mn/2 <= |C| <= 3mn/4 + (m-1)/2 + n/4.
inline std::pair<Rational, Rational> crude_bounds(int m, int n) {
  detail::require_bound_dims(m, n);
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  return {Rational(mn, 2), Rational(3 * mn, 4) + Rational(m - 1, 2) + Rational(n, 4)};
}

// Lowest occupancy of a maximal configuration; attained by the rake-stripe layout.
inline std::int64_t i_lower_bound(int m, int n) {
  detail::require_bound_dims(m, n);
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  if (nn % 4 == 0) return mm * nn / 2 + 2;
  if (nn % 4 == 2) return mm * (nn + 2) / 2;
  return mm * (nn + 1) / 2 + 1;
}

// Injection from 1x4 blocks above the bottom row (and 2x3 blocks of the
// eastern three columns when n = 3 mod 4) into empty lots.
inline std::int64_t e_upper_block(int m, int n) {
  detail::require_bound_dims(m, n);
  std::int64_t bound = static_cast<std::int64_t>(m) * n - static_cast<std::int64_t>(n / 4) * (m - 1);
  if (n % 4 == 3) bound -= m / 2;
  return bound;
}

// Most houses a row can hold when the row below holds k of n.
inline std::int64_t row_above_cap(int k, int n) {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("row_above_cap needs 0 <= k <= n, got k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
  return n - k / 3;
}

namespace detail {

inline std::int64_t recurrence_step(std::int64_t n, std::int64_t prev, std::int64_t prev2) {
  return n + ceil_div_signed(2 * prev + prev2, 3);
}

}  // namespace detail

// R_{0,n} = 0, R_{1,n} = n, R_{m,n} = n + ceil((2 R_{m-1,n} + R_{m-2,n}) / 3).
inline std::int64_t r_recurrence(int m, int n) {
  if (m < 0 || n < 1)
    throw std::invalid_argument("r_recurrence needs m >= 0 and n >= 1");
  if (m == 0) return 0;
  std::int64_t prev2 = 0;
  std::int64_t prev = n;
  for (int r = 2; r <= m; ++r) {
    const std::int64_t next = detail::recurrence_step(n, prev, prev2);
    prev2 = prev;
    prev = next;
  }
  return prev;
}

// The recurrence restarted from known upper bounds. The two highest
// consecutive seeded row counts not exceeding m are used as the starting pair;
// lower seeds only serve as their own values.
inline std::int64_t seeded_recurrence(int n, const std::map<int, std::int64_t>& seeds, int m) {
  if (n < 1) throw std::invalid_argument("seeded_recurrence needs n >= 1");
  if (auto it = seeds.find(m); it != seeds.end()) return it->second;
  int top = -1;
  for (const auto& [rows, value] : seeds)
    if (rows <= m && rows >= 1 && seeds.count(rows - 1)) top = rows;
  if (top < 0)
    throw std::invalid_argument("seeded_recurrence needs two consecutive seeded row counts at or below m=" +
                                std::to_string(m));
  std::int64_t prev2 = seeds.at(top - 1);
  std::int64_t prev = seeds.at(top);
  for (int r = top + 1; r <= m; ++r) {
    const std::int64_t next = detail::recurrence_step(n, prev, prev2);
    prev2 = prev;
    prev = next;
  }
  return prev;
}

struct BoundsReport {
  Dims dims;
  Rational crude_lower;
  Rational crude_upper;
  std::int64_t i_lower = 0;
  std::int64_t e_upper_block = 0;
  std::int64_t e_upper_recurrence = 0;

  // Where each bound comes from.
  static constexpr const char* crude_source = "empty-lot light counting";
  static constexpr const char* i_lower_source = "border strips plus southern rows";
  static constexpr const char* block_source = "1x4 block injection";
  static constexpr const char* recurrence_source = "row-above cap recurrence";
};

inline BoundsReport bounds_report(int m, int n) {
  auto [lo, hi] = crude_bounds(m, n);
  BoundsReport r;
  r.dims = Dims{m, n, BoundaryMode::free};
  r.crude_lower = lo;
  r.crude_upper = hi;
  r.i_lower = i_lower_bound(m, n);
  r.e_upper_block = e_upper_block(m, n);
  r.e_upper_recurrence = r_recurrence(m, n);
  return r;
}

struct LemmaVerdict {
  bool applicable = false;
  bool passed = true;
  std::string detail;  // first violation, empty when passed
};

struct LemmaAudit {
  LemmaVerdict two_southern_rows;  // at least n+2 houses in rows m-1, m
  LemmaVerdict border_width2;      // width-2 border strips hold >= l houses in depth l
  LemmaVerdict border_width3;      // width-3 border strips hold >= 2l houses
  LemmaVerdict width4_strips;      // every width-4 strip holds >= 2l houses

  bool all_passed() const {
    return two_southern_rows.passed && border_width2.passed && border_width3.passed && width4_strips.passed;
  }
};

namespace detail {

// Checks every strip of columns [first, first+width) from the north down to
// each depth l against `per_row * l`.
inline void audit_strip(const Configuration& c, int first, int width, int per_row, LemmaVerdict& v) {
  std::int64_t houses = 0;
  for (int l = 1; l <= c.rows(); ++l) {
    for (int j = first; j < first + width; ++j) houses += c.house(l, j) ? 1 : 0;
    if (houses < static_cast<std::int64_t>(per_row) * l) {
      v.passed = false;
      v.detail = "columns " + std::to_string(first) + ".." + std::to_string(first + width - 1) + " depth " +
                 std::to_string(l) + " hold " + std::to_string(houses);
      return;
    }
  }
}

}  // namespace detail

inline LemmaAudit audit_structural_lemmas(const Configuration& c) {
  if (c.dims().bricked()) throw std::invalid_argument("structural lemmas assume a free border");
  if (!is_maximal(c)) throw std::invalid_argument("structural lemmas apply to maximal configurations only");
  const int m = c.rows();
  const int n = c.cols();
  LemmaAudit a;
  if (m < 2 || n < 2) return a;

  a.two_southern_rows.applicable = true;
  const std::int64_t south = static_cast<std::int64_t>(c.row(m).count() + c.row(m - 1).count());
  if (south < n + 2) {
    a.two_southern_rows.passed = false;
    a.two_southern_rows.detail = "rows " + std::to_string(m - 1) + "," + std::to_string(m) + " hold " +
                                 std::to_string(south);
  }

  a.border_width2.applicable = true;
  detail::audit_strip(c, 1, 2, 1, a.border_width2);
  if (a.border_width2.passed) detail::audit_strip(c, n - 1, 2, 1, a.border_width2);

  if (n >= 3) {
    a.border_width3.applicable = true;
    detail::audit_strip(c, 1, 3, 2, a.border_width3);
    if (a.border_width3.passed) detail::audit_strip(c, n - 2, 3, 2, a.border_width3);
  }

  if (n >= 4) {
    a.width4_strips.applicable = true;
    for (int t = 1; t <= n - 3 && a.width4_strips.passed; ++t) detail::audit_strip(c, t, 4, 2, a.width4_strips);
  }
  return a;
}

}  // namespace settle
