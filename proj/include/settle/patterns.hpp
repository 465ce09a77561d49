#pragma once

// Named periodic patterns restricted to finite grids, their closed-form
// occupancy functions, and the brick/comb segment combination search.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"

namespace settle {

enum class PatternKind { brick, comb, rake, stripe, rake_stripe, check };

inline constexpr std::array<PatternKind, 6> all_pattern_kinds = {
    PatternKind::brick, PatternKind::comb,        PatternKind::rake,
    PatternKind::stripe, PatternKind::rake_stripe, PatternKind::check};

inline std::string_view to_string(PatternKind k) {
  switch (k) {
    case PatternKind::brick: return "brick";
    case PatternKind::comb: return "comb";
    case PatternKind::rake: return "rake";
    case PatternKind::stripe: return "stripe";
    case PatternKind::rake_stripe: return "rake-stripe";
    case PatternKind::check: return "check";
  }
  return "?";
}

inline std::optional<PatternKind> parse_pattern_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (auto k : all_pattern_kinds)
    if (to_string(k) == lower) return k;
  return std::nullopt;
}

namespace detail {

inline void require_pattern_dims(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("pattern dimensions must be at least 2x2, got " + std::to_string(m) + "x" +
                                std::to_string(n));
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// Houses in one rake row sitting above a full row: n/2 plus the eastern remainder.
inline std::int64_t rake_row_count(std::int64_t n) {
  switch (n % 4) {
    case 0: return n / 2;
    case 1: return (n - 1) / 2 + 1;
    case 2: return (n - 2) / 2 + 2;
    default: return (n - 3) / 2 + 2;
  }
}

}  // namespace detail

inline std::int64_t pattern_occupancy(PatternKind kind, int rows, int cols) {
  detail::require_pattern_dims(rows, cols);
  const std::int64_t m = rows;
  const std::int64_t n = cols;
  using detail::ceil_div;
  switch (kind) {
    case PatternKind::brick: {
      if (n == 2) return 2 * m;
      const std::int64_t half_cols = n / 2;
      std::int64_t total = m * ceil_div(n, 2) + ceil_div(half_cols, 2) * ceil_div(m, 2) + (half_cols / 2) * (m / 2);
      if (n % 4 == 0 || (n % 4 == 2 && m % 2 == 0)) ++total;
      return total;
    }
    case PatternKind::comb:
      switch (n % 3) {
        case 0: return n + (m - 1) * (2 * n / 3);
        case 1: return n + (m - 1) * (2 * (n - 1) / 3 + 1);
        default: return n + (m - 1) * (2 * (n - 2) / 3 + 2);
      }
    case PatternKind::rake:
      return n + (m - 1) * detail::rake_row_count(n);
    case PatternKind::stripe:
      // Odd m: the top row is a rake row with no border houses of its own.
      if (m % 2 == 0) return 2 * m + (m / 2) * (n - 2);
      return 2 * (m - 1) + (m / 2) * (n - 2) + detail::rake_row_count(n);
    case PatternKind::rake_stripe:
      return n + 2 + (m - 2) * detail::rake_row_count(n);
    case PatternKind::check:
      return 2 * (m - 1) + n + ((m - 1) / 2) * ceil_div(n - 2, 2) + ceil_div(m - 1, 2) * ((n - 2) / 2);
  }
  return 0;
}

// Adds every addable lot, scanning north to south and west to east. Starting
// from a permissible configuration the result is maximal: the reasons a lot
// cannot be filled only accumulate as houses are added.
inline Configuration greedy_complete(const Configuration& start) {
  if (!is_permissible(start)) throw std::invalid_argument("greedy completion needs a permissible start");
  const int m = start.rows();
  const int n = start.cols();
  const bool bricked = start.dims().bricked();
  using Row = Configuration::Row;
  std::vector<Row> rows = start.row_data();
  const Row none = row_traits<Row>::zero(n);
  const Row south = south_border<Row>(n, bricked);
  for (int i = 0; i < m; ++i) {
    const Row& above = i > 0 ? rows[i - 1] : none;
    const Row& below = i + 1 < m ? rows[i + 1] : south;
    for (int c = 0; c < n; ++c) {
      if (rows[i].test(c)) continue;
      if (addable_lots(above, rows[i], below, n, bricked).test(c)) rows[i].set(c);
    }
  }
  return Configuration(start.dims(), std::move(rows));
}

namespace detail {

using Row = Configuration::Row;
using Grid = std::vector<Row>;

inline Grid empty_grid(int m, int n) { return Grid(static_cast<std::size_t>(m), Row(static_cast<std::size_t>(n))); }

// Columns j with j mod 3 == empty_residue are empty, the rest full.
inline Row comb_row(int n, int empty_residue) {
  Row r(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    if ((c + 1) % 3 != empty_residue) r.set(c);
  return r;
}

// Teeth at columns 4k+2 and 4k+3; completion fills the eastern remainder.
inline Row rake_row(int n) {
  Row r(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c)
    if ((c + 1) % 4 == 2 || (c + 1) % 4 == 3) r.set(c);
  return r;
}

inline Row border_row(int n) {
  Row r(static_cast<std::size_t>(n));
  r.set(0);
  r.set(n - 1);
  return r;
}

// Odd columns full; half columns alternate between odd and even rows. When m
// is even and n = 0 mod 4 the window shifts one column so the south-east
// corner becomes free for completion.
inline Grid brick_base(int m, int n) {
  const int shift = (m % 2 == 0 && n % 4 == 0) ? 3 : 2;
  Grid g = empty_grid(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      const int phase = (j + shift) % 4;
      const bool empty = (i % 2 == 0 && phase == 0) || (i % 2 == 1 && phase == 2);
      if (!empty) g[i - 1].set(j - 1);
    }
  return g;
}

inline Grid comb_base(int m, int n, int empty_residue) {
  Grid g = empty_grid(m, n);
  for (int i = 0; i + 1 < m; ++i) g[i] = comb_row(n, empty_residue);
  g[m - 1].set();
  return g;
}

inline Grid rake_base(int m, int n) {
  Grid g = empty_grid(m, n);
  for (int i = 0; i + 1 < m; ++i) g[i] = rake_row(n);
  g[m - 1].set();
  return g;
}

// Full rows alternate with border-only rows, starting full at the top; odd m
// puts a rake row above them.
inline Grid stripe_base(int m, int n) {
  Grid g = empty_grid(m, n);
  int first = 0;
  if (m % 2 == 1) {
    g[0] = rake_row(n);
    first = 1;
  }
  for (int i = first; i < m; ++i) {
    if ((i - first) % 2 == 0) g[i].set();
    else g[i] = border_row(n);
  }
  return g;
}

inline Grid rake_stripe_base(int m, int n) {
  Grid g = empty_grid(m, n);
  for (int i = 0; i + 2 < m; ++i) g[i] = rake_row(n);
  g[m - 2].set();
  g[m - 1] = border_row(n);
  return g;
}

inline Grid check_base(int m, int n) {
  Grid g = empty_grid(m, n);
  for (int i = 1; i < m; ++i)
    for (int j = 1; j <= n; ++j)
      if (j == 1 || j == n || (m - i + j) % 2 == 0) g[i - 1].set(j - 1);
  g[m - 1].set();
  return g;
}

}  // namespace detail

inline Configuration generate_pattern(PatternKind kind, int m, int n) {
  detail::require_pattern_dims(m, n);
  detail::Grid base;
  switch (kind) {
    case PatternKind::brick: base = detail::brick_base(m, n); break;
    case PatternKind::comb: base = detail::comb_base(m, n, 0); break;
    case PatternKind::rake: base = detail::rake_base(m, n); break;
    case PatternKind::stripe: base = detail::stripe_base(m, n); break;
    case PatternKind::rake_stripe: base = detail::rake_stripe_base(m, n); break;
    case PatternKind::check: base = detail::check_base(m, n); break;
  }
  Configuration c = greedy_complete(Configuration(Dims{m, n, BoundaryMode::free}, std::move(base)));
  const auto expected = pattern_occupancy(kind, m, n);
  if (occupancy(c) != expected || !is_maximal(c))
    throw std::logic_error(std::string(to_string(kind)) + " generator disagrees with its occupancy function at " +
                           std::to_string(m) + "x" + std::to_string(n) + ": built " +
                           std::to_string(occupancy(c)) + ", expected " + std::to_string(expected));
  return c;
}

enum class SegmentKind { brick_block, comb_block };

struct Segment {
  SegmentKind kind = SegmentKind::brick_block;
  int width = 2;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentSpec {
  std::vector<Segment> segments;

  int total_width() const {
    int w = 0;
    for (const auto& s : segments) w += s.width;
    return w;
  }
  friend bool operator==(const SegmentSpec&, const SegmentSpec&) = default;
};

inline std::string to_string(const SegmentSpec& spec) {
  std::string out;
  for (const auto& s : spec.segments) {
    if (!out.empty()) out += ' ';
    out += (s.kind == SegmentKind::brick_block ? "brick:" : "comb:") + std::to_string(s.width);
  }
  return out;
}

struct BrickCombResult {
  Configuration config;
  SegmentSpec spec;
};

// Lays segments side by side: a brick block is the brick base of its own
// width; a comb block starts with its empty column (".##") and has a full
// bottom row. Impermissible seams are rejected, survivors are completed
// greedily.
inline std::optional<Configuration> build_segments(int m, const SegmentSpec& spec) {
  const int n = spec.total_width();
  detail::Grid g = detail::empty_grid(m, n);
  int offset = 0;
  for (const auto& seg : spec.segments) {
    if (seg.width < 2) throw std::invalid_argument("segment widths must be at least 2");
    const detail::Grid block = seg.kind == SegmentKind::brick_block ? detail::brick_base(m, seg.width)
                                                                    : detail::comb_base(m, seg.width, 1);
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < seg.width; ++c)
        if (block[i].test(c)) g[i].set(offset + c);
    offset += seg.width;
  }
  Configuration start(Dims{m, n, BoundaryMode::free}, std::move(g));
  if (!is_permissible(start)) return std::nullopt;
  return greedy_complete(start);
}

// Exhaustive over segment lists with at most `max_segments` blocks; the
// first candidate (widths ascending lexicographically, brick before comb)
// reaching the best occupancy wins.
inline BrickCombResult brick_comb_best(int m, int n, int max_segments) {
  detail::require_pattern_dims(m, n);
  if (max_segments < 1) throw std::invalid_argument("max_segments must be at least 1");
  std::optional<BrickCombResult> best;
  std::vector<int> widths;

  auto try_widths = [&]() {
    const std::size_t k = widths.size();
    for (std::uint32_t kinds = 0; kinds < (1u << k); ++kinds) {
      SegmentSpec spec;
      for (std::size_t s = 0; s < k; ++s)
        spec.segments.push_back(
            {(kinds >> (k - 1 - s)) & 1u ? SegmentKind::comb_block : SegmentKind::brick_block, widths[s]});
      auto built = build_segments(m, spec);
      if (!built) continue;
      if (!best || occupancy(*built) > occupancy(best->config)) best = BrickCombResult{*built, spec};
    }
  };

  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      try_widths();
      return;
    }
    if (static_cast<int>(widths.size()) == max_segments) return;
    for (int w = 2; w <= remaining; ++w) {
      if (remaining - w == 1) continue;
      widths.push_back(w);
      self(self, remaining - w);
      widths.pop_back();
    }
  };
  recurse(recurse, n);
  if (!best) throw std::logic_error("no permissible segment layout");
  return *best;
}

}  // namespace settle
