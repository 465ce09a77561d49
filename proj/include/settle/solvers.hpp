#pragma once

// Exact extremal occupancies.
//
// solve_max: the largest permissible configuration (E). Rows are processed
// south to north; the value of a row profile is its popcount plus the best
// suffix whose next row avoids the profile's flanked houses, read off a
// subset-maximum transform of the suffix layer. About n 2^n work per row.
//
// solve_min_maximal: the smallest maximal configuration (I). State is the
// pair (row above, current row). Every empty lot of the current row needs a
// reason it cannot be filled; the north reason depends only on the row above,
// the others on the current and next rows, so for each current row the
// leftover demand D(cur, next) must fit inside flanked(above). A subset-min
// transform over D gives about n 4^n work per row.
//
// Both keep all layers when a witness is requested and then walk north to
// south taking the first row profile in cell-string order, which yields the
// lexicographically smallest optimal configuration ('.' before '#').

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grid.hpp"
#include "row_ops.hpp"

namespace settle {

enum class Objective { max_permissible, min_maximal };

inline std::string_view to_string(Objective o) {
  return o == Objective::max_permissible ? "max" : "min";
}

inline Objective parse_objective(std::string_view s) {
  if (s == "max") return Objective::max_permissible;
  if (s == "min") return Objective::min_maximal;
  throw std::invalid_argument("unknown objective '" + std::string(s) + "' (expected max or min)");
}

// Raised when a request is over a column cap, the state-memory budget or
// the wall-time budget.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveLimits {
  std::optional<int> max_cols;  // beats SETTLE_MAX_COLS and the default cap
  std::uint64_t max_state_bytes = std::uint64_t{1} << 30;
  std::optional<std::chrono::milliseconds> max_wall;
};

struct SolveRequest {
  Dims dims;
  Objective objective = Objective::max_permissible;
  bool want_witness = true;
  SolveLimits limits;
};

struct SolveStats {
  std::uint64_t states = 0;
  std::uint64_t transitions = 0;
  double wall_seconds = 0.0;
};

struct SolveResult {
  std::int64_t optimum = 0;
  std::optional<Configuration> witness;
  SolveStats stats;
};

inline int default_col_cap(Objective o) { return o == Objective::max_permissible ? 24 : 12; }

// Widest grid each dynamic program can index at all. A single row needs no
// pair states.
inline int hard_col_cap(const SolveRequest& req) {
  return req.objective == Objective::max_permissible || req.dims.rows == 1 ? 30 : 15;
}

inline int col_cap(const SolveRequest& req) {
  if (req.limits.max_cols) return *req.limits.max_cols;
  if (const char* env = std::getenv("SETTLE_MAX_COLS"); env && *env) {
    int v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 1)
      throw std::invalid_argument("SETTLE_MAX_COLS must be a positive integer, got '" + std::string(s) + "'");
    return v;
  }
  return default_col_cap(req.objective);
}

namespace detail {

class Stopwatch {
 public:
  explicit Stopwatch(std::optional<std::chrono::milliseconds> limit) : limit_(limit) {}

  void check() const {
    if (limit_ && std::chrono::steady_clock::now() - start_ > *limit_)
      throw limit_error("wall-time limit of " + std::to_string(limit_->count()) + " ms exceeded");
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::optional<std::chrono::milliseconds> limit_;
};

inline void check_request(const SolveRequest& req) {
  const int cap = std::min(col_cap(req), hard_col_cap(req));
  if (req.dims.rows < 1 || req.dims.cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (req.dims.cols > cap)
    throw limit_error(std::to_string(req.dims.cols) + " columns exceeds the " + std::string(to_string(req.objective)) +
                      " solver cap of " + std::to_string(cap));
}

inline void check_bytes(const SolveRequest& req, std::uint64_t bytes) {
  if (bytes > req.limits.max_state_bytes)
    throw limit_error("state tables need " + std::to_string(bytes) + " bytes, limit is " +
                      std::to_string(req.limits.max_state_bytes));
}

inline std::uint64_t reverse_bits(std::uint64_t x, int n) {
  std::uint64_t r = 0;
  for (int b = 0; b < n; ++b) r |= ((x >> b) & 1u) << (n - 1 - b);
  return r;
}

inline Configuration to_configuration(const Dims& dims, const std::vector<std::uint64_t>& masks) {
  std::vector<Configuration::Row> rows;
  rows.reserve(masks.size());
  for (auto mask : masks) {
    Configuration::Row r(static_cast<std::size_t>(dims.cols));
    for (int b = 0; b < dims.cols; ++b)
      if ((mask >> b) & 1u) r.set(static_cast<std::size_t>(b));
    rows.push_back(std::move(r));
  }
  return Configuration(dims, std::move(rows));
}

using Mask = std::uint32_t;

// Row profiles in cell-string order, '.' before '#'.
inline std::vector<Mask> lex_order(int n) {
  std::vector<Mask> order(std::size_t{1} << n);
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<Mask>(reverse_bits(k, n));
  return order;
}

}  // namespace detail

inline SolveResult solve_max(const SolveRequest& req) {
  using detail::Mask;
  if (req.objective != Objective::max_permissible) throw std::invalid_argument("solve_max needs the max objective");
  detail::check_request(req);
  const int m = req.dims.rows;
  const int n = req.dims.cols;
  const bool bricked = req.dims.bricked();
  const std::size_t states = std::size_t{1} << n;
  const std::size_t layers = req.want_witness ? static_cast<std::size_t>(m) : 1;
  detail::check_bytes(req, (layers + 1) * states * sizeof(std::int16_t) + states * sizeof(Mask));

  detail::Stopwatch clock(req.limits.max_wall);
  using T = row_traits<Mask>;
  const Mask full = T::full(n);
  const Mask south = south_border<Mask>(n, bricked);

  std::vector<Mask> flank(states);
  for (std::size_t s = 0; s < states; ++s) flank[s] = flanked(static_cast<Mask>(s), n, bricked);

  // layer(i): best occupancy of rows i..m given row i; -1 marks an
  // impossible last row.
  std::vector<std::vector<std::int16_t>> store(layers, std::vector<std::int16_t>(states));
  auto layer = [&](int i) -> std::vector<std::int16_t>& {
    return store[req.want_witness ? static_cast<std::size_t>(i - 1) : 0];
  };
  std::vector<std::int16_t> best(states);

  {
    auto& last = layer(m);
    for (std::size_t s = 0; s < states; ++s)
      last[s] = (flank[s] & south) ? std::int16_t{-1} : static_cast<std::int16_t>(std::popcount(s));
  }
  SolveStats stats;
  stats.states = states;
  for (int i = m - 1; i >= 1; --i) {
    clock.check();
    best = layer(i + 1);
    for (int b = 0; b < n; ++b) {
      const std::size_t bit = std::size_t{1} << b;
      for (std::size_t s = 0; s < states; ++s)
        if (s & bit) best[s] = std::max(best[s], best[s ^ bit]);
    }
    auto& cur = layer(i);
    for (std::size_t s = 0; s < states; ++s)
      cur[s] = static_cast<std::int16_t>(std::popcount(s) + best[full & ~flank[s]]);
    stats.states += states;
    stats.transitions += static_cast<std::uint64_t>(n) * states + states;
  }

  const auto& first = layer(1);
  SolveResult result;
  result.optimum = *std::max_element(first.begin(), first.end());

  if (req.want_witness) {
    const auto order = detail::lex_order(n);
    std::vector<std::uint64_t> rows;
    std::int64_t target = result.optimum;
    Mask allowed = full;
    for (int i = 1; i <= m; ++i) {
      const auto& values = layer(i);
      bool found = false;
      for (Mask s : order) {
        if ((s & ~allowed) || values[s] != target) continue;
        rows.push_back(s);
        target -= std::popcount(s);
        allowed = full & ~flank[s];
        found = true;
        break;
      }
      if (!found) throw std::logic_error("solve_max witness walk lost the optimum");
    }
    result.witness = detail::to_configuration(req.dims, rows);
  }
  stats.wall_seconds = clock.seconds();
  result.stats = stats;
  return result;
}

namespace detail {

// Empty lots of `cur` that no east, west or centre reason covers once the
// next row is fixed. They must be covered from the north.
struct DemandTable {
  int n = 0;
  bool bricked = false;
  std::vector<Mask> west;
  std::vector<Mask> east;

  DemandTable(int cols, bool brick) : n(cols), bricked(brick) {
    const std::size_t states = std::size_t{1} << n;
    west.resize(states);
    east.resize(states);
    for (std::size_t s = 0; s < states; ++s) {
      west[s] = west_of(static_cast<Mask>(s), n, bricked);
      east[s] = east_of(static_cast<Mask>(s), n, bricked);
    }
  }

  Mask demand(Mask cur, Mask next) const {
    using T = row_traits<Mask>;
    const Mask w = west[cur];
    const Mask e = east[cur];
    const Mask supported = cur & next;
    const Mask covered = T::shr1(supported & e, n) | T::shl1(supported & w, n) | (w & e & next);
    return T::full(n) & ~cur & ~covered;
  }
};

// One row: nothing above, the virtual border row below.
inline SolveResult solve_min_single_row(const SolveRequest& req) {
  const int n = req.dims.cols;
  const bool bricked = req.dims.bricked();
  const std::size_t states = std::size_t{1} << n;
  check_bytes(req, 2 * states * sizeof(Mask));
  Stopwatch clock(req.limits.max_wall);
  const DemandTable demand(n, bricked);
  const Mask south = south_border<Mask>(n, bricked);
  std::optional<Mask> best;
  for (std::size_t k = 0; k < states; ++k) {
    if ((k & 0xFFFF) == 0) clock.check();
    const auto cur = static_cast<Mask>(reverse_bits(k, n));
    if ((flanked(cur, n, bricked) & south) || demand.demand(cur, south)) continue;
    if (!best || std::popcount(cur) < std::popcount(*best)) best = cur;
  }
  if (!best) throw std::logic_error("no maximal configuration found");
  SolveResult result;
  result.optimum = std::popcount(*best);
  if (req.want_witness) result.witness = to_configuration(req.dims, {*best});
  result.stats.states = states;
  result.stats.transitions = states;
  result.stats.wall_seconds = clock.seconds();
  return result;
}

}  // namespace detail

inline SolveResult solve_min_maximal(const SolveRequest& req) {
  using detail::Mask;
  if (req.objective != Objective::min_maximal)
    throw std::invalid_argument("solve_min_maximal needs the min objective");
  detail::check_request(req);
  const int m = req.dims.rows;
  const int n = req.dims.cols;
  const bool bricked = req.dims.bricked();
  const std::size_t states = std::size_t{1} << n;
  if (m == 1) return detail::solve_min_single_row(req);
  const std::size_t pairs = states * states;
  const std::size_t buffers = req.want_witness ? static_cast<std::size_t>(m) : 2;
  detail::check_bytes(req, buffers * pairs * sizeof(std::uint16_t) + 2 * states * sizeof(std::uint16_t) +
                               3 * states * sizeof(Mask));

  detail::Stopwatch clock(req.limits.max_wall);
  constexpr std::uint16_t inf = std::numeric_limits<std::uint16_t>::max();
  const Mask south = south_border<Mask>(n, bricked);
  const detail::DemandTable demand(n, bricked);

  std::vector<Mask> flank(states);
  for (std::size_t s = 0; s < states; ++s) flank[s] = flanked(static_cast<Mask>(s), n, bricked);

  // layer(i)[above * states + cur]: least occupancy of rows i..m with every
  // constraint on rows i..m met, given rows i-1 and i.
  std::vector<std::vector<std::uint16_t>> store(buffers, std::vector<std::uint16_t>(pairs));
  auto layer = [&](int i) -> std::vector<std::uint16_t>& {
    return store[req.want_witness ? static_cast<std::size_t>(i - 1) : static_cast<std::size_t>(i % 2)];
  };
  auto idx = [states](Mask above, Mask cur) { return static_cast<std::size_t>(above) * states + cur; };

  SolveStats stats;
  {
    auto& last = layer(m);
    for (Mask cur = 0; cur < states; ++cur) {
      const bool ok = !(flank[cur] & south);
      const Mask need = demand.demand(cur, south);
      for (Mask above = 0; above < states; ++above)
        last[idx(above, cur)] =
            ok && (need & ~flank[above]) == 0 ? static_cast<std::uint16_t>(std::popcount(cur)) : inf;
    }
    stats.states += pairs;
    stats.transitions += pairs;
  }

  std::vector<std::uint16_t> by_demand(states);
  for (int i = m - 1; i >= 1; --i) {
    clock.check();
    const auto& next_layer = layer(i + 1);
    auto& cur_layer = layer(i);
    for (Mask cur = 0; cur < states; ++cur) {
      std::fill(by_demand.begin(), by_demand.end(), inf);
      const std::uint16_t* row = &next_layer[idx(cur, 0)];
      for (Mask next = 0; next < states; ++next) {
        if ((flank[cur] & next) || row[next] == inf) continue;
        auto& slot = by_demand[demand.demand(cur, next)];
        slot = std::min(slot, row[next]);
      }
      // Subset-min: by_demand[F] becomes the best over demands inside F.
      for (int b = 0; b < n; ++b) {
        const std::size_t bit = std::size_t{1} << b;
        for (std::size_t s = 0; s < states; ++s)
          if (s & bit) by_demand[s] = std::min(by_demand[s], by_demand[s ^ bit]);
      }
      const auto own = static_cast<std::uint16_t>(std::popcount(cur));
      for (Mask above = 0; above < states; ++above) {
        const std::uint16_t rest = by_demand[flank[above]];
        cur_layer[idx(above, cur)] = rest == inf ? inf : static_cast<std::uint16_t>(own + rest);
      }
    }
    stats.states += pairs;
    stats.transitions += pairs + static_cast<std::uint64_t>(n) * pairs;
  }

  // Row 1 has nothing above it.
  const auto& first = layer(1);
  std::uint16_t opt = inf;
  for (Mask cur = 0; cur < states; ++cur) opt = std::min(opt, first[idx(0, cur)]);
  if (opt == inf) throw std::logic_error("no maximal configuration found");

  SolveResult result;
  result.optimum = opt;
  if (req.want_witness) {
    const auto order = detail::lex_order(n);
    std::vector<std::uint64_t> rows;
    std::int64_t target = opt;
    Mask above = 0;
    std::optional<Mask> cur;
    for (Mask s : order)
      if (first[idx(0, s)] == target) {
        cur = s;
        break;
      }
    if (!cur) throw std::logic_error("solve_min_maximal witness walk lost the optimum");
    rows.push_back(*cur);
    for (int i = 2; i <= m; ++i) {
      target -= std::popcount(*cur);
      const auto& values = layer(i);
      std::optional<Mask> pick;
      for (Mask s : order) {
        if ((flank[*cur] & s) || (demand.demand(*cur, s) & ~flank[above])) continue;
        if (values[idx(*cur, s)] == target) {
          pick = s;
          break;
        }
      }
      if (!pick) throw std::logic_error("solve_min_maximal witness walk lost the optimum");
      above = *cur;
      cur = pick;
      rows.push_back(*cur);
    }
    result.witness = detail::to_configuration(req.dims, rows);
  }
  stats.wall_seconds = clock.seconds();
  result.stats = stats;
  return result;
}

inline constexpr int brute_force_max_cells = 22;

// Exhaustive enumeration in cell-string order, '.' (0) before '#' (1), row 1
// first. The first configuration reaching the optimum is the witness.
inline SolveResult brute_force(const SolveRequest& req) {
  const int m = req.dims.rows;
  const int n = req.dims.cols;
  if (m < 1 || n < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (m * n > brute_force_max_cells)
    throw limit_error("brute force handles at most " + std::to_string(brute_force_max_cells) + " cells, got " +
                      std::to_string(m * n));
  const bool bricked = req.dims.bricked();
  const bool want_max = req.objective == Objective::max_permissible;
  detail::Stopwatch clock(req.limits.max_wall);

  using U = std::uint64_t;
  const U row_mask = row_traits<U>::full(n);
  const U south = south_border<U>(n, bricked);
  std::vector<U> reversed(std::size_t{1} << n);
  for (std::size_t k = 0; k < reversed.size(); ++k) reversed[k] = detail::reverse_bits(k, n);

  const std::uint64_t total = std::uint64_t{1} << (m * n);
  std::vector<U> rows(static_cast<std::size_t>(m));
  std::optional<std::int64_t> best;
  std::vector<U> best_rows;
  SolveStats stats;
  for (std::uint64_t k = 0; k < total; ++k) {
    if ((k & 0xFFFFF) == 0) clock.check();
    std::int64_t count = 0;
    for (int r = 0; r < m; ++r) {
      rows[r] = reversed[(k >> (n * (m - 1 - r))) & row_mask];
      count += std::popcount(rows[r]);
    }
    if (best && (want_max ? count <= *best : count >= *best)) continue;
    ++stats.states;
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) {
      const U below = r + 1 < m ? rows[r + 1] : south;
      const U above = r > 0 ? rows[r - 1] : U{0};
      if (blocked_houses(rows[r], below, n, bricked)) ok = false;
      else if (!want_max && addable_lots(above, rows[r], below, n, bricked)) ok = false;
    }
    if (!ok) continue;
    best = count;
    best_rows = rows;
  }
  stats.transitions = total;
  if (!best) throw std::logic_error("brute force found no feasible configuration");

  SolveResult result;
  result.optimum = *best;
  if (req.want_witness) result.witness = detail::to_configuration(req.dims, best_rows);
  stats.wall_seconds = clock.seconds();
  result.stats = stats;
  return result;
}

inline SolveResult solve(const SolveRequest& req) {
  return req.objective == Objective::max_permissible ? solve_max(req) : solve_min_maximal(req);
}

struct IntRange {
  int first = 2;
  int last = 2;
};

struct TableResult {
  Objective objective = Objective::max_permissible;
  BoundaryMode boundary = BoundaryMode::free;
  IntRange rows;
  IntRange cols;
  // values[m - rows.first][n - cols.first]; empty optional when the cell failed.
  std::vector<std::vector<std::optional<std::int64_t>>> values;
  std::vector<std::vector<std::string>> errors;

  std::optional<std::int64_t> at(int m, int n) const {
    return values.at(static_cast<std::size_t>(m - rows.first)).at(static_cast<std::size_t>(n - cols.first));
  }
};

inline TableResult table(Objective objective, IntRange rows, IntRange cols, BoundaryMode boundary,
                         const SolveLimits& limits = {}) {
  if (rows.first < 1 || cols.first < 1 || rows.last < rows.first || cols.last < cols.first)
    throw std::invalid_argument("table ranges must be nonempty and positive");
  TableResult t;
  t.objective = objective;
  t.boundary = boundary;
  t.rows = rows;
  t.cols = cols;
  for (int m = rows.first; m <= rows.last; ++m) {
    std::vector<std::optional<std::int64_t>> line;
    std::vector<std::string> line_errors;
    for (int n = cols.first; n <= cols.last; ++n) {
      SolveRequest req{Dims{m, n, boundary}, objective, false, limits};
      try {
        line.push_back(solve(req).optimum);
        line_errors.emplace_back();
      } catch (const std::exception& e) {
        line.push_back(std::nullopt);
        line_errors.emplace_back(e.what());
      }
    }
    t.values.push_back(std::move(line));
    t.errors.push_back(std::move(line_errors));
  }
  return t;
}

}  // namespace settle
