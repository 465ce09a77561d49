#pragma once

// The two integer programs over X in {0,1}^{m x n}, written out in CPLEX LP
// text format for external solvers, plus a small evaluator used to check the
// models against the grid semantics.
//
// Efficient model: maximize the house count subject to the forbidden pattern
//   x_i_j + x_i_(j-1) + x_i_(j+1) + x_(i+1)_j <= 3.
// Inefficient model: minimize the house count subject to the same pattern
// constraints and, for every lot, x_i_j + sum of its reason binaries >= 1,
// where a reason binary pE_i_j, pW_i_j, pN_i_j or pC_i_j may only be 1 when
// all three lots of its reason are occupied. Only reasons that can hold under
// a free border get a binary.

#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grid.hpp"

namespace settle {

enum class Sense { maximize, minimize };
enum class Relation { le, ge };

struct LinearTerm {
  int coef = 1;
  std::string var;
};

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Relation rel = Relation::le;
  int rhs = 0;
};

// A reason binary and the lots it requires.
struct AuxVar {
  std::string name;
  std::vector<std::string> requires_all;
};

struct IpModel {
  Dims dims;
  Sense sense = Sense::maximize;
  std::vector<LinearTerm> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::string> cell_vars;  // row-major x_i_j
  std::vector<AuxVar> aux;

  std::size_t variable_count() const { return cell_vars.size() + aux.size(); }
};

inline std::string cell_var(int i, int j) { return "x_" + std::to_string(i) + "_" + std::to_string(j); }

namespace detail {

inline void require_model_dims(int m, int n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("IP export needs m, n >= 2, got " + std::to_string(m) + "x" + std::to_string(n));
}

inline IpModel base_model(int m, int n, Sense sense) {
  require_model_dims(m, n);
  IpModel model;
  model.dims = Dims{m, n, BoundaryMode::free};
  model.sense = sense;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      model.cell_vars.push_back(cell_var(i, j));
      model.objective.push_back({1, cell_var(i, j)});
    }
  for (int i = 1; i < m; ++i)
    for (int j = 2; j < n; ++j)
      model.constraints.push_back({"fp_" + std::to_string(i) + "_" + std::to_string(j),
                                   {{1, cell_var(i, j)},
                                    {1, cell_var(i, j - 1)},
                                    {1, cell_var(i, j + 1)},
                                    {1, cell_var(i + 1, j)}},
                                   Relation::le,
                                   3});
  return model;
}

}  // namespace detail

inline IpModel export_efficient(int m, int n) { return detail::base_model(m, n, Sense::maximize); }

inline IpModel export_inefficient(int m, int n) {
  IpModel model = detail::base_model(m, n, Sense::minimize);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string at = std::to_string(i) + "_" + std::to_string(j);
      std::vector<AuxVar> reasons;
      if (j + 2 <= n && i < m)
        reasons.push_back({"pE_" + at, {cell_var(i, j + 1), cell_var(i, j + 2), cell_var(i + 1, j + 1)}});
      if (j - 2 >= 1 && i < m)
        reasons.push_back({"pW_" + at, {cell_var(i, j - 1), cell_var(i, j - 2), cell_var(i + 1, j - 1)}});
      if (i >= 2 && j >= 2 && j < n)
        reasons.push_back({"pN_" + at, {cell_var(i - 1, j - 1), cell_var(i - 1, j), cell_var(i - 1, j + 1)}});
      if (j >= 2 && j < n && i < m)
        reasons.push_back({"pC_" + at, {cell_var(i, j - 1), cell_var(i, j + 1), cell_var(i + 1, j)}});

      LinearConstraint cover{"cover_" + at, {{1, cell_var(i, j)}}, Relation::ge, 1};
      for (const auto& r : reasons) {
        for (std::size_t k = 0; k < r.requires_all.size(); ++k)
          model.constraints.push_back(
              {"l" + r.name + "_" + std::to_string(k + 1), {{1, r.name}, {-1, r.requires_all[k]}}, Relation::le, 0});
        cover.terms.push_back({1, r.name});
        model.aux.push_back(r);
      }
      model.constraints.push_back(std::move(cover));
    }
  return model;
}

namespace detail {

inline void write_terms(std::ostream& os, const std::vector<LinearTerm>& terms) {
  constexpr std::size_t per_line = 8;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k > 0 && k % per_line == 0) os << "\n   ";
    const auto& t = terms[k];
    if (k == 0) {
      if (t.coef < 0) os << "- ";
    } else {
      os << (t.coef < 0 ? " - " : " + ");
    }
    const int mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1) os << mag << ' ';
    os << t.var;
  }
}

}  // namespace detail

inline void write_lp(std::ostream& os, const IpModel& model) {
  os << "\\ " << (model.sense == Sense::maximize ? "efficient" : "inefficient") << " settlement model "
     << model.dims.rows << "x" << model.dims.cols << "\n";
  os << (model.sense == Sense::maximize ? "Maximize\n" : "Minimize\n");
  os << " obj: ";
  detail::write_terms(os, model.objective);
  os << "\nSubject To\n";
  for (const auto& c : model.constraints) {
    os << " " << c.name << ": ";
    detail::write_terms(os, c.terms);
    os << (c.rel == Relation::le ? " <= " : " >= ") << c.rhs << "\n";
  }
  os << "Bounds\n";
  for (const auto& v : model.cell_vars) os << " 0 <= " << v << " <= 1\n";
  for (const auto& a : model.aux) os << " 0 <= " << a.name << " <= 1\n";
  os << "Binaries\n";
  std::vector<std::string> names = model.cell_vars;
  for (const auto& a : model.aux) names.push_back(a.name);
  for (std::size_t k = 0; k < names.size(); ++k) {
    os << ' ' << names[k];
    if (k % 8 == 7 || k + 1 == names.size()) os << "\n";
  }
  os << "End\n";
}

inline std::string to_lp(const IpModel& model) {
  std::ostringstream os;
  write_lp(os, model);
  return os.str();
}

using Assignment = std::map<std::string, int>;

// Cell variables from the configuration; each reason binary set to 1 exactly
// when all its lots are occupied, the most permissive legal choice.
inline Assignment assignment_from(const IpModel& model, const Configuration& c) {
  if (c.rows() != model.dims.rows || c.cols() != model.dims.cols)
    throw std::invalid_argument("configuration size does not match the model");
  Assignment a;
  for (int i = 1; i <= c.rows(); ++i)
    for (int j = 1; j <= c.cols(); ++j) a[cell_var(i, j)] = c.house(i, j) ? 1 : 0;
  for (const auto& aux : model.aux) {
    int v = 1;
    for (const auto& x : aux.requires_all) v &= a.at(x);
    a[aux.name] = v;
  }
  return a;
}

inline bool satisfies(const IpModel& model, const Assignment& a) {
  for (const auto& c : model.constraints) {
    long long lhs = 0;
    for (const auto& t : c.terms) {
      auto it = a.find(t.var);
      if (it == a.end()) throw std::invalid_argument("assignment misses variable " + t.var);
      lhs += static_cast<long long>(t.coef) * it->second;
    }
    if (c.rel == Relation::le ? lhs > c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

inline long long objective_value(const IpModel& model, const Assignment& a) {
  long long v = 0;
  for (const auto& t : model.objective) v += static_cast<long long>(t.coef) * a.at(t.var);
  return v;
}

struct ModelOptimum {
  long long value = 0;
  std::uint64_t feasible = 0;  // number of feasible cell assignments
};

// Optimum by trying every cell assignment. Only for tiny grids.
inline ModelOptimum exhaustive_optimum(const IpModel& model) {
  const int cells = model.dims.rows * model.dims.cols;
  if (cells > 20) throw std::invalid_argument("exhaustive model search is limited to 20 cells");
  ModelOptimum best;
  bool any = false;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << cells); ++k) {
    std::vector<Configuration::Row> rows(static_cast<std::size_t>(model.dims.rows),
                                         Configuration::Row(static_cast<std::size_t>(model.dims.cols)));
    for (int p = 0; p < cells; ++p)
      if ((k >> p) & 1u) rows[p / model.dims.cols].set(static_cast<std::size_t>(p % model.dims.cols));
    const Configuration c(model.dims, std::move(rows));
    const auto a = assignment_from(model, c);
    if (!satisfies(model, a)) continue;
    const long long v = objective_value(model, a);
    ++best.feasible;
    if (!any || (model.sense == Sense::maximize ? v > best.value : v < best.value)) best.value = v;
    any = true;
  }
  if (!any) throw std::logic_error("model has no feasible assignment");
  return best;
}

}  // namespace settle
