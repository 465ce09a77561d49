// Builds a few configurations, checks them and solves a small grid.

#include <iostream>

#include "settle/settle.hpp"

int main() {
  using namespace settle;

  const auto rake_stripe = generate_pattern(PatternKind::rake_stripe, 6, 8);
  std::cout << "rake-stripe 6x8, occupancy " << occupancy(rake_stripe) << "\n" << render(rake_stripe);

  const auto c = Configuration::from_strings({"#...", "###.", ".###", "###.", "..##"});
  std::cout << "\npermissible: " << std::boolalpha << is_permissible(c) << ", blocked:";
  for (auto at : blocked_cells(c)) std::cout << " (" << at.i << "," << at.j << ")";
  std::cout << "\n";

  const auto best = solve_max(SolveRequest{Dims{5, 10}, Objective::max_permissible});
  std::cout << "\nE(5,10) = " << best.optimum << ", density " << rational_string(density(*best.witness)) << "\n"
            << render(*best.witness);

  const auto least = solve_min_maximal(SolveRequest{Dims{6, 8}, Objective::min_maximal});
  std::cout << "\nI(6,8) = " << least.optimum << " (lower bound " << i_lower_bound(6, 8) << ")\n";
}
