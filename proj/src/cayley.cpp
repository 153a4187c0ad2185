#include "biggs/cayley.hpp"

#include <cmath>
#include <numbers>

#include "biggs/arithmetic.hpp"
#include "biggs/colored_tree.hpp"
#include "biggs/group.hpp"

namespace biggs {
namespace {

// Largest N for which ratio_report forms N! exactly.
constexpr std::size_t kExactFactorialLimit = 20000;

double ln_vertex_count(int colors, std::size_t radius) {
  // N_{C,D} = (C (C-1)^D - 2)/(C-2); the -2 is negligible once D > 0.
  return std::log(static_cast<double>(colors) / (colors - 2)) + static_cast<double>(radius) * std::log(colors - 1.0);
}

}  // namespace

void require_involutions(std::span<const Permutation> generators) {
  if (generators.empty()) throw ContractError("no generators");
  const std::size_t n = generators.front().degree();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Permutation& g = generators[i];
    if (g.degree() != n) throw ContractError("generators have different degrees");
    if (g.is_identity()) throw ContractError("generator " + std::to_string(i) + " is the identity");
    if (!compose(g, g).is_identity()) throw ContractError("generator " + std::to_string(i) + " is not an involution");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[j] == g) throw ContractError("generators " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
}

SearchOutcome girth(std::span<const Permutation> generators, const SearchBudget& budget) {
  require_involutions(generators);
  return frontier_search_parallel(generators, SearchMode::Girth, budget);
}

SearchOutcome diameter(std::span<const Permutation> generators, const SearchBudget& budget) {
  require_involutions(generators);
  return frontier_search_parallel(generators, SearchMode::Diameter, budget);
}

std::size_t moore_diameter_lower_bound(int colors, const BigInt& order) {
  if (colors < 3) throw ParameterError("Moore bound needs C >= 3");
  if (order < 1) throw ParameterError("group order must be positive");
  // Start just below the real-valued estimate, then settle exactly.
  const double estimate = (ln_big(order) - std::log(static_cast<double>(colors) / (colors - 2))) / std::log(colors - 1.0);
  auto d = static_cast<std::size_t>(std::max(0.0, std::floor(estimate) - 2));
  while (d > 0 && vertex_count_formula(colors, static_cast<int>(d)) >= order) --d;
  while (vertex_count_formula(colors, static_cast<int>(d)) < order) ++d;
  return d;
}

std::size_t moore_diameter_lower_bound_ln(int colors, double ln_order) {
  if (colors < 3) throw ParameterError("Moore bound needs C >= 3");
  if (!(ln_order >= 0)) throw ParameterError("ln(order) must be non-negative");
  if (ln_order == 0) return 0;
  const double estimate = (ln_order - std::log(static_cast<double>(colors) / (colors - 2))) / std::log(colors - 1.0);
  auto d = static_cast<std::size_t>(std::max(0.0, std::ceil(estimate)));
  while (d > 0 && ln_vertex_count(colors, d - 1) >= ln_order) --d;
  while (ln_vertex_count(colors, d) < ln_order) ++d;
  return std::max<std::size_t>(d, 1);
}

std::vector<RatioRow> ratio_report(int colors, std::span<const int> radii) {
  if (colors < 3) throw ParameterError("ratio_report needs C >= 3");
  std::vector<RatioRow> rows;
  for (int r : radii) {
    if (r < 1) throw ParameterError("radius must be at least 1");
    RatioRow row;
    row.radius = r;
    row.n = vertex_count_formula(colors, r);
    if (row.n <= kExactFactorialLimit) {
      row.diameter_lower = moore_diameter_lower_bound(colors, factorial(row.n.convert_to<std::size_t>()) / 2);
    } else {
      const double n = row.n.convert_to<double>();
      row.diameter_lower = moore_diameter_lower_bound_ln(colors, std::lgamma(n + 1) - std::numbers::ln2);
      row.diameter_exact = false;
    }
    const GirthBoundComparison cmp = girth_bound_comparison(colors, r);
    row.girth_upper = cmp.winner == GirthBoundWinner::OddLcm_smaller ? cmp.two_odd_lcm : cmp.two_n;
    row.ratio = static_cast<double>(row.diameter_lower) / row.girth_upper.convert_to<double>();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace biggs
