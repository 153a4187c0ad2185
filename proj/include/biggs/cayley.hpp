#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "biggs/frontier.hpp"
#include "biggs/permutation.hpp"
#include "biggs/types.hpp"

namespace biggs {

/// Throws ContractError unless the generators are distinct nontrivial
/// involutions of one degree.
void require_involutions(std::span<const Permutation> generators);

/// Shortest cycle of the Cayley graph. Exact, or a lower bound 2d+1 when the
/// budget stops the search at depth d.
SearchOutcome girth(std::span<const Permutation> generators, const SearchBudget& budget = {});

/// Largest distance from the identity. Exact once every element is reached;
/// otherwise the deepest level known to be nonempty.
SearchOutcome diameter(std::span<const Permutation> generators, const SearchBudget& budget = {});

/// Smallest D with N_{C,D} >= order. Needs C >= 3 and order >= 1.
std::size_t moore_diameter_lower_bound(int colors, const BigInt& order);

/// Same bound when only ln(order) is known. Rounding in ln(order) near an exact
/// threshold may shift the answer by one.
std::size_t moore_diameter_lower_bound_ln(int colors, double ln_order);

struct RatioRow {
  int radius = 0;
  BigInt n;
  /// Moore bound for a group of order N!/2.
  std::size_t diameter_lower = 0;
  /// False when N!/2 was too large to form and the bound came from ln(N!/2).
  bool diameter_exact = true;
  /// min(2N, 2 odd_lcm_leq(2R+1)).
  BigInt girth_upper;
  double ratio = 0;
};

/// Diameter lower bound over girth upper bound for each R in `radii`.
std::vector<RatioRow> ratio_report(int colors, std::span<const int> radii);

}  // namespace biggs
