#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "biggs/colored_tree.hpp"
#include "biggs/permutation.hpp"

namespace biggs {

enum class CheckScope { Fast, Full };

struct CheckOptions {
  /// Test hook: perturb generator 0 of every tree the suites build.
  bool corrupt_generator = false;
  int threads = 1;
};

struct CheckFailure {
  std::string property;
  std::string detail;
};

/// Runs the cross-module invariant suites, writing one line per property to
/// `log`. Returns the failed properties (empty when everything holds).
std::vector<CheckFailure> run_checks(CheckScope scope, const CheckOptions& options, std::ostream& log);

/// Generators of the tree, with generator 0 perturbed when `corrupt` is set.
std::vector<Permutation> check_generators(const ColoredTree& tree, bool corrupt);

}  // namespace biggs
