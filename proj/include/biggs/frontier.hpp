#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "biggs/permutation.hpp"

namespace biggs {

enum class SearchMode { Girth, Diameter };

struct SearchBudget {
  /// Deepest BFS level that may be discovered.
  std::size_t depth_limit = 64;
  /// Cap on distinct group elements stored.
  std::size_t max_states = 100'000'000;
  /// OpenMP threads for the parallel kernel (ignored by the serial one).
  int threads = 1;
};

enum class OutcomeKind { Exact, LowerBoundOnly };
std::string to_string(OutcomeKind k);

struct SearchOutcome {
  OutcomeKind kind = OutcomeKind::Exact;
  std::size_t value = 0;
  std::size_t states_explored = 0;
  std::size_t depth_reached = 0;
  bool operator==(const SearchOutcome&) const = default;
};

// Breadth-first search over group elements from the identity, expanding only
// non-backtracking steps. Level d is expanded parent by parent (in discovery
// order) and letter by letter (ascending); the first occurrence of a new
// element is the one stored. In girth mode, expanding level d stops the search
// after the level if some step lands on level d (cycle 2d+1) or on an element
// already discovered at level d+1 (cycle 2d+2). Once the state cap is reached
// no more elements are stored but the level is still scanned for hits.
//
// Both kernels implement exactly this contract and return identical outcomes.
// The generators must be distinct nontrivial involutions (not checked here).

/// Reference kernel: one std::unordered_map, single thread.
SearchOutcome frontier_search_serial(std::span<const Permutation> generators, SearchMode mode,
                                     const SearchBudget& budget);

/// Sharded open-addressing visited set; expansion and insertion run as
/// OpenMP loops over parents and over shards respectively.
SearchOutcome frontier_search_parallel(std::span<const Permutation> generators, SearchMode mode,
                                       const SearchBudget& budget);

}  // namespace biggs
