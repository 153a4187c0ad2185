#include <cstring>
#include <string>
#include <unordered_map>
#include <vector>

#include "biggs/frontier.hpp"

namespace biggs {

std::string to_string(OutcomeKind k) { return k == OutcomeKind::Exact ? "Exact" : "LowerBoundOnly"; }

SearchOutcome frontier_search_serial(std::span<const Permutation> generators, SearchMode mode,
                                     const SearchBudget& budget) {
  const std::size_t n = generators.front().degree();
  const std::size_t letters = generators.size();
  constexpr std::size_t kNoLetter = static_cast<std::size_t>(-1);

  // Each element is keyed by its image list packed into a string.
  auto encode = [n](const std::vector<Vertex>& img) {
    std::string key(n * sizeof(Vertex), '\0');
    std::memcpy(key.data(), img.data(), key.size());
    return key;
  };

  struct Entry {
    std::size_t depth;
  };
  std::unordered_map<std::string, Entry> seen;
  std::vector<std::vector<Vertex>> frontier;
  std::vector<std::size_t> frontier_last;

  std::vector<Vertex> id(n);
  for (std::size_t v = 0; v < n; ++v) id[v] = static_cast<Vertex>(v);
  seen.emplace(encode(id), Entry{0});
  frontier.push_back(id);
  frontier_last.push_back(kNoLetter);

  SearchOutcome out;
  bool capped = budget.max_states <= 1;
  std::size_t depth = 0;
  std::vector<Vertex> child(n);

  while (true) {
    const bool may_store = !capped && depth < budget.depth_limit;
    bool same_level_hit = false;
    bool next_level_hit = false;
    bool any_unseen = false;
    std::vector<std::vector<Vertex>> next;
    std::vector<std::size_t> next_last;

    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (std::size_t c = 0; c < letters; ++c) {
        if (c == frontier_last[i]) continue;
        const auto gi = generators[c].images();
        for (std::size_t v = 0; v < n; ++v) child[v] = gi[frontier[i][v]];
        std::string key = encode(child);
        auto it = seen.find(key);
        if (it != seen.end()) {
          if (it->second.depth == depth) same_level_hit = true;
          if (it->second.depth == depth + 1) next_level_hit = true;
          continue;
        }
        any_unseen = true;
        if (!may_store || capped) continue;
        if (seen.size() >= budget.max_states) {
          capped = true;
          continue;
        }
        seen.emplace(std::move(key), Entry{depth + 1});
        next.push_back(child);
        next_last.push_back(c);
      }
    }

    if (mode == SearchMode::Girth) {
      if (same_level_hit || next_level_hit) {
        out.kind = OutcomeKind::Exact;
        out.value = same_level_hit ? 2 * depth + 1 : 2 * depth + 2;
        out.depth_reached = depth;
        break;
      }
      if (!may_store || capped) {
        out.kind = OutcomeKind::LowerBoundOnly;
        out.value = 2 * depth + 1;
        out.depth_reached = depth;
        break;
      }
    } else {
      if (!any_unseen) {
        out.kind = OutcomeKind::Exact;
        out.value = depth;
        out.depth_reached = depth;
        break;
      }
      if (!may_store || capped) {
        out.kind = OutcomeKind::LowerBoundOnly;
        out.value = depth;
        out.depth_reached = depth;
        break;
      }
    }
    frontier = std::move(next);
    frontier_last = std::move(next_last);
    ++depth;
    if (frontier.empty()) {
      // Finite tree-like exhaustion; only possible for girth on a tree, which
      // a finite Cayley graph never is.
      out.kind = OutcomeKind::LowerBoundOnly;
      out.value = 2 * depth + 1;
      out.depth_reached = depth;
      break;
    }
  }
  out.states_explored = seen.size();
  return out;
}

}  // namespace biggs
