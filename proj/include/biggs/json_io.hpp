#pragma once

#include <nlohmann/json.hpp>

#include "biggs/classifier.hpp"
#include "biggs/colored_tree.hpp"
#include "biggs/frontier.hpp"
#include "biggs/group.hpp"

namespace biggs {

using Json = nlohmann::ordered_json;

/// {C, R, N, parents: [null | [parent, color]], mirrors: [[colors]]}
Json tree_json(const ColoredTree& tree);

/// {transitive, two_transitive, sharply_two_transitive}
Json transitivity_json(const Transitivity& t);

/// {C, R, N, order, type, transitivity}; order is a decimal string.
Json verdict_json(int colors, int radius, const GroupVerdict& verdict);

/// {C, R, kind, value, states_explored, depth_reached, wall_seconds}
Json search_json(int colors, int radius, const SearchOutcome& outcome, double wall_seconds);

Json witness_json(const CycleWitness& w);
Json projective_json(const ProjectiveMatch& m);
Json report_json(const ClassificationReport& rep);

}  // namespace biggs
