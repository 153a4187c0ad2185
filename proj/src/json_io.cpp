#include "biggs/json_io.hpp"

#include "biggs/word.hpp"

namespace biggs {

Json tree_json(const ColoredTree& tree) {
  Json parents = Json::array();
  Json mirrors = Json::array();
  for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
    const auto vid = static_cast<Vertex>(v);
    if (auto p = tree.parent(vid))
      parents.push_back(Json::array({p->vertex, index_of(p->color)}));
    else
      parents.push_back(nullptr);
    Json ms = Json::array();
    for (Color c : tree.mirrors(vid)) ms.push_back(index_of(c));
    mirrors.push_back(std::move(ms));
  }
  Json j;
  j["C"] = tree.color_count();
  j["R"] = tree.radius();
  j["N"] = tree.vertex_count();
  j["parents"] = std::move(parents);
  j["mirrors"] = std::move(mirrors);
  return j;
}

Json transitivity_json(const Transitivity& t) {
  Json j;
  j["transitive"] = t.transitive;
  j["two_transitive"] = t.two_transitive;
  j["sharply_two_transitive"] = t.sharply_two_transitive;
  return j;
}

Json verdict_json(int colors, int radius, const GroupVerdict& verdict) {
  Json j;
  j["C"] = colors;
  j["R"] = radius;
  j["N"] = to_decimal(vertex_count_formula(colors, radius));
  j["order"] = to_decimal(verdict.order);
  j["type"] = to_string(verdict.type);
  j["transitivity"] = transitivity_json(verdict.transitivity);
  return j;
}

Json search_json(int colors, int radius, const SearchOutcome& outcome, double wall_seconds) {
  Json j;
  j["C"] = colors;
  j["R"] = radius;
  j["kind"] = to_string(outcome.kind);
  j["value"] = outcome.value;
  j["states_explored"] = outcome.states_explored;
  j["depth_reached"] = outcome.depth_reached;
  j["wall_seconds"] = wall_seconds;
  return j;
}

Json witness_json(const CycleWitness& w) {
  Json j;
  j["sub_colors"] = w.sub_colors;
  j["exponent"] = to_decimal(w.exponent);
  j["cycle_length"] = w.cycle_length;
  j["fixed_points"] = w.fixed_points;
  return j;
}

Json projective_json(const ProjectiveMatch& m) {
  Json j;
  j["q"] = to_decimal(m.q);
  j["d"] = m.d;
  j["p"] = to_decimal(m.p);
  j["e"] = m.e;
  return j;
}

Json report_json(const ClassificationReport& rep) {
  Json j;
  j["C"] = rep.colors;
  j["R"] = rep.radius;
  j["N"] = to_decimal(rep.n);
  j["predicted_type"] = to_string(rep.predicted_type);
  j["table_color"] = to_string(rep.color);
  j["factorization"] = rep.factorization ? Json(to_string(*rep.factorization)) : Json(nullptr);
  j["primary_column"] = rep.primary_column ? Json(*rep.primary_column) : Json(nullptr);
  j["secondary_condition"] = rep.secondary_condition;
  j["primary_witness"] = rep.primary_witness ? witness_json(*rep.primary_witness) : Json(nullptr);
  j["secondary_witness"] = rep.secondary_witness ? witness_json(*rep.secondary_witness) : Json(nullptr);
  if (rep.projective) {
    Json ms = Json::array();
    for (const auto& m : *rep.projective) ms.push_back(projective_json(m));
    j["projective_matches"] = std::move(ms);
    j["projective_excluded"] = rep.projective->empty();
    j["open_by_degree_test"] = rep.open_by_degree_test;
  } else {
    j["projective_matches"] = nullptr;
  }
  j["verified"] = rep.verified ? verdict_json(rep.colors, rep.radius, *rep.verified) : Json(nullptr);
  return j;
}

}  // namespace biggs
