#include "biggs/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "biggs/arithmetic.hpp"
#include "biggs/cayley.hpp"
#include "biggs/classifier.hpp"
#include "biggs/group.hpp"
#include "biggs/word.hpp"

namespace biggs {
namespace {

struct Suite {
  std::string name;
  std::function<std::string(const CheckOptions&)> run;  // empty string = holds
};

std::string cell(int c, int r) { return "(" + std::to_string(c) + "," + std::to_string(r) + ")"; }

// Trees of degree <= 100 with 2 <= C <= 7.
template <class F>
std::string for_small_trees(F&& f) {
  for (int c = 2; c <= 7; ++c)
    for (int r = 1; vertex_count_formula(c, r) <= 100; ++r) {
      std::string d = f(c, r);
      if (!d.empty()) return d;
    }
  return {};
}

std::string tree_counts(const CheckOptions&) {
  return for_small_trees([](int c, int r) -> std::string {
    const ColoredTree t = ColoredTree::build(c, r);
    if (t.vertex_count() != vertex_count_formula(c, r)) return "vertex count at " + cell(c, r);
    std::vector<std::size_t> per_color(static_cast<std::size_t>(c), 0);
    for (Vertex v = 1; v < t.vertex_count(); ++v) ++per_color[index_of(t.parent(v)->color)];
    for (std::size_t k : per_color)
      if (k != edge_count_formula(c, r)) return "edge count at " + cell(c, r);
    return {};
  });
}

std::string involutions(const CheckOptions& o) {
  return for_small_trees([&](int c, int r) -> std::string {
    const ColoredTree t = ColoredTree::build(c, r);
    const auto gens = check_generators(t, o.corrupt_generator);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].is_identity() || !(gens[i] * gens[i]).is_identity())
        return "generator " + std::to_string(i) + " of " + cell(c, r) + " is not a nontrivial involution";
    return {};
  });
}

std::string rainbow_cycle(const CheckOptions& o) {
  return for_small_trees([&](int c, int r) -> std::string {
    const ColoredTree t = ColoredTree::build(c, r);
    const auto gens = check_generators(t, o.corrupt_generator);
    if (!is_n_cycle(evaluate(rainbow_word(c), gens), t.vertex_count())) return "rainbow word at " + cell(c, r);
    return {};
  });
}

std::string dihedral_suite(const CheckOptions& o) {
  for (int r = 1; r <= 20; ++r) {
    const ColoredTree t = ColoredTree::build(2, r);
    const auto gens = check_generators(t, o.corrupt_generator);
    const GroupVerdict v = classify_alt_sym(schreier_sims(gens), gens);
    if (v.order != 2 * (2 * r + 1)) return "order of G" + cell(2, r) + " is " + v.order.str();
    if (v.type != GroupType::Dihedral) return "G" + cell(2, r) + " is not dihedral";
  }
  return {};
}

std::string track_evaluate(const CheckOptions& o) {
  const ColoredTree t = ColoredTree::build(3, 2);
  const auto gens = check_generators(t, o.corrupt_generator);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Color> letters;
    const std::size_t len = rng() % 25;
    while (letters.size() < len) {
      const Color c = color(rng() % 3);
      if (letters.empty() || letters.back() != c) letters.push_back(c);
    }
    const Word w = Word::from_reduced(letters);
    const Permutation p = evaluate(w, gens);
    for (Vertex v = 0; v < t.vertex_count(); ++v)
      if (track(t, w.letters(), v).endpoint != p(v)) return "track and evaluate differ on " + to_string(w);
  }
  return {};
}

std::string relators(const CheckOptions& o) {
  for (auto [c, r] : {std::pair{3, 1}, {3, 2}, {4, 2}, {3, 3}}) {
    const ColoredTree t = ColoredTree::build(c, r);
    const Word w = relator_2n(c, r);
    if (w.size() != 2 * t.vertex_count()) return "relator length at " + cell(c, r);
    if (!evaluate(w, check_generators(t, o.corrupt_generator)).is_identity()) return "relator at " + cell(c, r);
  }
  return {};
}

std::string palindromes(const CheckOptions& o) {
  for (auto [c, r] : {std::pair{3, 1}, {3, 2}, {4, 2}, {3, 3}}) {
    const ColoredTree t = ColoredTree::build(c, r);
    const auto gens = check_generators(t, o.corrupt_generator);
    for (const Word& w : palindrome_words(t))
      if (evaluate(w, gens)(0) != 0) return "palindrome " + to_string(w) + " moves the root at " + cell(c, r);
  }
  return {};
}

std::string small_groups(const CheckOptions& o) {
  for (int c = 3; c <= 100; ++c)
    for (int r = 1; vertex_count_formula(c, r) <= 100; ++r) {
      const ColoredTree t = ColoredTree::build(c, r);
      const auto gens = check_generators(t, o.corrupt_generator);
      const BaseStrongGenSet bsgs = schreier_sims(gens);
      const GroupVerdict v = classify_alt_sym(bsgs, gens);
      if (v.type != predict_type(c, r)) return "type of G" + cell(c, r) + " is " + to_string(v.type);
      if (!v.transitivity.two_transitive || v.transitivity.sharply_two_transitive)
        return "transitivity of G" + cell(c, r);
    }
  return {};
}

std::string girth_small(const CheckOptions& o) {
  SearchBudget budget;
  budget.threads = o.threads;
  auto run = [&](int c, int r, std::size_t expected) -> std::string {
    const auto gens = check_generators(ColoredTree::build(c, r), o.corrupt_generator);
    const SearchOutcome par = girth(gens, budget);
    const SearchOutcome ser = frontier_search_serial(gens, SearchMode::Girth, budget);
    if (!(par == ser)) return "serial and parallel girth differ at " + cell(c, r);
    if (par.kind != OutcomeKind::Exact || par.value != expected)
      return "girth of G" + cell(c, r) + " is " + std::to_string(par.value);
    return {};
  };
  if (auto d = run(3, 1, 6); !d.empty()) return d;
  for (int r = 1; r <= 4; ++r)
    if (auto d = run(2, r, static_cast<std::size_t>(4 * r + 2)); !d.empty()) return d;
  return {};
}

std::string number_theory(const CheckOptions&) {
  for (unsigned n = 1; n <= 1000; ++n) {
    unsigned two = 1;
    while (two * 2 <= n) two *= 2;
    if (odd_lcm_leq(n) * two != lcm_leq(n)) return "odd lcm identity at " + std::to_string(n);
  }
  if (landau(4) != 4 || landau(10) != 30) return "landau";
  if (primary_cycle_condition(5, 2) != 2 || primary_cycle_condition(4, 4)) return "primary condition";
  if (!secondary_cycle_condition(3, 4) || secondary_cycle_condition(4, 4)) return "secondary condition";
  return {};
}

std::string g32(const CheckOptions& o) {
  const auto gens = check_generators(ColoredTree::build(3, 2), o.corrupt_generator);
  const GroupVerdict v = classify_alt_sym(schreier_sims(gens), gens);
  if (v.order != 3628800 || v.type != GroupType::Symmetric) return "G(3,2) order " + v.order.str();
  SearchBudget budget;
  budget.threads = o.threads;
  const SearchOutcome g = girth(gens, budget);
  if (g.kind != OutcomeKind::Exact || g.value < 11 || g.value > 20) return "girth of G(3,2) outside [11,20]";
  const SearchOutcome d = diameter(gens, budget);
  if (d.kind != OutcomeKind::Exact || d.states_explored != 3628800) return "diameter search of G(3,2) incomplete";
  if (d.value < moore_diameter_lower_bound(3, v.order)) return "diameter below the Moore bound";
  return {};
}

// Color rows for C = 3..7; rows not listed are all violet.
std::string expected_row(int r) {
  switch (r) {
    case 4:
    case 7:
    case 12: return "BRVVV";
    case 10: return "BRRRV";
    default: return "VVVVV";
  }
}

std::string table1(const CheckOptions& o) {
  const auto reps = table1_report(7, 12, o.threads);
  for (const auto& rep : reps) {
    if (rep.colors == 2) {
      if (rep.color != TableColor::None) return "column C=2 is colored";
      continue;
    }
    const char want = expected_row(rep.radius)[static_cast<std::size_t>(rep.colors - 3)];
    const char got = rep.color == TableColor::Violet ? 'V' : rep.color == TableColor::Blue ? 'B' : 'R';
    if (want != got) return "color of " + cell(rep.colors, rep.radius);
    if (rep.color == TableColor::Red && (!rep.projective || !rep.projective->empty()))
      return "projective degree match at " + cell(rep.colors, rep.radius);
    if (!rep.factorization) return "factorization failed at " + cell(rep.colors, rep.radius);
  }
  return {};
}

std::string figures(const CheckOptions&) {
  struct Expected {
    FigureId id;
    std::vector<double> values;
  };
  const std::vector<Expected> all = {
      {FigureId::Fig3,
       {0.21832922390320147, 1.5169286122128747, 2.910062131740043, 4.364627029394038, 5.859642836677944,
        7.383471084643579, 8.929073679839039, 10.491859564797757, 12.06865293879025, 2.0794415416798357,
        3.5031304588236662, 4.586063771501729, 5.537664330567643, 6.423460174662311, 7.271198065231224,
        8.094554806804197, 8.900985075575319, 9.69489074280599}},
      {FigureId::Fig4,
       {1.3862943611198906, 3.4011973816621555, 6.040254711277414, 11.003099341537322, 18.76356637075074,
        29.607900673056914, 46.153176282243166, 2.451835828342875, 4.241137789412662, 5.715644455991693,
        7.073504958751404, 8.372651199315444, 9.636346395636709, 10.875947718093744}},
      {FigureId::Fig5,
       {1.791759469228055, 1.791759469228055, 12.794858810765376, 12.794858810765376, 53.82887695186044,
        53.82887695186044, 197.242028734783, 2.741470470592379, 4.805752599412603, 6.569705193669302,
        8.221744046054491, 9.815546745296112, 11.37299150985629, 12.90521835073706}},
      {FigureId::Fig6,
       {7.180617945783421, 8.350049580891758, 9.568207606910402, 10.832447585318665, 12.14050340555306,
        13.490403510938064, 14.880411483648091, 16.308982425788503, 17.774730034772332, 19.276401176427388,
        20.812855868631758}},
  };
  for (const auto& e : all) {
    const auto pts = figure_data(e.id);
    if (pts.size() != e.values.size()) return to_string(e.id) + " point count";
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (std::fabs(pts[i].value - e.values[i]) > 1e-9)
        return to_string(e.id) + " " + pts[i].series + " at x=" + std::to_string(pts[i].x);
  }
  return {};
}

}  // namespace

std::vector<Permutation> check_generators(const ColoredTree& tree, bool corrupt) {
  auto gens = biggs_generators(tree);
  if (corrupt && !gens.empty()) {
    // Follow generator 0 by the transposition (0 2): 0 -> 1 -> 2 is no longer an involution.
    gens[0] = gens[0] * Permutation::from_cycles(gens[0].degree(), {{0, 2}});
  }
  return gens;
}

std::vector<CheckFailure> run_checks(CheckScope scope, const CheckOptions& options, std::ostream& log) {
  std::vector<Suite> suites = {
      {"tree_counts", tree_counts},       {"generator_involutions", involutions},
      {"rainbow_cycle", rainbow_cycle},   {"dihedral_groups", dihedral_suite},
      {"track_evaluate", track_evaluate}, {"relator_identity", relators},
      {"palindromes_fix_root", palindromes}, {"alt_sym_small", small_groups},
      {"girth_small", girth_small},       {"number_theory", number_theory},
  };
  if (scope == CheckScope::Full) {
    suites.push_back({"g32_order_girth_diameter", g32});
    suites.push_back({"table1_colors", table1});
    suites.push_back({"figure_points", figures});
  }
  std::vector<CheckFailure> failures;
  for (const auto& s : suites) {
    std::string detail;
    try {
      detail = s.run(options);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      log << "PASS " << s.name << "\n";
    } else {
      log << "FAIL " << s.name << ": " << detail << "\n";
      failures.push_back({s.name, detail});
    }
  }
  return failures;
}

}  // namespace biggs
