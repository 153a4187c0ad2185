#include "biggs/classifier.hpp"

#include <cmath>
#include <numbers>

#include "biggs/colored_tree.hpp"
#include "biggs/word.hpp"

namespace biggs {
namespace {

void require_cell(int colors, int radius) {
  if (colors < 2) throw ParameterError("C must be at least 2");
  if (radius < 1) throw ParameterError("R must be at least 1");
}

// w = c1 c2 ... c_k on T_{C,R}, raised to m, checked to be a single
// `expected`-cycle with more than two fixed points.
CycleWitness rainbow_power_witness(const ColoredTree& tree, int k, const BigInt& m, const BigInt& expected) {
  const auto gens = biggs_generators(tree);
  const Permutation w = evaluate(rainbow_word(k), gens);
  CycleWitness out;
  out.sub_colors = k;
  out.exponent = m;
  out.element = power(w, m);
  const auto length = expected.convert_to<std::size_t>();
  out.cycle_length = length;
  out.fixed_points = fixed_points(out.element).size();
  const std::string cell = "(" + std::to_string(tree.color_count()) + "," + std::to_string(tree.radius()) + ")";
  if (length < 3 || !is_n_cycle(out.element, length))
    throw ContradictionError("cycle witness at " + cell + " is not a single " + expected.str() + "-cycle");
  if (out.fixed_points <= 2) throw ContradictionError("cycle witness at " + cell + " has at most two fixed points");
  return out;
}

}  // namespace

GroupType predict_type(int colors, int radius) {
  require_cell(colors, radius);
  if (colors == 2) return GroupType::Dihedral;
  if (colors % 2 == 0 && radius % 2 == 0) return GroupType::Alternating;
  return GroupType::Symmetric;
}

std::string to_string(TableColor c) {
  switch (c) {
    case TableColor::Violet: return "violet";
    case TableColor::Blue: return "blue";
    case TableColor::Red: return "red";
    case TableColor::None: return "none";
  }
  return "?";
}

TableColor table_color(int colors, int radius) {
  require_cell(colors, radius);
  if (colors == 2) return TableColor::None;
  if (primary_cycle_condition(colors, radius)) return TableColor::Violet;
  if (radius >= 2 && secondary_cycle_condition(colors, radius)) return TableColor::Blue;
  return TableColor::Red;
}

std::optional<CycleWitness> primary_cycle_witness(int colors, int radius) {
  if (colors < 3 || radius < 2) throw ParameterError("cycle witnesses need C >= 3 and R >= 2");
  const auto cp = primary_cycle_condition(colors, radius);
  if (!cp) return std::nullopt;
  BigInt m = 1;
  for (int r = 1; r < radius; ++r) m *= vertex_count_formula(*cp, r);
  const ColoredTree tree = ColoredTree::build(colors, radius);
  return rainbow_power_witness(tree, *cp, m, vertex_count_formula(*cp, radius));
}

std::optional<CycleWitness> secondary_cycle_witness(int colors, int radius) {
  if (colors < 3 || radius < 2) throw ParameterError("cycle witnesses need C >= 3 and R >= 2");
  if (!secondary_cycle_condition(colors, radius)) return std::nullopt;
  const int cp = colors - 1;
  BigInt m = 1;
  for (int r = 1; r <= radius; ++r)
    if (r != radius - 1) m *= vertex_count_formula(cp, r);
  const ColoredTree tree = ColoredTree::build(colors, radius);
  return rainbow_power_witness(tree, cp, m, vertex_count_formula(cp, radius - 1));
}

ClassificationReport classify(int colors, int radius, const ClassifyOptions& options) {
  require_cell(colors, radius);
  ClassificationReport rep;
  rep.colors = colors;
  rep.radius = radius;
  rep.n = vertex_count_formula(colors, radius);
  rep.predicted_type = predict_type(colors, radius);
  if (rep.n >= 2) {
    try {
      rep.factorization = factorize(rep.n);
    } catch (const PartialFactorizationError&) {
      rep.factorization.reset();
    }
  }
  if (colors >= 3) {
    rep.primary_column = primary_cycle_condition(colors, radius);
    rep.secondary_condition = radius >= 2 && secondary_cycle_condition(colors, radius);
  }
  rep.color = table_color(colors, radius);
  if (rep.color == TableColor::Red) {
    rep.projective = projective_matches(rep.n);
    rep.open_by_degree_test = !rep.projective->empty();
  }
  if (colors >= 3 && radius >= 2 && rep.n <= options.witness_degree_limit) {
    rep.primary_witness = primary_cycle_witness(colors, radius);
    rep.secondary_witness = secondary_cycle_witness(colors, radius);
  }
  if (options.verify && rep.n <= kMaxGroupDegree) {
    const ColoredTree tree = ColoredTree::build(colors, radius);
    const auto gens = biggs_generators(tree);
    const BaseStrongGenSet bsgs = schreier_sims(gens);
    GroupVerdict verdict = classify_alt_sym(bsgs, gens);
    if (verdict.type != rep.predicted_type)
      throw ContradictionError("G_{" + std::to_string(colors) + "," + std::to_string(radius) + "} computed as " +
                               to_string(verdict.type) + " but predicted " + to_string(rep.predicted_type));
    rep.verified = std::move(verdict);
  }
  return rep;
}

ClassificationReport verify(int colors, int radius) {
  ClassifyOptions options;
  options.verify = true;
  return classify(colors, radius, options);
}

std::vector<ClassificationReport> table1_report(int c_max, int r_max, int threads) {
  if (c_max < 2 || r_max < 1) throw ParameterError("table needs C_max >= 2 and R_max >= 1");
  const int width = c_max - 1;
  const int cells = width * r_max;
  std::vector<ClassificationReport> out(static_cast<std::size_t>(cells));
  ClassifyOptions options;
  options.witness_degree_limit = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int k = 0; k < cells; ++k) out[static_cast<std::size_t>(k)] = classify(2 + k % width, 1 + k / width, options);
  return out;
}

std::optional<FigureId> parse_figure_id(std::string_view text) {
  if (text == "fig3") return FigureId::Fig3;
  if (text == "fig4") return FigureId::Fig4;
  if (text == "fig5") return FigureId::Fig5;
  if (text == "fig6") return FigureId::Fig6;
  return std::nullopt;
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::Fig3: return "fig3";
    case FigureId::Fig4: return "fig4";
    case FigureId::Fig5: return "fig5";
    case FigureId::Fig6: return "fig6";
  }
  return "?";
}

std::vector<FigurePoint> figure_data(FigureId id) {
  std::vector<FigurePoint> pts;
  auto n_of = [](int c, int r) { return vertex_count_formula(c, r).convert_to<double>(); };
  auto ln_landau = [](int c, int r) {
    return ln_big(landau(vertex_count_formula(c, r).convert_to<unsigned>()));
  };
  switch (id) {
    case FigureId::Fig3:
      for (int r = 1; r <= 9; ++r) pts.push_back({r, "ord_lower", ord_c1c2_lower_ln(r)});
      for (int r = 1; r <= 9; ++r) pts.push_back({r, "meo_upper", meo_pgammal_upper_ln(n_of(3, r))});
      break;
    case FigureId::Fig4:
      for (int r = 1; r <= 7; ++r) pts.push_back({r, "ln_landau", ln_landau(3, r)});
      for (int r = 1; r <= 7; ++r) pts.push_back({r, "meo_upper", meo_pgammal_upper_ln(n_of(4, r))});
      break;
    case FigureId::Fig5:
      for (int r = 1; r <= 7; ++r) pts.push_back({r, "ln_landau", ln_landau(4, r % 2 == 1 ? r : r - 1)});
      for (int r = 1; r <= 7; ++r) pts.push_back({r, "meo_upper", meo_pgammal_upper_ln(n_of(5, r))});
      break;
    case FigureId::Fig6:
      for (int c = 10; c <= 20; ++c) {
        const double below = n_of(c - 1, 3);
        pts.push_back({c, "ratio", sqrt_n_ln_n(below) / meo_pgammal_upper_ln(n_of(c, 3))});
      }
      break;
  }
  return pts;
}

}  // namespace biggs
