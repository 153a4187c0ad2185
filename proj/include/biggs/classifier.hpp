#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biggs/arithmetic.hpp"
#include "biggs/group.hpp"
#include "biggs/permutation.hpp"
#include "biggs/types.hpp"

namespace biggs {

/// Dihedral for C = 2, Alternating when C and R are both even, else Symmetric.
GroupType predict_type(int colors, int radius);

enum class TableColor { Violet, Blue, Red, None };
std::string to_string(TableColor c);

/// Violet when the primary condition holds (vacuously at R = 1), blue when
/// only the secondary one does, red when neither; none for C = 2.
TableColor table_color(int colors, int radius);

/// A power of a rainbow product that is a single long cycle plus fixed points.
struct CycleWitness {
  /// Number of leading colors in the product w = c1 c2 ... c_{C'}.
  int sub_colors = 0;
  BigInt exponent;
  std::size_t cycle_length = 0;
  std::size_t fixed_points = 0;
  Permutation element;  // w^exponent on T_{C,R}
};

/// w = c1...c_{C'} for the smallest primary column C', m = prod_{r<R} N_{C',r}.
/// Checks on the permutation that w^m is one N_{C',R}-cycle with more than two
/// fixed points (ContradictionError otherwise). Needs C >= 3, R >= 2.
std::optional<CycleWitness> primary_cycle_witness(int colors, int radius);

/// w = c1...c_{C-1}, m = prod_{r <= R, r != R-1} N_{C-1,r}; w^m must be one
/// N_{C-1,R-1}-cycle with more than two fixed points. Needs C >= 3, R >= 2.
std::optional<CycleWitness> secondary_cycle_witness(int colors, int radius);

struct ClassificationReport {
  int colors = 0;
  int radius = 0;
  BigInt n;
  GroupType predicted_type = GroupType::Other;
  TableColor color = TableColor::None;
  /// Empty when the factorization budget was exceeded.
  std::optional<Factorization> factorization;
  std::optional<int> primary_column;
  bool secondary_condition = false;
  std::optional<CycleWitness> primary_witness;
  std::optional<CycleWitness> secondary_witness;
  /// Filled for red cells only.
  std::optional<std::vector<ProjectiveMatch>> projective;
  /// Red cell whose degree does match a projective degree.
  bool open_by_degree_test = false;
  std::optional<GroupVerdict> verified;
};

struct ClassifyOptions {
  /// Build the tree and check the cycle witnesses when N is at most this.
  std::size_t witness_degree_limit = 5000;
  /// Run Schreier-Sims and compare with the prediction.
  bool verify = false;
};

/// Prediction, conditions, color and (within limits) witnesses for one cell.
/// With `verify`, a mismatch between prediction and the computed group throws
/// ContradictionError; a degree over kMaxGroupDegree leaves `verified` empty.
ClassificationReport classify(int colors, int radius, const ClassifyOptions& options = {});

/// classify() with verify on.
ClassificationReport verify(int colors, int radius);

/// Cells 2 <= C <= c_max, 1 <= R <= r_max, row-major by R. No witnesses.
std::vector<ClassificationReport> table1_report(int c_max, int r_max, int threads = 1);

enum class FigureId { Fig3, Fig4, Fig5, Fig6 };
std::optional<FigureId> parse_figure_id(std::string_view text);
std::string to_string(FigureId id);

struct FigurePoint {
  int x = 0;
  std::string series;
  double value = 0;
};

/// Plotted points, series by series, ascending x.
std::vector<FigurePoint> figure_data(FigureId id);

}  // namespace biggs
