#include <gtest/gtest.h>

#include <cmath>

#include "biggs/arithmetic.hpp"
#include "biggs/classifier.hpp"
#include "biggs/colored_tree.hpp"
#include "figure_data.hpp"
#include "oracles.hpp"
#include "table1_data.hpp"

using namespace biggs;

namespace {

char color_letter(TableColor c) {
  switch (c) {
    case TableColor::Violet: return 'V';
    case TableColor::Blue: return 'B';
    case TableColor::Red: return 'R';
    case TableColor::None: return '-';
  }
  return '?';
}

double meo_ln(double n) { return std::log(n * std::log(n) / std::log(2.0)); }

}  // namespace

TEST(Predict, Examples) {
  EXPECT_EQ(predict_type(4, 2), GroupType::Alternating);
  EXPECT_EQ(predict_type(3, 5), GroupType::Symmetric);
  EXPECT_EQ(predict_type(2, 7), GroupType::Dihedral);
  EXPECT_EQ(predict_type(6, 3), GroupType::Symmetric);
}

TEST(Table1, FactorizationsAndColorsMatchPrintedTable) {
  const auto reps = table1_report(7, 12, 2);
  ASSERT_EQ(reps.size(), 6u * 12u);
  for (const auto& rep : reps) {
    const auto& want = kTable1Factorizations[rep.radius - 1][rep.colors - 2];
    ASSERT_TRUE(rep.factorization.has_value());
    EXPECT_EQ(to_string(*rep.factorization), want) << rep.colors << "," << rep.radius;
    if (rep.colors == 2) {
      EXPECT_EQ(rep.color, TableColor::None);
      continue;
    }
    EXPECT_EQ(color_letter(rep.color), kTable1Colors[rep.radius - 1][rep.colors - 3]) << rep.colors << "," << rep.radius;
    if (rep.color == TableColor::Red) {
      ASSERT_TRUE(rep.projective.has_value());
      EXPECT_TRUE(rep.projective->empty());
      EXPECT_FALSE(rep.open_by_degree_test);
    } else {
      EXPECT_FALSE(rep.projective.has_value());
    }
  }
}

TEST(Table1, ReportIsRowMajorAndThreadIndependent) {
  const auto a = table1_report(5, 4, 1);
  const auto b = table1_report(5, 4, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].colors, static_cast<int>(2 + i % 4));
    EXPECT_EQ(a[i].radius, static_cast<int>(1 + i / 4));
    EXPECT_EQ(a[i].colors, b[i].colors);
    EXPECT_EQ(a[i].color, b[i].color);
    EXPECT_EQ(a[i].factorization, b[i].factorization);
  }
}

TEST(Table1, SpecificCells) {
  const auto c44 = classify(4, 4);
  EXPECT_EQ(c44.color, TableColor::Red);
  EXPECT_EQ(to_string(*c44.factorization), "7·23");
  EXPECT_TRUE(c44.projective->empty());
  EXPECT_EQ(classify(3, 7).color, TableColor::Blue);
  const auto c610 = classify(6, 10);
  EXPECT_EQ(c610.color, TableColor::Red);
  EXPECT_EQ(to_string(*c610.factorization), "1487·9851");
}

TEST(ColorProperties, NeverNoneForThreeOrMoreColors) {
  for (int c = 3; c <= 7; ++c)
    for (int r = 1; r <= 12; ++r) EXPECT_NE(table_color(c, r), TableColor::None);
  EXPECT_EQ(table_color(2, 5), TableColor::None);
}

TEST(ColorProperties, PrecedenceFollowsConditions) {
  for (int c = 3; c <= 12; ++c)
    for (int r = 2; r <= 12; ++r) {
      const auto got = table_color(c, r);
      if (primary_cycle_condition(c, r))
        EXPECT_EQ(got, TableColor::Violet);
      else if (secondary_cycle_condition(c, r))
        EXPECT_EQ(got, TableColor::Blue);
      else
        EXPECT_EQ(got, TableColor::Red);
    }
}

TEST(Witnesses, KnownCells) {
  const auto p32 = primary_cycle_witness(3, 2);
  ASSERT_TRUE(p32);
  EXPECT_EQ(p32->sub_colors, 2);
  EXPECT_EQ(p32->exponent, 3);
  EXPECT_EQ(p32->cycle_length, 5u);
  EXPECT_EQ(p32->fixed_points, 5u);
  const auto s32 = secondary_cycle_witness(3, 2);
  ASSERT_TRUE(s32);
  EXPECT_EQ(s32->exponent, 5);
  EXPECT_EQ(s32->cycle_length, 3u);
  EXPECT_EQ(s32->fixed_points, 7u);
  const auto p42 = primary_cycle_witness(4, 2);
  ASSERT_TRUE(p42);
  EXPECT_EQ(p42->exponent, 3);
  EXPECT_EQ(p42->cycle_length, 5u);
  EXPECT_EQ(p42->fixed_points, 12u);
  EXPECT_FALSE(primary_cycle_witness(3, 4));
  const auto s34 = secondary_cycle_witness(3, 4);
  ASSERT_TRUE(s34);
  EXPECT_EQ(s34->exponent, 135);
  EXPECT_EQ(s34->cycle_length, 7u);
  EXPECT_EQ(s34->fixed_points, 39u);
  EXPECT_TRUE(secondary_cycle_witness(3, 7));
  EXPECT_TRUE(secondary_cycle_witness(3, 3));
  EXPECT_FALSE(secondary_cycle_witness(4, 4));
  EXPECT_THROW(primary_cycle_witness(3, 1), ParameterError);
}

TEST(Witnesses, VerifyOnPermutationsUpToDegree1000) {
  for (int c = 3; c <= 40; ++c)
    for (int r = 2; vertex_count_formula(c, r) <= 1000; ++r) {
      const std::size_t n = static_cast<std::size_t>(vertex_count_formula(c, r));
      for (const auto& w : {primary_cycle_witness(c, r), secondary_cycle_witness(c, r)}) {
        if (!w) continue;
        const auto ct = cycle_type(w->element);
        ASSERT_EQ(w->element.degree(), n);
        EXPECT_EQ(ct.lengths.front(), w->cycle_length);
        EXPECT_TRUE(is_n_cycle(w->element, w->cycle_length));
        EXPECT_GE(w->cycle_length, 3u);
        EXPECT_GT(w->fixed_points, 2u);
        EXPECT_EQ(ct.count(1), w->fixed_points);
      }
      EXPECT_EQ(primary_cycle_witness(c, r).has_value(), primary_cycle_condition(c, r).has_value());
      EXPECT_EQ(secondary_cycle_witness(c, r).has_value(), secondary_cycle_condition(c, r));
    }
}

TEST(Verify, Examples) {
  const auto v32 = verify(3, 2);
  ASSERT_TRUE(v32.verified);
  EXPECT_EQ(v32.verified->type, GroupType::Symmetric);
  EXPECT_EQ(v32.verified->order, 3628800);
  const auto v42 = verify(4, 2);
  EXPECT_EQ(v42.verified->type, GroupType::Alternating);
  EXPECT_EQ(v42.verified->order, factorial(17) / 2);
  const auto v26 = verify(2, 6);
  EXPECT_EQ(v26.verified->type, GroupType::Dihedral);
  EXPECT_EQ(v26.verified->order, 26);
}

TEST(Verify, BeyondCapacityLeavesVerifiedEmpty) {
  ClassifyOptions opts;
  opts.verify = true;
  opts.witness_degree_limit = 0;
  const auto rep = classify(3, 12, opts);
  EXPECT_FALSE(rep.verified);
  EXPECT_EQ(rep.predicted_type, GroupType::Symmetric);
}

TEST(Figures, MatchPrintedCoordinates) {
  for (FigureId id : {FigureId::Fig3, FigureId::Fig4, FigureId::Fig5, FigureId::Fig6}) {
    const auto pts = figure_data(id);
    std::size_t expected = 0;
    for (const auto& s : kPrintedFigures) {
      if (s.id != id) continue;
      expected += s.points.size();
      for (auto [x, y] : s.points) {
        auto it = std::find_if(pts.begin(), pts.end(), [&](const FigurePoint& p) { return p.x == x && p.series == s.series; });
        ASSERT_NE(it, pts.end()) << to_string(id) << " " << s.series << " x=" << x;
        EXPECT_NEAR(it->value, y, 1e-9) << to_string(id) << " " << s.series << " x=" << x;
      }
    }
    EXPECT_EQ(pts.size(), expected);
  }
}

TEST(Figures, IndependentFormulas) {
  for (const auto& p : figure_data(FigureId::Fig3)) {
    const double n = static_cast<double>(oracle::ball_size(3, p.x));
    if (p.series == "meo_upper") {
      EXPECT_NEAR(p.value, meo_ln(n), 1e-9);
    } else {
      const double m = 2 * p.x + 1;
      const double lower = std::log(std::log(2.0) * std::exp((1 - 0.85 / std::log(m)) * m) / std::log(m));
      EXPECT_NEAR(p.value, lower, 1e-9);
    }
  }
  for (const auto& p : figure_data(FigureId::Fig6)) {
    const double below = static_cast<double>(oracle::ball_size(p.x - 1, 3));
    const double n = static_cast<double>(oracle::ball_size(p.x, 3));
    EXPECT_NEAR(p.value, std::sqrt(below * std::log(below)) / meo_ln(n), 1e-9);
  }
  EXPECT_FALSE(parse_figure_id("fig7"));
  EXPECT_EQ(parse_figure_id("fig5"), FigureId::Fig5);
}
