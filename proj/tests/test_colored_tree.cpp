#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "biggs/colored_tree.hpp"
#include "oracles.hpp"

using namespace biggs;

namespace {

std::vector<std::size_t> component_sizes(const ColoredTree& t, std::vector<Color> colors) {
  std::vector<std::size_t> sizes;
  for (const auto& comp : t.color_components(colors)) sizes.push_back(comp.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace

TEST(VertexCount, ClosedFormMatchesLevelSum) {
  for (int c = 2; c <= 20; ++c)
    for (int r = 0; r <= 15; ++r) EXPECT_EQ(vertex_count_formula(c, r), oracle::ball_size(c, r)) << c << "," << r;
}

TEST(VertexCount, Examples) {
  EXPECT_EQ(vertex_count_formula(3, 2), 10);
  EXPECT_EQ(vertex_count_formula(7, 2), 50);
  EXPECT_EQ(vertex_count_formula(2, 5), 11);
  EXPECT_EQ(edge_count_formula(3, 2), 3);
  EXPECT_EQ(edge_count_formula(2, 4), 4);
  EXPECT_EQ(edge_count_formula(4, 2), 4);
}

TEST(VertexCount, BigValuesAreExact) {
  // 3 * 2^100 - 2
  BigInt expect = BigInt(3) * (BigInt(1) << 100) - 2;
  EXPECT_EQ(vertex_count_formula(3, 100), expect);
  EXPECT_EQ(edge_count_formula(3, 100), (expect - 1) / 3);
}

TEST(BuildTree, RejectsBadParameters) {
  EXPECT_THROW(ColoredTree::build(1, 2), ParameterError);
  EXPECT_THROW(ColoredTree::build(3, 0), ParameterError);
  EXPECT_THROW(ColoredTree::build(3, 40), CapacityError);
}

TEST(BuildTree, T31MatchesFigure) {
  const auto t = ColoredTree::build(3, 1);
  ASSERT_EQ(t.vertex_count(), 4u);
  for (std::uint32_t c = 0; c < 3; ++c) {
    EXPECT_EQ(t.neighbor(0, color(c)), (Step{c + 1, false}));
    EXPECT_EQ(t.mirrors(c + 1).size(), 2u);
  }
  EXPECT_EQ(t.neighbor(1, color(1)), (Step{1, true}));
  EXPECT_TRUE(t.mirrors(0).empty());
}

TEST(BuildTree, T32ParentsAreCanonical) {
  const auto t = ColoredTree::build(3, 2);
  const std::vector<std::optional<DownEdge>> want = {
      std::nullopt,
      DownEdge{0, color(0)},
      DownEdge{0, color(1)},
      DownEdge{0, color(2)},
      DownEdge{1, color(1)},
      DownEdge{1, color(2)},
      DownEdge{2, color(0)},
      DownEdge{2, color(2)},
      DownEdge{3, color(0)},
      DownEdge{3, color(1)},
  };
  ASSERT_EQ(t.vertex_count(), want.size());
  for (Vertex v = 0; v < want.size(); ++v) EXPECT_EQ(t.parent(v), want[v]) << v;
}

TEST(BuildTree, C2IsAPath) {
  const auto t = ColoredTree::build(2, 3);
  ASSERT_EQ(t.vertex_count(), 7u);
  const auto b = t.boundary();
  ASSERT_EQ(b.size(), 2u);
  for (Vertex v : b) EXPECT_EQ(t.mirrors(v).size(), 1u);
  // Walking from one end by alternating colors visits every vertex once.
  Vertex v = b[0];
  Color c = t.parent(v)->color;
  std::vector<Vertex> seen{v};
  for (int i = 0; i < 6; ++i) {
    v = t.neighbor(v, c).to;
    seen.push_back(v);
    c = color(1 - index_of(c));
  }
  EXPECT_EQ(v, b[1]);
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::unique(seen.begin(), seen.end()), seen.end());
}

// Structural invariants over the desk-scale range.
TEST(TreeProperties, CountsMirrorsAndInvolutiveNeighbors) {
  for (int c = 2; c <= 7; ++c) {
    for (int r = 1; r <= 8; ++r) {
      if (vertex_count_formula(c, r) > 2'000'000) continue;
      const auto t = ColoredTree::build(c, r);
      ASSERT_EQ(BigInt(t.vertex_count()), vertex_count_formula(c, r));
      std::vector<std::size_t> edges(c, 0);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        const int h = t.height(v);
        std::size_t up = 0;
        for (int k = 0; k < c; ++k) {
          const Step s = t.neighbor(v, color(k));
          ASSERT_EQ(t.neighbor(s.to, color(k)).to, v);
          if (!s.mirrored && s.to > v) {
            ++edges[k];
            ++up;
          }
        }
        const std::size_t mirrors = t.mirrors(v).size();
        if (h == 0) {
          EXPECT_EQ(up, static_cast<std::size_t>(c));
          EXPECT_EQ(mirrors, 0u);
        } else if (h < r) {
          EXPECT_EQ(up, static_cast<std::size_t>(c - 1));
          EXPECT_EQ(mirrors, 0u);
        } else {
          EXPECT_EQ(up, 0u);
          EXPECT_EQ(mirrors, static_cast<std::size_t>(c - 1));
        }
      }
      for (int k = 0; k < c; ++k) EXPECT_EQ(BigInt(edges[k]), edge_count_formula(c, r)) << c << "," << r;
    }
  }
}

TEST(TreeProperties, GeodesicColorsAreReducedAndReachTarget) {
  const auto t = ColoredTree::build(3, 2);
  for (Vertex u = 0; u < t.vertex_count(); ++u)
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      const auto cs = t.geodesic_colors(u, v);
      Vertex x = u;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i > 0) EXPECT_NE(cs[i], cs[i - 1]);
        x = t.neighbor(x, cs[i]).to;
      }
      EXPECT_EQ(x, v);
    }
}

TEST(Components, Examples) {
  EXPECT_EQ(component_sizes(ColoredTree::build(3, 2), {color(0), color(1)}),
            (std::vector<std::size_t>{5, 3, 1, 1}));
  EXPECT_EQ(component_sizes(ColoredTree::build(4, 2), {color(0), color(1)}),
            (std::vector<std::size_t>{5, 3, 3, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(component_sizes(ColoredTree::build(2, 6), {color(0), color(1)}), (std::vector<std::size_t>{13}));
  const auto t = ColoredTree::build(3, 1);
  EXPECT_THROW(t.color_components(std::vector<Color>{color(0)}), ParameterError);
}

TEST(Components, SizesAreBallSizesWithUniqueLargest) {
  for (int c = 3; c <= 6; ++c)
    for (int r = 1; r <= 4; ++r) {
      const auto t = ColoredTree::build(c, r);
      for (int k = 2; k <= c; ++k) {
        std::vector<Color> cols;
        for (int i = 0; i < k; ++i) cols.push_back(color(i));
        const auto comps = t.color_components(cols);
        std::size_t total = 0;
        int at_r = 0;
        for (const auto& comp : comps) {
          total += comp.size();
          bool ok = false;
          for (int rr = 0; rr <= r; ++rr)
            if (BigInt(comp.size()) == vertex_count_formula(k, rr)) {
              ok = true;
              if (rr == r) ++at_r;
            }
          EXPECT_TRUE(ok) << comp.size();
        }
        EXPECT_EQ(total, t.vertex_count());
        EXPECT_EQ(at_r, 1);
        EXPECT_EQ(comps.front().front(), 0u);
        EXPECT_EQ(BigInt(comps.front().size()), vertex_count_formula(k, r));
      }
    }
}
