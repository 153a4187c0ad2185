#include <gtest/gtest.h>

#include <random>

#include "biggs/arithmetic.hpp"
#include "biggs/cayley.hpp"
#include "biggs/colored_tree.hpp"
#include "biggs/frontier.hpp"
#include "biggs/permutation.hpp"
#include "biggs/word.hpp"
#include "oracles.hpp"

using namespace biggs;

namespace {

std::vector<Permutation> gens_of(int c, int r) { return biggs_generators(ColoredTree::build(c, r)); }

std::vector<oracle::Images> all_images(const std::vector<Permutation>& gens) {
  std::vector<oracle::Images> out;
  for (const auto& g : gens) out.emplace_back(g.images().begin(), g.images().end());
  return out;
}

void expect_kernels_agree(const std::vector<Permutation>& gens, SearchMode mode, const SearchBudget& b) {
  const SearchOutcome s = frontier_search_serial(gens, mode, b);
  for (int threads : {1, 2, 4}) {
    SearchBudget pb = b;
    pb.threads = threads;
    const SearchOutcome p = frontier_search_parallel(gens, mode, pb);
    EXPECT_EQ(s, p) << "threads=" << threads << " serial " << to_string(s.kind) << " " << s.value << "/"
                    << s.states_explored << "/" << s.depth_reached << " parallel " << to_string(p.kind) << " "
                    << p.value << "/" << p.states_explored << "/" << p.depth_reached;
  }
}

}  // namespace

TEST(Girth, Examples) {
  // Star transpositions on 4 points: levels of size 1, 3, 6, 9; the 6-cycle
  // closes on level 3 while level 2 is expanded.
  EXPECT_EQ(girth(gens_of(3, 1)), (SearchOutcome{OutcomeKind::Exact, 6, 19, 2}));
  const auto g23 = girth(gens_of(2, 3));
  EXPECT_EQ(g23.kind, OutcomeKind::Exact);
  EXPECT_EQ(g23.value, 14u);
  const auto g32 = girth(gens_of(3, 2));
  EXPECT_EQ(g32.kind, OutcomeKind::Exact);
  EXPECT_EQ(g32.value, 20u);
}

TEST(Girth, AgreesWithWordEnumeration) {
  for (int r = 1; r <= 5; ++r) {
    const auto g = gens_of(2, r);
    EXPECT_EQ(girth(g).value, oracle::girth_by_words(all_images(g), 4 * r + 4)) << r;
  }
  const auto g31 = gens_of(3, 1);
  EXPECT_EQ(girth(g31).value, oracle::girth_by_words(all_images(g31), 10));
  const auto g32 = gens_of(3, 2);
  EXPECT_EQ(girth(g32).value, oracle::girth_by_words(all_images(g32), 20));
}

TEST(Girth, RejectsNonInvolutions) {
  auto g = gens_of(3, 1);
  g[0] = g[0] * Permutation::from_cycles(4, {{0, 2}});
  EXPECT_THROW(girth(g), ContractError);
  auto dup = gens_of(3, 1);
  dup[1] = dup[0];
  EXPECT_THROW(diameter(dup), ContractError);
  EXPECT_THROW(girth(std::vector<Permutation>{Permutation::identity(3)}), ContractError);
}

TEST(Girth, BudgetYieldsCertifiedLowerBound) {
  SearchBudget b;
  b.depth_limit = 4;
  const auto g = girth(gens_of(3, 2), b);
  EXPECT_EQ(g.kind, OutcomeKind::LowerBoundOnly);
  EXPECT_EQ(g.value, 2 * g.depth_reached + 1);
  EXPECT_LE(g.value, 20u);
  SearchBudget s;
  s.max_states = 100;
  const auto h = girth(gens_of(3, 2), s);
  EXPECT_EQ(h.kind, OutcomeKind::LowerBoundOnly);
  EXPECT_LE(h.value, 20u);
  EXPECT_GE(h.value, 5u);
}

TEST(Diameter, Examples) {
  const auto d31 = diameter(gens_of(3, 1));
  EXPECT_EQ(d31, (SearchOutcome{OutcomeKind::Exact, 4, 24, 4}));
  EXPECT_GE(d31.value, moore_diameter_lower_bound(3, 24));
  EXPECT_EQ(diameter(gens_of(2, 5)).value, 11u);
  for (auto [c, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 1}}) {
    const auto g = gens_of(c, r);
    EXPECT_EQ(diameter(g).value, oracle::diameter_bfs(all_images(g)));
  }
}

TEST(Diameter, TruncatedIsLowerBound) {
  SearchBudget b;
  b.depth_limit = 3;
  const auto d = diameter(gens_of(3, 1), b);
  EXPECT_EQ(d.kind, OutcomeKind::LowerBoundOnly);
  EXPECT_EQ(d.value, 3u);
  b.depth_limit = 4;
  EXPECT_EQ(diameter(gens_of(3, 1), b).kind, OutcomeKind::Exact);
}

TEST(KernelEquivalence, BiggsGroups) {
  for (auto [c, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 5}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 2}, {3, 3}}) {
    const auto g = gens_of(c, r);
    SearchBudget b;
    b.max_states = 200'000;
    expect_kernels_agree(g, SearchMode::Girth, b);
    expect_kernels_agree(g, SearchMode::Diameter, b);
  }
}

TEST(KernelEquivalence, AcrossBudgets) {
  const auto g = gens_of(3, 2);
  for (std::size_t cap : {1u, 2u, 7u, 50u, 1000u, 3041u, 3042u, 3043u, 100000u})
    for (std::size_t depth : {1u, 3u, 8u, 9u, 64u}) {
      SearchBudget b;
      b.max_states = cap;
      b.depth_limit = depth;
      expect_kernels_agree(g, SearchMode::Girth, b);
      expect_kernels_agree(g, SearchMode::Diameter, b);
    }
}

// Random involution sets: hand-rolled generator with a fixed seed.
TEST(KernelEquivalence, RandomInvolutions) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    // Degree at most 7 keeps the closure oracle small.
    const std::size_t n = 3 + rng() % 5;
    // Degree 3 has only three involutions.
    const std::size_t k = 2 + rng() % (n == 3 ? 2 : 3);
    std::vector<Permutation> gens;
    while (gens.size() < k) {
      auto p = Permutation::from_images(oracle::random_involution(n, 1 + rng() % (n / 2), rng));
      if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(p);
    }
    SearchBudget b;
    b.max_states = 1 + rng() % 5000;
    b.depth_limit = 1 + rng() % 20;
    expect_kernels_agree(gens, SearchMode::Girth, b);
    expect_kernels_agree(gens, SearchMode::Diameter, b);
    SearchBudget full;
    const auto gir = frontier_search_serial(gens, SearchMode::Girth, full);
    ASSERT_EQ(gir.kind, OutcomeKind::Exact);
    EXPECT_EQ(gir.value, oracle::girth_by_words(all_images(gens), gir.value)) << trial;
    const auto dia = frontier_search_serial(gens, SearchMode::Diameter, full);
    EXPECT_EQ(dia.value, oracle::diameter_bfs(all_images(gens)));
    EXPECT_EQ(dia.states_explored, oracle::closure_order(all_images(gens)));
  }
}

TEST(GirthProperties, WithinBoundWindows) {
  for (auto [c, r] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 6}, {3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}, {5, 2}}) {
    const auto g = girth(gens_of(c, r));
    ASSERT_EQ(g.kind, OutcomeKind::Exact);
    EXPECT_GE(g.value, static_cast<std::size_t>(2 * r + 1));
    if (c == 2 || r == 1) EXPECT_EQ(g.value, static_cast<std::size_t>(4 * r + 2));
    if (c >= 3 && r >= 2) {
      const auto cmp = girth_bound_comparison(c, r);
      const BigInt upper = cmp.two_n < cmp.two_odd_lcm ? cmp.two_n : cmp.two_odd_lcm;
      EXPECT_GE(g.value, static_cast<std::size_t>(4 * r + 3));
      EXPECT_LE(BigInt(g.value), upper);
    }
  }
}

TEST(Moore, Examples) {
  EXPECT_EQ(moore_diameter_lower_bound(3, 1), 0u);
  EXPECT_EQ(moore_diameter_lower_bound(3, 24), 4u);
  const std::size_t d = moore_diameter_lower_bound(3, 3628800);
  EXPECT_LT(vertex_count_formula(3, static_cast<int>(d) - 1), 3628800);
  EXPECT_GE(vertex_count_formula(3, static_cast<int>(d)), 3628800);
}

TEST(Moore, MatchesIteration) {
  std::mt19937_64 rng(41);
  for (int c = 3; c <= 9; ++c)
    for (int trial = 0; trial < 40; ++trial) {
      BigInt order = 1 + (BigInt(rng()) << (rng() % 64)) + rng() % 1000;
      EXPECT_EQ(moore_diameter_lower_bound(c, order), oracle::moore_iterate(c, order));
    }
  for (int c = 3; c <= 6; ++c)
    for (int d = 0; d <= 30; ++d) {
      const BigInt n = vertex_count_formula(c, d);
      EXPECT_EQ(moore_diameter_lower_bound(c, n), static_cast<std::size_t>(d));
      EXPECT_EQ(moore_diameter_lower_bound(c, n + 1), static_cast<std::size_t>(d + 1));
    }
}

TEST(Ratio, IncreasingAndWellFormed) {
  std::vector<int> radii;
  for (int r = 2; r <= 12; ++r) radii.push_back(r);
  const auto rows = ratio_report(3, radii);
  ASSERT_EQ(rows.size(), radii.size());
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
  const std::vector<int> one = {2};
  const auto single = ratio_report(3, one);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].n, 10);
  EXPECT_EQ(single[0].girth_upper, 20);
  const auto nine = ratio_report(9, radii);
  bool odd_wins = false;
  for (const auto& row : nine) odd_wins = odd_wins || row.girth_upper < 2 * row.n;
  EXPECT_TRUE(odd_wins);
}
