#include <gtest/gtest.h>

#include <random>

#include "biggs/colored_tree.hpp"
#include "biggs/permutation.hpp"
#include "biggs/word.hpp"
#include "oracles.hpp"

using namespace biggs;

namespace {

Permutation from(const oracle::Images& im) { return Permutation::from_images(im); }

oracle::Images images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation::from_images({0, 0, 1}), ParameterError);
  EXPECT_THROW(Permutation::from_images({0, 3, 1}), ParameterError);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 0}}), ParameterError);
  EXPECT_THROW(compose(Permutation::identity(2), Permutation::identity(3)), ParameterError);
}

TEST(Permutation, ComposeActsOnTheRight) {
  const auto p = Permutation::from_cycles(3, {{0, 1}});
  const auto q = Permutation::from_cycles(3, {{1, 2}});
  // 0 -p-> 1 -q-> 2
  EXPECT_EQ((p * q)(0), 2u);
  EXPECT_EQ(compose(Permutation::identity(3), p), p);
  EXPECT_TRUE(compose(p, p.inverse()).is_identity());
}

TEST(Permutation, TextRoundTrip) {
  const auto p = Permutation::from_cycles(8, {{0, 1}, {2, 5, 7}});
  EXPECT_EQ(to_cycle_string(p), "(0 1)(2 5 7)");
  EXPECT_EQ(to_cycle_string(Permutation::identity(4)), "()");
  EXPECT_EQ(to_image_string(Permutation::from_images({0, 2, 1})), "[0 2 1]");
  EXPECT_EQ(parse_cycle_string(to_cycle_string(p), 8), p);
  EXPECT_EQ(parse_image_string(to_image_string(p)), p);
  EXPECT_THROW(parse_image_string("0 1"), ParameterError);
  EXPECT_THROW(parse_cycle_string("(0 1", 3), ParameterError);
}

TEST(Permutation, CycleDataExamples) {
  EXPECT_EQ(order(Permutation::identity(5)), 1);
  const auto t = ColoredTree::build(3, 2);
  const auto gens = biggs_generators(t);
  EXPECT_EQ(sign(gens[0]), -1);
  EXPECT_EQ(support_size(gens[0]), 6u);
  EXPECT_EQ(cycle_type(gens[0] * gens[1]).lengths, (std::vector<std::size_t>{5, 3, 1, 1}));
  EXPECT_EQ(order(gens[0] * gens[1]), 15);
  EXPECT_TRUE(is_n_cycle(gens[0] * gens[1] * gens[2], 10));
  EXPECT_FALSE(is_n_cycle(gens[0], 2));
}

TEST(Generators, T31RedIsTransposition01) {
  const auto t = ColoredTree::build(3, 1);
  EXPECT_EQ(generator_perm(t, color(0)), Permutation::from_cycles(4, {{0, 1}}));
}

TEST(Generators, InvolutionsWithTwoESupportAndParity) {
  for (int c = 2; c <= 8; ++c)
    for (int r = 1; r <= 8; ++r) {
      if (vertex_count_formula(c, r) > 300'000) continue;
      const auto t = ColoredTree::build(c, r);
      const BigInt e = edge_count_formula(c, r);
      bool all_even = true;
      for (const auto& g : biggs_generators(t)) {
        EXPECT_TRUE((g * g).is_identity());
        EXPECT_EQ(BigInt(support_size(g)), 2 * e);
        EXPECT_EQ(sign(g) == 1, e % 2 == 0);
        all_even = all_even && sign(g) == 1;
      }
      if (c >= 3) EXPECT_EQ(all_even, c % 2 == 0 && r % 2 == 0) << c << "," << r;
    }
}

// Hand-rolled generators: random permutations from a fixed seed.
TEST(PermutationProperties, AssociativityAndInverseOfProduct) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const auto p = from(oracle::random_images(n, rng));
    const auto q = from(oracle::random_images(n, rng));
    const auto s = from(oracle::random_images(n, rng));
    EXPECT_EQ((p * q) * s, p * (q * s));
    EXPECT_EQ((p * q).inverse(), q.inverse() * p.inverse());
    EXPECT_EQ(images(p * q), oracle::compose(images(p), images(q)));
  }
}

TEST(PermutationProperties, OrderIsLeastPowerToIdentity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const auto im = oracle::random_images(n, rng);
    const auto p = from(im);
    const BigInt ord = order(p);
    if (ord > 10'000) continue;
    EXPECT_EQ(ord, oracle::element_order(im));
    EXPECT_TRUE(power(p, ord).is_identity());
  }
}

TEST(PermutationProperties, PowerAgreesWithRepeatedProduct) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 20;
    const auto p = from(oracle::random_images(n, rng));
    const int k = static_cast<int>(rng() % 25) - 12;
    Permutation want = Permutation::identity(n);
    const Permutation step = k >= 0 ? p : p.inverse();
    for (int i = 0; i < std::abs(k); ++i) want = want * step;
    EXPECT_EQ(power(p, k), want);
  }
}

TEST(PermutationProperties, CycleTypeSumsToDegreeAndSignMatchesParity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const auto p = from(oracle::random_images(n, rng));
    const auto ct = cycle_type(p);
    std::size_t sum = 0, even_cycles = 0;
    for (auto l : ct.lengths) {
      sum += l;
      if (l % 2 == 0) ++even_cycles;
    }
    EXPECT_EQ(sum, n);
    EXPECT_EQ(sign(p), even_cycles % 2 == 0 ? 1 : -1);
    EXPECT_EQ(fixed_points(p).size(), ct.count(1));
    EXPECT_EQ(support_size(p), n - ct.count(1));
  }
}
