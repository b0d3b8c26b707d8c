#include <gtest/gtest.h>

#include <random>

#include "vkparity/formal_sum.hpp"

using namespace vkp;

namespace {

FormalSum random_sum(std::mt19937_64& rng) {
  static const std::vector<std::string> codes{"", "|", "1 | 1", "1 2 | 1 2", "| |", "1 2 3 1 2 3"};
  FormalSum s;
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& c : codes) s.add(c, coeff(rng));
  return s;
}

}  // namespace

TEST(FormalSum, ZeroAndPruning) {
  FormalSum s;
  EXPECT_TRUE(sum_is_zero(s));
  s.add("1 | 1", 2);
  s.add("1 | 1", -2);
  EXPECT_TRUE(s.is_zero());
  s.add("|", 0);
  EXPECT_TRUE(s.is_zero());
}

TEST(FormalSum, NegationCancels) {
  FormalSum a;
  a.add("1 | 1", 2);
  a.add("|", -1);
  EXPECT_TRUE(sum_is_zero(sum_add(a, sum_scale(a, -1))));
  EXPECT_EQ(a.coefficient("1 | 1"), 2);
  EXPECT_EQ(a.coefficient("nothing"), 0);
  EXPECT_EQ(a.state_count(), 1);
}

TEST(FormalSum, GroupLaws) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_sum(rng);
    const auto b = random_sum(rng);
    const auto c = random_sum(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a + (-1) * a).is_zero());
    EXPECT_EQ(a + FormalSum{}, a);
    EXPECT_EQ(sum_scale(a + b, 3), sum_scale(a, 3) + sum_scale(b, 3));
    const auto sum = a + b;
    for (const auto& [k, v] : sum.terms()) EXPECT_NE(v, 0);
  }
}

TEST(FormalSum, SelfAddition) {
  FormalSum a;
  a.add("|", 2);
  a.add("1 | 1", -1);
  a += a;
  EXPECT_EQ(a.coefficient("|"), 4);
  EXPECT_EQ(a.coefficient("1 | 1"), -2);
}

TEST(Compare, Equal) {
  std::mt19937_64 rng(3);
  const auto a = random_sum(rng);
  EXPECT_EQ(sum_compare(a, a), Comparison::equal);
  EXPECT_EQ(sum_compare(FormalSum{}, FormalSum{}), Comparison::equal);
}

TEST(Compare, EqualAfterNormalization) {
  FormalSum a;
  a.add("1 1 | 2 2", 1);
  FormalSum b;
  b.add("|", 1);
  EXPECT_EQ(sum_compare(a, b), Comparison::equal);
}

TEST(Compare, DifferentCircleCounts) {
  FormalSum a;
  a.add("|", 1);
  FormalSum b;
  b.add("", 1);
  EXPECT_EQ(sum_compare(a, b), Comparison::unequal);
  EXPECT_EQ(sum_compare(a, FormalSum{}), Comparison::unequal);
}

TEST(Compare, CancellingResidualsWithinOneSignature) {
  // Same signature, no flat move relates them within budget, coefficients cancel per class.
  FormalSum a;
  a.add("1 2 3 1 2 3", 1);
  FormalSum b;
  b.add("1 2 3 1 2 3", 1);
  b.add("|", 1);
  b.add("| |", -1);
  EXPECT_EQ(sum_compare(a, b), Comparison::unequal);
}

TEST(Compare, ToString) {
  EXPECT_EQ(to_string(Comparison::equal), "equal");
  EXPECT_EQ(to_string(Comparison::unequal), "unequal");
  EXPECT_EQ(to_string(Comparison::unknown), "unknown");
}
