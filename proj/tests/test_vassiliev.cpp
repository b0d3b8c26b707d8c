#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "vkparity/moves.hpp"
#include "vkparity/vassiliev.hpp"

using namespace vkp;

namespace {

SumFunctional s1() {
  return [](const GaussDiagram& k) { return s_index(k, 1); };
}

SumFunctional s12() {
  return [](const GaussDiagram& k) { return s_tuple(k, {{1, 2}}); };
}

FormalSum single(const std::string& code, std::int64_t c) {
  FormalSum s;
  s.add(code, c);
  return s;
}

}  // namespace

TEST(Resolve, Examples) {
  const auto d = parse_gauss_code(fixtures::trefoil);
  EXPECT_EQ(resolve(d, {}), d);
  const auto k = parse_gauss_code("O1+! O2- U1+! U2-");
  EXPECT_EQ(serialize(resolve(k, {{1, 1}})), "O1+ O2- U1+ U2-");
  EXPECT_EQ(serialize(resolve(k, {{1, -1}})), "U1- O2- O1- U2-");
}

TEST(Resolve, Errors) {
  const auto k = parse_gauss_code("O1+! O2- U1+! U2-");
  EXPECT_THROW(resolve(k, {}), IncompleteResolution);
  EXPECT_THROW(resolve(k, {{1, 0}}), IncompleteResolution);
  EXPECT_THROW(resolve(k, {{1, 1}, {2, 1}}), IncompleteResolution);
  EXPECT_THROW(resolve(k, {{1, 1}, {5, 1}}), IncompleteResolution);
}

TEST(Singularize, StoresPositiveResolution) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram({4, seed});
    const auto k = singularize(d, {1, 3});
    EXPECT_EQ(singular_labels(k), (std::vector<int>{1, 3}));
    Resolution r{{1, d.chord(1).sign}, {3, d.chord(3).sign}};
    EXPECT_EQ(resolve(k, r), d);
  }
}

TEST(SIndex, Trefoil) {
  const auto s = s_index(parse_gauss_code(fixtures::trefoil), 1);
  EXPECT_EQ(s, single("1 | 1", 2));
}

TEST(SIndex, EmptyLevels) {
  const auto d = parse_gauss_code(fixtures::trefoil);
  EXPECT_TRUE(s_index(d, 2).is_zero());
  EXPECT_TRUE(s_index(GaussDiagram{}, 1).is_zero());
}

TEST(SIndex, Errors) {
  EXPECT_THROW(s_index(GaussDiagram{}, 0), BadIndex);
  EXPECT_THROW(s_index(parse_gauss_code("O1+! U1+!"), 1), SingularChord);
  EXPECT_THROW(s_tuple(GaussDiagram{}, {{2, 1}}), BadTuple);
  EXPECT_THROW(s_tuple(GaussDiagram{}, {{0, 1}}), BadTuple);
}

TEST(STuple, LengthOneIsSIndex) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram({seed % 7, seed});
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(s_tuple(d, {{i}}), s_index(d, i));
  }
}

TEST(STuple, EmptyDiagram) { EXPECT_TRUE(s_tuple(GaussDiagram{}, {{1, 2}}).is_zero()); }

TEST(STuple, MiyazawaHasTwoSummands) {
  const auto d = parse_gauss_code(fixtures::miyazawa);
  EXPECT_EQ(v_set(d, 1), (std::vector<int>{2, 3}));
  EXPECT_EQ(v_set(d, 2), (std::vector<int>{4}));
  const auto s = s_tuple(d, {{1, 2}});
  ASSERT_EQ(s.size(), 2u);
  FormalSum expected;
  for (int b : {2, 3}) {
    expected.add(canonical_flat(flatten(smooth_all(d, {b, 4}))), d.chord(b).sign * d.chord(4).sign);
  }
  EXPECT_EQ(s, expected);
  for (const auto& [code, c] : s.terms()) EXPECT_EQ(std::abs(c), 1) << code;
}

TEST(STuple, StatesCountToVTuple) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_diagram({seed % 8, seed});
    for (const auto& z : v_tuples(3, 2)) EXPECT_EQ(s_tuple(d, z).state_count(), v_tuple_signed(d, z));
  }
}

TEST(STuple, ConventionIndependent) {
  const auto neg = IntConvention::standard().negated();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram({seed % 7, seed});
    EXPECT_EQ(s_index(d, 1, default_r3_budget, neg), s_index(d, 1));
    EXPECT_EQ(s_tuple(d, {{1, 2}}, default_r3_budget, neg), s_tuple(d, {{1, 2}}));
  }
}

TEST(Expand, OneSingularChord) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram({1 + seed % 5, seed});
    const auto k = singularize(d, {1});
    const auto expected = s_index(resolve(k, {{1, 1}}), 1) - s_index(resolve(k, {{1, -1}}), 1);
    EXPECT_EQ(expand_singular(k, s1()), expected);
  }
}

TEST(Expand, ZeroFunctional) {
  const auto k = singularize(parse_gauss_code(fixtures::trefoil), {1, 2});
  EXPECT_TRUE(expand_singular(k, [](const GaussDiagram&) { return FormalSum{}; }).is_zero());
}

TEST(Expand, NoSingularChords) {
  EXPECT_THROW(expand_singular(parse_gauss_code(fixtures::trefoil), s1()), NoSingularChords);
}

TEST(Expand, TwoSingularChordsKillSIndex) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram({2 + seed % 4, seed});
    const auto e = expand_singular(singularize(d, {1, 2}), s1());
    EXPECT_EQ(sum_compare(e, FormalSum{}), Comparison::equal) << serialize(d);
  }
}

TEST(Degree, SIndexAndSTuple) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto d = random_diagram({3 + seed % 3, seed});
    EXPECT_TRUE(degree_check(s1(), d, 2).all_zero()) << serialize(d);
    EXPECT_TRUE(degree_check(s12(), d, 3).all_zero()) << serialize(d);
  }
}

TEST(Degree, SubsetCountsAndSampling) {
  const auto d = random_diagram({5, 1});
  EXPECT_EQ(degree_check(s1(), d, 2).subsets.size(), 10u);
  const auto sampled = degree_check(s1(), d, 2, false, 7, 3);
  EXPECT_EQ(sampled.subsets.size(), 7u);
  for (const auto& s : sampled.subsets) EXPECT_EQ(s.labels.size(), 2u);
  EXPECT_THROW(degree_check(s1(), d, 6), BadIndex);
  EXPECT_THROW(degree_check(s1(), d, 0), BadIndex);
}

TEST(Degree, LowerOrderDoesNotVanish) {
  // S_1 is a genuine degree-one invariant: some single-chord expansions survive.
  const auto report = degree_check(s1(), parse_gauss_code(fixtures::trefoil), 1);
  EXPECT_FALSE(report.all_zero());
}

TEST(CaseThree, SingularizingATuple) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram({2 + seed % 5, seed});
    for (int x : v_set(d, 1)) {
      for (int y : v_set(d, 2)) {
        const auto k = singularize(d, {x, y});
        const auto expected = single(canonical_flat(flatten(smooth_all(d, {x, y}))), 4);
        EXPECT_EQ(sum_compare(expand_singular(k, s12()), expected), Comparison::equal);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Invariance, SIndexAlongWalks) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto start = random_diagram({seed % 6, seed});
    const auto w = random_walk(start, 30, seed, 6);
    GaussDiagram d = start;
    auto before = s_index(d, 1);
    for (const auto& m : w.trace) {
      d = apply_move(d, m);
      const auto after = s_index(d, 1);
      EXPECT_NE(sum_compare(before, after), Comparison::unequal) << serialize(d);
      before = after;
    }
  }
}

TEST(Invariance, STupleChangesUnderTriangleMove) {
  // Smoothing two chords of a triangle reconnects the three strands
  // differently on the two sides of the move, so S_(1,2) is not preserved.
  const auto before = parse_gauss_code(fixtures::s12_triangle_before);
  const MoveInstance m{MoveKind::r3, {0, 3, 6}, "2-1", {}};
  ASSERT_TRUE(is_applicable(before, m));
  const auto after = apply_move(before, m);
  EXPECT_EQ(serialize(after), fixtures::s12_triangle_after);
  EXPECT_EQ(parity_map(after), parity_map(before));
  EXPECT_EQ(oracle::normalized_bracket(after), oracle::normalized_bracket(before));
  EXPECT_EQ(sum_compare(s_index(before, 1), s_index(after, 1)), Comparison::equal);
  EXPECT_EQ(sum_compare(s_tuple(before, {{1, 2}}), s_tuple(after, {{1, 2}})), Comparison::unequal);
}
