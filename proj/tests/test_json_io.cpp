#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "vkparity/json_io.hpp"
#include "vkparity/vassiliev.hpp"

using namespace vkp;

TEST(Json, ParityRoundTrip) {
  const auto m = parity_map(parse_gauss_code(fixtures::pretzel));
  const auto j = parity_to_json(m);
  EXPECT_EQ(parity_from_json(json::parse(j.dump())), m);
  EXPECT_EQ(parity_to_json(parity_map(parse_gauss_code(fixtures::trefoil))), json::parse(R"({"1":1,"2":-1})"));
}

TEST(Json, ProfileSchema) {
  const auto j = profile_to_json(invariant_profile(parse_gauss_code(fixtures::trefoil)));
  EXPECT_EQ(j.at("V").at("1"), 2);
  EXPECT_EQ(j.at("A").at("-1"), 1);
  EXPECT_EQ(j.at("VZ").at("1,2"), 0);
  EXPECT_EQ(j.at("VZ").at("1"), 2);
}

TEST(Json, ProfileRoundTrip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int max_index = 1 + static_cast<int>(seed % 4);
    const int max_order = 1 + static_cast<int>(seed % 3) % max_index;
    const auto p = invariant_profile(random_diagram({seed % 8, seed}), max_index, max_order);
    EXPECT_EQ(profile_from_json(json::parse(profile_to_json(p).dump())), p);
  }
}

TEST(Json, SumRoundTrip) {
  const auto s = s_tuple(parse_gauss_code(fixtures::miyazawa), {{1, 2}});
  const auto j = sum_to_json(s);
  ASSERT_TRUE(j.is_array());
  for (const auto& term : j) {
    EXPECT_TRUE(term.contains("coeff"));
    EXPECT_TRUE(term.contains("flat"));
  }
  EXPECT_EQ(sum_from_json(json::parse(j.dump())), s);
  EXPECT_EQ(sum_to_json(FormalSum{}), json::array());
}

TEST(Json, MoveRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto d = random_diagram({seed % 5, seed});
    for (const auto& m : enumerate_moves(d)) EXPECT_EQ(move_from_json(json::parse(move_to_json(m).dump())), m);
  }
}

TEST(Json, MoveDefaults) {
  const auto m = move_from_json(json::parse(R"({"kind":"R1_remove","site":[1]})"));
  EXPECT_EQ(m.kind, MoveKind::r1_remove);
  EXPECT_EQ(m.site, std::vector<int>{1});
  EXPECT_EQ(m.params, MoveParams{});
  EXPECT_THROW(move_from_json(json::parse(R"({"kind":"R9","site":[]})")), ParseError);
}

TEST(Json, Tuples) {
  EXPECT_EQ(parse_tuple("1,2"), (TupleSpec{{1, 2}}));
  EXPECT_EQ(parse_tuple("-3"), (TupleSpec{{-3}}));
  for (const char* bad : {"", "1,", ",1", "a", "1;2", "1,2x"}) EXPECT_THROW(parse_tuple(bad), BadTuple) << bad;
}
