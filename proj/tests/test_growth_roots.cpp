#include <catch2/catch_amalgamated.hpp>

#include <nvcalc/nvcalc.hpp>

#include "oracle_v.hpp"

using namespace nvcalc;

namespace {

MultiAddress addr(std::initializer_list<const char*> words) {
  std::vector<BinaryWord> ws;
  for (const char* s : words) {
    ws.emplace_back(std::string(s) == "e" ? BinaryWord() : BinaryWord(s));
  }
  return MultiAddress(std::move(ws));
}

Pattern pat(int arity, std::initializer_list<std::initializer_list<const char*>> blocks) {
  Pattern p;
  p.arity = arity;
  for (const auto& b : blocks) p.blocks.push_back(addr(b));
  return p;
}

Element staircase() {
  return make_element(pat(1, {{"0"}, {"10"}, {"11"}}), pat(1, {{"00"}, {"01"}, {"1"}}), {0, 1, 2});
}

Element order_four() {
  return make_element(pat(1, {{"0"}, {"10"}, {"11"}}), pat(1, {{"00"}, {"01"}, {"1"}}), {2, 1, 0});
}

Element block_swap() {
  return make_identical_pair_element(pat(1, {{"0"}, {"1"}}), {1, 0});
}

}  // namespace

TEST_CASE("growth profile of a linearly growing element", "[growth]") {
  const auto rows = power_profile(staircase(), 12);
  REQUIRE(rows.size() == 12);
  for (const auto& r : rows) {
    CHECK(r.Tp == r.i + 1);
    CHECK(r.Tp_red == r.i + 1);
    CHECK(r.Cp == 1);
    CHECK(r.Dp == r.i);
    CHECK(r.I == r.i - 1);
    CHECK(r.R == 0);
    CHECK(r.m == r.i + 2);
    CHECK(r.m_red == r.i + 2);
    if (r.i >= 2) CHECK(classify_step(r) == StepCase::case_1);
  }
  CHECK(monotone_growth_check(rows, 12) == 1);
  CHECK(monotone_growth_check(rows, 13) == std::nullopt);
}

TEST_CASE("growth profile cross-checked against the string oracle", "[growth]") {
  const auto rows = power_profile(staircase(), 8);
  oracle::Rules r{{"0", "00"}, {"10", "01"}, {"11", "1"}};
  for (const auto& row : rows) {
    const auto reduced = oracle::power(r, static_cast<int>(row.i));
    CHECK(row.m_red == static_cast<long long>(reduced.size()));
  }
}

TEST_CASE("growth profile of torsion elements collapses under reduction", "[growth]") {
  const auto rows = power_profile(block_swap(), 6);
  // Even powers are the identity in a 2-block presentation; odd powers are
  // the swap itself.
  for (const auto& r : rows) {
    CHECK(r.Tp == 1);
    CHECK(r.m == 2);
    CHECK(r.Cp == 1);
    CHECK(r.Dp == 0);
    CHECK(r.I == 0);
    if (r.i % 2 == 0) {
      CHECK(r.Tp_red == 0);
      CHECK(r.m_red == 1);
      CHECK(r.R == 1);
      CHECK(classify_step(r) == StepCase::case_3);
    } else {
      CHECK(r.Tp_red == 1);
      CHECK(r.m_red == 2);
      CHECK(r.R == 0);
      if (r.i >= 2) CHECK(classify_step(r) == StepCase::case_2);
    }
  }
  CHECK(monotone_growth_check(rows, 2) == std::nullopt);

  // The order-4 element reduces nothing at its certificate power.
  const auto g_rows = power_profile(order_four(), 4);
  CHECK(g_rows[1].R == 0);
  CHECK(g_rows[1].I == 1);
  CHECK(classify_step(g_rows[1]) == StepCase::case_1);
}

TEST_CASE("identity profile is flat", "[growth]") {
  const auto rows = power_profile(identity_element(2), 3);
  for (const auto& r : rows) {
    CHECK(r.Tp == 0);
    CHECK(r.Tp_red == 0);
    CHECK(r.m == 1);
    CHECK(r.m_red == 1);
    if (r.i >= 2) CHECK(classify_step(r) == StepCase::case_2);
  }
  CHECK(power_profile(identity_element(2), 0).empty());
  CHECK_THROWS_AS(classify_step(rows[0]), std::invalid_argument);
}

TEST_CASE("pattern enumeration counts", "[roots]") {
  CHECK(enumerate_patterns(1, 1).size() == 1);
  CHECK(enumerate_patterns(1, 3).size() == 4);   // 1 + 1 + 2
  CHECK(enumerate_patterns(1, 4).size() == 9);   // + 5 of size 4
  CHECK(enumerate_patterns(2, 3).size() == 11);  // 1 + 2 + 8
  for (const auto& p : enumerate_patterns(2, 3)) CHECK(validate_pattern(p).ok());
  CHECK_THROWS_AS(enumerate_patterns(2, 6, 10), enumeration_too_large);
}

TEST_CASE("root search finds the square root of the double staircase", "[roots]") {
  const Element a = staircase();
  const Element a2 = power(a, 2, true);
  const auto hits = root_search(a2, 3, 8);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].t == 2);
  CHECK(equals(hits[0].root, a));
  CHECK(is_root(hits[0].root, a2, hits[0].t));
}

TEST_CASE("root search of a primitive element comes up empty", "[roots]") {
  CHECK(root_search(staircase(), 3, 8).empty());
}

TEST_CASE("root search over the identity lists all torsion hits", "[roots]") {
  const auto hits = root_search(identity_element(1), 2, 3);
  // Candidates: identity on one block (t = 2, 3), identity presented on two
  // blocks (t = 2, 3), and the block swap (t = 2 only).
  CHECK(hits.size() == 5);
  int swap_hits = 0;
  for (const auto& h : hits) {
    CHECK(is_root(h.root, identity_element(1), h.t));
    if (equals(h.root, block_swap())) {
      ++swap_hits;
      CHECK(h.t == 2);
    }
  }
  CHECK(swap_hits == 1);
}

TEST_CASE("root search refuses oversized enumerations", "[roots]") {
  try {
    root_search(staircase(), 3, 8, 10);
    FAIL("expected enumeration_too_large");
  } catch (const enumeration_too_large& e) {
    CHECK(e.estimate() == 27);  // 1*1 + 1*2 + 4*6
  }
  try {
    root_search(identity_element(2), 3, 4, 392);
    FAIL("expected enumeration_too_large");
  } catch (const enumeration_too_large& e) {
    CHECK(e.estimate() == 393);  // 1*1 + 4*2 + 64*6
  }
  CHECK_THROWS_AS(root_search(staircase(), 0, 8), std::invalid_argument);
  CHECK_THROWS_AS(root_search(staircase(), 3, 1), std::invalid_argument);
}

TEST_CASE("conjugation relation checks", "[roots][growth]") {
  const Element id1 = identity_element(1);
  const Element b = block_swap();
  // With a trivial conjugator, b^1 = b^3 for an order-2 element.
  CHECK(bs_relation_check(id1, b, 1, 3));
  CHECK_FALSE(bs_relation_check(id1, b, 1, 2));
  // The staircase does not satisfy a doubling relation with itself.
  const Element a = staircase();
  CHECK_FALSE(bs_relation_check(a, a, 1, 2));
  CHECK(bs_relation_check(a, a, 2, 2));  // trivially, a^-1 a^2 a = a^2
  // Conjugation by the swap moves a transposition to the other half, so the
  // relation b^-1 c b = c fails while the moved target succeeds.
  const Element c = make_identical_pair_element(pat(1, {{"00"}, {"01"}, {"1"}}), {1, 0, 2});
  const Element moved = make_identical_pair_element(pat(1, {{"0"}, {"10"}, {"11"}}), {0, 2, 1});
  CHECK_FALSE(bs_relation_check(b, c, 1, 1));
  CHECK(equals(compose(compose(invert(b), c), b), moved));
}

TEST_CASE("monotone growth window boundaries", "[growth]") {
  const auto rows = power_profile(staircase(), 5);
  CHECK(monotone_growth_check(rows, 1) == 1);
  CHECK(monotone_growth_check(rows, 5) == 1);
  CHECK(monotone_growth_check(rows, 6) == std::nullopt);
  CHECK(monotone_growth_check({}, 1) == std::nullopt);
  CHECK(monotone_growth_check(rows, 0) == std::nullopt);

  // A profile that only eventually increases: order-4 square padding.
  std::vector<GrowthRow> synth(5);
  const long long tpr[5] = {3, 1, 2, 3, 4};
  for (int i = 0; i < 5; ++i) {
    synth[static_cast<std::size_t>(i)].i = i + 1;
    synth[static_cast<std::size_t>(i)].Tp_red = tpr[i];
  }
  CHECK(monotone_growth_check(synth, 3) == 2);
  CHECK(monotone_growth_check(synth, 4) == 2);
  CHECK(monotone_growth_check(synth, 5) == std::nullopt);
}
