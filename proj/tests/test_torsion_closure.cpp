#include <catch2/catch_amalgamated.hpp>

#include <nvcalc/nvcalc.hpp>

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

Element half_swap2() {
  return make_identical_pair_element(pat(2, {{"0", "e"}, {"1", "e"}}), {1, 0});
}

Element coord_swap() {
  return make_identical_pair_element(trivial_pattern(2), {0}, {parse_cycles("(1 2)", 2)});
}

// Order-4 element: 0 -> 1, 10 -> 01, 11 -> 00 on one axis.
Element order_four() {
  return make_element(pat(1, {{"0"}, {"10"}, {"11"}}), pat(1, {{"00"}, {"01"}, {"1"}}), {2, 1, 0});
}

Element rigid_on(const Pattern& p, std::vector<int> sigma) {
  return make_identical_pair_element(p, std::move(sigma));
}

}  // namespace

TEST_CASE("rigid order combines cycle lengths with twist orders", "[torsion]") {
  CHECK(rigid_order({0}, {CoordPerm(1)}) == 1);
  CHECK(rigid_order({1, 0}, {CoordPerm(1), CoordPerm(1)}) == 2);
  CHECK(rigid_order({1, 2, 0}, std::vector<CoordPerm>(3, CoordPerm(1))) == 3);
  CHECK(rigid_order({1, 0, 2}, std::vector<CoordPerm>(3, CoordPerm(1))) == 2);

  const CoordPerm sw = parse_cycles("(1 2)", 2);
  CHECK(rigid_order({0}, {sw}) == 2);
  // 2-cycle whose twists compose to the identity: order 2, not 4.
  CHECK(rigid_order({1, 0}, {sw, sw}) == 2);
  // 2-cycle with a net swap around it: order 4.
  CHECK(rigid_order({1, 0}, {sw, CoordPerm(2)}) == 4);
  const CoordPerm rot = parse_cycles("(1 2 3)", 3);
  CHECK(rigid_order({1, 0}, {rot, CoordPerm(3)}) == 6);
}

TEST_CASE("identical-pair elements certify at power one", "[torsion]") {
  const Element sw = rigid_on(pat(1, {{"0"}, {"1"}}), {1, 0});
  const auto cert = torsion_certificate(sw, 8);
  REQUIRE(cert.has_value());
  CHECK(cert->power_k == 1);
  CHECK(cert->pattern.blocks == pat(1, {{"0"}, {"1"}}).blocks);
  CHECK(cert->rigid_perm == std::vector<int>{1, 0});
  CHECK(cert->order_bound == 2);
  CHECK(cert->first_segment_match == 1);
  CHECK(order_up_to(sw, 8) == 2);
}

TEST_CASE("torsion certificates appear at the pattern-reuse power", "[torsion]") {
  SECTION("order-4 untwisted element certifies at power 2") {
    const Element g = order_four();
    const auto cert = torsion_certificate(g, 8);
    REQUIRE(cert.has_value());
    CHECK(cert->power_k == 2);
    CHECK(cert->pattern.blocks == pat(1, {{"00"}, {"01"}, {"10"}, {"11"}}).blocks);
    CHECK(cert->order_bound == 4);
    CHECK(cert->first_segment_match == 2);
    CHECK(order_up_to(g, 8) == 4);
    CHECK(equals(power(g, 4, true), identity_element(1)));
    CHECK_FALSE(equals(power(g, 2, true), identity_element(1)));
  }
  SECTION("half swap then coordinate swap certifies at power 2") {
    const Element st = reduce(compose(half_swap2(), coord_swap()));
    const auto cert = torsion_certificate(st, 8);
    REQUIRE(cert.has_value());
    CHECK(cert->power_k == 2);
    CHECK(same_blocks(cert->pattern,
                      pat(2, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}})));
    CHECK(cert->order_bound == 4);
    CHECK(order_up_to(st, 8) == 4);
  }
  SECTION("coordinate swap certifies immediately with a twisted bound") {
    const auto cert = torsion_certificate(coord_swap(), 8);
    REQUIRE(cert.has_value());
    CHECK(cert->power_k == 1);
    CHECK(cert->pattern.blocks.size() == 1);
    CHECK(cert->rigid_twists[0] == parse_cycles("(1 2)", 2));
    CHECK(cert->order_bound == 2);
    CHECK(order_up_to(coord_swap(), 8) == 2);
  }
}

TEST_CASE("infinite-order elements never certify", "[torsion]") {
  CHECK_FALSE(torsion_certificate(staircase(), 16).has_value());
  CHECK(order_up_to(staircase(), 16) == std::nullopt);
  CHECK_FALSE(torsion_certificate(embed_on_axis(staircase(), 1, 2), 12).has_value());
}

TEST_CASE("order bounds can exceed the exact order", "[torsion]") {
  // Composite of two disjoint transpositions: bound and order are both 2,
  // while a crossed pairing on 4 blocks yields bound 2 with exact order 2.
  const Element two_swaps = rigid_on(pat(1, {{"00"}, {"01"}, {"10"}, {"11"}}), {1, 0, 3, 2});
  CHECK(order_up_to(two_swaps, 8) == 2);
  // A 4-cycle has bound 4; its square certifies with bound 2.
  const Element four_cycle = rigid_on(pat(1, {{"00"}, {"01"}, {"10"}, {"11"}}), {1, 2, 3, 0});
  CHECK(order_up_to(four_cycle, 8) == 4);
  CHECK(order_up_to(power(four_cycle, 2, true), 8) == 2);
  // order_up_to respects its cap.
  CHECK(order_up_to(four_cycle, 3) == std::nullopt);
}

TEST_CASE("identity order", "[torsion]") {
  CHECK(order_up_to(identity_element(1), 4) == 1);
  CHECK(order_up_to(identity_element(3), 4) == 1);
}

TEST_CASE("closures of rigid symmetric groups", "[closure]") {
  const Pattern p3 = pat(1, {{"00"}, {"01"}, {"1"}});
  const auto s3 = closure({rigid_on(p3, {1, 0, 2}), rigid_on(p3, {0, 2, 1})}, 100);
  REQUIRE(s3.group.has_value());
  CHECK(s3.group->elements.size() == 6);
  CHECK(s3.size_reached == 6);

  const Pattern p4 = pat(1, {{"00"}, {"01"}, {"10"}, {"11"}});
  const auto s4 = closure({rigid_on(p4, {1, 0, 2, 3}), rigid_on(p4, {1, 2, 3, 0})}, 100);
  REQUIRE(s4.group.has_value());
  CHECK(s4.group->elements.size() == 24);
}

TEST_CASE("closure multiplication tables are groups", "[closure]") {
  const Pattern p3 = pat(1, {{"00"}, {"01"}, {"1"}});
  const auto r = closure({rigid_on(p3, {1, 0, 2}), rigid_on(p3, {0, 2, 1})}, 100);
  REQUIRE(r.group.has_value());
  const auto& g = *r.group;
  const std::size_t n = g.elements.size();
  CHECK(equals(g.elements[0], identity_element(1)));  // identity first
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(g.table[0][i] == static_cast<int>(i));
    CHECK(g.table[i][0] == static_cast<int>(i));
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(g.table[i][j])] = true;
      col[static_cast<std::size_t>(g.table[j][i])] = true;
    }
    CHECK(std::count(row.begin(), row.end(), true) == static_cast<long>(n));
    CHECK(std::count(col.begin(), col.end(), true) == static_cast<long>(n));
  }
  // Spot-check associativity through the table.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int left = g.table[static_cast<std::size_t>(g.table[i][j])][k];
        const int right = g.table[i][static_cast<std::size_t>(g.table[j][k])];
        CHECK(left == right);
      }
    }
  }
}

TEST_CASE("twisted closure is the dihedral group of order 8", "[closure]") {
  const auto r = closure({coord_swap(), half_swap2()}, 64);
  REQUIRE(r.group.has_value());
  CHECK(r.group->elements.size() == 8);
}

TEST_CASE("closure stops at its budget", "[closure]") {
  const auto r = closure({staircase()}, 8);
  CHECK_FALSE(r.group.has_value());
  CHECK(r.size_reached == 8);
  CHECK_THROWS_AS(closure({}, 8), std::invalid_argument);
  CHECK_THROWS_AS(closure({staircase(), identity_element(2)}, 8), std::invalid_argument);
}

TEST_CASE("group witness certifies every element on one pattern", "[closure]") {
  SECTION("two commuting swaps") {
    const Pattern p4 = pat(1, {{"00"}, {"01"}, {"10"}, {"11"}});
    const auto w = same_v_witness({rigid_on(p4, {1, 0, 2, 3}), rigid_on(p4, {0, 1, 3, 2})}, 16);
    CHECK(w.group.elements.size() == 4);
    CHECK(w.certificates.size() == 4);
    CHECK(same_blocks(w.witness, p4));
    for (const auto& e : w.group.elements) CHECK(is_rigid_on(e, w.witness));
  }
  SECTION("twisted dihedral closure") {
    const auto w = same_v_witness({half_swap2(), coord_swap()}, 64);
    CHECK(w.group.elements.size() == 8);
    CHECK(same_blocks(w.witness,
                      pat(2, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}})));
    for (const auto& e : w.group.elements) CHECK(is_rigid_on(e, w.witness));
    for (const auto& c : w.certificates) CHECK(c.order_bound <= 8);
  }
  SECTION("uncertifiable generators are rejected") {
    CHECK_THROWS_AS(same_v_witness({staircase()}, 16), std::invalid_argument);
  }
  SECTION("budget failures propagate") {
    const Pattern p4 = pat(1, {{"00"}, {"01"}, {"10"}, {"11"}});
    CHECK_THROWS_AS(same_v_witness({rigid_on(p4, {1, 0, 2, 3}), rigid_on(p4, {1, 2, 3, 0})}, 5),
                    budget_exceeded);
  }
}

TEST_CASE("fingerprints are sound for equality", "[closure]") {
  const auto pts = sample_points(7, 12, 1);
  const Element a = staircase();
  CHECK(dynamics_fingerprint(a, pts) == dynamics_fingerprint(expand_element(a, 0, 1), pts));
  CHECK(dynamics_fingerprint(a, pts) != dynamics_fingerprint(invert(a), pts));
}
