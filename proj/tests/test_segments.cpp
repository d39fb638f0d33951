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

BinaryWord word(const char* s) {
  return std::string(s) == "e" ? BinaryWord() : BinaryWord(s);
}

Segment seg(int axis, const char* cut, std::initializer_list<const char*> extent) {
  Segment s;
  s.axis = axis;
  s.cut = word(cut);
  for (const char* e : extent) s.extent.push_back(word(e));
  return s;
}

}  // namespace

TEST_CASE("one-dimensional patterns have m-1 cut segments", "[segments]") {
  CHECK(segments(trivial_pattern(1)).empty());

  const auto s = segments(pat(1, {{"0"}, {"10"}, {"11"}}));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == seg(1, "", {}));   // the cut at 1/2
  CHECK(s[1] == seg(1, "1", {}));  // the cut at 3/4

  for (int m = 1; m <= 6; ++m) {
    Pattern p = trivial_pattern(1);
    for (int k = 1; k < m; ++k) p = split_block(p, 0, 1);
    CHECK(segments(p).size() == static_cast<std::size_t>(m - 1));
  }
}

TEST_CASE("quadrants carry one full cut per axis", "[segments]") {
  const auto quads = pat(2, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}});
  const auto s = segments(quads);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == seg(1, "", {"e"}));
  CHECK(s[1] == seg(2, "", {"e"}));
}

TEST_CASE("half-height faces merge into one maximal segment", "[segments]") {
  // The vertical cut at x = 1/2 is contributed by two stacked faces, which
  // must fuse into a single full-height segment.
  const auto p = pat(2, {{"0", "0"}, {"0", "1"}, {"1", "e"}});
  const auto s = segments(p);
  REQUIRE(s.size() == 2);
  CHECK(s[0] == seg(1, "", {"e"}));
  CHECK(s[1] == seg(2, "", {"0"}));
}

TEST_CASE("staircase pattern has three segments", "[segments]") {
  const auto p = pat(2, {{"0", "e"}, {"1", "0"}, {"1", "10"}, {"1", "11"}});
  const auto s = segments(p);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == seg(1, "", {"e"}));
  CHECK(s[1] == seg(2, "", {"1"}));
  CHECK(s[2] == seg(2, "1", {"1"}));
}

TEST_CASE("halves have a single segment", "[segments]") {
  CHECK(segments(pat(2, {{"0", "e"}, {"1", "e"}})).size() == 1);
  CHECK(segments(pat(2, {{"e", "0"}, {"e", "1"}})).size() == 1);
  CHECK(segments(trivial_pattern(2)).empty());
}

TEST_CASE("common segments count shared cuts only", "[segments]") {
  const auto quads = pat(2, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}});
  const auto halves = pat(2, {{"0", "e"}, {"1", "e"}});
  CHECK(common_segments(quads, halves) == 1);
  CHECK(common_segments(halves, quads) == 1);
  CHECK(common_segments(quads, quads) == 2);
  const auto strips = pat(2, {{"e", "0"}, {"e", "1"}});
  CHECK(common_segments(halves, strips) == 0);

  // One-dimensional: {0,10,110,111} vs {000,001,01,1} share only the cut at 1/2.
  const auto d = pat(1, {{"0"}, {"10"}, {"110"}, {"111"}});
  const auto r = pat(1, {{"000"}, {"001"}, {"01"}, {"1"}});
  CHECK(common_segments(d, r) == 1);
}

TEST_CASE("partial-extent segments stay separate", "[segments]") {
  // Cuts at the same position but different extents are different segments.
  const auto p = pat(2, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "10"}, {"1", "11"}});
  const auto s = segments(p);
  // x-cut full height; y-cut at 1/2 full width; y-cut at 3/4 only over x > 1/2.
  REQUIRE(s.size() == 3);
  CHECK(s[0] == seg(1, "", {"e"}));
  CHECK(s[1] == seg(2, "", {"e"}));
  CHECK(s[2] == seg(2, "1", {"1"}));
}

TEST_CASE("three-dimensional segment extents list other axes ascending", "[segments]") {
  Pattern p = trivial_pattern(3);
  p = split_block(p, 0, 2);
  const auto s = segments(p);
  REQUIRE(s.size() == 1);
  CHECK(s[0].axis == 2);
  CHECK(s[0].cut == BinaryWord());
  REQUIRE(s[0].extent.size() == 2);  // axes 1 and 3
  CHECK(s[0].extent[0] == BinaryWord());
  CHECK(s[0].extent[1] == BinaryWord());
}
