#include <random>

#include "../common/corpus.hpp"
#include "../common/printers.hpp"
#include "doctest.h"
#include "linkhom/braid.hpp"
#include "linkhom/kauffman.hpp"

using namespace linkhom;

namespace {
bool contains(const std::vector<BraidWord>& ws, const std::string& s) {
  for (const auto& w : ws)
    if (to_string(w) == s) return true;
  return false;
}
}  // namespace

TEST_SUITE("braid") {

TEST_CASE("parsing and serialization") {
  BraidWord b = parse_braid("2: 1 1");
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<Letter>{{1, 1}, {1, 1}});
  BraidWord c = parse_braid("3: 1 -2 1");
  CHECK(c.letters == std::vector<Letter>{{1, 1}, {2, -1}, {1, 1}});
  CHECK(to_string(c) == "3: 1 -2 1");
  CHECK(to_string(parse_braid("1:")) == "1:");
  CHECK(parse_braid("  3 :   2  ").letters.size() == 1);
  CHECK_THROWS_AS(parse_braid("2: 3"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("0:"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("2: 1x"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("2 1 1"), BraidParseError);
  CHECK_THROWS_AS(parse_braid("3: 0"), BraidParseError);
  for (const auto& w : testing::load_corpus()) CHECK(parse_braid(to_string(w)) == w);
}

TEST_CASE("exponent sum and components") {
  CHECK(exponent_sum(parse_braid("2: 1 1")) == 2);
  CHECK(exponent_sum(parse_braid("2:")) == 0);
  CHECK(exponent_sum(parse_braid("3: 1 -2")) == 0);
  CHECK(component_count(parse_braid("2: 1 1")) == 2);
  CHECK(component_count(parse_braid("2: 1 1 1")) == 1);
  CHECK(component_count(parse_braid("3:")) == 3);
  CHECK(component_count(parse_braid("3: 1 -2 1 -2 1 -2")) == 3);
  CHECK(component_count(parse_braid("3: 1 2")) == 1);
}

TEST_CASE("move enumeration") {
  CHECK(contains(enumerate_moves(parse_braid("2: 1 -1")), "2:"));
  auto st = enumerate_moves(parse_braid("2: 1 1"));
  CHECK(contains(st, "3: 1 1 2"));
  CHECK(contains(st, "3: 1 1 -2"));
  CHECK(contains(enumerate_moves(parse_braid("3: 1 2 1")), "3: 2 1 2"));
  CHECK(contains(enumerate_moves(parse_braid("3: -2 -1 -2")), "3: -1 -2 -1"));
  CHECK(contains(enumerate_moves(parse_braid("4: 1 3")), "4: 3 1"));
  CHECK(contains(enumerate_moves(parse_braid("3: 1 2 -1")), "3: 2 -1 1"));
  CHECK(contains(enumerate_moves(parse_braid("3: 1 1 2")), "2: 1 1"));
  CHECK_FALSE(contains(enumerate_moves(parse_braid("3: 2 1 2")), "2: 2 1"));
}

TEST_CASE("smoothing circles") {
  CHECK(smoothing_circles(ClosureDiagram(parse_braid("2:")), std::uint64_t{0}) == 2);
  CHECK(smoothing_circles(ClosureDiagram(parse_braid("1:")), std::uint64_t{0}) == 1);
  ClosureDiagram hopf(parse_braid("2: 1 1"));
  CHECK(smoothing_circles(hopf, std::vector<int>{0, 0}) == 2);
  CHECK(smoothing_circles(hopf, std::vector<int>{1, 0}) == 1);
  CHECK(smoothing_circles(hopf, std::vector<int>{0, 1}) == 1);
  CHECK(smoothing_circles(hopf, std::vector<int>{1, 1}) == 2);
  CHECK_THROWS(smoothing_circles(hopf, std::vector<int>{1}));

  // Flipping one bit merges or splits exactly one circle.
  for (const auto& w : testing::load_corpus()) {
    ClosureDiagram d(w);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << d.crossings()); ++s)
      for (int c = 0; c < d.crossings(); ++c) {
        int diff = smoothing_circles(d, s) - smoothing_circles(d, s ^ (std::uint64_t{1} << c));
        CHECK((diff == 1 || diff == -1));
      }
  }
}

}  // TEST_SUITE

TEST_SUITE("kauffman") {

TEST_CASE("bracket values") {
  CHECK(bracket(parse_braid("1:")) == quantum_int(2));
  CHECK(bracket(parse_braid("2: 1 1")) == quantum_int(4).shifted(1));
  CHECK(bracket(parse_braid("2: 1 1")).to_string() == "v^-2 + 1 + v^2 + v^4");
  CHECK(bracket(parse_braid("2:")) == quantum_int(2) * quantum_int(2));
}

TEST_CASE("jones values") {
  CHECK(jones(parse_braid("1:")) == quantum_int(2));
  CHECK(jones(parse_braid("2: 1 1")) == quantum_int(4).shifted(3));
  CHECK(jones(parse_braid("2: 1 1")).to_string() == "1 + v^2 + v^4 + v^6");
  CHECK(jones(parse_braid("2: -1 -1")) == quantum_int(4).shifted(-3));
  CHECK(jones(parse_braid("2: 1 1 1")).to_string() == "v + v^3 + v^5 - v^9");
  CHECK(jones(parse_braid("2: 1 -1")) == quantum_int(2) * quantum_int(2));
}

TEST_CASE("jones is invariant under moves") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : testing::all_words(n, n == 3 ? 4 : 6)) {
      LaurentPoly j = jones(w);
      for (const auto& m : enumerate_moves(w)) CHECK(jones(m) == j);
    }
}

TEST_CASE("jones skein relation and mirror symmetry") {
  const LaurentPoly v2 = LaurentPoly::monomial(2), vm2 = LaurentPoly::monomial(-2);
  const LaurentPoly z = LaurentPoly::monomial(1) - LaurentPoly::monomial(-1);
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 2);
    int len = static_cast<int>(rng() % 6);
    BraidWord w{n, {}};
    for (int i = 0; i < len; ++i) w.letters.push_back({1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? 1 : -1});
    size_t pos = rng() % (w.letters.size() + 1);
    int g = 1 + static_cast<int>(rng() % (n - 1));
    BraidWord plus = w, minus = w;
    plus.letters.insert(plus.letters.begin() + pos, {g, 1});
    minus.letters.insert(minus.letters.begin() + pos, {g, -1});
    CHECK(v2 * jones(minus) - vm2 * jones(plus) == z * jones(w));
    CHECK(jones(mirror(plus)) == jones(plus).bar());
  }
}

}  // TEST_SUITE
