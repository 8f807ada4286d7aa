#include "../common/corpus.hpp"
#include "../common/printers.hpp"
#include "doctest.h"
#include "linkhom/kauffman.hpp"
#include "linkhom/khovanov.hpp"

using namespace linkhom;
using namespace linkhom::testing;

namespace {

BigradedPoly unknot_poly() {
  BigradedPoly p;
  p.add(0, -1, 1);
  p.add(0, 1, 1);
  return p;
}

}  // namespace

TEST_SUITE("khovanov") {

TEST_CASE("Frobenius algebra") {
  const FrobeniusData f = frobenius_ops();
  CHECK(f.m[1] == std::array<int, 2>{0, 1});  // m(1 x) = x
  CHECK(f.m[3] == std::array<int, 2>{0, 0});  // m(x x) = 0
  CHECK(f.delta[0] == std::array<int, 4>{0, 1, 1, 0});
  CHECK(f.degree[0] + f.degree[1] == 0);
  // Frobenius relation (m (x) id)(id (x) delta) = delta m on A (x) A.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::array<int, 4> lhs{}, rhs{};
      for (int out = 0; out < 4; ++out) {
        const int c = f.delta[b][out];
        if (c == 0) continue;
        const int b1 = out >> 1, b2 = out & 1;
        for (int r = 0; r < 2; ++r) lhs[2 * r + b2] += c * f.m[2 * a + b1][r];
      }
      for (int r = 0; r < 2; ++r)
        for (int out = 0; out < 4; ++out) rhs[out] += f.m[2 * a + b][r] * f.delta[r][out];
      CHECK(lhs == rhs);
    }
  // Counit pairing is non-degenerate: eps(m(1, x)) = 1.
  int pairing = 0;
  for (int r = 0; r < 2; ++r) pairing += f.m[1][r] * f.counit[r];
  CHECK(pairing == 1);
}

TEST_CASE("cube complex shapes") {
  CubeComplex unknot(parse_braid("1:"));
  CHECK(unknot.chain_group(0).size() == 2);
  CHECK(unknot.differential(0).cols.size() == 2);
  for (const auto& c : unknot.differential(0).cols) CHECK(c.empty());

  CubeComplex hopf(parse_braid("2: 1 1"));
  CHECK(hopf.circles(0) == 2);
  CHECK(hopf.circles(1) == 1);
  CHECK(hopf.circles(2) == 1);
  CHECK(hopf.circles(3) == 2);
  CHECK(hopf.min_degree() == 0);
  CHECK(hopf.max_degree() == 2);
  CHECK(hopf.d_squared_zero());
}

TEST_CASE("Poincare polynomial examples") {
  CHECK(kh_poincare(parse_braid("1:")) == unknot_poly());
  CHECK(kh_poincare(parse_braid("1:")).to_string() == "v^-1 + v");
  CHECK(kh_poincare(parse_braid("2: 1")) == unknot_poly());
  CHECK(kh_poincare(parse_braid("2: -1")) == unknot_poly());
  CHECK(kh_poincare(parse_braid("2: 1 -1")) == unknot_poly() * unknot_poly());
  BigradedPoly hopf = kh_poincare(parse_braid("2: 1 1"));
  CHECK(hopf.terms().size() == 4);
  CHECK(hopf.at_t_minus_one().to_string() == "1 + v^2 + v^4 + v^6");
  // The trefoil carries homology in three homological degrees.
  BigradedPoly t = kh_poincare(parse_braid("2: 1 1 1"));
  CHECK(t.coeff(0, 1) == 1);
  CHECK(t.coeff(0, 3) == 1);
  CHECK(t.coeff(2, 5) == 1);
  CHECK(t.coeff(3, 9) == 1);
  CHECK(kh_poincare(parse_braid("2: -1 -1 -1")).coeff(-3, -9) == 1);
}

TEST_CASE("d squared vanishes and Euler characteristic is Jones on the corpus") {
  for (const auto& b : load_corpus()) {
    CAPTURE(to_string(b));
    CHECK(CubeComplex(b).d_squared_zero());
    CHECK(kh_poincare(b).at_t_minus_one() == jones(b));
  }
}

TEST_CASE("Euler characteristic on all short three-strand words") {
  for (int len = 0; len <= 5; ++len)
    for (const auto& b : all_words(3, len)) {
      CAPTURE(to_string(b));
      CHECK(kh_poincare(b).at_t_minus_one() == jones(b));
    }
}

TEST_CASE("invariance under braid moves") {
  for (const auto& b : load_corpus()) {
    if (b.letters.size() > 5) continue;
    const BigradedPoly p = kh_poincare(b);
    for (const auto& m : enumerate_moves(b)) {
      CAPTURE(to_string(b));
      CAPTURE(to_string(m));
      CHECK(kh_poincare(m) == p);
    }
  }
}

TEST_CASE("disjoint union multiplies") {
  // Trefoil next to an unknot on a separate strand.
  CHECK(kh_poincare(parse_braid("3: 1 1 1")) == kh_poincare(parse_braid("2: 1 1 1")) * unknot_poly());
  CHECK(kh_poincare(parse_braid("4: 1 1 3 3")) == kh_poincare(parse_braid("2: 1 1")) * kh_poincare(parse_braid("2: 1 1")));
}

}  // TEST_SUITE
