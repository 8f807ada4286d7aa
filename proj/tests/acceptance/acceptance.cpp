// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact
// equalities of rational objects (tolerance zero); the only numeric limits are
// the wall-clock budgets below. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../common/corpus.hpp"
#include "../common/kr_cache.hpp"
#include "linkhom/hecke.hpp"
#include "linkhom/kauffman.hpp"
#include "linkhom/khovanov.hpp"
#include "linkhom/qrep.hpp"
#include "linkhom/soergel.hpp"
#include "linkhom/webrt.hpp"

using namespace linkhom;
using namespace linkhom::testing;

namespace {

// Exact arithmetic throughout: values must agree with zero tolerance.
constexpr double kTolerance = 0.0;
constexpr double kJonesBudgetSeconds = 1.0;
constexpr double kKhovanovBudgetSeconds = 60.0;
constexpr double kKrBudgetSeconds = 300.0;
constexpr int kCutoff = 20;

const MultiRational V = MultiRational::var(kVarV);
const MultiRational A = MultiRational::var(kVarA);

MultiRational ql(int a) { return MultiRational::from_laurent(quantum_int(a)); }
MultiRational sigma() { return sigma_value(); }

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Records the first failed sub-check so the summary line can name it.
struct Check {
  bool ok = true;
  int count = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double budget;  // seconds, 0 for none
  std::function<void(Check&)> body;
};

std::vector<Slice> thin_e(const std::vector<int>& l, int i) {
  return {{SliceKind::Split, i, 1, l[i] - 1}, {SliceKind::Merge, i - 1, l[i - 1], 1}};
}
std::vector<Slice> thin_f(const std::vector<int>& l, int i) {
  return {{SliceKind::Split, i - 1, l[i - 1] - 1, 1}, {SliceKind::Merge, i, 1, l[i]}};
}

HeckeElement random_element(std::mt19937& rng, int n) {
  HeckeElement x(n);
  std::uniform_int_distribution<int> co(-2, 2), ex(-2, 2);
  Perm w = identity_perm(n);
  for (int t = 0; t < 3; ++t) {
    std::shuffle(w.begin(), w.end(), rng);
    x.add(w, LaurentPoly::monomial(ex(rng), co(rng)));
  }
  return x;
}

void words(int n, int max_len, std::vector<int>& w, const std::function<void(const std::vector<int>&)>& f) {
  f(w);
  if (static_cast<int>(w.size()) == max_len) return;
  for (int i = 1; i < n; ++i) {
    w.push_back(i);
    words(n, max_len, w, f);
    w.pop_back();
  }
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "Jones: unknot [2], Hopf link v^3[4]", kJonesBudgetSeconds, [](Check& c) {
    c.expect(jones(parse_braid("1:")) == quantum_int(2), "unknot");
    const LaurentPoly hopf = jones(parse_braid("2: 1 1"));
    c.expect(hopf == quantum_int(4).shifted(3), "Hopf = v^3[4]");
    c.expect(hopf.to_string() == "1 + v^2 + v^4 + v^6", "Hopf rendering");
  }});

  out.push_back({2, "Kauffman bracket of the Hopf word is v[4]", 0, [](Check& c) {
    const LaurentPoly b = bracket(parse_braid("2: 1 1"));
    c.expect(b == quantum_int(4).shifted(1), "v[4]");
    c.expect(b.to_string() == "v^-2 + 1 + v^2 + v^4", "rendering");
  }});

  out.push_back({3, "wRT: unknot [k] and (-1)^(k-1)[k], Hopf at k = 2", 0, [](Check& c) {
    for (int k = 2; k <= 4; ++k) {
      c.expect(wrt_eval(parse_braid("1:"), k, -1) == ql(k), "unknot eta=-1 k=" + std::to_string(k));
      c.expect(wrt_eval(parse_braid("1:"), k, 1) == MultiRational(k % 2 ? 1 : -1) * ql(k),
               "unknot eta=+1 k=" + std::to_string(k));
    }
    c.expect(wrt_eval(parse_braid("2: 1 1"), 2, -1) == MultiRational::from_laurent(quantum_int(4).shifted(3)), "Hopf");
  }});

  out.push_back({4, "web relations: (co)associativity, thin digons, thin square switches", 0, [](Check& c) {
    for (int eta : {-1, 1})
      for (int k = 2; k <= 4; ++k) {
        const RepContext ctx(k, eta);
        const std::string at = " k=" + std::to_string(k) + " eta=" + std::to_string(eta);
        const int top = std::min(k, 3);
        for (int a = 0; a <= top; ++a)
          for (int b = 0; b <= top; ++b)
            for (int cc = 0; cc <= top; ++cc) {
              if (a + b + cc > k) continue;
              const WebWord ml{{a, b, cc}, {{SliceKind::Merge, 0, a, b}, {SliceKind::Merge, 0, a + b, cc}}};
              const WebWord mr{{a, b, cc}, {{SliceKind::Merge, 1, b, cc}, {SliceKind::Merge, 0, a, b + cc}}};
              c.expect(phi_eval(ml, ctx) == phi_eval(mr, ctx), "associativity" + at);
              const WebWord sl{{a + b + cc}, {{SliceKind::Split, 0, a + b, cc}, {SliceKind::Split, 0, a, b}}};
              const WebWord sr{{a + b + cc}, {{SliceKind::Split, 0, a, b + cc}, {SliceKind::Split, 1, b, cc}}};
              c.expect(phi_eval(sl, ctx) == phi_eval(sr, ctx), "coassociativity" + at);
            }
        for (int a = 1; a <= top; ++a) {
          MultiRational s;
          const WebWord digon{{a}, {{SliceKind::Split, 0, 1, a - 1}, {SliceKind::Merge, 0, 1, a - 1}}};
          const bool scalar = phi_eval(digon, ctx).is_scalar(&s);
          c.expect(scalar && s == pow(MultiRational(-eta), a - 1) * ql(a), "thin digon" + at);
        }
        // Rungs in neighbouring gaps commute; same-gap switches are criterion 6.
        for (int a = 0; a < top; ++a)
          for (int b = 2; b <= top; ++b)
            for (int cc = 0; cc < top; ++cc) {
              const std::vector<int> l{a, b, cc};
              auto fe = thin_f(l, 2), ef = thin_e(l, 1);
              const auto e_after = thin_e({a, b - 1, cc + 1}, 1), f_after = thin_f({a + 1, b - 1, cc}, 2);
              fe.insert(fe.end(), e_after.begin(), e_after.end());
              ef.insert(ef.end(), f_after.begin(), f_after.end());
              c.expect(phi_eval(WebWord{l, fe}, ctx) == phi_eval(WebWord{l, ef}, ctx), "square switch" + at);
            }
      }
  }});

  out.push_back({5, "smoothing relation cupcap + gamma id = H_1", 0, [](Check& c) {
    for (int k = 2; k <= 4; ++k)
      for (int eta : {-1, 1}) {
        const RepContext ctx(k, eta);
        c.expect(cupcap(ctx) + ctx.gamma() * QMatrix::identity(k * k) == braid_action(ctx, 1, 2, 1),
                 "k=" + std::to_string(k) + " eta=" + std::to_string(eta));
      }
  }});

  out.push_back({6, "skew Howe [E,F] = [a1 - a2] on weights (0,3) (1,2) (2,1) (3,0), k = 3", 0, [](Check& c) {
    for (int eta : {-1, 1}) {
      const RepContext ctx(3, eta);
      for (int a1 = 0; a1 <= 3; ++a1) {
        const int a2 = 3 - a1;
        const int d = space_dim(3, {a1, a2});
        QMatrix ef(d, d), fe(d, d);
        if (a1 > 0) ef = ladder_action(GenType::E, {a1 - 1, a2 + 1}, ctx) * ladder_action(GenType::F, {a1, a2}, ctx);
        if (a2 > 0) fe = ladder_action(GenType::F, {a1 + 1, a2 - 1}, ctx) * ladder_action(GenType::E, {a1, a2}, ctx);
        const int diff = a1 - a2;
        const MultiRational expect = diff >= 0 ? ql(diff) : -1 * ql(-diff);
        c.expect(ef - fe == expect * QMatrix::identity(d),
                 "weight (" + std::to_string(a1) + "," + std::to_string(a2) + ") eta=" + std::to_string(eta));
      }
    }
  }});

  out.push_back({7, "Ocneanu trace values and trace symmetry on 50 random pairs", 0, [](Check& c) {
    c.expect(ocneanu_trace(HeckeElement::one(1)) == (MultiRational(1) + MultiRational::monomial(1, 2, 1)) /
                                                        (MultiRational(1) - V * V),
             "tau(1)");
    const MultiRational s = sigma();
    c.expect(ocneanu_trace(braid_to_hecke(parse_braid("2: 1 1"))) == s * s + (V.inverse() - V) * V.inverse() * s,
             "tau(H_1^2)");
    std::mt19937 rng(5150);
    for (int t = 0; t < 50; ++t)
      c.expect(trace_symmetry_check(random_element(rng, 3), random_element(rng, 3)), "symmetry pair " + std::to_string(t));
  }});

  out.push_back({8, "HOMFLY: unknot, skein on 20 triples, a = v^2 is Jones, a = v^3 is wRT(3)", 0, [](Check& c) {
    c.expect(homfly(parse_braid("1:")) == (A - A.inverse()) / (V - V.inverse()), "unknot");
    std::mt19937 rng(2718);
    for (int t = 0; t < 20; ++t) {
      const int n = 2 + static_cast<int>(rng() % 2);
      BraidWord w{n, {}};
      const int len = static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i) w.letters.push_back({1 + static_cast<int>(rng() % (n - 1)), rng() % 2 ? 1 : -1});
      const size_t pos = rng() % (w.letters.size() + 1);
      const int g = 1 + static_cast<int>(rng() % (n - 1));
      BraidWord plus = w, minus = w;
      plus.letters.insert(plus.letters.begin() + pos, {g, 1});
      minus.letters.insert(minus.letters.begin() + pos, {g, -1});
      c.expect(A * homfly(minus) - A.inverse() * homfly(plus) == (V - V.inverse()) * homfly(w), "skein " + to_string(w));
    }
    for (const auto& b : load_corpus()) {
      c.expect(homfly_at(b, 2) == jones(b), "a=v^2 " + to_string(b));
      const MultiRational at3 = homfly(b).substitute(kVarA, pow(V, 3));
      c.expect(at3 == wrt_eval(b, 3, -1), "a=v^3 " + to_string(b));
    }
  }});

  out.push_back({9, "Khovanov: unknot, chi = Jones, move invariance, d^2 = 0 on the corpus", kKhovanovBudgetSeconds,
                 [](Check& c) {
    BigradedPoly unknot;
    unknot.add(0, -1, 1);
    unknot.add(0, 1, 1);
    c.expect(kh_poincare(parse_braid("1:")) == unknot, "unknot");
    for (const auto& b : load_corpus()) {
      c.expect(CubeComplex(b).d_squared_zero(), "d^2 " + to_string(b));
      const BigradedPoly p = kh_poincare(b);
      c.expect(p.at_t_minus_one() == jones(b), "chi " + to_string(b));
      for (const auto& m : enumerate_moves(b)) {
        c.expect(CubeComplex(m).d_squared_zero(), "d^2 " + to_string(m));
        c.expect(kh_poincare(m) == p, "move " + to_string(b) + " -> " + to_string(m));
      }
    }
  }});

  out.push_back({10, "Hochschild homology of R_1 and R_2 to v-degree 20", 0, [](Check& c) {
    c.expect(hochschild(Bimodule::regular(RingCtx(1)), kCutoff) == rational_to_series(sigma(), kCutoff), "R_1");
    c.expect(hochschild(Bimodule::regular(RingCtx(2)), kCutoff) == rational_to_series(sigma() * sigma(), kCutoff),
             "R_2");
  }});

  out.push_back({11, "KR: unknot, identity in B_2, Hopf Euler characteristic, move invariance", kKrBudgetSeconds,
                 [](Check& c) {
    const TriGradedSeries unknot = rational_to_series(sigma(), kCutoff).shifted(-1, -1, 0);
    c.expect(kr_series(parse_braid("1:")) == unknot, "unknot");
    c.expect(kr_series(parse_braid("2:")) == unknot * unknot, "identity in B_2");
    const MultiRational hopf_trace = V * V * (sigma() * sigma() + (V.inverse() - V) * V.inverse() * sigma());
    c.expect(euler_characteristic(kr_series(parse_braid("2: 1 1"))) == rational_to_series(hopf_trace, kCutoff),
             "Hopf Euler characteristic");
    // The small corpus words contain no braid-relation pattern, so two words
    // that do are added.
    std::vector<BraidWord> small{parse_braid("3: 1 2 1"), parse_braid("3: -1 -2 -1")};
    for (const auto& b : load_corpus())
      if (b.letters.size() <= 4 && b.strands <= 3) small.push_back(b);
    for (const auto& b : small) {
      const TriGradedSeries& s = kr_series(b);
      for (const auto& m : enumerate_moves(b))
        c.expect(kr_series(m) == s, "move " + to_string(b) + " -> " + to_string(m));
    }
  }});

  out.push_back({12, "graded ranks of Bott-Samelson bimodules match the Hecke functional", 0, [](Check& c) {
    for (int n : {2, 3}) {
      const RingCtx ctx(n);
      std::vector<int> w;
      words(n, 4, w, [&](const std::vector<int>& word) {
        HeckeElement prod = HeckeElement::one(n);
        for (int i : word) prod = prod * (HeckeElement::generator(n, i) + LaurentPoly::monomial(1) * HeckeElement::one(n));
        c.expect(graded_rank(bs_word(ctx, word)) == standard_functional(prod),
                 "n=" + std::to_string(n) + " length " + std::to_string(word.size()));
      });
    }
  }});

  out.push_back({13, "coloured Jones of the unknot in colour 2, Jones-Wenzl projectors m <= 4", 0, [](Check& c) {
    c.expect(colored_jones(parse_braid("1:"), {2}) == ql(3), "colour 2 unknot");
    c.expect(colored_jones(parse_braid("1:"), {2}).to_laurent().to_string() == "v^-2 + 1 + v^2", "rendering");
    const QMatrix u = cupcap(RepContext(2, 1));
    for (int m = 1; m <= 4; ++m) {
      const QMatrix p = jones_wenzl(m);
      c.expect(p * p == p, "idempotent m=" + std::to_string(m));
      for (int i = 1; i < m; ++i) {
        const QMatrix ui = place(u, ipow(2, i - 1), ipow(2, m - i - 1));
        c.expect((p * ui).is_zero() && (ui * p).is_zero(), "cup-cap m=" + std::to_string(m));
      }
    }
  }});

  return out;
}

}  // namespace

int main() {
  static_assert(kTolerance == 0.0);
  int failures = 0;
  std::printf("acceptance (exact comparisons, KR cutoff v^%d)\n", kCutoff);
  for (const auto& crit : criteria()) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.budget > 0 && secs > crit.budget)
      c.expect(false, "over the " + std::to_string(static_cast<int>(crit.budget)) + " s budget");
    std::printf("%s %2d  %-78s %4d checks %8.2f s%s%s\n", c.ok ? "PASS" : "FAIL", crit.id, crit.title.c_str(), c.count,
                secs, c.ok ? "" : "  first failure: ", c.first_failure.c_str());
    std::fflush(stdout);
    failures += c.ok ? 0 : 1;
  }
  std::printf("%d of 13 criteria failed\n", failures);
  return failures;
}
