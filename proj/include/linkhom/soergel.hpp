#pragma once

#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/laurent.hpp"
#include "linkhom/poly_matrix.hpp"
#include "linkhom/series.hpp"

namespace linkhom {

// Polynomial ring Q[x_1..x_n] with deg x_i = 2; x_i is Poly variable i-1.
struct RingCtx {
  int n = 1;
  explicit RingCtx(int n_);
};

// Graded R-bimodule that is free as a left module: generator degrees and,
// for every variable, the matrix of the right action in the left basis
// (column j holds m_j * x_k).
class Bimodule {
 public:
  Bimodule(RingCtx ctx, std::vector<int> degrees, std::vector<PolyMatrix> right);
  // R with its generator in degree `shift`.
  static Bimodule regular(RingCtx ctx, int shift = 0);

  const RingCtx& ctx() const { return ctx_; }
  int rank() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  const PolyMatrix& right(int var) const { return right_[var]; }
  const std::vector<PolyMatrix>& right_actions() const { return right_; }

  // Matrix of right multiplication by a homogeneous polynomial.
  PolyMatrix right_mul(const Poly& p) const;
  Bimodule shifted(int s) const;

  bool actions_commute() const;
  bool graded() const;

 private:
  RingCtx ctx_;
  std::vector<int> degrees_;
  std::vector<PolyMatrix> right_;
};

Bimodule bs_generator(RingCtx ctx, int i);
Bimodule tensor(const Bimodule& m, const Bimodule& n);
Bimodule direct_sum(const std::vector<Bimodule>& parts, RingCtx ctx);
// Bott-Samelson bimodule of a word of generator indices (1-based).
Bimodule bs_word(RingCtx ctx, const std::vector<int>& word);
LaurentPoly graded_rank(const Bimodule& m);

// A degree-zero left-linear map intertwines the right actions.
bool is_bimodule_map(const Bimodule& src, const Bimodule& dst, const PolyMatrix& f);

struct BimoduleComplex {
  int offset = 0;  // homological degree of terms[0]
  std::vector<Bimodule> terms;
  std::vector<PolyMatrix> diffs;  // diffs[j] : terms[j] -> terms[j + 1]

  int min_degree() const { return offset; }
  int max_degree() const { return offset + static_cast<int>(terms.size()) - 1; }
  bool d_squared_zero() const;
};

BimoduleComplex tensor(const BimoduleComplex& c, const BimoduleComplex& d);
BimoduleComplex rouquier_generator(RingCtx ctx, Letter l);
BimoduleComplex rouquier_complex(const BraidWord& b);

// Hochschild homology through the Koszul complex, as a series in h and v
// (t exponent 0), exact for v-degrees <= cutoff.
TriGradedSeries hochschild(const Bimodule& m, int cutoff);

// Unnormalized triply graded homology of a complex.
TriGradedSeries hhh(const BimoduleComplex& c, int cutoff);
// Same, without splitting off the central variable x_1 + ... + x_n. Slower;
// kept as an independent check.
TriGradedSeries hhh_unreduced(const BimoduleComplex& c, int cutoff);

struct KRResult {
  TriGradedSeries series;
  BraidWord braid;
  int cutoff = kDefaultCutoff;
  int writhe = 0;
  int strands = 1;
};

KRResult kr(const BraidWord& b, int cutoff = kDefaultCutoff);

// t = -1 with a = v (ht)^{1/2}, then a = v^2: a series in v that should agree
// with the Jones polynomial up to its cutoff.
TruncatedVSeries kr_jones_specialization(const TriGradedSeries& kr_series);
// Alternating sum over t as an (h, v) series.
TriGradedSeries euler_characteristic(const TriGradedSeries& s);

}  // namespace linkhom
