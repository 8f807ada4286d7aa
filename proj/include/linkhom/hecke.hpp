#pragma once

#include <map>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/laurent.hpp"
#include "linkhom/rational_function.hpp"

namespace linkhom {

// Permutation of {0..n-1} in one-line notation: w[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
int perm_length(const Perm& w);
// Reduced expression w = s_{i_1} ... s_{i_r} (1-based indices).
std::vector<int> reduced_word(const Perm& w);

// Element of the Hecke algebra in the standard basis H_w.
class HeckeElement {
 public:
  explicit HeckeElement(int n = 1);
  static HeckeElement one(int n);
  static HeckeElement basis(const Perm& w, const LaurentPoly& c = 1);
  static HeckeElement generator(int n, int i);  // H_i

  int n() const { return n_; }
  const std::map<Perm, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Perm& w) const;
  void add(const Perm& w, const LaurentPoly& c);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& x);
  friend HeckeElement operator*(const HeckeElement& x, const HeckeElement& y);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

 private:
  int n_;
  std::map<Perm, LaurentPoly> terms_;
};

// x * H_i (sign +1) or x * H_i^{-1} (sign -1).
HeckeElement mul_generator(const HeckeElement& x, int i, int sign);
HeckeElement braid_to_hecke(const BraidWord& b);

// The trace written as a polynomial in sigma = tau(1 in H_1) with Laurent
// coefficients: power of sigma -> coefficient.
using SigmaPoly = std::map<int, LaurentPoly>;
SigmaPoly trace_sigma_poly(const HeckeElement& x);
// Substitute a value for sigma.
MultiRational evaluate_sigma_poly(const SigmaPoly& p, const MultiRational& sigma);
MultiRational sigma_value();  // (1 + h v^2) / (1 - v^2)

// Markov trace over {v, h}.
MultiRational ocneanu_trace(const HeckeElement& x);
bool trace_symmetry_check(const HeckeElement& x, const HeckeElement& y);

// HOMFLY-PT over {v, a}: a^{e-n} v^n tau with h = -a^2 v^{-2}.
MultiRational homfly(const BraidWord& b);
// The same value at a = v^k, which is a Laurent polynomial in v.
LaurentPoly homfly_at(const BraidWord& b, int k);

// Linear functional H_w -> v^{-l(w)}.
LaurentPoly standard_functional(const HeckeElement& x);

}  // namespace linkhom
