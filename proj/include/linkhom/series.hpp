#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/laurent.hpp"
#include "linkhom/rational_function.hpp"

namespace linkhom {

inline constexpr int kDefaultCutoff = 20;

// Laurent series in v known exactly for all degrees <= cutoff.
class TruncatedVSeries {
 public:
  TruncatedVSeries() = default;
  explicit TruncatedVSeries(int cutoff) : min_degree_(cutoff + 1), cutoff_(cutoff) {}
  TruncatedVSeries(const LaurentPoly& p, int cutoff);

  int min_degree() const { return min_degree_; }
  int cutoff() const { return cutoff_; }
  Rational coeff(int d) const;
  void add_to(int d, const Rational& c);
  bool is_zero() const;

  TruncatedVSeries truncated(int cutoff) const;
  TruncatedVSeries shifted(int s) const;
  LaurentPoly to_laurent() const;  // the known part

  TruncatedVSeries& operator+=(const TruncatedVSeries& o);
  TruncatedVSeries& operator-=(const TruncatedVSeries& o);
  friend TruncatedVSeries operator+(TruncatedVSeries a, const TruncatedVSeries& b) { return a += b; }
  friend TruncatedVSeries operator-(TruncatedVSeries a, const TruncatedVSeries& b) { return a -= b; }
  // The cutoff of a product is min(c1 + m2, c2 + m1), the first degree
  // where an unknown coefficient of either factor could contribute.
  friend TruncatedVSeries operator*(const TruncatedVSeries& a, const TruncatedVSeries& b);
  TruncatedVSeries& operator*=(const Rational& c);
  friend bool operator==(const TruncatedVSeries& a, const TruncatedVSeries& b);
  friend bool operator!=(const TruncatedVSeries& a, const TruncatedVSeries& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int min_degree_ = 1;
  int cutoff_ = 0;
  std::vector<Rational> coeffs_;  // index d - min_degree_
  void trim();
};

// Series in v with coefficients indexed by doubled exponents of t and h.
class TriGradedSeries {
 public:
  using Key = std::pair<int, int>;  // (tExp2, hExp2)

  TriGradedSeries() = default;
  explicit TriGradedSeries(int cutoff) : cutoff_(cutoff) {}

  int cutoff() const { return cutoff_; }
  const std::map<Key, TruncatedVSeries>& parts() const { return parts_; }
  TruncatedVSeries part(int t2, int h2) const;
  void add(int t2, int h2, const TruncatedVSeries& s);
  void add_term(int t2, int h2, int vdeg, const Rational& c);

  TriGradedSeries truncated(int cutoff) const;
  // Multiplies by t^{dt2/2} h^{dh2/2} v^{dv}.
  TriGradedSeries shifted(int dt2, int dh2, int dv) const;
  friend TriGradedSeries operator+(const TriGradedSeries& a, const TriGradedSeries& b);
  friend TriGradedSeries operator*(const TriGradedSeries& a, const TriGradedSeries& b);
  friend bool operator==(const TriGradedSeries& a, const TriGradedSeries& b);
  friend bool operator!=(const TriGradedSeries& a, const TriGradedSeries& b) { return !(a == b); }

  // True when all t exponents share a parity and all h exponents share a parity.
  bool parity_consistent() const;

  std::string to_string() const;

 private:
  int cutoff_ = kDefaultCutoff;
  std::map<Key, TruncatedVSeries> parts_;
  void prune();
};

// Expansion at v = 0 of a rational function in v and h. The lowest
// v-degree coefficient of the denominator must be a monomial in h.
TriGradedSeries rational_to_series(const MultiRational& r, int cutoff);
TruncatedVSeries rational_to_v_series(const MultiRational& r, int cutoff);

}  // namespace linkhom
