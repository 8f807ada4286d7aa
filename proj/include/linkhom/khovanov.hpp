#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/laurent.hpp"
#include "linkhom/linalg.hpp"

namespace linkhom {

// The rank-two Frobenius algebra A = Q[x]/(x^2) on the basis {1, x} (index 0
// and 1). Tensor basis index of a (x) b is 2a + b.
struct FrobeniusData {
  std::array<int, 2> degree;           // internal degree of 1 and x
  std::array<std::array<int, 2>, 4> m; // m[a (x) b] as coefficients on {1, x}
  std::array<std::array<int, 4>, 2> delta;
  std::array<int, 2> unit;
  std::array<int, 2> counit;
};

FrobeniusData frobenius_ops();

// Polynomial in t^{+-1}, v^{+-1} with integer coefficients.
class BigradedPoly {
 public:
  void add(int t, int v, long c);
  long coeff(int t, int v) const;
  const std::map<std::pair<int, int>, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly at_t_minus_one() const;
  friend BigradedPoly operator*(const BigradedPoly& a, const BigradedPoly& b);
  friend bool operator==(const BigradedPoly& a, const BigradedPoly& b) = default;
  // Terms ordered by t then v, e.g. "v^-1 + v + t^2*v^5".
  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, long> terms_;
};

// Cube of resolutions of the braid closure. State bit c = 1 is the
// resolution weighted by -v in the bracket.
class CubeComplex {
 public:
  explicit CubeComplex(const BraidWord& b);

  struct Generator {
    std::uint64_t state;
    std::uint32_t labels;  // bit t set: circle t carries x
    int q;                 // internal degree including the shift
  };

  int crossings() const { return crossings_; }
  int min_degree() const { return -n_minus_; }
  int max_degree() const { return crossings_ - n_minus_; }
  int circles(std::uint64_t state) const { return circles_[state]; }
  int homological_degree(std::uint64_t state) const;
  int q_shift(std::uint64_t state) const;
  const std::vector<Generator>& chain_group(int degree) const;
  // Differential from chain_group(degree) to chain_group(degree + 1).
  SparseMatrixQ differential(int degree) const;
  bool d_squared_zero() const;

 private:
  BraidWord braid_;
  ClosureDiagram diagram_;
  int crossings_ = 0, n_plus_ = 0, n_minus_ = 0;
  std::vector<int> circles_;
  std::vector<std::vector<int>> labels_;  // circle id of every diagram point per state
  std::vector<std::vector<Generator>> groups_;
  std::vector<std::map<std::pair<std::uint64_t, std::uint32_t>, int>> index_;
};

BigradedPoly kh_poincare(const BraidWord& b);

}  // namespace linkhom
