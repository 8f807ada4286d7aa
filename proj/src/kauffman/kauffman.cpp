#include "linkhom/kauffman.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace linkhom {

LaurentPoly bracket(const BraidWord& b) {
  ClosureDiagram d(b);
  const int c = d.crossings();
  if (c > 24) throw std::invalid_argument("bracket: too many crossings for the state sum");
  std::uint64_t negative = 0;
  for (int i = 0; i < c; ++i)
    if (b.letters[i].sign < 0) negative |= std::uint64_t{1} << i;

  // Accumulate counts by (circles, number of -v factors) and expand at the end.
  const int max_circles = d.point_count() + 1;
  std::vector<std::vector<long>> count(max_circles + 1, std::vector<long>(c + 1, 0));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << c); ++s) {
    // A factor -v is paid by positive letters smoothed cup-cap and by negative
    // letters kept vertical, i.e. by the bits where state differs from `negative`.
    const int weight = std::popcount(s ^ negative);
    ++count[smoothing_circles(d, s)][weight];
  }
  std::vector<LaurentPoly> two_pow{LaurentPoly(1)};
  for (int k = 1; k <= max_circles; ++k) two_pow.push_back(two_pow.back() * quantum_int(2));
  LaurentPoly result;
  for (int k = 0; k <= max_circles; ++k)
    for (int w = 0; w <= c; ++w)
      if (count[k][w] != 0)
        result += two_pow[k] * LaurentPoly::monomial(w, Rational(count[k][w] * (w % 2 ? -1 : 1)));
  return result;
}

LaurentPoly jones(const BraidWord& b) {
  const int np = positive_crossings(b), nm = negative_crossings(b);
  return bracket(b).shifted(np - 2 * nm) * Rational(nm % 2 ? -1 : 1);
}

}  // namespace linkhom
