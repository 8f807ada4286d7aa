#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/qrep.hpp"

namespace linkhom {

enum class SliceKind { Merge, Split, CrossPos, CrossNeg, Braiding };

// One generator acting at strand position `pos` (0-based) with identities
// elsewhere. Merge(a,b) joins positions pos, pos+1; Split(a,b) replaces the
// label at pos by the pair (a, b); crossings act on two label-1 strands.
// Braiding(a,b) swaps an a-strand and a b-strand and stands for the ladder
// sum returned by braiding_web (sign -1 for the inverse).
struct Slice {
  SliceKind kind;
  int pos;
  int a = 1;
  int b = 1;
  int sign = 1;
};

struct WebWord {
  std::vector<int> domain;
  std::vector<Slice> slices;

  // Label sequence after all slices; throws std::invalid_argument on mismatch.
  std::vector<int> codomain() const;
  WebWord& then(const WebWord& next);  // vertical composition (this first)
};

class WebParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text format: a header "labels: l1 l2 ..." followed by one slice per line,
// "merge a b @p", "split a b @p", "x+ @p" or "x- @p" with 1-based p. Braiding
// slices are written "braid+ a b @p" and "braid- a b @p".
WebWord parse_web(const std::string& text);
std::string to_string(const WebWord& w);

// Image of a web under the evaluation functor, as a matrix between the tensor
// products of exterior powers named by domain and codomain.
QMatrix phi_eval(const WebWord& w, const RepContext& ctx);

// Image of a single vector of the domain space.
QVec phi_apply(const WebWord& w, const RepContext& ctx, QVec x);

// Scalar of a closed web whose boundary labels all equal k.
LaurentPoly closed_web_value(const WebWord& w, const RepContext& ctx);

// A linear combination of webs with a common domain and codomain.
using WebCombination = std::vector<std::pair<MultiRational, WebWord>>;
QMatrix phi_eval(const WebCombination& c, const RepContext& ctx);

// Ladder from (a, b) to (b, a): a rung moving r units from column 1 to
// column 2, then a rung moving b - a + r units back (a <= b). For a > b the
// picture is mirrored left to right.
WebWord ladder_web(int a, int r, int b);
// Braiding wedge^a (x) wedge^b -> wedge^b (x) wedge^a and its inverse.
WebCombination braiding_web(int a, int b, const RepContext& ctx, int sign = 1);

// One-rung ladders on a two-column weight: E moves one unit from column 2 to
// column 1, F moves one unit from column 1 to column 2, and [E, F] acts on
// weight (a_1, a_2) by [a_1 - a_2]. Out-of-range weights give zero maps.
QMatrix ladder_action(GenType g, const std::vector<int>& weight, const RepContext& ctx);

// Normalized crossing on factors i, i+1 of W^{(x)factors}.
QMatrix crossing_matrix(const RepContext& ctx, int i, int factors, int sign);

// Closed web computing the quantum invariant of the braid closure.
WebWord closure_web(const BraidWord& b, int k);
MultiRational wrt_eval(const BraidWord& b, int k, int eta);
// The same invariant computed as a quantum trace of the braid representation.
MultiRational wrt_trace(const BraidWord& b, int k, int eta);

// Coloured Jones polynomial by cabling with Jones-Wenzl projectors (k = 2),
// corrected to zero framing. Colour 1 on every component reproduces jones(b)
// and the unknot with colour m gives [m+1].
MultiRational colored_jones(const BraidWord& b, const std::vector<int>& colors);

}  // namespace linkhom
