#pragma once

#include "linkhom/braid.hpp"
#include "linkhom/laurent.hpp"

namespace linkhom {

// Kauffman bracket of the braid closure. A positive letter weighs its
// vertical smoothing by 1 and its cup-cap smoothing by -v; a negative letter
// swaps the two weights. Each circle contributes [2].
LaurentPoly bracket(const BraidWord& b);

// (-1)^{n_-} v^{n_+ - 2 n_-} times the bracket.
LaurentPoly jones(const BraidWord& b);

}  // namespace linkhom
