#pragma once

#include "linkhom/laurent.hpp"
#include "linkhom/linalg.hpp"
#include "linkhom/poly.hpp"
#include "linkhom/poly_matrix.hpp"
#include "linkhom/qmatrix.hpp"
#include "linkhom/rational_function.hpp"
#include "linkhom/series.hpp"
