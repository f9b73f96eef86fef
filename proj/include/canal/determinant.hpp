#pragma once

#include "canal/multipoly.hpp"

#include <vector>

namespace canal {

using MpMatrix = std::vector<std::vector<MultiPoly>>;

// Exact determinant by fraction-free elimination; every internal division
// is exact in the polynomial ring and verified.  Non-square input is an
// error.
MultiPoly ff_determinant(const MpMatrix& m);

// Exact determinant by row-by-row Laplace expansion sharing minors across
// column subsets.  Division-free; much faster than elimination on sparse
// symbolic matrices, and the default inside sylvester_resultant.
// Dimension is capped at 30.
MultiPoly minor_expansion_determinant(const MpMatrix& m);

// Resultant of f and g with respect to t at declared degrees df >= deg f,
// dg >= deg g, df + dg >= 1.  Determinant of the (df+dg) square Sylvester
// matrix; the first dg rows carry the coefficients of f, highest first.
MultiPoly sylvester_resultant(const TPoly& f, const TPoly& g, int df, int dg);

}  // namespace canal
