#pragma once

#include "canal/multipoly.hpp"
#include "canal/unipoly.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace canal {

using UniMatrix = std::vector<std::vector<UniPoly>>;

// W = U * S * V for the 2 x d matrix W with rows (A, B), where
// S = diag(1, q) padded with zero columns, U is 2 x 2, V is d x d, both
// with nonzero constant determinant, and q is the monic gcd of the 2x2
// minors of W.
struct SmithDecomposition {
    UniMatrix U;   // 2 x 2
    UniPoly q;     // monic
    UniMatrix V;   // d x d
};

// Basis pair of the module { h1*A + h2*B } whose degrees sum to the
// minimal possible value; leading vectors are linearly independent and
// the entries of wedge(a, b) are coprime.
struct MuBasis {
    PolyVec a, b;
    std::pair<int, int> deg_pair;
    UniPoly plucker_gcd;        // always the constant 1
    std::optional<int> k;       // Pluecker parametrization degree, when computed
};

struct ModuleDegreeReport {
    int deg_wedge;
    int deg_gcd;
    int k;
    int deg_hypersurface;
    int deg_module;
};

// Smith decomposition of the 2 x d coefficient matrix of (A, B).
// Errors: rank below 2 ("quasi-generators are linearly dependent over
// ℝ[t]"); nonconstant gcd of the entries ("input is p·D form, not
// reduced").
SmithDecomposition smith_form(const PolyVec& A, const PolyVec& B);

// Minimal-degree basis of the module generated by A and B: the first two
// rows of V from the Smith decomposition, then degree reduction until the
// leading vectors are independent.  The larger-degree row is reduced; on
// ties the second row.
MuBasis mu_basis(const PolyVec& A, const PolyVec& B);

// Write C = h1*a + h2*b over the polynomial ring, or nullopt when C is
// not in the module.  Requires linearly independent leading vectors.
std::optional<std::pair<UniPoly, UniPoly>> module_membership(
    const PolyVec& C, const PolyVec& a, const PolyVec& b);
std::optional<std::pair<UniPoly, UniPoly>> module_membership(
    const PolyVec& C, const MuBasis& basis);

// Generic fiber cardinality of the Pluecker image t -> wedge(A, B)(t)
// divided by its content.  Sampled at random parameters until three
// samples agree; after 10 attempts the error is "degenerate sampling".
// A constant normalized image has degree 1.
int plucker_param_degree(const PolyVec& A, const PolyVec& B, uint64_t seed);

// Degrees attached to the module and its line hypersurface:
// deg_wedge - deg_gcd = k * deg_hypersurface = deg_module.
ModuleDegreeReport degree_report(const PolyVec& A, const PolyVec& B, uint64_t seed);

// Resultant of a.x and b.x at formal degrees deg_pair, with x the
// variable vector assigned entrywise.  A degree pair (0,0) is the error
// "module defines no hypersurface".
MultiPoly mu_resultant(const MuBasis& basis, const std::vector<int>& vars);
MultiPoly mu_resultant(const MuBasis& basis);

// Variable assignment for d-vectors: (u, y0, y1, y2, y3, y4) truncated to
// the first d when d < 6.
std::vector<int> standard_vars(int d);

}  // namespace canal
