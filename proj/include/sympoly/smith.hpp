#pragma once

#include <cstddef>
#include <vector>

#include "sympoly/polymatrix.hpp"

namespace sympoly {

/// Smith decomposition U P V = D with U, V unimodular and D diagonal,
/// D = diag(g_1, ..., g_r, 0, ...) with monic g_j and g_j | g_{j+1}.
struct SmithForm {
    PolyMatrix U;  // rows x rows
    PolyMatrix D;  // rows x cols, diagonal
    PolyMatrix V;  // cols x cols
    std::vector<UniPoly> invariants;  // the nonzero g_j, monic
    std::size_t rank = 0;
};

/// Rank over the rational function field, certified deterministically:
/// every minor has degree at most min(m,n) * grade, so the maximum rank of
/// the evaluations at min(m,n)*grade + 1 distinct points (0, 1, 2, ...) is
/// exact. A nonzero minor cannot vanish at all of them.
std::size_t normal_rank(const PolyMatrix& p);

/// Computes the Smith form by gcd elimination with minimal-degree pivoting.
/// Before returning, verifies the reconstruction U P V = D exactly, the
/// divisibility chain, monicity, and unimodularity of U and V.
SmithForm smith_form(const PolyMatrix& p);

/// Degree-bound evaluation certificate that det(p) is a nonzero constant:
/// det has degree at most the sum of the row degrees, and a polynomial of
/// degree at most B agreeing with a constant at B+1 points is constant.
bool is_unimodular(const PolyMatrix& p);

}  // namespace sympoly
