#pragma once

#include <utility>
#include <vector>

#include "sympoly/unipoly.hpp"

namespace sympoly {

/// True iff gcd(g, g') is constant. Zero input is rejected.
bool is_squarefree(const UniPoly& g);

struct RootList {
    std::vector<std::pair<GaussianRational, int>> roots;  // (root, multiplicity)
    UniPoly cofactor;  // monic part with no Gaussian-rational roots
};

/// All Gaussian-rational roots of a monic polynomial, with multiplicities.
///
/// Candidates p/q come from the generalized rational root theorem after
/// clearing denominators: p runs over the Gaussian divisors of the constant
/// term, q over the divisors of the cleared leading coefficient, times
/// units. A Horner pass modulo a fixed 61-bit prime discards almost all
/// non-roots before the exact check. Irrational roots stay in the cofactor.
RootList linear_roots(const UniPoly& g);

}  // namespace sympoly
