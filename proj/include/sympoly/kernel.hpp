#pragma once

#include <cstddef>
#include <vector>

#include "sympoly/polymatrix.hpp"

namespace sympoly {

/// Left and right minimal indices, each sorted ascending, plus the rank.
struct MinimalIndexReport {
    std::vector<int> right;  // n - rank entries
    std::vector<int> left;   // m - rank entries
    std::size_t rank = 0;
};

/// Block convolution matrix of P at kernel degree bound delta: maps the
/// stacked coefficients of a vector polynomial x of degree <= delta to the
/// stacked coefficients of P x. Column block j holds coefficient lambda^j
/// of x; row block k is coefficient lambda^k of the product.
Mat convolution_matrix(const PolyMatrix& p, int delta);

/// Minimal indices from the nullities of successive convolution matrices:
/// nullity(delta) = sum over indices e <= delta of (delta - e + 1), so the
/// number of indices equal to delta is the second difference of nullities.
/// Left indices are computed on the transpose; for symmetric input the right
/// list is reused directly.
MinimalIndexReport minimal_indices(const PolyMatrix& p);

/// Same, with the rank already certified by the caller (it must come from
/// normal_rank or an equivalent exact route).
MinimalIndexReport minimal_indices(const PolyMatrix& p, std::size_t certified_rank);

/// A minimal basis of the right null-space, rows sorted by ascending degree.
/// Row degrees equal the right minimal indices. Verified before returning:
/// exact annihilation, full-rank highest-row-degree coefficient matrix,
/// trivial Smith invariants (so the basis has full rank at every point),
/// and full evaluation rank on the deterministic point grid.
/// Full-rank input yields a 0 x n result.
PolyMatrix minimal_kernel_basis(const PolyMatrix& p);

}  // namespace sympoly
