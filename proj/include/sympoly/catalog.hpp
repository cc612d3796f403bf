#pragma once

#include <vector>

#include "sympoly/polymatrix.hpp"

namespace sympoly {

enum class BundleKind { polynomial, pencil };

/// Symbolic datum of a generic bounded-rank bundle. Eigenvalues are not
/// stored; they are supplied at materialization and must stay distinct.
struct BundleDescriptor {
    BundleKind kind = BundleKind::polynomial;
    int n = 0, d = 0, r = 0;
    int a = 0;
    int alpha = 0;      // floor(a / (n-r))
    int s = 0;          // a mod (n-r)
    int eig_count = 0;  // r*d - 2a

    /// The nearly homogeneous list: n-r-s copies of alpha, then s copies of
    /// alpha+1, ascending. Shared by the left and the right side.
    std::vector<int> minimal_indices() const;
};

/// All floor(r*d/2)+1 generic bundles of n x n symmetric matrix polynomials
/// of odd grade d and rank exactly r, for a = 0 .. floor(r*d/2).
std::vector<BundleDescriptor> enumerate_poly_bundles(int n, int d, int r);

/// The floor(r/2)+1 generic bundles of n x n symmetric pencils of rank r.
std::vector<BundleDescriptor> enumerate_pencil_bundles(int n, int r);

/// lambda*G_n + F_n, the n x (n+1) singular block.
PolyMatrix singular_block(int n);
/// The (2n+1) x (2n+1) symmetric pencil [[0, L^T], [L, 0]]; n = 0 gives the
/// 1 x 1 zero pencil.
PolyMatrix symmetric_singular_pencil(int n);
/// 1 x 1 pencil lambda - mu.
PolyMatrix jordan_block_1(const GaussianRational& mu);

/// Materializes a pencil-kind descriptor as the block-diagonal symmetric
/// canonical pencil with the given distinct eigenvalues.
PolyMatrix build_canonical_pencil(const BundleDescriptor& desc,
                                  const std::vector<GaussianRational>& eigenvalues);

/// Orbit codimension of the generic polynomial bundle representative:
/// ((n+r)(d-1) + 2(n-a)) (n-r+1) / 2.
long codim_orbit(int n, int d, int r, int a);

/// Bundle codimension: codim_orbit minus the count rd - 2a of distinct
/// eigenvalues. Strictly decreasing in a exactly when r < n-1.
long codim_bundle(int n, int d, int r, int a);

/// Whether the rank-r1 pencil bundle a1 (r1 = n(d-1)+r) is realizable as a
/// linearization of a rank-r grade-d symmetric polynomial:
/// a1 >= (n-r)(d-1)/2.
bool pencil_realizable_as_linearization(int n, int d, int r, int a1);

}  // namespace sympoly
