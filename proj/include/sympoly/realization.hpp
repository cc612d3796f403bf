#pragma once

#include <vector>

#include "sympoly/catalog.hpp"
#include "sympoly/eigenstructure.hpp"
#include "sympoly/polymatrix.hpp"
#include "sympoly/rng.hpp"

namespace sympoly {

/// Target data for the symmetric inverse eigenstructure problem: an n x n
/// symmetric matrix polynomial of grade d and rank r with the given simple
/// finite eigenvalues, t in {0,1} infinite divisors of degree 1, and equal
/// left/right minimal indices eps.
struct RealizationSpec {
    int n = 0, d = 0, r = 0;
    std::vector<GaussianRational> mus;  // pairwise distinct
    int t = 0;
    std::vector<int> eps;  // n - r nonnegative entries

    /// s + t + 2*sum(eps) - r*d; zero iff the spec is admissible.
    long index_sum_residual() const;
    /// Throws ValidationError with the residual when inadmissible.
    void validate() const;
};

/// Dual minimal bases M (k x n) and N (r x n), k + r = n, with M N^T = 0.
/// Row degrees of M are the prescribed eps; row degrees of N are the nearly
/// homogeneous list from the Euclidean division of sum(eps) by r.
struct DualBasisPair {
    PolyMatrix M;
    PolyMatrix N;
};

/// Row degrees of N: sum(eps) = r*q + w gives r-w copies of q then w copies
/// of q+1.
std::vector<int> dual_degree_list(const std::vector<int>& eps, int r);

/// Builds a verified dual pair. Single-row sides use an explicit chain
/// construction; otherwise M is sampled with prescribed row degrees and
/// small random coefficients and N is its minimal kernel basis, retried a
/// bounded number of times until the degree pattern is the generic one.
/// Every returned pair has been verified: exact duality, minimal bases on
/// both sides, exact row degrees.
DualBasisPair dual_minimal_bases(const std::vector<int>& eps, int r, Rng& rng);

/// Constructs the symmetric realization of an admissible spec and certifies
/// symmetry, grade, and rank before returning. Callers wanting the full
/// eigenstructure round-trip use verify_realization.
PolyMatrix realize(const RealizationSpec& spec, Rng& rng);

/// Full round-trip check: recomputes the complete eigenstructure from
/// scratch and compares against the spec, including the degree law
/// (degree == d iff t < r). Throws InternalError on any mismatch.
void verify_realization(const PolyMatrix& p, const RealizationSpec& spec);

/// Materializes the polynomial-kind bundle descriptor: minimal indices from
/// the descriptor, t = 0, the given distinct eigenvalues.
PolyMatrix realize_bundle(const BundleDescriptor& desc,
                          const std::vector<GaussianRational>& eigenvalues,
                          Rng& rng);

RealizationSpec bundle_spec(const BundleDescriptor& desc,
                            const std::vector<GaussianRational>& eigenvalues);

}  // namespace sympoly
