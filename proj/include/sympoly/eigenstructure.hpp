#pragma once

#include <optional>
#include <vector>

#include "sympoly/kernel.hpp"
#include "sympoly/polymatrix.hpp"

namespace sympoly {

struct FiniteDivisor {
    GaussianRational eigenvalue;
    int degree = 1;  // power of (lambda - eigenvalue)
};

/// A monic invariant-polynomial factor whose roots are not Gaussian
/// rational. Carries its degree in the eigenvalue count regardless.
struct UnfactoredPart {
    UniPoly poly;
    bool squarefree = false;
};

/// Elementary divisors plus minimal indices of a matrix polynomial at its
/// declared grade, with the Index Sum identity asserted at construction.
struct CompleteEigenstructure {
    std::size_t rows = 0, cols = 0;
    int grade = 0;
    std::size_t rank = 0;
    std::vector<FiniteDivisor> finite;       // sorted by (re, im, degree)
    std::vector<UnfactoredPart> unfactored;
    std::vector<int> infinite;               // degrees, sorted ascending
    std::vector<int> right_minimal;          // sorted ascending
    std::vector<int> left_minimal;           // sorted ascending

    int total_finite_degree() const;     // factored + unfactored degrees
    int total_infinite_degree() const;
    long index_sum() const;  // everything that must add up to grade * rank
    /// Count of finite eigenvalues with multiplicity (factored or not).
    int eigenvalue_count() const { return total_finite_degree(); }
};

/// Assembles the complete eigenstructure: finite part from the Smith form
/// with linear-root extraction, infinite part from the lambda-multiplicities
/// of the Smith invariants of rev P, minimal indices from the convolution
/// method. Rank disagreements between the three routes and Index Sum
/// violations are hard failures.
CompleteEigenstructure complete_eigenstructure(const PolyMatrix& p);

/// s + t + 2 * sum(eps) == r * d
bool index_sum_check(int s, int t, const std::vector<int>& eps, int r, int d);

/// True iff every eigenvalue (finite or infinite) is simple: linear factored
/// divisors with pairwise distinct roots, squarefree unfactored parts that
/// are pairwise coprime and coprime to the factored roots, and at most one
/// infinite divisor, of degree 1.
bool is_simple_structure(const CompleteEigenstructure& e);

/// Membership test against the generic bounded-rank catalog: returns a when
/// e has rank exactly r, simple structure, no infinite eigenvalue, equal
/// left and right minimal index lists consisting of s copies of alpha+1 and
/// n-r-s copies of alpha (alpha = floor(a/(n-r)), s = a mod (n-r)), and
/// exactly r*d - 2a eigenvalues. Returns nullopt otherwise.
std::optional<int> classify_bundle(const CompleteEigenstructure& e, int n, int d,
                                   int r);

}  // namespace sympoly
