#pragma once

#include <string>
#include <vector>

#include "sympoly/eigenstructure.hpp"
#include "sympoly/polymatrix.hpp"

namespace sympoly {

/// A pencil carrying the d x d block template of the symmetric strong
/// linearization of an n x n symmetric matrix polynomial of odd grade d.
struct SylvesterPencil {
    PolyMatrix pencil;  // nd x nd, grade 1, symmetric
    int n = 0;
    int d = 0;
};

/// Block template, for odd i: diagonal block i holds lambda*A_(d-i+1) +
/// A_(d-i); even diagonal blocks vanish; the super/subdiagonal alternates
/// I and lambda*I starting with I. Even grades have no such symmetric
/// template and are rejected.
SylvesterPencil linearize(const PolyMatrix& p);

/// True iff the pencil carries the exact block pattern of a linearization
/// with the stated n, d (identity blocks included, off-template zero).
bool matches_sylvester_pattern(const PolyMatrix& pencil, int n, int d);

/// Inverts the template: recovers P from its linearization. Pattern
/// mismatches (perturbed identity block, asymmetry, stray entries) are
/// rejected with ValidationError.
PolyMatrix delinearize(const SylvesterPencil& f);

struct ShiftLawReport {
    std::vector<int> poly_indices;    // right (= left) minimal indices of P
    std::vector<int> pencil_indices;  // of the linearization
    int shift = 0;                    // (d-1)/2
    bool shift_ok = false;
    bool finite_divisors_match = false;
    std::string detail;
};

/// Computes minimal indices of P and of its linearization independently and
/// checks that each pencil index is the polynomial index plus (d-1)/2, and
/// that the finite elementary divisors coincide.
ShiftLawReport verify_shift_law(const PolyMatrix& p);

}  // namespace sympoly
