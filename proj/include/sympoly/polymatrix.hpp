#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sympoly/mat.hpp"
#include "sympoly/unipoly.hpp"

namespace sympoly {

/// Nonsingular 2x2 coefficient matrix of a Moebius map
/// m(x) = (a x + b) / (c x + d).
struct MoebiusMap {
    GaussianRational a, b, c, d;

    MoebiusMap(GaussianRational a_, GaussianRational b_, GaussianRational c_,
               GaussianRational d_);

    static MoebiusMap identity() { return {1, 0, 0, 1}; }
    /// x -> 1/x, the map whose induced action on polynomials is rev.
    static MoebiusMap reversal() { return {0, 1, 1, 0}; }

    GaussianRational det() const { return a * d - b * c; }

    bool pole_at(const GaussianRational& x) const { return (c * x + d).is_zero(); }
    /// Image of a finite point; throws ValidationError at the pole.
    GaussianRational apply(const GaussianRational& x) const;
    bool maps_infinity_to_finite() const { return !c.is_zero(); }
    /// m(infinity) = a/c; requires c != 0.
    GaussianRational image_of_infinity() const;
};

/// m x n matrix polynomial P(lambda) = sum_k lambda^k A_k of declared grade d.
///
/// The grade is an explicit attribute: exactly d+1 coefficient matrices are
/// stored and the top ones may be zero. Reversal and the infinite-eigenvalue
/// conventions depend on the declared grade, not on the degree.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(std::size_t rows, std::size_t cols, int grade);
    /// Takes ownership of grade+1 coefficient matrices, constant term first.
    PolyMatrix(std::vector<Mat> coeffs);

    static PolyMatrix identity(std::size_t n, int grade = 0);
    static PolyMatrix from_entries(std::size_t rows, std::size_t cols,
                                   const std::vector<std::vector<UniPoly>>& entries,
                                   int grade = -1);  // -1: max entry degree

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int grade() const { return static_cast<int>(coeff_.size()) - 1; }
    /// Largest k with A_k nonzero, or -1 for the zero matrix.
    int degree() const;

    const Mat& coeff(int k) const;
    Mat& coeff(int k);

    UniPoly entry(std::size_t i, std::size_t j) const;
    void set_entry(std::size_t i, std::size_t j, const UniPoly& p);

    bool is_zero() const { return degree() < 0; }
    bool is_symmetric() const;

    Mat eval(const GaussianRational& x) const;

    /// rev P(lambda) = lambda^d P(1/lambda): the coefficient list reversed
    /// with respect to the declared grade. An involution at fixed grade.
    PolyMatrix rev() const;

    PolyMatrix transpose() const;

    /// Same matrix re-declared at grade g >= degree().
    PolyMatrix with_grade(int g) const;

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const UniPoly& s, const PolyMatrix& p);
    friend PolyMatrix operator*(const GaussianRational& s, const PolyMatrix& p);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Mat> coeff_;
};

/// M_A(P)(lambda) = sum_k A_k (a lambda + b)^k (c lambda + d)^(grade-k).
/// Preserves grade, symmetry, rank, and minimal indices; moves eigenvalues.
PolyMatrix moebius_transform(const PolyMatrix& p, const MoebiusMap& map);

PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks);

/// Squared coefficientwise Frobenius distance between equal-shape,
/// equal-grade matrix polynomials: an exact nonnegative rational.
mpq_class squared_distance(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace sympoly
