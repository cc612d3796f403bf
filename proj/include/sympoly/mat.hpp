#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sympoly/gaussian_rational.hpp"

namespace sympoly {

/// Dense constant matrix over the Gaussian rationals.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const {
        return a_[i * cols_ + j];
    }

    bool is_zero() const;
    bool is_symmetric() const;

    Mat transpose() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const GaussianRational& c, const Mat& m);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

std::size_t mat_rank(Mat m);

/// Determinant by fraction Gaussian elimination. Square input required.
GaussianRational mat_det(Mat m);

/// Basis of { x : m x = 0 }, from the reduced row echelon form, one vector
/// per free column in ascending column order. Deterministic.
std::vector<std::vector<GaussianRational>> mat_right_nullspace(Mat m);

}  // namespace sympoly
