#include "sympoly/mat.hpp"

#include <algorithm>
#include <sstream>

#include "sympoly/errors.hpp"

namespace sympoly {

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat& Mat::operator+=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("Mat shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("Mat shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw InternalError("Mat product shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& v = a.at(i, k);
            if (v.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += v * b.at(k, j);
            }
        }
    return c;
}

Mat operator*(const GaussianRational& c, const Mat& m) {
    Mat out = m;
    for (auto& v : out.a_) v *= c;
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).str();
        os << "]\n";
    }
    return os.str();
}

namespace {

// Multiplies a row by a positive rational so that all entries become Gaussian
// integers with no common integer content. Row scalings alter neither rank
// nor the right null-space, and they keep elimination entries small.
void strip_row_content(Mat& m, std::size_t i) {
    mpz_class den_lcm(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const GaussianRational& v = m.at(i, j);
        mpz_class d1 = v.re().get_den(), d2 = v.im().get_den();
        mpz_class g;
        mpz_lcm(g.get_mpz_t(), den_lcm.get_mpz_t(), d1.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), g.get_mpz_t(), d2.get_mpz_t());
    }
    mpz_class num_gcd(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const GaussianRational& v = m.at(i, j);
        mpz_class n1 = v.re().get_num() * (den_lcm / v.re().get_den());
        mpz_class n2 = v.im().get_num() * (den_lcm / v.im().get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n1.get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n2.get_mpz_t());
    }
    if (num_gcd == 0) return;  // zero row
    GaussianRational scale{mpq_class(den_lcm, num_gcd)};
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= scale;
}

// Entry growth estimate used to decide when a content strip pays off.
std::size_t row_bit_size(const Mat& m, std::size_t i) {
    std::size_t worst = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const GaussianRational& v = m.at(i, j);
        if (v.is_zero()) continue;
        std::size_t bits = mpz_sizeinbase(v.re().get_num().get_mpz_t(), 2) +
                           mpz_sizeinbase(v.re().get_den().get_mpz_t(), 2) +
                           mpz_sizeinbase(v.im().get_num().get_mpz_t(), 2) +
                           mpz_sizeinbase(v.im().get_den().get_mpz_t(), 2);
        worst = std::max(worst, bits);
    }
    return worst;
}

// Row echelon form in place; returns the pivot columns in ascending order.
// Rows are renormalized to content-free Gaussian integers only once their
// entries outgrow a machine word; small problems skip the gcd passes.
std::vector<std::size_t> echelonize(Mat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (row_bit_size(m, i) > 64) strip_row_content(m, i);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // prefer the bit-smallest nonzero pivot in this column
        std::size_t best = m.rows();
        std::size_t best_size = 0;
        for (std::size_t i = row; i < m.rows(); ++i) {
            const GaussianRational& v = m.at(i, col);
            if (v.is_zero()) continue;
            std::size_t size = mpz_sizeinbase(v.re().get_num().get_mpz_t(), 2) +
                               mpz_sizeinbase(v.im().get_num().get_mpz_t(), 2);
            if (best == m.rows() || size < best_size) {
                best = i;
                best_size = size;
            }
        }
        if (best == m.rows()) continue;
        if (best != row)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(best, j), m.at(row, j));

        GaussianRational pivot_inv = m.at(row, col).inv();
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col) * pivot_inv;
            m.at(i, col) = GaussianRational();
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                if (m.at(row, j).is_zero()) continue;
                m.at(i, j) -= f * m.at(row, j);
            }
            if (row_bit_size(m, i) > 256) strip_row_content(m, i);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t mat_rank(Mat m) { return echelonize(m).size(); }

GaussianRational mat_det(Mat m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    std::size_t n = m.rows();
    GaussianRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) return GaussianRational();
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        GaussianRational inv = m.at(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            GaussianRational f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::vector<std::vector<GaussianRational>> mat_right_nullspace(Mat m) {
    std::size_t n = m.cols();
    std::vector<std::size_t> pivots = echelonize(m);
    std::size_t r = pivots.size();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    // One vector per free column, solved by back-substitution on the echelon
    // rows. Free variables other than the active one stay at zero.
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> x(n);
        x[free] = GaussianRational(1);
        for (std::size_t kk = r; kk-- > 0;) {
            std::size_t pc = pivots[kk];
            if (pc > free) continue;  // row support starts past every nonzero of x
            GaussianRational acc;
            for (std::size_t j = pc + 1; j <= free; ++j) {
                if (x[j].is_zero() || m.at(kk, j).is_zero()) continue;
                acc += m.at(kk, j) * x[j];
            }
            x[pc] = -acc / m.at(kk, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace sympoly
