#include "sympoly/polymatrix.hpp"

#include <algorithm>
#include <sstream>

#include "sympoly/errors.hpp"

namespace sympoly {

MoebiusMap::MoebiusMap(GaussianRational a_, GaussianRational b_, GaussianRational c_,
                       GaussianRational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det().is_zero()) throw ValidationError("singular Moebius map");
}

GaussianRational MoebiusMap::apply(const GaussianRational& x) const {
    GaussianRational den = c * x + d;
    if (den.is_zero()) throw ValidationError("Moebius map evaluated at its pole");
    return (a * x + b) / den;
}

GaussianRational MoebiusMap::image_of_infinity() const {
    if (c.is_zero()) throw ValidationError("Moebius map fixes infinity");
    return a / c;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, int grade)
    : rows_(rows), cols_(cols) {
    if (grade < 0) throw InternalError("negative grade");
    coeff_.assign(static_cast<std::size_t>(grade) + 1, Mat(rows, cols));
}

PolyMatrix::PolyMatrix(std::vector<Mat> coeffs) : coeff_(std::move(coeffs)) {
    if (coeff_.empty()) throw InternalError("empty coefficient list");
    rows_ = coeff_[0].rows();
    cols_ = coeff_[0].cols();
    for (const Mat& m : coeff_)
        if (m.rows() != rows_ || m.cols() != cols_)
            throw InternalError("ragged coefficient list");
}

PolyMatrix PolyMatrix::identity(std::size_t n, int grade) {
    PolyMatrix p(n, n, grade);
    p.coeff_[0] = Mat::identity(n);
    return p;
}

PolyMatrix PolyMatrix::from_entries(std::size_t rows, std::size_t cols,
                                    const std::vector<std::vector<UniPoly>>& entries,
                                    int grade) {
    if (entries.size() != rows) throw InternalError("entry grid row mismatch");
    int deg = -1;
    for (const auto& row : entries) {
        if (row.size() != cols) throw InternalError("entry grid column mismatch");
        for (const auto& p : row) deg = std::max(deg, p.degree());
    }
    if (grade < 0) grade = std::max(deg, 0);
    if (grade < deg) throw InternalError("declared grade below entry degree");
    PolyMatrix out(rows, cols, grade);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (int k = 0; k <= entries[i][j].degree(); ++k)
                out.coeff_[static_cast<std::size_t>(k)].at(i, j) = entries[i][j][k];
    return out;
}

int PolyMatrix::degree() const {
    for (int k = grade(); k >= 0; --k)
        if (!coeff_[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

const Mat& PolyMatrix::coeff(int k) const {
    if (k < 0 || k > grade()) throw InternalError("coefficient index out of range");
    return coeff_[static_cast<std::size_t>(k)];
}

Mat& PolyMatrix::coeff(int k) {
    if (k < 0 || k > grade()) throw InternalError("coefficient index out of range");
    return coeff_[static_cast<std::size_t>(k)];
}

UniPoly PolyMatrix::entry(std::size_t i, std::size_t j) const {
    std::vector<GaussianRational> c(coeff_.size());
    for (std::size_t k = 0; k < coeff_.size(); ++k) c[k] = coeff_[k].at(i, j);
    return UniPoly(std::move(c));
}

void PolyMatrix::set_entry(std::size_t i, std::size_t j, const UniPoly& p) {
    if (p.degree() > grade()) throw InternalError("entry degree exceeds grade");
    for (int k = 0; k <= grade(); ++k)
        coeff_[static_cast<std::size_t>(k)].at(i, j) = p.coeff(k);
}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (const Mat& m : coeff_)
        if (!m.is_symmetric()) return false;
    return true;
}

Mat PolyMatrix::eval(const GaussianRational& x) const {
    Mat acc = coeff_.back();
    for (int k = grade() - 1; k >= 0; --k)
        acc = x * acc + coeff_[static_cast<std::size_t>(k)];
    return acc;
}

PolyMatrix PolyMatrix::rev() const {
    std::vector<Mat> out(coeff_.rbegin(), coeff_.rend());
    return PolyMatrix(std::move(out));
}

PolyMatrix PolyMatrix::transpose() const {
    std::vector<Mat> out;
    out.reserve(coeff_.size());
    for (const Mat& m : coeff_) out.push_back(m.transpose());
    return PolyMatrix(std::move(out));
}

PolyMatrix PolyMatrix::with_grade(int g) const {
    if (g < degree()) throw InternalError("with_grade below degree");
    std::vector<Mat> out;
    out.reserve(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= g; ++k)
        out.push_back(k <= grade() ? coeff_[static_cast<std::size_t>(k)]
                                   : Mat(rows_, cols_));
    return PolyMatrix(std::move(out));
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out = *this;
    for (Mat& m : out.coeff_) m = GaussianRational(-1) * m;
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw InternalError("PolyMatrix shape mismatch");
    int g = std::max(a.grade(), b.grade());
    PolyMatrix out(a.rows_, a.cols_, g);
    for (int k = 0; k <= g; ++k) {
        if (k <= a.grade()) out.coeff(k) += a.coeff(k);
        if (k <= b.grade()) out.coeff(k) += b.coeff(k);
    }
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_) throw InternalError("PolyMatrix product shape mismatch");
    PolyMatrix out(a.rows_, b.cols_, a.grade() + b.grade());
    for (int i = 0; i <= a.grade(); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j <= b.grade(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            out.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

PolyMatrix operator*(const UniPoly& s, const PolyMatrix& p) {
    PolyMatrix out(p.rows_, p.cols_, std::max(s.degree(), 0) + p.grade());
    for (int i = 0; i <= s.degree(); ++i) {
        if (s[i].is_zero()) continue;
        for (int j = 0; j <= p.grade(); ++j) out.coeff(i + j) += s[i] * p.coeff(j);
    }
    return out;
}

PolyMatrix operator*(const GaussianRational& s, const PolyMatrix& p) {
    PolyMatrix out = p;
    for (Mat& m : out.coeff_) m = s * m;
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeff_ == b.coeff_;
}

std::string PolyMatrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " grade " << grade() << "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << entry(i, j).str();
        os << "]\n";
    }
    return os.str();
}

PolyMatrix moebius_transform(const PolyMatrix& p, const MoebiusMap& map) {
    int d = p.grade();
    UniPoly num({map.b, map.a});  // a*l + b
    UniPoly den({map.d, map.c});  // c*l + d
    std::vector<UniPoly> num_pow(static_cast<std::size_t>(d) + 1),
        den_pow(static_cast<std::size_t>(d) + 1);
    num_pow[0] = UniPoly::constant(1);
    den_pow[0] = UniPoly::constant(1);
    for (int k = 1; k <= d; ++k) {
        num_pow[static_cast<std::size_t>(k)] = num_pow[static_cast<std::size_t>(k - 1)] * num;
        den_pow[static_cast<std::size_t>(k)] = den_pow[static_cast<std::size_t>(k - 1)] * den;
    }
    PolyMatrix out(p.rows(), p.cols(), d);
    for (int k = 0; k <= d; ++k) {
        if (p.coeff(k).is_zero()) continue;
        UniPoly w = num_pow[static_cast<std::size_t>(k)] *
                    den_pow[static_cast<std::size_t>(d - k)];
        for (int t = 0; t <= w.degree(); ++t) {
            if (w[t].is_zero()) continue;
            out.coeff(t) += w[t] * p.coeff(k);
        }
    }
    return out;
}

PolyMatrix block_diag(const std::vector<PolyMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    int grade = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
        grade = std::max(grade, b.grade());
    }
    PolyMatrix out(rows, cols, grade);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int k = 0; k <= b.grade(); ++k)
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.coeff(k).at(ro + i, co + j) = b.coeff(k).at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

mpq_class squared_distance(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.grade() != b.grade())
        throw ValidationError("distance requires equal shapes and grades");
    mpq_class acc(0);
    for (int k = 0; k <= a.grade(); ++k)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                acc += (a.coeff(k).at(i, j) - b.coeff(k).at(i, j)).norm();
    return acc;
}

}  // namespace sympoly
