#include "sympoly/kernel.hpp"

#include <algorithm>

#include "sympoly/errors.hpp"
#include "sympoly/smith.hpp"

namespace sympoly {

Mat convolution_matrix(const PolyMatrix& p, int delta) {
    if (delta < 0) throw InternalError("negative kernel degree bound");
    std::size_t m = p.rows(), n = p.cols();
    int d = p.grade();
    Mat t(m * static_cast<std::size_t>(d + delta + 1),
          n * static_cast<std::size_t>(delta + 1));
    for (int j = 0; j <= delta; ++j)
        for (int k = 0; k <= d; ++k) {
            const Mat& a = p.coeff(k);
            for (std::size_t r = 0; r < m; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    const GaussianRational& v = a.at(r, c);
                    if (v.is_zero()) continue;
                    t.at(static_cast<std::size_t>(j + k) * m + r,
                         static_cast<std::size_t>(j) * n + c) = v;
                }
        }
    return t;
}

namespace {

std::vector<int> right_indices_by_nullity(const PolyMatrix& p, std::size_t rank) {
    std::size_t want = p.cols() - rank;
    std::vector<int> out;
    if (want == 0) return out;
    // Index Sum bound: no right minimal index can exceed grade * rank.
    int delta_cap = p.grade() * static_cast<int>(rank) + 1;
    std::size_t null_prev = 0, null_prev2 = 0;
    for (int delta = 0; delta <= delta_cap; ++delta) {
        Mat t = convolution_matrix(p, delta);
        std::size_t nullity = t.cols() - mat_rank(std::move(t));
        std::size_t here = nullity + null_prev2 - 2 * null_prev;
        for (std::size_t c = 0; c < here; ++c) out.push_back(delta);
        null_prev2 = null_prev;
        null_prev = nullity;
        if (out.size() == want) return out;
        if (out.size() > want) break;
    }
    throw InternalError("minimal index recovery failed: nullity profile inconsistent");
}

}  // namespace

MinimalIndexReport minimal_indices(const PolyMatrix& p) {
    return minimal_indices(p, normal_rank(p));
}

MinimalIndexReport minimal_indices(const PolyMatrix& p, std::size_t certified_rank) {
    MinimalIndexReport rep;
    rep.rank = certified_rank;
    rep.right = right_indices_by_nullity(p, rep.rank);
    if (p.is_symmetric())
        rep.left = rep.right;
    else
        rep.left = right_indices_by_nullity(p.transpose(), rep.rank);
    return rep;
}

namespace {

// Coefficient vector of x (degree <= delta) in the convolution coordinates.
std::vector<GaussianRational> stack_coeffs(const std::vector<UniPoly>& x,
                                           std::size_t n, int delta) {
    std::vector<GaussianRational> v(n * static_cast<std::size_t>(delta + 1));
    for (std::size_t c = 0; c < n; ++c)
        for (int k = 0; k <= x[c].degree(); ++k)
            v[static_cast<std::size_t>(k) * n + c] = x[c][k];
    return v;
}

// Incremental echelon accumulator over stacked coefficient vectors.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    // Reduces v against the accumulated rows; if a nonzero residual remains,
    // absorbs it and reports true.
    bool absorb(std::vector<GaussianRational> v) {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const GaussianRational& lead = v[pivot_[k]];
            if (lead.is_zero()) continue;
            GaussianRational f = lead;  // rows are pivot-normalized
            for (std::size_t j = 0; j < dim_; ++j) {
                if (rows_[k][j].is_zero()) continue;
                v[j] -= f * rows_[k][j];
            }
        }
        std::size_t piv = dim_;
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) {
                piv = j;
                break;
            }
        if (piv == dim_) return false;
        GaussianRational inv = v[piv].inv();
        for (auto& e : v) e *= inv;
        rows_.push_back(std::move(v));
        pivot_.push_back(piv);
        return true;
    }

    // residual of v against the span, without absorbing
    std::vector<GaussianRational> reduce(std::vector<GaussianRational> v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const GaussianRational& lead = v[pivot_[k]];
            if (lead.is_zero()) continue;
            GaussianRational f = lead;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (rows_[k][j].is_zero()) continue;
                v[j] -= f * rows_[k][j];
            }
        }
        return v;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<GaussianRational>> rows_;
    std::vector<std::size_t> pivot_;
};

}  // namespace

PolyMatrix minimal_kernel_basis(const PolyMatrix& p) {
    std::size_t n = p.cols();
    std::size_t rank = normal_rank(p);
    std::size_t want = n - rank;
    if (want == 0) {
        PolyMatrix empty(0, n, 0);
        return empty;
    }

    std::vector<std::vector<UniPoly>> rows;  // selected basis rows
    std::vector<int> degrees;
    int delta_cap = p.grade() * static_cast<int>(rank) + 1;
    for (int delta = 0; delta <= delta_cap && rows.size() < want; ++delta) {
        std::size_t dim = n * static_cast<std::size_t>(delta + 1);
        Span span(dim);
        // shifts lambda^t * row span everything of kernel degree < delta
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (int t = 0; t + degrees[k] <= delta; ++t) {
                std::vector<UniPoly> shifted(n);
                for (std::size_t c = 0; c < n; ++c)
                    shifted[c] = UniPoly::monomial(t) * rows[k][c];
                span.absorb(stack_coeffs(shifted, n, delta));
            }
        auto nullvecs = mat_right_nullspace(convolution_matrix(p, delta));
        for (auto& v : nullvecs) {
            if (rows.size() == want) break;
            std::vector<GaussianRational> res = span.reduce(std::move(v));
            bool nonzero = false;
            for (const auto& e : res)
                if (!e.is_zero()) {
                    nonzero = true;
                    break;
                }
            if (!nonzero) continue;
            // residual stays in the kernel and must have exact degree delta
            std::vector<UniPoly> row(n);
            for (std::size_t c = 0; c < n; ++c) {
                std::vector<GaussianRational> cs(static_cast<std::size_t>(delta) + 1);
                for (int k = 0; k <= delta; ++k)
                    cs[static_cast<std::size_t>(k)] = res[static_cast<std::size_t>(k) * n + c];
                row[c] = UniPoly(std::move(cs)).trimmed();
            }
            int deg = -1;
            for (const auto& e : row) deg = std::max(deg, e.degree());
            if (deg != delta)
                throw InternalError("kernel basis candidate has unexpected degree");
            span.absorb(std::move(res));
            rows.push_back(std::move(row));
            degrees.push_back(delta);
        }
    }
    if (rows.size() != want)
        throw InternalError("kernel basis extraction found too few rows");

    PolyMatrix basis = PolyMatrix::from_entries(want, n, rows);

    // Verification gate.
    PolyMatrix prod = p * basis.transpose();
    if (!prod.is_zero()) throw InternalError("kernel basis does not annihilate");
    Mat high(want, n);
    for (std::size_t k = 0; k < want; ++k)
        for (std::size_t c = 0; c < n; ++c) high.at(k, c) = rows[k][c].coeff(degrees[k]);
    if (mat_rank(high) != want)
        throw InternalError("kernel basis highest coefficient matrix is rank deficient");
    long points = static_cast<long>(std::min(want, n)) * basis.grade() + 1;
    for (long x = 0; x < points; ++x)
        if (mat_rank(basis.eval(GaussianRational(x))) != want)
            throw InternalError("kernel basis loses rank at an evaluation point");
    for (const UniPoly& g : smith_form(basis).invariants)
        if (!g.is_constant())
            throw InternalError("kernel basis has a nontrivial Smith invariant");
    return basis;
}

}  // namespace sympoly
