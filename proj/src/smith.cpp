#include "sympoly/smith.hpp"

#include <algorithm>
#include <utility>

#include "sympoly/errors.hpp"

namespace sympoly {

std::size_t normal_rank(const PolyMatrix& p) {
    std::size_t cap = std::min(p.rows(), p.cols());
    if (cap == 0) return 0;
    long points = static_cast<long>(cap) * p.grade() + 1;
    std::size_t best = 0;
    for (long x = 0; x < points; ++x) {
        best = std::max(best, mat_rank(p.eval(GaussianRational(x))));
        if (best == cap) break;  // cannot grow further
    }
    return best;
}

bool is_unimodular(const PolyMatrix& p) {
    if (p.rows() != p.cols()) return false;
    // det p has degree at most the smaller of the row and column bounds
    long row_bound = 0, col_bound = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        int row_deg = -1, col_deg = -1;
        for (std::size_t j = 0; j < p.cols(); ++j) {
            row_deg = std::max(row_deg, p.entry(i, j).degree());
            col_deg = std::max(col_deg, p.entry(j, i).degree());
        }
        if (row_deg < 0) return false;  // zero row
        row_bound += row_deg;
        col_bound += col_deg;
    }
    long bound = std::min(row_bound, col_bound);
    GaussianRational first = mat_det(p.eval(GaussianRational(0)));
    if (first.is_zero()) return false;
    for (long x = 1; x <= bound; ++x)
        if (mat_det(p.eval(GaussianRational(x))) != first) return false;
    return true;
}

namespace {

// Grid of trimmed scalar polynomials, the working representation during
// elimination.
using Grid = std::vector<std::vector<UniPoly>>;

Grid to_grid(const PolyMatrix& p) {
    Grid g(p.rows(), std::vector<UniPoly>(p.cols()));
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) g[i][j] = p.entry(i, j).trimmed();
    return g;
}

Grid identity_grid(std::size_t n) {
    Grid g(n, std::vector<UniPoly>(n));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = UniPoly::constant(1);
    return g;
}

PolyMatrix grid_matrix(const Grid& g) {
    return PolyMatrix::from_entries(g.size(), g.empty() ? 0 : g[0].size(), g);
}

void row_axpy(Grid& g, std::size_t dst, std::size_t src, const UniPoly& f) {
    for (std::size_t j = 0; j < g[dst].size(); ++j) {
        if (g[src][j].is_zero()) continue;
        g[dst][j] = (g[dst][j] - f * g[src][j]).trimmed();
    }
}

void col_axpy(Grid& g, std::size_t dst, std::size_t src, const UniPoly& f) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i][src].is_zero()) continue;
        g[i][dst] = (g[i][dst] - f * g[i][src]).trimmed();
    }
}

void row_swap(Grid& g, std::size_t a, std::size_t b) {
    if (a != b) std::swap(g[a], g[b]);
}

void col_swap(Grid& g, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : g) std::swap(row[a], row[b]);
}

void row_scale(Grid& g, std::size_t i, const GaussianRational& s) {
    for (auto& v : g[i]) v = s * v;
}

void col_scale(Grid& g, std::size_t j, const GaussianRational& s) {
    for (auto& row : g) row[j] = s * row[j];
}

bool grid_product_is_identity(const Grid& a, const Grid& b) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            UniPoly acc;
            for (std::size_t k = 0; k < n; ++k) {
                if (a[i][k].is_zero() || b[k][j].is_zero()) continue;
                acc += a[i][k] * b[k][j];
            }
            if (acc != (i == j ? UniPoly::constant(1) : UniPoly())) return false;
        }
    return true;
}

}  // namespace

SmithForm smith_form(const PolyMatrix& p) {
    std::size_t m = p.rows(), n = p.cols();
    Grid d = to_grid(p);
    Grid u = identity_grid(m);
    Grid v = identity_grid(n);
    // Inverse transforms, maintained alongside: every left operation E on d
    // multiplies u_inv by E^-1 on the right, every right operation by its
    // inverse on the left of v_inv. U U^-1 = I is then the unimodularity
    // certificate: det U times det U^-1 is 1, a unit.
    Grid u_inv = identity_grid(m);
    Grid v_inv = identity_grid(n);

    auto left_axpy = [&](std::size_t i, std::size_t k, const UniPoly& q) {
        row_axpy(d, i, k, q);
        row_axpy(u, i, k, q);
        col_axpy(u_inv, k, i, -q);
    };
    auto right_axpy = [&](std::size_t j, std::size_t k, const UniPoly& q) {
        col_axpy(d, j, k, q);
        col_axpy(v, j, k, q);
        row_axpy(v_inv, k, j, -q);
    };
    // (row_i, row_j) <- (a11 row_i + a12 row_j, a21 row_i + a22 row_j)
    auto pair_rows = [](Grid& g, std::size_t i, std::size_t j, const UniPoly& a11,
                        const UniPoly& a12, const UniPoly& a21, const UniPoly& a22) {
        for (std::size_t c = 0; c < g[i].size(); ++c) {
            UniPoly top = (a11 * g[i][c] + a12 * g[j][c]).trimmed();
            UniPoly bot = (a21 * g[i][c] + a22 * g[j][c]).trimmed();
            g[i][c] = std::move(top);
            g[j][c] = std::move(bot);
        }
    };
    // (col_i, col_j) <- (b11 col_i + b21 col_j, b12 col_i + b22 col_j)
    auto pair_cols = [](Grid& g, std::size_t i, std::size_t j, const UniPoly& b11,
                        const UniPoly& b12, const UniPoly& b21, const UniPoly& b22) {
        for (std::size_t r = 0; r < g.size(); ++r) {
            UniPoly left = (b11 * g[r][i] + b21 * g[r][j]).trimmed();
            UniPoly right = (b12 * g[r][i] + b22 * g[r][j]).trimmed();
            g[r][i] = std::move(left);
            g[r][j] = std::move(right);
        }
    };

    std::size_t steps = std::min(m, n);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
        // Pivot loop: pick the minimal-degree nonzero entry of the trailing
        // submatrix, clear its row and column by Euclidean steps, then force
        // the pivot to divide the rest of the submatrix. Each pass either
        // finishes or strictly reduces the pivot degree, so it terminates.
        bool any = true;
        while (any) {
            std::size_t pi = m, pj = n;
            int pdeg = -1;
            for (std::size_t i = k; i < m; ++i)
                for (std::size_t j = k; j < n; ++j) {
                    int deg = d[i][j].degree();
                    if (deg < 0) continue;
                    if (pdeg < 0 || deg < pdeg) {
                        pdeg = deg;
                        pi = i;
                        pj = j;
                    }
                }
            if (pdeg < 0) {
                any = false;
                break;  // trailing submatrix is zero
            }
            row_swap(d, k, pi);
            row_swap(u, k, pi);
            col_swap(u_inv, k, pi);
            col_swap(d, k, pj);
            col_swap(v, k, pj);
            row_swap(v_inv, k, pj);

            bool dirty = false;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (d[i][k].is_zero()) continue;
                auto [q, rem] = divrem(d[i][k], d[k][k]);
                left_axpy(i, k, q);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;  // a remainder became the new smaller pivot
            for (std::size_t j = k + 1; j < n; ++j) {
                if (d[k][j].is_zero()) continue;
                auto [q, rem] = divrem(d[k][j], d[k][k]);
                right_axpy(j, k, q);
                if (!rem.is_zero()) dirty = true;
            }
            if (dirty) continue;
            any = false;  // row k and column k are clear
        }
        if (d[k][k].is_zero()) break;
        GaussianRational lead = d[k][k].leading();
        if (!lead.is_one()) {
            GaussianRational s = lead.inv();
            row_scale(d, k, s);
            row_scale(u, k, s);
            col_scale(u_inv, k, lead);
        }
        ++rank;
    }

    // Divisibility pass on the diagonal: replace an incomparable pair (a, b)
    // by (gcd, a b / gcd) through an explicit unimodular 2x2 pair. With
    // u a + v b = g and a' = a/g, b' = b/g,
    //   [[u, v], [-b', a']] diag(a, b) [[1, -v b'], [1, u a']] = diag(g, ab/g)
    // and both factors have determinant one. Pairs merge smallest degrees
    // first so the largest products enter only a bounded number of Bezout
    // computations; positions are sorted by swaps afterwards. Terminates
    // because each merge strictly lowers the sorted degree multiset.
    auto merge_pair = [&](std::size_t i, std::size_t j) {
        ExtendedGcd e = poly_xgcd(d[i][i], d[j][j]);
        UniPoly ap = divrem(d[i][i], e.g).first;
        UniPoly bp = divrem(d[j][j], e.g).first;
        pair_rows(d, i, j, e.u, e.v, -bp, ap);
        pair_rows(u, i, j, e.u, e.v, -bp, ap);
        pair_cols(u_inv, i, j, ap, -e.v, bp, e.u);
        UniPoly one = UniPoly::constant(1);
        pair_cols(d, i, j, one, -(e.v * bp), one, e.u * ap);
        pair_cols(v, i, j, one, -(e.v * bp), one, e.u * ap);
        pair_rows(v_inv, i, j, e.u * ap, e.v * bp, -one, one);
    };
    while (true) {
        std::vector<std::size_t> order;
        for (std::size_t k = 0; k < rank; ++k) order.push_back(k);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return d[a][a].degree() < d[b][b].degree();
        });
        bool merged = false;
        for (std::size_t x = 0; x < order.size() && !merged; ++x)
            for (std::size_t y = x + 1; y < order.size() && !merged; ++y) {
                std::size_t i = order[x], j = order[y];
                if (divrem(d[j][j], d[i][i]).second.is_zero()) continue;  // a | b
                if (divrem(d[i][i], d[j][j]).second.is_zero()) continue;  // b | a
                merge_pair(std::min(i, j), std::max(i, j));
                merged = true;
            }
        if (!merged) break;
    }
    // comparable everywhere: degree order is the divisibility chain order
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j)
            if (d[j][j].degree() < d[i][i].degree()) {
                row_swap(d, i, j);
                row_swap(u, i, j);
                col_swap(u_inv, i, j);
                col_swap(d, i, j);
                col_swap(v, i, j);
                row_swap(v_inv, i, j);
            }

    SmithForm out;
    out.rank = rank;
    out.U = grid_matrix(u);
    out.V = grid_matrix(v);
    out.D = grid_matrix(d);
    for (std::size_t k = 0; k < rank; ++k) out.invariants.push_back(d[k][k]);

    // Verification gate: reconstruction, shape, chain, unimodularity.
    PolyMatrix lhs = out.U * p * out.V;
    int g = std::max(lhs.grade(), out.D.grade());
    if (lhs.with_grade(g) != out.D.with_grade(g))
        throw InternalError("Smith reconstruction U*P*V != D");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !out.D.entry(i, j).is_zero())
                throw InternalError("Smith form not diagonal");
    for (std::size_t k = 0; k + 1 < rank; ++k)
        if (!divides(out.invariants[k], out.invariants[k + 1]))
            throw InternalError("Smith divisibility chain broken");
    for (const UniPoly& gpoly : out.invariants)
        if (!gpoly.leading().is_one()) throw InternalError("Smith invariant not monic");
    if (!grid_product_is_identity(u, u_inv) || !grid_product_is_identity(v, v_inv))
        throw InternalError("Smith transform not unimodular");
    return out;
}

}  // namespace sympoly
