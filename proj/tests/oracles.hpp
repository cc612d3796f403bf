#pragma once

// Brute-force reference computations for the test suite. These stay
// deliberately naive and independent of the library's algorithm choices:
// Smith invariants via gcds of k x k minors, minimal indices via greedy
// selection of rationally independent kernel vectors by ascending degree.

#include <vector>

#include "sympoly/kernel.hpp"
#include "sympoly/polymatrix.hpp"
#include "sympoly/smith.hpp"
#include "sympoly/unipoly.hpp"

namespace oracles {

using sympoly::GaussianRational;
using sympoly::Mat;
using sympoly::PolyMatrix;
using sympoly::UniPoly;

inline UniPoly minor_det(const PolyMatrix& p, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
    if (rows.empty()) return UniPoly::constant(1);
    if (rows.size() == 1) return p.entry(rows[0], cols[0]);
    UniPoly acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        UniPoly term = p.entry(rows[0], cols[k]) * minor_det(p, sub_rows, sub_cols);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline void subsets(std::size_t n, std::size_t k,
                    std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

/// Determinantal-divisor route: d_k = gcd of all k x k minors, invariant
/// g_k = d_k / d_(k-1). Exponential in the size; use on tiny inputs only.
inline std::vector<UniPoly> smith_invariants(const PolyMatrix& p) {
    std::vector<UniPoly> invariants;
    UniPoly prev = UniPoly::constant(1);
    for (std::size_t k = 1; k <= std::min(p.rows(), p.cols()); ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        subsets(p.rows(), k, row_sets);
        subsets(p.cols(), k, col_sets);
        UniPoly dk;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) dk = sympoly::poly_gcd(dk, minor_det(p, rs, cs));
        if (dk.is_zero()) break;
        auto [g, rem] = sympoly::divrem(dk, prev);
        if (!rem.is_zero()) throw std::logic_error("oracle: d_(k-1) does not divide d_k");
        invariants.push_back(g.monic());
        prev = dk.monic();
    }
    return invariants;
}

/// Kernel vectors of degree <= delta, assembled entrywise from the scalar
/// polynomial products (a different route than the block Toeplitz builder).
inline std::vector<std::vector<UniPoly>> kernel_vectors_up_to(const PolyMatrix& p,
                                                              int delta) {
    std::size_t m = p.rows(), n = p.cols();
    int d = p.grade();
    std::size_t unknowns = n * static_cast<std::size_t>(delta + 1);
    Mat sys(m * static_cast<std::size_t>(d + delta + 1), unknowns);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            UniPoly e = p.entry(i, c);
            for (int t = 0; t <= d + delta; ++t)
                for (int k = 0; k <= delta; ++k) {
                    if (t - k < 0 || t - k > e.degree()) continue;
                    sys.at(static_cast<std::size_t>(t) * m + i,
                           static_cast<std::size_t>(k) * n + c) = e[t - k];
                }
        }
    std::vector<std::vector<UniPoly>> out;
    for (const auto& v : sympoly::mat_right_nullspace(sys)) {
        std::vector<UniPoly> x(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<GaussianRational> cs(static_cast<std::size_t>(delta) + 1);
            for (int k = 0; k <= delta; ++k)
                cs[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k) * n + c];
            x[c] = UniPoly(std::move(cs)).trimmed();
        }
        out.push_back(std::move(x));
    }
    return out;
}

/// Greedy minimal indices: ascend through degrees, keep every kernel vector
/// that is rationally independent of those already kept (checked by the
/// normal rank of the stacked matrix). The kept degrees are the minimal
/// indices; anything of lower degree is already dependent.
inline std::vector<int> right_minimal_indices(const PolyMatrix& p, int degree_cap) {
    std::size_t want = p.cols() - sympoly::normal_rank(p);
    std::vector<std::vector<UniPoly>> chosen;
    std::vector<int> degrees;
    for (int delta = 0; delta <= degree_cap && chosen.size() < want; ++delta) {
        for (auto& cand : kernel_vectors_up_to(p, delta)) {
            if (chosen.size() == want) break;
            std::vector<std::vector<UniPoly>> stacked = chosen;
            stacked.push_back(cand);
            PolyMatrix trial =
                PolyMatrix::from_entries(stacked.size(), p.cols(), stacked);
            if (sympoly::normal_rank(trial) != stacked.size()) continue;
            int deg = -1;
            for (const auto& e : cand) deg = std::max(deg, e.degree());
            if (deg != delta)
                throw std::logic_error("oracle: independent vector below current degree");
            chosen.push_back(std::move(cand));
            degrees.push_back(deg);
        }
    }
    if (chosen.size() != want)
        throw std::logic_error("oracle: could not complete a kernel basis");
    return degrees;
}

}  // namespace oracles
