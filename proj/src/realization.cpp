#include "sympoly/realization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sympoly/errors.hpp"
#include "sympoly/smith.hpp"

namespace sympoly {

long RealizationSpec::index_sum_residual() const {
    long total = static_cast<long>(mus.size()) + t;
    for (int e : eps) total += 2L * e;
    return total - static_cast<long>(r) * d;
}

void RealizationSpec::validate() const {
    if (n < 1 || r < 1 || r > n) throw ValidationError("need 1 <= r <= n");
    if (d < 1) throw ValidationError("need grade d >= 1");
    if (t != 0 && t != 1) throw ValidationError("t must be 0 or 1");
    if (eps.size() != static_cast<std::size_t>(n - r))
        throw ValidationError("need exactly n-r minimal indices, got " +
                              std::to_string(eps.size()));
    for (int e : eps)
        if (e < 0) throw ValidationError("negative minimal index");
    for (std::size_t i = 0; i < mus.size(); ++i)
        for (std::size_t j = i + 1; j < mus.size(); ++j)
            if (mus[i] == mus[j])
                throw ValidationError("repeated eigenvalue " + mus[i].str());
    long residual = index_sum_residual();
    if (residual != 0)
        throw ValidationError(
            "index sum condition violated: s + t + 2*sum(eps) - r*d = " +
            std::to_string(residual));
}

std::vector<int> dual_degree_list(const std::vector<int>& eps, int r) {
    long total = std::accumulate(eps.begin(), eps.end(), 0L);
    long q = total / r, w = total % r;
    std::vector<int> out;
    for (long k = 0; k < r - w; ++k) out.push_back(static_cast<int>(q));
    for (long k = 0; k < w; ++k) out.push_back(static_cast<int>(q) + 1);
    return out;
}

namespace {

std::vector<int> row_degrees(const PolyMatrix& m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int deg = -1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            deg = std::max(deg, m.entry(i, j).degree());
        out.push_back(deg);
    }
    return out;
}

// Minimal basis certificate: full normal rank, full-rank highest row degree
// coefficient matrix, and all Smith invariants constant (full rank at every
// point).
bool is_minimal_basis(const PolyMatrix& m) {
    if (m.rows() == 0) return true;
    if (normal_rank(m) != m.rows()) return false;
    std::vector<int> degs = row_degrees(m);
    Mat high(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (degs[i] < 0) return false;
        for (std::size_t j = 0; j < m.cols(); ++j)
            high.at(i, j) = m.entry(i, j).coeff(degs[i]);
    }
    if (mat_rank(high) != m.rows()) return false;
    for (const UniPoly& g : smith_form(m).invariants)
        if (!g.is_constant()) return false;
    return true;
}

// Chain rows lambda^(degs[i]) e_i - e_(i+1), one per degree entry.
PolyMatrix chain_rows(const std::vector<int>& degs, std::size_t n) {
    std::vector<std::vector<UniPoly>> rows;
    for (std::size_t i = 0; i < degs.size(); ++i) {
        std::vector<UniPoly> row(n);
        row[i] = UniPoly::monomial(degs[i]);
        row[i + 1] = UniPoly::constant(-1);
        rows.push_back(std::move(row));
    }
    return PolyMatrix::from_entries(degs.size(), n, rows);
}

// Single row (1, l^(d1), l^(d1+d2), ...) dual to chain_rows(degs).
PolyMatrix chain_profile(const std::vector<int>& degs, std::size_t n) {
    std::vector<UniPoly> row(n);
    int acc = 0;
    row[0] = UniPoly::constant(1);
    for (std::size_t i = 0; i < degs.size(); ++i) {
        acc += degs[i];
        row[i + 1] = UniPoly::monomial(acc);
    }
    return PolyMatrix::from_entries(1, n, {row});
}

void verify_dual_pair(const DualBasisPair& pair, const std::vector<int>& eps,
                      const std::vector<int>& etas) {
    if (!(pair.M * pair.N.transpose()).is_zero())
        throw InternalError("dual basis pair fails M N^T = 0");
    if (row_degrees(pair.M) != eps)
        throw InternalError("dual basis M has wrong row degrees");
    if (row_degrees(pair.N) != etas)
        throw InternalError("dual basis N has wrong row degrees");
    if (!is_minimal_basis(pair.M)) throw InternalError("M is not a minimal basis");
    if (!is_minimal_basis(pair.N)) throw InternalError("N is not a minimal basis");
}

}  // namespace

DualBasisPair dual_minimal_bases(const std::vector<int>& eps_in, int r, Rng& rng) {
    if (r < 1) throw ValidationError("dual bases need r >= 1");
    for (int e : eps_in)
        if (e < 0) throw ValidationError("negative minimal index");
    std::vector<int> eps = eps_in;
    std::sort(eps.begin(), eps.end());
    std::size_t k = eps.size();
    std::size_t n = k + static_cast<std::size_t>(r);
    std::vector<int> etas = dual_degree_list(eps, r);

    if (k == 0) {
        DualBasisPair pair{PolyMatrix(0, n, 0), PolyMatrix::identity(n)};
        verify_dual_pair(pair, eps, etas);  // no kernel constraints
        return pair;
    }

    if (r == 1 || k == 1) {
        DualBasisPair pair = (r == 1)
            ? DualBasisPair{chain_rows(eps, n), chain_profile(eps, n)}
            : DualBasisPair{chain_profile(etas, n), chain_rows(etas, n)};
        verify_dual_pair(pair, eps, etas);
        return pair;
    }

    const int attempts = 32;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        // M: dense small random coefficients, row degrees exactly eps
        std::vector<std::vector<UniPoly>> rows;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<UniPoly> row(n);
            bool top_nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<GaussianRational> cs(static_cast<std::size_t>(eps[i]) + 1);
                for (auto& c : cs) c = GaussianRational(rng.range(-3, 3));
                if (!cs.back().is_zero()) top_nonzero = true;
                row[j] = UniPoly(std::move(cs)).trimmed();
            }
            if (!top_nonzero)
                row[i % n].set_coeff(eps[i], GaussianRational(1));
            rows.push_back(std::move(row));
        }
        PolyMatrix m = PolyMatrix::from_entries(k, n, rows);
        if (row_degrees(m) != eps) continue;

        PolyMatrix basis;
        try {
            basis = minimal_kernel_basis(m);
        } catch (const InternalError&) {
            continue;  // degenerate draw
        }
        if (basis.rows() != static_cast<std::size_t>(r)) continue;
        if (row_degrees(basis) != etas) continue;

        DualBasisPair pair{std::move(m), std::move(basis)};
        try {
            verify_dual_pair(pair, eps, etas);
        } catch (const InternalError&) {
            continue;
        }
        return pair;
    }
    throw InternalError("dual minimal basis construction exhausted its attempts");
}

namespace {

// Diagonal of sequential products: sizes[i] consecutive factors feed entry i.
std::vector<UniPoly> grouped_products(const std::vector<GaussianRational>& roots,
                                      const std::vector<int>& sizes) {
    std::vector<UniPoly> out;
    std::size_t pos = 0;
    for (int size : sizes) {
        UniPoly acc = UniPoly::constant(1);
        for (int c = 0; c < size; ++c) acc = acc * UniPoly::linear_factor(roots[pos++]);
        out.push_back(acc);
    }
    if (pos != roots.size()) throw InternalError("divisor grouping left leftovers");
    return out;
}

}  // namespace

PolyMatrix realize(const RealizationSpec& spec, Rng& rng) {
    spec.validate();
    const int n = spec.n, d = spec.d, r = spec.r, t = spec.t;

    // Moebius map with all prescribed points, and infinity, sent to finite
    // values: x -> x/(c x + 1) with c minimal positive avoiding the poles.
    long c = 1;
    for (bool ok = false; !ok; ++c) {
        ok = true;
        for (const auto& mu : spec.mus)
            if ((GaussianRational(c) * mu + GaussianRational(1)).is_zero()) {
                ok = false;
                break;
            }
        if (ok) break;
    }
    MoebiusMap map(GaussianRational(1), GaussianRational(0), GaussianRational(c),
                   GaussianRational(1));

    std::vector<GaussianRational> roots;
    for (const auto& mu : spec.mus) roots.push_back(map.apply(mu));
    if (t == 1) roots.push_back(map.image_of_infinity());

    PolyMatrix q;
    if (r == n) {
        // the s + t = n*d divisors split into n degree-d diagonal products
        std::vector<int> sizes(static_cast<std::size_t>(n), d);
        std::vector<UniPoly> diag = grouped_products(roots, sizes);
        PolyMatrix qq(static_cast<std::size_t>(n), static_cast<std::size_t>(n), d);
        for (int i = 0; i < n; ++i)
            qq.set_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(i),
                         diag[static_cast<std::size_t>(i)]);
        q = std::move(qq);
    } else {
        DualBasisPair pair = dual_minimal_bases(spec.eps, r, rng);
        PolyMatrix u = pair.N.transpose();  // n x r, column degrees nearly equal

        long total = std::accumulate(spec.eps.begin(), spec.eps.end(), 0L);
        int qe = static_cast<int>(total / r), we = static_cast<int>(total % r);
        int core = d - 2 * qe;  // >= 0 whenever the index sum condition holds

        if (core == 0) {
            // the index sum forces s = t = w = 0 here
            if (!roots.empty() || we != 0)
                throw InternalError("leftover divisors in the square case");
            q = u * u.transpose();
        } else if (core == 1) {
            // S = diag(linear factors) + antidiagonal identity coupling of
            // the w degree-q columns with the w degree-(q+1) columns
            int plain = r - 2 * we;
            PolyMatrix sm(static_cast<std::size_t>(r), static_cast<std::size_t>(r), 1);
            for (int i = 0; i < plain; ++i) {
                sm.coeff(0).at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
                    -roots[static_cast<std::size_t>(i)];
                sm.coeff(1).at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
                    GaussianRational(1);
            }
            for (int j = 0; j < we; ++j) {
                sm.coeff(0).at(static_cast<std::size_t>(plain + j),
                               static_cast<std::size_t>(plain + we + j)) =
                    GaussianRational(1);
                sm.coeff(0).at(static_cast<std::size_t>(plain + we + j),
                               static_cast<std::size_t>(plain + j)) =
                    GaussianRational(1);
            }
            if (static_cast<int>(roots.size()) != plain)
                throw InternalError("divisor count mismatch in the linear case");
            q = u * sm * u.transpose();
        } else {
            // r - w groups of (d - 2q) divisors, then w groups of (d - 2q - 2)
            std::vector<int> sizes;
            for (int i = 0; i < r - we; ++i) sizes.push_back(core);
            for (int i = 0; i < we; ++i) sizes.push_back(core - 2);
            std::vector<UniPoly> diag = grouped_products(roots, sizes);
            PolyMatrix sm(static_cast<std::size_t>(r), static_cast<std::size_t>(r),
                          core);
            for (int i = 0; i < r; ++i)
                sm.set_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(i),
                             diag[static_cast<std::size_t>(i)]);
            q = u * sm * u.transpose();
        }
    }

    // The structural grade of the product exceeds d; the top coefficients
    // vanish identically, so re-declaring at d is exact (and asserts it).
    PolyMatrix p = moebius_transform(q.with_grade(d), map);

    if (!p.is_symmetric()) throw InternalError("realization lost symmetry");
    if (p.grade() != d) throw InternalError("realization changed the grade");
    if (normal_rank(p) != static_cast<std::size_t>(r))
        throw InternalError("realization has wrong rank");
    if ((p.degree() == d) != (t < r))
        throw InternalError("realization violates the degree law");
    return p;
}

void verify_realization(const PolyMatrix& p, const RealizationSpec& spec) {
    CompleteEigenstructure e = complete_eigenstructure(p);
    if (e.rows != static_cast<std::size_t>(spec.n) ||
        e.cols != static_cast<std::size_t>(spec.n))
        throw InternalError("round trip: wrong size");
    if (e.grade != spec.d) throw InternalError("round trip: wrong grade");
    if (e.rank != static_cast<std::size_t>(spec.r))
        throw InternalError("round trip: wrong rank");
    if (!e.unfactored.empty())
        throw InternalError("round trip: irrational divisors appeared");

    std::vector<GaussianRational> want = spec.mus;
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
        if (a.re() != b.re()) return a.re() < b.re();
        return a.im() < b.im();
    });
    if (e.finite.size() != want.size())
        throw InternalError("round trip: wrong eigenvalue count");
    for (std::size_t i = 0; i < want.size(); ++i)
        if (e.finite[i].degree != 1 || e.finite[i].eigenvalue != want[i])
            throw InternalError("round trip: eigenvalue list mismatch");

    std::vector<int> inf_want;
    if (spec.t == 1) inf_want.push_back(1);
    if (e.infinite != inf_want)
        throw InternalError("round trip: infinite divisor mismatch");

    std::vector<int> eps = spec.eps;
    std::sort(eps.begin(), eps.end());
    if (e.right_minimal != eps || e.left_minimal != eps)
        throw InternalError("round trip: minimal index mismatch");

    if ((p.degree() == spec.d) != (spec.t < spec.r))
        throw InternalError("round trip: degree law violated");
}

RealizationSpec bundle_spec(const BundleDescriptor& desc,
                            const std::vector<GaussianRational>& eigenvalues) {
    if (desc.kind != BundleKind::polynomial)
        throw ValidationError("bundle realization needs a polynomial-kind descriptor");
    RealizationSpec spec;
    spec.n = desc.n;
    spec.d = desc.d;
    spec.r = desc.r;
    spec.t = 0;
    spec.mus = eigenvalues;
    spec.eps = desc.minimal_indices();
    return spec;
}

PolyMatrix realize_bundle(const BundleDescriptor& desc,
                          const std::vector<GaussianRational>& eigenvalues,
                          Rng& rng) {
    return realize(bundle_spec(desc, eigenvalues), rng);
}

}  // namespace sympoly
