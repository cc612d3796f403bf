#include "sympoly/sampler.hpp"

#include "sympoly/catalog.hpp"
#include "sympoly/eigenstructure.hpp"
#include "sympoly/errors.hpp"
#include "sympoly/rng.hpp"
#include "sympoly/smith.hpp"

namespace sympoly {

namespace {

// A wide coefficient box keeps the degenerate varieties (singular leading
// coefficient, repeated eigenvalues, unbalanced kernels) rare enough for the
// generic fraction to dominate; they have measure zero over the complex
// field but positive probability on any finite grid.
UniPoly random_poly(Rng& rng, int max_degree) {
    std::vector<GaussianRational> cs(static_cast<std::size_t>(max_degree) + 1);
    for (auto& c : cs) c = GaussianRational(rng.range(-30, 30));
    return UniPoly(std::move(cs)).trimmed();
}

Mat random_int_matrix(Rng& rng, std::size_t n) {
    Mat e(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            e.at(i, j) = GaussianRational(rng.range(-2, 2));
    return e;
}

PolyMatrix congruence(const PolyMatrix& p, const Mat& c) {
    PolyMatrix out = p;
    Mat ct = c.transpose();
    for (int k = 0; k <= p.grade(); ++k) out.coeff(k) = ct * p.coeff(k) * c;
    return out;
}

}  // namespace

ExperimentReport run_sampler(int n, int d, int r, int trials, std::uint64_t seed,
                             const GaussianRational& z) {
    if (n < 2 || d < 1 || d % 2 == 0 || r < 1 || r > n - 1)
        throw ValidationError("sampler needs the catalog domain: n>=2, odd d, 1<=r<=n-1");
    if (trials < 0) throw ValidationError("negative trial count");
    if (z.is_zero()) throw ValidationError("perturbation size z must be nonzero");

    ExperimentReport report;
    report.n = n;
    report.d = d;
    report.r = r;
    report.trials = trials;
    report.seed = seed;
    report.perturbation = "congruence by I+zE, z=" + z.str() + ", E integer entries in [-2,2]";
    report.note =
        "factorized sampler: draws rank<=r grade-d symmetric polynomials "
        "U(l)S(l)U(l)^T, a constructed subfamily of the bounded-rank set";

    Rng rng(seed);
    int q = (d - 1) / 2;
    for (int trial = 0; trial < trials; ++trial) {
        Rng trial_rng = rng.fork(static_cast<std::uint64_t>(trial));

        std::vector<std::vector<UniPoly>> u_rows(
            static_cast<std::size_t>(n), std::vector<UniPoly>(static_cast<std::size_t>(r)));
        for (auto& row : u_rows)
            for (auto& e : row) e = random_poly(trial_rng, q);
        PolyMatrix u = PolyMatrix::from_entries(static_cast<std::size_t>(n),
                                                static_cast<std::size_t>(r), u_rows, q);

        PolyMatrix s(static_cast<std::size_t>(r), static_cast<std::size_t>(r), 1);
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) {
                UniPoly e = random_poly(trial_rng, 1);
                s.set_entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j), e);
                s.set_entry(static_cast<std::size_t>(j), static_cast<std::size_t>(i), e);
            }

        PolyMatrix p = (u * s * u.transpose()).with_grade(d);
        if (!p.is_symmetric()) throw InternalError("sampler produced asymmetric matrix");
        if (normal_rank(p) > static_cast<std::size_t>(r))
            throw InternalError("sampler exceeded the rank bound");

        CompleteEigenstructure e = complete_eigenstructure(p);
        std::optional<int> a = classify_bundle(e, n, d, r);
        if (!a) {
            report.classified["none"] += 1;
            report.unclassified.push_back(p);
            continue;
        }
        report.classified[std::to_string(*a)] += 1;

        // Constant congruence is an exact eigenstructure isomorphism, so the
        // perturbed sample must land in the same bundle whenever I+zE stays
        // invertible.
        Mat c = Mat::identity(static_cast<std::size_t>(n));
        Mat e_dir = random_int_matrix(trial_rng, static_cast<std::size_t>(n));
        c += z * e_dir;
        if (mat_det(c).is_zero()) continue;  // resample would bias the tally; skip
        report.perturbation_checked += 1;
        std::optional<int> a2 = classify_bundle(
            complete_eigenstructure(congruence(p, c)), n, d, r);
        if (a2 && *a2 == *a) report.perturbation_stable += 1;
    }
    return report;
}

}  // namespace sympoly
