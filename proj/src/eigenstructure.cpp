#include "sympoly/eigenstructure.hpp"

#include <algorithm>
#include <numeric>

#include "sympoly/errors.hpp"
#include "sympoly/roots.hpp"
#include "sympoly/smith.hpp"

namespace sympoly {

int CompleteEigenstructure::total_finite_degree() const {
    int acc = 0;
    for (const auto& d : finite) acc += d.degree;
    for (const auto& u : unfactored) acc += u.poly.degree();
    return acc;
}

int CompleteEigenstructure::total_infinite_degree() const {
    return std::accumulate(infinite.begin(), infinite.end(), 0);
}

long CompleteEigenstructure::index_sum() const {
    long acc = total_finite_degree() + total_infinite_degree();
    for (int e : right_minimal) acc += e;
    for (int e : left_minimal) acc += e;
    return acc;
}

CompleteEigenstructure complete_eigenstructure(const PolyMatrix& p) {
    CompleteEigenstructure e;
    e.rows = p.rows();
    e.cols = p.cols();
    e.grade = p.grade();

    SmithForm finite_smith = smith_form(p);
    e.rank = finite_smith.rank;

    for (const UniPoly& g : finite_smith.invariants) {
        if (g.is_constant()) continue;
        RootList rl = linear_roots(g);
        for (const auto& [root, mult] : rl.roots)
            e.finite.push_back({root, mult});
        if (rl.cofactor.degree() > 0)
            e.unfactored.push_back({rl.cofactor, is_squarefree(rl.cofactor)});
    }
    std::sort(e.finite.begin(), e.finite.end(), [](const auto& a, const auto& b) {
        if (a.eigenvalue.re() != b.eigenvalue.re())
            return a.eigenvalue.re() < b.eigenvalue.re();
        if (a.eigenvalue.im() != b.eigenvalue.im())
            return a.eigenvalue.im() < b.eigenvalue.im();
        return a.degree < b.degree;
    });

    // Infinite part: multiplicities of the zero eigenvalue of rev P, read as
    // the lambda-order of each Smith invariant of the reversal.
    SmithForm rev_smith = smith_form(p.rev());
    if (rev_smith.rank != e.rank)
        throw InternalError("rank disagreement between P and rev P");
    for (const UniPoly& g : rev_smith.invariants) {
        int order = 0;
        while (order <= g.degree() && g[order].is_zero()) ++order;
        if (order > 0) e.infinite.push_back(order);
    }
    std::sort(e.infinite.begin(), e.infinite.end());

    // The Smith rank is already certified; cross-check it against the
    // evaluation certificate before reusing it for the nullity sweep.
    if (normal_rank(p) != e.rank)
        throw InternalError("rank disagreement between Smith form and evaluations");
    MinimalIndexReport mi = minimal_indices(p, e.rank);
    e.right_minimal = mi.right;
    e.left_minimal = mi.left;

    if (e.index_sum() != static_cast<long>(e.grade) * static_cast<long>(e.rank))
        throw InternalError("Index Sum identity violated by computed eigenstructure");
    return e;
}

bool index_sum_check(int s, int t, const std::vector<int>& eps, int r, int d) {
    long total = s + t;
    for (int e : eps) total += 2L * e;
    return total == static_cast<long>(r) * d;
}

bool is_simple_structure(const CompleteEigenstructure& e) {
    for (const auto& d : e.finite)
        if (d.degree != 1) return false;
    for (std::size_t i = 0; i < e.finite.size(); ++i)
        for (std::size_t j = i + 1; j < e.finite.size(); ++j)
            if (e.finite[i].eigenvalue == e.finite[j].eigenvalue) return false;

    // Unfactored roots are certified distinct algebraically: each part
    // squarefree, parts pairwise coprime, and no part vanishing at a
    // factored eigenvalue.
    for (const auto& u : e.unfactored)
        if (!u.squarefree) return false;
    for (std::size_t i = 0; i < e.unfactored.size(); ++i)
        for (std::size_t j = i + 1; j < e.unfactored.size(); ++j)
            if (!poly_gcd(e.unfactored[i].poly, e.unfactored[j].poly).is_constant())
                return false;
    for (const auto& u : e.unfactored)
        for (const auto& d : e.finite)
            if (u.poly.eval(d.eigenvalue).is_zero()) return false;

    if (e.infinite.size() > 1) return false;
    if (e.infinite.size() == 1 && e.infinite[0] != 1) return false;
    return true;
}

std::optional<int> classify_bundle(const CompleteEigenstructure& e, int n, int d,
                                   int r) {
    if (n < 2 || r < 1 || r > n - 1 || d < 1) return std::nullopt;
    if (e.rows != static_cast<std::size_t>(n) || e.cols != static_cast<std::size_t>(n))
        return std::nullopt;
    if (e.grade != d) return std::nullopt;
    if (e.rank != static_cast<std::size_t>(r)) return std::nullopt;
    if (!e.infinite.empty()) return std::nullopt;
    if (!is_simple_structure(e)) return std::nullopt;
    if (e.left_minimal != e.right_minimal) return std::nullopt;

    long a = 0;
    for (int idx : e.right_minimal) a += idx;
    if (a > d * static_cast<long>(r) / 2) return std::nullopt;

    int alpha = static_cast<int>(a / (n - r));
    int s = static_cast<int>(a % (n - r));
    std::vector<int> expected;
    for (int k = 0; k < n - r - s; ++k) expected.push_back(alpha);
    for (int k = 0; k < s; ++k) expected.push_back(alpha + 1);
    if (e.right_minimal != expected) return std::nullopt;

    if (e.eigenvalue_count() != static_cast<int>(d * static_cast<long>(r) - 2 * a))
        return std::nullopt;
    return static_cast<int>(a);
}

}  // namespace sympoly
