#include <doctest.h>

#include "sympoly/catalog.hpp"
#include "sympoly/eigenstructure.hpp"
#include "sympoly/errors.hpp"

using namespace sympoly;

namespace {
GaussianRational gr(long num, long den = 1) {
    return GaussianRational(mpq_class(num, den));
}
}  // namespace

TEST_CASE("catalog counts and descriptor invariants") {
    for (int n = 2; n <= 5; ++n)
        for (int d : {1, 3, 5})
            for (int r = 1; r <= n - 1; ++r) {
                auto list = enumerate_poly_bundles(n, d, r);
                CHECK(list.size() == static_cast<std::size_t>(r * d / 2) + 1);
                for (const auto& desc : list) {
                    CHECK(desc.alpha == desc.a / (n - r));
                    CHECK(desc.s == desc.a % (n - r));
                    CHECK(desc.eig_count == r * d - 2 * desc.a);
                    long idx_sum = 0;
                    for (int e : desc.minimal_indices()) idx_sum += e;
                    CHECK(desc.eig_count + 2 * idx_sum == static_cast<long>(r) * d);
                    CHECK(desc.minimal_indices().size() ==
                          static_cast<std::size_t>(n - r));
                }
            }
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= n - 1; ++r)
            CHECK(enumerate_pencil_bundles(n, r).size() ==
                  static_cast<std::size_t>(r / 2) + 1);
}

TEST_CASE("catalog fixtures") {
    auto list = enumerate_poly_bundles(3, 3, 2);
    REQUIRE(list.size() == 4);
    CHECK(list[1].minimal_indices() == std::vector<int>{1});
    CHECK(list[1].eig_count == 4);

    auto pencils = enumerate_pencil_bundles(2, 1);
    REQUIRE(pencils.size() == 1);
    CHECK(pencils[0].minimal_indices() == std::vector<int>{0});
    CHECK(pencils[0].eig_count == 1);

    auto wide = enumerate_poly_bundles(4, 3, 2);
    REQUIRE(wide.size() == 4);
    CHECK(wide[3].alpha == 1);
    CHECK(wide[3].s == 1);
    CHECK(wide[3].minimal_indices() == std::vector<int>({1, 2}));
    CHECK(wide[3].eig_count == 0);

    CHECK_THROWS_AS(enumerate_poly_bundles(3, 3, 3), ValidationError);
    CHECK_THROWS_AS(enumerate_poly_bundles(3, 2, 2), ValidationError);
}

TEST_CASE("canonical pencil blocks") {
    // (n=2, r=1, a=0) with eigenvalue 5: diag(0, l-5)
    auto pencils = enumerate_pencil_bundles(2, 1);
    PolyMatrix p = build_canonical_pencil(pencils[0], {gr(5)});
    CHECK(p.rows() == 2);
    CHECK(p.entry(0, 0).is_zero());
    CHECK(p.entry(0, 1).is_zero());
    CHECK(p.entry(1, 1) == UniPoly({gr(-5), gr(1)}));

    // (n=3, r=2, a=1): a single M_1 block, no eigenvalues
    auto p32 = enumerate_pencil_bundles(3, 2);
    REQUIRE(p32.size() == 2);
    PolyMatrix m1 = build_canonical_pencil(p32[1], {});
    CHECK(m1.rows() == 3);
    CHECK(m1.is_symmetric());
    CHECK(m1.entry(0, 2) == UniPoly::constant(1));
    CHECK(m1.entry(1, 2) == UniPoly::monomial(1));
    CHECK(m1.entry(0, 0).is_zero());

    CHECK_THROWS_AS(build_canonical_pencil(p32[0], {gr(1)}), ValidationError);
    CHECK_THROWS_AS(build_canonical_pencil(p32[0], {gr(1), gr(1)}), ValidationError);
}

TEST_CASE("canonical pencils round trip through the eigenstructure") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= n - 1; ++r)
            for (const auto& desc : enumerate_pencil_bundles(n, r)) {
                std::vector<GaussianRational> eigs;
                for (int k = 0; k < desc.eig_count; ++k) eigs.push_back(gr(k + 2));
                PolyMatrix p = build_canonical_pencil(desc, eigs);
                CHECK(p.is_symmetric());
                CompleteEigenstructure e = complete_eigenstructure(p);
                CHECK(e.rank == static_cast<std::size_t>(r));
                CHECK(e.right_minimal == desc.minimal_indices());
                CHECK(e.left_minimal == desc.minimal_indices());
                CHECK(e.eigenvalue_count() == desc.eig_count);
                CHECK(e.infinite.empty());
                CHECK(classify_bundle(e, n, 1, r) == desc.a);
            }
}

TEST_CASE("codimension formulas") {
    CHECK(codim_orbit(3, 3, 2, 0) == 16);
    CHECK(codim_orbit(2, 1, 1, 0) == 4);
    CHECK(codim_bundle(3, 3, 2, 0) == 10);     // 16 minus six eigenvalues
    CHECK(codim_bundle(2, 1, 1, 0) == 3);      // pencil case, 4 minus one
    for (int a = 0; a <= 3; ++a) CHECK(codim_bundle(4, 3, 2, a) == 24 - a);

    // r = n-1 makes the bundle codimension independent of a
    for (int a = 0; a <= 4; ++a) CHECK(codim_bundle(4, 3, 3, a) == codim_bundle(4, 3, 3, 0));

    // pencil-side cross-check on the full grid
    for (int n = 2; n <= 5; ++n)
        for (int d : {1, 3, 5})
            for (int r = 1; r <= n - 1; ++r)
                for (int a = 0; a <= r * d / 2; ++a) {
                    long n1 = static_cast<long>(n) * d;
                    long r1 = static_cast<long>(n) * (d - 1) + r;
                    long a1 = a + static_cast<long>(n - r) * (d - 1) / 2;
                    CHECK(codim_orbit(n, d, r, a) == (n1 - a1) * (n1 - r1 + 1));
                    CHECK(codim_bundle(n, d, r, a) ==
                          codim_orbit(n, d, r, a) - (static_cast<long>(r) * d - 2 * a));
                }
}

TEST_CASE("bundle codimension decreases in a exactly when r < n-1") {
    for (int n = 2; n <= 5; ++n)
        for (int d : {1, 3, 5})
            for (int r = 1; r <= n - 1; ++r)
                for (int a = 1; a <= r * d / 2; ++a) {
                    long prev = codim_bundle(n, d, r, a - 1);
                    long cur = codim_bundle(n, d, r, a);
                    if (r < n - 1)
                        CHECK(cur < prev);
                    else
                        CHECK(cur == prev);
                }
}

TEST_CASE("linearization realizability threshold") {
    CHECK_FALSE(pencil_realizable_as_linearization(2, 3, 1, 0));
    CHECK(pencil_realizable_as_linearization(2, 3, 1, 1));
    CHECK(pencil_realizable_as_linearization(2, 1, 1, 0));  // d = 1: always

    // bijection across the threshold: shifted minimal indices, equal
    // eigenvalue counts
    for (int n = 2; n <= 4; ++n)
        for (int d : {3, 5})
            for (int r = 1; r <= n - 1; ++r) {
                int n1 = n * d, r1 = n * (d - 1) + r;
                int shift = (d - 1) / 2;
                int threshold = (n - r) * (d - 1) / 2;
                auto polys = enumerate_poly_bundles(n, d, r);
                auto pencils = enumerate_pencil_bundles(n1, r1);
                for (const auto& big : pencils) {
                    bool realizable =
                        pencil_realizable_as_linearization(n, d, r, big.a);
                    CHECK(realizable == (big.a >= threshold));
                    if (!realizable) continue;
                    int a = big.a - threshold;
                    REQUIRE(a < static_cast<int>(polys.size()));
                    const auto& small = polys[static_cast<std::size_t>(a)];
                    CHECK(big.eig_count == small.eig_count);
                    std::vector<int> shifted = small.minimal_indices();
                    for (int& e : shifted) e += shift;
                    CHECK(big.minimal_indices() == shifted);
                }
            }
}
