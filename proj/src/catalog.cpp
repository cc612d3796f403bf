#include "sympoly/catalog.hpp"

#include <string>

#include "sympoly/errors.hpp"

namespace sympoly {

std::vector<int> BundleDescriptor::minimal_indices() const {
    std::vector<int> out;
    for (int k = 0; k < n - r - s; ++k) out.push_back(alpha);
    for (int k = 0; k < s; ++k) out.push_back(alpha + 1);
    return out;
}

namespace {

void check_catalog_domain(int n, int d, int r) {
    if (n < 2) throw ValidationError("catalog requires n >= 2");
    if (d < 1 || d % 2 == 0) throw ValidationError("catalog requires odd grade d >= 1");
    if (r < 1 || r > n - 1)
        throw ValidationError("catalog requires 1 <= r <= n-1, got r=" +
                              std::to_string(r));
}

BundleDescriptor make_descriptor(BundleKind kind, int n, int d, int r, int a) {
    BundleDescriptor desc;
    desc.kind = kind;
    desc.n = n;
    desc.d = d;
    desc.r = r;
    desc.a = a;
    desc.alpha = a / (n - r);
    desc.s = a % (n - r);
    desc.eig_count = r * d - 2 * a;
    return desc;
}

}  // namespace

std::vector<BundleDescriptor> enumerate_poly_bundles(int n, int d, int r) {
    check_catalog_domain(n, d, r);
    std::vector<BundleDescriptor> out;
    for (int a = 0; a <= r * d / 2; ++a)
        out.push_back(make_descriptor(BundleKind::polynomial, n, d, r, a));
    return out;
}

std::vector<BundleDescriptor> enumerate_pencil_bundles(int n, int r) {
    check_catalog_domain(n, 1, r);
    std::vector<BundleDescriptor> out;
    for (int a = 0; a <= r / 2; ++a)
        out.push_back(make_descriptor(BundleKind::pencil, n, 1, r, a));
    return out;
}

PolyMatrix singular_block(int n) {
    if (n < 0) throw InternalError("negative singular block size");
    PolyMatrix l(static_cast<std::size_t>(n), static_cast<std::size_t>(n) + 1, 1);
    for (int i = 0; i < n; ++i) {
        l.coeff(0).at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
            GaussianRational(1);
        l.coeff(1).at(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) =
            GaussianRational(1);
    }
    return l;
}

PolyMatrix symmetric_singular_pencil(int n) {
    PolyMatrix l = singular_block(n);
    std::size_t size = 2 * static_cast<std::size_t>(n) + 1;
    PolyMatrix m(size, size, 1);
    for (int k = 0; k <= 1; ++k)
        for (std::size_t i = 0; i < l.rows(); ++i)
            for (std::size_t j = 0; j < l.cols(); ++j) {
                const GaussianRational& v = l.coeff(k).at(i, j);
                // [[0, L^T], [L, 0]] with the (n+1)-column block leading
                m.coeff(k).at(j, static_cast<std::size_t>(n) + 1 + i) = v;
                m.coeff(k).at(static_cast<std::size_t>(n) + 1 + i, j) = v;
            }
    return m;
}

PolyMatrix jordan_block_1(const GaussianRational& mu) {
    PolyMatrix j(1, 1, 1);
    j.coeff(0).at(0, 0) = -mu;
    j.coeff(1).at(0, 0) = GaussianRational(1);
    return j;
}

PolyMatrix build_canonical_pencil(const BundleDescriptor& desc,
                                  const std::vector<GaussianRational>& eigenvalues) {
    if (desc.kind != BundleKind::pencil)
        throw ValidationError("canonical pencil needs a pencil-kind descriptor");
    if (eigenvalues.size() != static_cast<std::size_t>(desc.eig_count))
        throw ValidationError("expected " + std::to_string(desc.eig_count) +
                              " eigenvalues, got " +
                              std::to_string(eigenvalues.size()));
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw ValidationError("repeated eigenvalue in canonical pencil");

    std::vector<PolyMatrix> blocks;
    for (int k = 0; k < desc.s; ++k)
        blocks.push_back(symmetric_singular_pencil(desc.alpha + 1));
    for (int k = 0; k < desc.n - desc.r - desc.s; ++k)
        blocks.push_back(symmetric_singular_pencil(desc.alpha));
    for (const GaussianRational& mu : eigenvalues)
        blocks.push_back(jordan_block_1(mu));
    PolyMatrix out = block_diag(blocks).with_grade(1);
    if (out.rows() != static_cast<std::size_t>(desc.n))
        throw InternalError("canonical pencil size mismatch");
    return out;
}

long codim_orbit(int n, int d, int r, int a) {
    check_catalog_domain(n, d, r);
    if (a < 0 || a > r * d / 2) throw ValidationError("bundle index a out of range");
    long num = (static_cast<long>(n) + r) * (d - 1) + 2L * (n - a);
    return num * (n - r + 1) / 2;
}

long codim_bundle(int n, int d, int r, int a) {
    // orbit codimension minus the count of distinct eigenvalues; for d = 1
    // this reduces to (n-r)(n+1) - a(n-r-1)
    return codim_orbit(n, d, r, a) - (static_cast<long>(r) * d - 2L * a);
}

bool pencil_realizable_as_linearization(int n, int d, int r, int a1) {
    check_catalog_domain(n, d, r);
    long r1 = static_cast<long>(n) * (d - 1) + r;
    if (a1 < 0 || a1 > r1 / 2)
        throw ValidationError("pencil bundle index a1 out of range");
    return a1 >= static_cast<long>(n - r) * (d - 1) / 2;
}

}  // namespace sympoly
