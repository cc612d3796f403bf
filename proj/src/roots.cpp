#include "sympoly/roots.hpp"

#include <algorithm>
#include <set>

#include "sympoly/errors.hpp"
#include "sympoly/gaussint.hpp"

namespace sympoly {

bool is_squarefree(const UniPoly& g) {
    if (g.is_zero()) throw ValidationError("squarefree test on zero polynomial");
    if (g.degree() == 0) return true;
    return poly_gcd(g, g.derivative()).is_constant();
}

namespace {

constexpr std::uint64_t kFilterPrime = 2305843009213693951ULL;  // 2^61 - 1

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % kFilterPrime);
}

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    if (s >= kFilterPrime) s -= kFilterPrime;
    return s;
}

std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kFilterPrime - b;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t acc = 1;
    while (e) {
        if (e & 1) acc = mod_mul(acc, b);
        b = mod_mul(b, b);
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_of(const mpz_class& z) {
    mpz_class r = z % mpz_class(kFilterPrime);
    if (r < 0) r += mpz_class(kFilterPrime);
    return r.get_ui();
}

// Residue pair of a Gaussian rational in GF(p^2) = (Z/p)[i]; fails when a
// denominator is divisible by the filter prime.
bool mod_of(const GaussianRational& v, std::uint64_t& re, std::uint64_t& im) {
    std::uint64_t dre = mod_of(v.re().get_den());
    std::uint64_t dim = mod_of(v.im().get_den());
    if (dre == 0 || dim == 0) return false;
    re = mod_mul(mod_of(v.re().get_num()), mod_pow(dre, kFilterPrime - 2));
    im = mod_mul(mod_of(v.im().get_num()), mod_pow(dim, kFilterPrime - 2));
    return true;
}

struct ModPoly {
    std::vector<std::uint64_t> re, im;
    bool usable = false;
};

ModPoly to_mod(const UniPoly& g) {
    ModPoly out;
    int d = g.degree();
    out.re.resize(static_cast<std::size_t>(d) + 1);
    out.im.resize(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k)
        if (!mod_of(g[k], out.re[static_cast<std::size_t>(k)],
                    out.im[static_cast<std::size_t>(k)]))
            return out;
    out.usable = true;
    return out;
}

bool mod_is_root(const ModPoly& g, std::uint64_t xre, std::uint64_t xim) {
    std::uint64_t are = 0, aim = 0;
    for (std::size_t k = g.re.size(); k-- > 0;) {
        std::uint64_t nre =
            mod_add(mod_sub(mod_mul(are, xre), mod_mul(aim, xim)), g.re[k]);
        std::uint64_t nim =
            mod_add(mod_add(mod_mul(are, xim), mod_mul(aim, xre)), g.im[k]);
        are = nre;
        aim = nim;
    }
    return are == 0 && aim == 0;
}

mpz_class den_lcm_of(const UniPoly& g) {
    mpz_class l(1);
    for (int k = 0; k <= g.degree(); ++k) {
        mpz_class t;
        mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), g[k].re().get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), t.get_mpz_t(), g[k].im().get_den().get_mpz_t());
    }
    return l;
}

}  // namespace

RootList linear_roots(const UniPoly& g) {
    if (g.is_zero()) throw ValidationError("root search on zero polynomial");
    if (!g.leading().is_one()) throw ValidationError("root search requires monic input");

    RootList out;
    UniPoly work = g.trimmed();

    // eigenvalue zero first: strip powers of lambda
    int zero_mult = 0;
    while (work.degree() > 0 && work[0].is_zero()) {
        std::vector<GaussianRational> shifted(work.coeffs().begin() + 1,
                                              work.coeffs().end());
        work = UniPoly(std::move(shifted)).trimmed();
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(GaussianRational(0), zero_mult);
    if (work.degree() == 0) {
        out.cofactor = UniPoly::constant(1);
        return out;
    }

    ModPoly quick_filter = to_mod(work);

    // Deflation pre-pass over a small box of candidates. Smooth constant
    // terms (factorials and the like) carry enormous divisor lattices but
    // all-small roots; dividing those out first collapses the complete
    // enumeration below to a cheap residual problem.
    auto mod_of_long = [](long v) {
        return v >= 0 ? static_cast<std::uint64_t>(v) % kFilterPrime
                      : mod_sub(0, static_cast<std::uint64_t>(-v) % kFilterPrime);
    };
    for (long den = 1; den <= 6 && work.degree() > 0; ++den) {
        std::uint64_t dinv =
            mod_pow(static_cast<std::uint64_t>(den), kFilterPrime - 2);
        for (long x = -24; x <= 24 && work.degree() > 0; ++x)
            for (long y = -24; y <= 24; ++y) {
                if (x == 0 && y == 0) continue;
                if (quick_filter.usable) {
                    std::uint64_t cre = mod_mul(mod_of_long(x), dinv);
                    std::uint64_t cim = mod_mul(mod_of_long(y), dinv);
                    if (!mod_is_root(quick_filter, cre, cim)) continue;
                }
                GaussianRational cand(mpq_class(x, den), mpq_class(y, den));
                if (!work.eval(cand).is_zero()) continue;
                UniPoly factor = UniPoly::linear_factor(cand);
                int mult = 0;
                while (true) {
                    auto [quot, rem] = divrem(work, factor);
                    if (!rem.is_zero()) break;
                    work = quot;
                    ++mult;
                }
                if (mult > 0) out.roots.emplace_back(cand, mult);
                if (work.degree() == 0) break;
            }
    }
    if (work.degree() == 0) {
        std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
            if (a.first.re() != b.first.re()) return a.first.re() < b.first.re();
            return a.first.im() < b.first.im();
        });
        out.cofactor = UniPoly::constant(1);
        return out;
    }

    // clear denominators: L*work has Gaussian-integer coefficients,
    // leading coefficient L, constant term L*work(0)
    mpz_class lead = den_lcm_of(work);
    GaussianRational c0 = GaussianRational(mpq_class(lead)) * work[0];
    GaussInt g0(c0.re().get_num(), c0.im().get_num());

    constexpr std::size_t kCap = 4000000;
    std::vector<GaussInt> nums = gauss_divisors(g0, kCap);
    std::vector<GaussInt> dens = gauss_divisors(GaussInt(lead), kCap);
    if (nums.size() * dens.size() * 4 > 4 * kCap)
        throw ValidationError("root candidate budget exceeded");

    ModPoly filter = to_mod(work);

    // Residues of the numerator divisors, computed once; the unit rotations
    // i^u act on residues as (re,im) -> (-im,re). Exact arithmetic only runs
    // on candidates that survive the modular Horner pass.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> num_mod;
    num_mod.reserve(nums.size());
    for (const GaussInt& p : nums) num_mod.emplace_back(mod_of(p.re), mod_of(p.im));

    const GaussianRational i_unit = GaussianRational::i();
    std::set<std::pair<mpq_class, mpq_class>> seen;
    for (std::size_t qi = 0; qi < dens.size(); ++qi) {
        const GaussInt& q = dens[qi];
        // 1/q in GF(M^2) = conj(q) / norm(q); a norm divisible by the filter
        // prime disables filtering for this denominator
        std::uint64_t qre = mod_of(q.re), qim = mod_of(q.im);
        std::uint64_t qnorm = mod_add(mod_mul(qre, qre), mod_mul(qim, qim));
        bool q_filterable = filter.usable && qnorm != 0;
        std::uint64_t ninv = q_filterable ? mod_pow(qnorm, kFilterPrime - 2) : 0;
        std::uint64_t qinv_re = q_filterable ? mod_mul(qre, ninv) : 0;
        std::uint64_t qinv_im = q_filterable ? mod_mul(mod_sub(0, qim), ninv) : 0;

        GaussianRational q_exact(mpq_class(q.re), mpq_class(q.im));
        for (std::size_t pi = 0; pi < nums.size(); ++pi) {
            std::uint64_t cre = 0, cim = 0;
            if (q_filterable) {
                cre = mod_sub(mod_mul(num_mod[pi].first, qinv_re),
                              mod_mul(num_mod[pi].second, qinv_im));
                cim = mod_add(mod_mul(num_mod[pi].first, qinv_im),
                              mod_mul(num_mod[pi].second, qinv_re));
            }
            GaussianRational base;
            bool base_built = false;
            for (int u = 0; u < 4; ++u) {
                bool pass = !q_filterable || mod_is_root(filter, cre, cim);
                std::uint64_t t = cre;  // rotate the residue by i
                cre = mod_sub(0, cim);
                cim = t;
                if (!pass) continue;
                if (!base_built) {
                    base = GaussianRational(mpq_class(nums[pi].re),
                                            mpq_class(nums[pi].im)) /
                           q_exact;
                    base_built = true;
                }
                GaussianRational cand = base;
                for (int v = 0; v < u; ++v) cand *= i_unit;
                if (!seen.emplace(cand.re(), cand.im()).second) continue;
                if (!work.eval(cand).is_zero()) continue;
                UniPoly factor = UniPoly::linear_factor(cand);
                int mult = 0;
                while (true) {
                    auto [quot, rem] = divrem(work, factor);
                    if (!rem.is_zero()) break;
                    work = quot;
                    ++mult;
                }
                out.roots.emplace_back(cand, mult);
            }
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
        if (a.first.re() != b.first.re()) return a.first.re() < b.first.re();
        return a.first.im() < b.first.im();
    });
    out.cofactor = work;
    return out;
}

}  // namespace sympoly
