#include "sympoly/gaussint.hpp"

#include "sympoly/errors.hpp"

namespace sympoly {

GaussInt gauss_div_exact(const GaussInt& a, const GaussInt& b, bool& ok) {
    ok = false;
    if (b.is_zero()) return {};
    mpz_class n = b.norm();
    GaussInt num = a * b.conj();
    if (num.re % n != 0 || num.im % n != 0) return {};
    ok = true;
    return {num.re / n, num.im / n};
}

namespace {

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Brent's variant of the rho cycle finder.
mpz_class rho_factor(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    mpz_class c(1);
    for (int attempt = 0; attempt < 32; ++attempt, ++c) {
        mpz_class x(2), y(2), d(1), ys, q(1);
        long r = 1;
        const long budget = 1 << 22;
        long spent = 0;
        while (d == 1 && spent < budget) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && d == 1) {
                ys = y;
                long lim = std::min(static_cast<long>(128), r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    mpz_class diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = (q * diff) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
                spent += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack for the factor lost inside the q batch
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                mpz_class diff = x - ys;
                if (diff < 0) diff = -diff;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != 1 && d != n) return d;
    }
    throw ValidationError("integer factorization budget exhausted");
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = rho_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

// Square root of -1 modulo a prime p = 1 (mod 4).
mpz_class sqrt_minus_one(const mpz_class& p) {
    mpz_class e = (p - 1) / 4;
    for (mpz_class a = 2; a < p; ++a) {
        mpz_class x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((x * x) % p == p - 1) return x;
    }
    throw InternalError("no square root of -1 found modulo prime");
}

// Gaussian prime above a split rational prime p = 1 (mod 4): descend the
// Euclidean remainders of (p, x) below sqrt(p); p = a^2 + b^2 then.
GaussInt split_prime(const mpz_class& p) {
    mpz_class x = sqrt_minus_one(p);
    mpz_class r0 = p, r1 = x;
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), p.get_mpz_t());
    while (r1 > bound) {
        mpz_class r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    mpz_class b2 = p - r1 * r1;
    mpz_class b;
    mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
    if (b * b != b2) throw InternalError("two-square decomposition failed");
    return {r1, b};
}

}  // namespace

std::map<mpz_class, int> factor_integer(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    mpz_class trial(17);
    while (trial < 100000 && trial * trial <= n) {
        while (n % trial == 0) {
            out[trial] += 1;
            n /= trial;
        }
        trial += 2;
    }
    factor_into(n, out);
    return out;
}

std::vector<std::pair<GaussInt, int>> gauss_factor(GaussInt z) {
    if (z.is_zero()) throw InternalError("factoring zero Gaussian integer");
    std::vector<std::pair<GaussInt, int>> out;
    std::map<mpz_class, int> norm_primes = factor_integer(z.norm());
    for (const auto& [p, unused] : norm_primes) {
        std::vector<GaussInt> primes;
        if (p == 2)
            primes.push_back(GaussInt(1, 1));
        else if (p % 4 == 3)
            primes.push_back(GaussInt(p, 0));
        else {
            GaussInt pi = split_prime(p);
            primes.push_back(pi);
            primes.push_back(pi.conj());
        }
        for (const GaussInt& pi : primes) {
            int count = 0;
            while (true) {
                bool ok = false;
                GaussInt q = gauss_div_exact(z, pi, ok);
                if (!ok) break;
                z = q;
                ++count;
            }
            if (count > 0) out.emplace_back(pi, count);
        }
    }
    if (z.norm() != 1) throw InternalError("Gaussian factorization left a non-unit");
    return out;
}

std::vector<GaussInt> gauss_divisors(const GaussInt& z, std::size_t cap) {
    auto factors = gauss_factor(z);
    std::size_t count = 1;
    for (const auto& [unused, e] : factors) {
        count *= static_cast<std::size_t>(e) + 1;
        if (count > cap) throw ValidationError("divisor enumeration cap exceeded");
    }
    std::vector<GaussInt> divisors{GaussInt(1, 0)};
    for (const auto& [pi, e] : factors) {
        std::size_t base = divisors.size();
        GaussInt power(1, 0);
        for (int k = 1; k <= e; ++k) {
            power = power * pi;
            for (std::size_t i = 0; i < base; ++i)
                divisors.push_back(divisors[i] * power);
        }
    }
    return divisors;
}

}  // namespace sympoly
