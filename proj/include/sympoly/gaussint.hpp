#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace sympoly {

/// Gaussian integer, the working type for root-candidate enumeration.
struct GaussInt {
    mpz_class re, im;

    GaussInt() = default;
    GaussInt(mpz_class r, mpz_class i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    mpz_class norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Exact quotient a/b when b divides a; sets ok accordingly.
GaussInt gauss_div_exact(const GaussInt& a, const GaussInt& b, bool& ok);

/// Integer factorization by trial division, then Miller-Rabin plus
/// Brent-cycle rho on the surviving cofactor. Throws ValidationError when
/// the iteration budget runs out; the budget is far beyond desk scale.
std::map<mpz_class, int> factor_integer(mpz_class n);

/// Prime factorization of a nonzero Gaussian integer up to units:
/// list of (prime, exponent) with primes pairwise non-associate.
std::vector<std::pair<GaussInt, int>> gauss_factor(GaussInt z);

/// All divisors of z up to unit multiples, from its prime factorization.
/// Throws ValidationError when the count would exceed the cap.
std::vector<GaussInt> gauss_divisors(const GaussInt& z, std::size_t cap);

}  // namespace sympoly
