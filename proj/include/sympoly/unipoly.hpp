#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sympoly/gaussian_rational.hpp"

namespace sympoly {

/// Univariate polynomial over the Gaussian rationals with an explicit grade.
///
/// The coefficient list always has grade+1 entries, index k holding the
/// lambda^k coefficient. Trailing zeros are legal: the grade is a declared
/// attribute and may exceed the degree. degree() returns -1 for the zero
/// polynomial (a stand-in for the -infinity convention).
class UniPoly {
public:
    /// Zero polynomial of grade 0.
    UniPoly() : c_(1) {}
    explicit UniPoly(std::vector<GaussianRational> coeffs);
    UniPoly(std::initializer_list<GaussianRational> coeffs)
        : UniPoly(std::vector<GaussianRational>(coeffs)) {}

    static UniPoly constant(GaussianRational v) { return UniPoly({std::move(v)}); }
    static UniPoly zero(int grade);
    /// c * lambda^k
    static UniPoly monomial(int k, GaussianRational c = GaussianRational(1));
    /// lambda - root
    static UniPoly linear_factor(const GaussianRational& root);

    int grade() const { return static_cast<int>(c_.size()) - 1; }
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    bool is_constant() const { return degree() <= 0; }

    const GaussianRational& operator[](int k) const;
    /// Coefficient of lambda^k; zero when k exceeds the grade.
    const GaussianRational& coeff(int k) const;
    void set_coeff(int k, GaussianRational v);

    const std::vector<GaussianRational>& coeffs() const { return c_; }

    GaussianRational leading() const;  // zero for the zero polynomial

    /// Same polynomial with grade = max(degree, 0).
    UniPoly trimmed() const;
    /// Same polynomial padded (or trimmed, when the tail is zero) to grade g.
    UniPoly with_grade(int g) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend UniPoly operator*(const GaussianRational& c, const UniPoly& p);

    /// Mathematical equality: grades are ignored, trailing zeros compare equal.
    friend bool operator==(const UniPoly& a, const UniPoly& b);
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    GaussianRational eval(const GaussianRational& x) const;

    UniPoly derivative() const;
    UniPoly monic() const;  // zero stays zero
    UniPoly pow(int e) const;

    /// Human-readable form such as "l^2-3/2l+1i".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream&, const UniPoly&);

private:
    std::vector<GaussianRational> c_;
};

/// Exact Euclidean division: p = q*quot + rem with deg(rem) < deg(q).
/// Throws ValidationError when q is zero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q);

/// True iff q divides p exactly.
bool divides(const UniPoly& q, const UniPoly& p);

/// Monic greatest common divisor; gcd(0,0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
    UniPoly g;  // monic gcd
    UniPoly u;  // u*a + v*b = g
    UniPoly v;
};

/// Extended Euclid with the gcd normalized monic.
ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b);

}  // namespace sympoly
