#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace sympoly {

/// Exact complex scalar with rational real and imaginary parts.
///
/// Both parts are kept in canonical form (positive denominator, coprime to
/// the numerator) at all times, so equality is plain structural equality.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}    // NOLINT: implicit by design
    GaussianRational(long v) : re_(v) {}   // NOLINT
    explicit GaussianRational(const mpz_class& v) : re_(v) {}
    GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(0, 1); }
    static GaussianRational from_parts(long re_num, long re_den, long im_num = 0,
                                       long im_den = 1);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inv() const;

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        return a += b;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        return a -= b;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        return a *= b;
    }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
        return a /= b;
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Text form "p/q" or "p/q+r/si"; denominators of 1 are omitted.
    std::string str() const;

    /// Parses the grammar emitted by str(). Also accepts a lone imaginary
    /// term such as "2i" or "-1/3i". Throws ValidationError on bad input.
    static GaussianRational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream&, const GaussianRational&);

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

}  // namespace sympoly
