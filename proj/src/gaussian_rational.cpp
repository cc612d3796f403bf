#include "sympoly/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "sympoly/errors.hpp"

namespace sympoly {

GaussianRational GaussianRational::from_parts(long re_num, long re_den, long im_num,
                                              long im_den) {
    if (re_den == 0 || im_den == 0) throw ValidationError("zero denominator");
    mpq_class re(re_num, re_den);
    mpq_class im(im_num, im_den);
    re.canonicalize();
    im.canonicalize();
    return GaussianRational(re, im);
}

GaussianRational GaussianRational::inv() const {
    if (is_zero()) throw InternalError("division by zero scalar");
    mpq_class n = norm();
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inv();
}

namespace {

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// One signed rational token: sign? digits (/ digits)?
mpq_class parse_rational(std::string_view tok) {
    if (tok.empty()) throw ValidationError("empty rational token");
    if (tok.front() == '+') tok.remove_prefix(1);  // mpq rejects a leading '+'
    if (tok.empty()) throw ValidationError("empty rational token");
    std::string s(tok);
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-'))
            throw ValidationError("bad character in rational: '" + s + "'");
    }
    try {
        mpq_class q(s);
        if (q.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational: '" + s + "'");
    }
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_real()) return rational_str(re_);
    std::string out = rational_str(re_);
    if (sgn(im_) >= 0) out += "+";
    out += rational_str(im_);
    out += "i";
    return out;
}

GaussianRational GaussianRational::parse(std::string_view text) {
    // Strip whitespace; split into at most two signed terms.
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ValidationError("empty scalar");

    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' &&
            s[k - 1] != '-') {
            split = k;
            break;
        }
    }

    mpq_class re(0), im(0);
    bool have_re = false, have_im = false;
    auto eat_term = [&](std::string_view term) {
        if (term.empty()) throw ValidationError("empty term in scalar '" + s + "'");
        if (term.back() == 'i') {
            if (have_im) throw ValidationError("two imaginary terms in '" + s + "'");
            term.remove_suffix(1);
            if (term.empty() || term == "+")
                im = 1;
            else if (term == "-")
                im = -1;
            else
                im = parse_rational(term);
            have_im = true;
        } else {
            if (have_re) throw ValidationError("two real terms in '" + s + "'");
            re = parse_rational(term);
            have_re = true;
        }
    };

    if (split == std::string::npos) {
        eat_term(s);
    } else {
        eat_term(std::string_view(s).substr(0, split));
        eat_term(std::string_view(s).substr(split));
    }
    return GaussianRational(re, im);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.str();
}

}  // namespace sympoly
