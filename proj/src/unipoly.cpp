#include "sympoly/unipoly.hpp"

#include <ostream>
#include <sstream>

#include "sympoly/errors.hpp"

namespace sympoly {

namespace {
const GaussianRational kZero{};
}

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.resize(1);
}

UniPoly UniPoly::zero(int grade) {
    if (grade < 0) throw InternalError("negative grade");
    UniPoly p;
    p.c_.assign(static_cast<std::size_t>(grade) + 1, GaussianRational());
    return p;
}

UniPoly UniPoly::monomial(int k, GaussianRational c) {
    UniPoly p = zero(k);
    p.c_[static_cast<std::size_t>(k)] = std::move(c);
    return p;
}

UniPoly UniPoly::linear_factor(const GaussianRational& root) {
    return UniPoly({-root, GaussianRational(1)});
}

int UniPoly::degree() const {
    for (int k = grade(); k >= 0; --k)
        if (!c_[static_cast<std::size_t>(k)].is_zero()) return k;
    return -1;
}

const GaussianRational& UniPoly::operator[](int k) const { return coeff(k); }

const GaussianRational& UniPoly::coeff(int k) const {
    if (k < 0) throw InternalError("negative coefficient index");
    if (k > grade()) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

void UniPoly::set_coeff(int k, GaussianRational v) {
    if (k < 0) throw InternalError("negative coefficient index");
    if (k > grade()) c_.resize(static_cast<std::size_t>(k) + 1);
    c_[static_cast<std::size_t>(k)] = std::move(v);
}

GaussianRational UniPoly::leading() const {
    int d = degree();
    return d < 0 ? GaussianRational() : c_[static_cast<std::size_t>(d)];
}

UniPoly UniPoly::trimmed() const {
    int d = degree();
    if (d < 0) return UniPoly();
    return UniPoly(std::vector<GaussianRational>(c_.begin(), c_.begin() + d + 1));
}

UniPoly UniPoly::with_grade(int g) const {
    if (g < degree()) throw InternalError("with_grade below degree");
    std::vector<GaussianRational> out(static_cast<std::size_t>(g) + 1);
    for (int k = 0; k <= std::min(g, grade()); ++k) out[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.grade() > grade()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.grade() > grade()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return UniPoly();
    std::vector<GaussianRational> out(static_cast<std::size_t>(da + db) + 1);
    for (int i = 0; i <= da; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= db; ++j)
            out[static_cast<std::size_t>(i + j)] +=
                a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(const GaussianRational& c, const UniPoly& p) {
    if (c.is_zero()) return UniPoly();
    UniPoly out = p;
    for (auto& v : out.c_) v *= c;
    return out;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    int d = std::max(a.grade(), b.grade());
    for (int k = 0; k <= d; ++k)
        if (a.coeff(k) != b.coeff(k)) return false;
    return true;
}

GaussianRational UniPoly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[static_cast<std::size_t>(k)];
    return acc;
}

UniPoly UniPoly::derivative() const {
    int d = degree();
    if (d <= 0) return UniPoly();
    std::vector<GaussianRational> out(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k)
        out[static_cast<std::size_t>(k - 1)] =
            GaussianRational(k) * c_[static_cast<std::size_t>(k)];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return leading().inv() * trimmed();
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw InternalError("negative polynomial power");
    UniPoly acc = UniPoly::constant(1);
    for (int k = 0; k < e; ++k) acc = acc * *this;
    return acc;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q) {
    int dq = q.degree();
    if (dq < 0) throw ValidationError("division by zero polynomial");
    UniPoly rem = p.trimmed();
    int dp = rem.degree();
    if (dp < dq) return {UniPoly(), rem};
    GaussianRational lead_inv = q.leading().inv();
    std::vector<GaussianRational> quot(static_cast<std::size_t>(dp - dq) + 1);
    while (true) {
        int dr = rem.degree();
        if (dr < dq) break;
        GaussianRational f = rem.coeff(dr) * lead_inv;
        quot[static_cast<std::size_t>(dr - dq)] = f;
        rem -= f * UniPoly::monomial(dr - dq) * q;
    }
    return {UniPoly(std::move(quot)).trimmed(), rem.trimmed()};
}

bool divides(const UniPoly& q, const UniPoly& p) {
    if (q.is_zero()) return p.is_zero();
    return divrem(p, q).second.is_zero();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.trimmed(), y = b.trimmed();
    while (!y.is_zero()) {
        UniPoly r = divrem(x, y).second;
        x = y;
        y = r.monic();  // normalizing each step tames coefficient growth
    }
    return x.monic();
}

ExtendedGcd poly_xgcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a.trimmed(), r1 = b.trimmed();
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        r0 = r1;
        r1 = r2;
        UniPoly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        UniPoly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    ExtendedGcd out;
    if (r0.is_zero()) return out;  // both inputs zero
    GaussianRational c = r0.leading().inv();
    out.g = c * r0;
    out.u = c * s0;
    out.v = c * t0;
    return out;
}

std::string UniPoly::str() const {
    int d = degree();
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = d; k >= 0; --k) {
        const GaussianRational& v = c_[static_cast<std::size_t>(k)];
        if (v.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << "(" << v.str() << ")";
            continue;
        }
        if (!v.is_one())
            os << "(" << v.str() << ")";
        os << "l";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace sympoly
