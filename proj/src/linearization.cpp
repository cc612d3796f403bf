#include "sympoly/linearization.hpp"

#include <sstream>

#include "sympoly/errors.hpp"
#include "sympoly/kernel.hpp"
#include "sympoly/smith.hpp"

namespace sympoly {

SylvesterPencil linearize(const PolyMatrix& p) {
    if (p.rows() != p.cols()) throw ValidationError("linearization needs a square input");
    if (!p.is_symmetric()) throw ValidationError("linearization needs a symmetric input");
    int d = p.grade();
    if (d < 1 || d % 2 == 0)
        throw ValidationError("no symmetric linearization template for even grade");
    std::size_t n = p.rows();
    std::size_t size = n * static_cast<std::size_t>(d);

    SylvesterPencil f;
    f.n = static_cast<int>(n);
    f.d = d;
    f.pencil = PolyMatrix(size, size, 1);
    auto put_block = [&](int bi, int bj, int coeff, const Mat& m) {
        std::size_t ro = static_cast<std::size_t>(bi) * n;
        std::size_t co = static_cast<std::size_t>(bj) * n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                f.pencil.coeff(coeff).at(ro + i, co + j) += m.at(i, j);
    };
    Mat eye = Mat::identity(n);
    for (int i = 1; i <= d; ++i) {
        if (i % 2 == 1) {
            put_block(i - 1, i - 1, 1, p.coeff(d - i + 1));
            put_block(i - 1, i - 1, 0, p.coeff(d - i));
        }
        if (i < d) {
            int c = (i % 2 == 1) ? 0 : 1;  // I for odd i, lambda*I for even i
            put_block(i - 1, i, c, eye);
            put_block(i, i - 1, c, eye);
        }
    }
    return f;
}

bool matches_sylvester_pattern(const PolyMatrix& pencil, int n, int d) {
    if (n < 1 || d < 1 || d % 2 == 0) return false;
    std::size_t size = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
    if (pencil.rows() != size || pencil.cols() != size) return false;
    if (pencil.grade() != 1) return false;
    if (!pencil.is_symmetric()) return false;

    auto block = [&](int coeff, int bi, int bj, std::size_t i, std::size_t j) {
        return pencil.coeff(coeff).at(static_cast<std::size_t>(bi) * n + i,
                                      static_cast<std::size_t>(bj) * n + j);
    };
    for (int bi = 1; bi <= d; ++bi)
        for (int bj = bi; bj <= d; ++bj) {
            bool on_diag = bi == bj;
            bool on_super = bj == bi + 1;
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
                    for (int c = 0; c <= 1; ++c) {
                        const GaussianRational& v = block(c, bi - 1, bj - 1, i, j);
                        if (on_diag) {
                            if (bi % 2 == 0 && !v.is_zero()) return false;
                        } else if (on_super) {
                            GaussianRational want =
                                (i == j && c == (bi % 2 == 1 ? 0 : 1))
                                    ? GaussianRational(1)
                                    : GaussianRational(0);
                            if (v != want) return false;
                        } else {
                            if (!v.is_zero()) return false;
                        }
                    }
        }
    return true;
}

PolyMatrix delinearize(const SylvesterPencil& f) {
    if (!matches_sylvester_pattern(f.pencil, f.n, f.d))
        throw ValidationError("pencil does not match the linearization template");
    std::size_t n = static_cast<std::size_t>(f.n);
    PolyMatrix p(n, n, f.d);
    for (int i = 1; i <= f.d; i += 2) {
        std::size_t off = static_cast<std::size_t>(i - 1) * n;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                p.coeff(f.d - i + 1).at(r, c) = f.pencil.coeff(1).at(off + r, off + c);
                p.coeff(f.d - i).at(r, c) = f.pencil.coeff(0).at(off + r, off + c);
            }
    }
    return p;
}

ShiftLawReport verify_shift_law(const PolyMatrix& p) {
    if (p.grade() < 3 || p.grade() % 2 == 0)
        throw ValidationError("shift law check needs odd grade >= 3");
    SylvesterPencil f = linearize(p);

    ShiftLawReport rep;
    rep.shift = (p.grade() - 1) / 2;
    rep.poly_indices = minimal_indices(p).right;
    rep.pencil_indices = minimal_indices(f.pencil).right;

    rep.shift_ok = rep.poly_indices.size() == rep.pencil_indices.size();
    if (rep.shift_ok)
        for (std::size_t k = 0; k < rep.poly_indices.size(); ++k)
            if (rep.pencil_indices[k] != rep.poly_indices[k] + rep.shift) {
                rep.shift_ok = false;
                break;
            }

    // Finite divisors must agree, computed from scratch on both sides.
    std::vector<UniPoly> gp = smith_form(p).invariants;
    std::vector<UniPoly> gf = smith_form(f.pencil).invariants;
    std::vector<UniPoly> gp_nontrivial, gf_nontrivial;
    for (const auto& g : gp)
        if (!g.is_constant()) gp_nontrivial.push_back(g);
    for (const auto& g : gf)
        if (!g.is_constant()) gf_nontrivial.push_back(g);
    rep.finite_divisors_match = gp_nontrivial.size() == gf_nontrivial.size();
    if (rep.finite_divisors_match)
        for (std::size_t k = 0; k < gp_nontrivial.size(); ++k)
            if (!(gp_nontrivial[k] == gf_nontrivial[k])) {
                rep.finite_divisors_match = false;
                break;
            }

    std::ostringstream os;
    os << "shift " << rep.shift << "; poly indices";
    for (int e : rep.poly_indices) os << " " << e;
    os << "; pencil indices";
    for (int e : rep.pencil_indices) os << " " << e;
    rep.detail = os.str();
    return rep;
}

}  // namespace sympoly
