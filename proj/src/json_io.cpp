#include "sympoly/json_io.hpp"

#include <fstream>

#include "sympoly/errors.hpp"

namespace sympoly {

json polymatrix_to_json(const PolyMatrix& p) {
    json coeffs = json::array();
    for (int k = 0; k <= p.grade(); ++k) {
        json mat = json::array();
        for (std::size_t i = 0; i < p.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < p.cols(); ++j)
                row.push_back(p.coeff(k).at(i, j).str());
            mat.push_back(std::move(row));
        }
        coeffs.push_back(std::move(mat));
    }
    return json{{"m", p.rows()}, {"n", p.cols()}, {"grade", p.grade()},
                {"coeffs", std::move(coeffs)}};
}

PolyMatrix polymatrix_from_json(const json& j) {
    try {
        std::size_t m = j.at("m").get<std::size_t>();
        std::size_t n = j.at("n").get<std::size_t>();
        int grade = j.at("grade").get<int>();
        const json& coeffs = j.at("coeffs");
        if (grade < 0 || coeffs.size() != static_cast<std::size_t>(grade) + 1)
            throw ValidationError("coefficient list does not match the grade");
        PolyMatrix p(m, n, grade);
        for (int k = 0; k <= grade; ++k) {
            const json& mat = coeffs.at(static_cast<std::size_t>(k));
            if (mat.size() != m) throw ValidationError("coefficient row count mismatch");
            for (std::size_t i = 0; i < m; ++i) {
                const json& row = mat.at(i);
                if (row.size() != n)
                    throw ValidationError("coefficient column count mismatch");
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    p.coeff(k).at(i, j2) =
                        GaussianRational::parse(row.at(j2).get<std::string>());
            }
        }
        return p;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed matrix JSON: ") + e.what());
    }
}

json sylvester_to_json(const SylvesterPencil& f) {
    // "n" already names the column count in the matrix schema, so the block
    // size rides along as "base_n"
    json j = polymatrix_to_json(f.pencil);
    j["base_n"] = f.n;
    j["d"] = f.d;
    return j;
}

SylvesterPencil sylvester_from_json(const json& j) {
    SylvesterPencil f;
    f.pencil = polymatrix_from_json(j);
    try {
        f.n = j.at("base_n").get<int>();
        f.d = j.at("d").get<int>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed pencil JSON: ") + e.what());
    }
    if (f.n < 1 || f.d < 1 ||
        f.pencil.cols() != static_cast<std::size_t>(f.n) * static_cast<std::size_t>(f.d))
        throw ValidationError("pencil size disagrees with base_n * d");
    return f;
}

json descriptor_to_json(const BundleDescriptor& d) {
    return json{{"kind", d.kind == BundleKind::pencil ? "pencil" : "polynomial"},
                {"n", d.n},
                {"d", d.d},
                {"r", d.r},
                {"a", d.a},
                {"alpha", d.alpha},
                {"s", d.s},
                {"eig_count", d.eig_count},
                {"min_indices", d.minimal_indices()}};
}

json eigenstructure_to_json(const CompleteEigenstructure& e) {
    json finite = json::array();
    for (const auto& f : e.finite)
        finite.push_back(json{{"eigenvalue", f.eigenvalue.str()}, {"degree", f.degree}});
    json unfactored = json::array();
    for (const auto& u : e.unfactored) {
        json cs = json::array();
        for (int k = 0; k <= u.poly.degree(); ++k) cs.push_back(u.poly[k].str());
        unfactored.push_back(json{{"coeffs", std::move(cs)},
                                  {"degree", u.poly.degree()},
                                  {"squarefree", u.squarefree}});
    }
    return json{{"size", {e.rows, e.cols}},
                {"grade", e.grade},
                {"rank", e.rank},
                {"finite", std::move(finite)},
                {"unfactored", std::move(unfactored)},
                {"infinite", e.infinite},
                {"right_minimal", e.right_minimal},
                {"left_minimal", e.left_minimal}};
}

json report_to_json(const ExperimentReport& r) {
    json classified = json::object();
    for (const auto& [key, count] : r.classified) classified[key] = count;
    json unclassified = json::array();
    for (const auto& p : r.unclassified) unclassified.push_back(polymatrix_to_json(p));
    return json{{"n", r.n},
                {"d", r.d},
                {"r", r.r},
                {"trials", r.trials},
                {"seed", r.seed},
                {"perturbation", r.perturbation},
                {"classified", std::move(classified)},
                {"perturbation_checked", r.perturbation_checked},
                {"perturbation_stable", r.perturbation_stable},
                {"unclassified_count", r.unclassified.size()},
                {"unclassified", std::move(unclassified)},
                {"note", r.note}};
}

PolyMatrix read_polymatrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse " + path + ": " + e.what());
    }
    return polymatrix_from_json(j);
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace sympoly
