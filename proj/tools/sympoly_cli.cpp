#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sympoly/catalog.hpp"
#include "sympoly/eigenstructure.hpp"
#include "sympoly/errors.hpp"
#include "sympoly/json_io.hpp"
#include "sympoly/linearization.hpp"
#include "sympoly/realization.hpp"
#include "sympoly/sampler.hpp"

namespace {

using namespace sympoly;

std::vector<GaussianRational> parse_scalar_list(const std::string& text) {
    std::vector<GaussianRational> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(GaussianRational::parse(tok));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json_file(out_path, j);
}

int cmd_enumerate(int n, int d, int r, bool as_json) {
    std::vector<BundleDescriptor> list =
        d == 1 ? enumerate_pencil_bundles(n, r) : enumerate_poly_bundles(n, d, r);
    if (as_json) {
        json j = json::array();
        for (const auto& desc : list) j.push_back(descriptor_to_json(desc));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "a\talpha\ts\teigs\tmin_indices\n";
    for (const auto& desc : list) {
        std::cout << desc.a << "\t" << desc.alpha << "\t" << desc.s << "\t"
                  << desc.eig_count << "\t";
        bool first = true;
        for (int e : desc.minimal_indices()) {
            std::cout << (first ? "" : ",") << e;
            first = false;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_realize(int n, int d, int r, std::optional<int> a,
                const std::string& eig_text, int t, const std::string& eps_text,
                std::uint64_t seed, bool verify, const std::string& out_path) {
    Rng rng(seed);
    PolyMatrix p;
    RealizationSpec spec;
    if (a.has_value()) {
        std::vector<BundleDescriptor> list = enumerate_poly_bundles(n, d, r);
        if (*a < 0 || *a >= static_cast<int>(list.size()))
            throw ValidationError("bundle index a out of range");
        spec = bundle_spec(list[static_cast<std::size_t>(*a)],
                           parse_scalar_list(eig_text));
    } else {
        spec.n = n;
        spec.d = d;
        spec.r = r;
        spec.t = t;
        spec.mus = parse_scalar_list(eig_text);
        spec.eps = parse_int_list(eps_text);
    }
    p = realize(spec, rng);
    if (verify) verify_realization(p, spec);
    emit(polymatrix_to_json(p), out_path);
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& out_path) {
    PolyMatrix p = read_polymatrix_file(path);
    CompleteEigenstructure e = complete_eigenstructure(p);
    json j = eigenstructure_to_json(e);
    if (p.rows() == p.cols() && p.is_symmetric() && e.rank < p.rows() &&
        p.grade() % 2 == 1) {
        std::optional<int> a = classify_bundle(e, static_cast<int>(p.rows()),
                                               p.grade(), static_cast<int>(e.rank));
        j["bundle"] = a ? json(*a) : json(nullptr);
    }
    emit(j, out_path);
    return 0;
}

int cmd_linearize(const std::string& path, const std::string& out_path) {
    SylvesterPencil f = linearize(read_polymatrix_file(path));
    emit(sylvester_to_json(f), out_path);
    return 0;
}

int cmd_delinearize(const std::string& path, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse " + path + ": " + e.what());
    }
    emit(polymatrix_to_json(delinearize(sylvester_from_json(j))), out_path);
    return 0;
}

int cmd_codim(int n, int d, int r, int a) {
    json j{{"n", n},         {"d", d},
           {"r", r},         {"a", a},
           {"codim_orbit", codim_orbit(n, d, r, a)},
           {"codim_bundle", codim_bundle(n, d, r, a)}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_checkshift(const std::string& path) {
    ShiftLawReport rep = verify_shift_law(read_polymatrix_file(path));
    json j{{"shift", rep.shift},
           {"poly_indices", rep.poly_indices},
           {"pencil_indices", rep.pencil_indices},
           {"shift_ok", rep.shift_ok},
           {"finite_divisors_match", rep.finite_divisors_match},
           {"detail", rep.detail}};
    std::cout << j.dump(2) << "\n";
    if (!rep.shift_ok || !rep.finite_divisors_match)
        throw InternalError("shift law check failed: " + rep.detail);
    return 0;
}

int cmd_sample(int n, int d, int r, int trials, std::uint64_t seed,
               const std::string& z_text, const std::string& out_path,
               const std::string& dump_prefix) {
    ExperimentReport rep = run_sampler(n, d, r, trials, seed,
                                       GaussianRational::parse(z_text));
    for (std::size_t k = 0; k < rep.unclassified.size(); ++k)
        if (!dump_prefix.empty())
            write_json_file(dump_prefix + std::to_string(k) + ".json",
                            polymatrix_to_json(rep.unclassified[k]));
    emit(report_to_json(rep), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact eigenstructure toolkit for symmetric matrix polynomials"};
    app.require_subcommand(1);

    int n = 0, d = 1, r = 0, t = 0, a = 0, trials = 200;
    std::optional<int> bundle_a;
    std::uint64_t seed = 1;
    bool verify = false, as_json = false;
    std::string eigs, eps, out_path, in_path, z_text = "1/1000", dump_prefix;

    auto* enumerate = app.add_subcommand("enumerate", "list the generic bundles");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--d", d)->required();
    enumerate->add_option("--r", r)->required();
    enumerate->add_flag("--json", as_json, "emit JSON instead of a table");

    auto* realize_cmd =
        app.add_subcommand("realize", "construct a symmetric matrix polynomial "
                                      "with prescribed eigenstructure");
    realize_cmd->add_option("--n", n)->required();
    realize_cmd->add_option("--d", d)->required();
    realize_cmd->add_option("--r", r)->required();
    auto* a_opt =
        realize_cmd->add_option("--a", bundle_a, "bundle index; alternative to --eps/--t");
    realize_cmd->add_option("--eigs", eigs, "comma-separated eigenvalues");
    realize_cmd->add_option("--t", t, "number of infinite divisors, 0 or 1")
        ->excludes(a_opt);
    realize_cmd->add_option("--eps", eps, "comma-separated minimal indices")
        ->excludes(a_opt);
    realize_cmd->add_option("--seed", seed);
    realize_cmd->add_flag("--verify", verify, "full eigenstructure round trip");
    realize_cmd->add_option("--out", out_path);

    auto* analyze = app.add_subcommand("analyze", "complete eigenstructure of a file");
    analyze->add_option("file", in_path)->required();
    analyze->add_option("--out", out_path);

    auto* linearize_cmd = app.add_subcommand("linearize", "symmetric strong linearization");
    linearize_cmd->add_option("file", in_path)->required();
    linearize_cmd->add_option("--out", out_path);

    auto* delinearize_cmd =
        app.add_subcommand("delinearize", "invert the linearization template");
    delinearize_cmd->add_option("file", in_path)->required();
    delinearize_cmd->add_option("--out", out_path);

    auto* codim = app.add_subcommand("codim", "orbit and bundle codimensions");
    codim->add_option("--n", n)->required();
    codim->add_option("--d", d)->required();
    codim->add_option("--r", r)->required();
    codim->add_option("--a", a)->required();

    auto* checkshift =
        app.add_subcommand("checkshift", "minimal-index shift law for a file");
    checkshift->add_option("file", in_path)->required();

    auto* sample = app.add_subcommand("sample", "bounded-rank sampling experiment");
    sample->add_option("--n", n)->required();
    sample->add_option("--d", d)->required();
    sample->add_option("--r", r)->required();
    sample->add_option("--trials", trials);
    sample->add_option("--seed", seed);
    sample->add_option("--z", z_text, "perturbation size");
    sample->add_option("--out", out_path);
    sample->add_option("--dump-unclassified", dump_prefix,
                       "file prefix for unclassified samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(n, d, r, as_json);
        if (realize_cmd->parsed())
            return cmd_realize(n, d, r, bundle_a, eigs, t, eps, seed, verify, out_path);
        if (analyze->parsed()) return cmd_analyze(in_path, out_path);
        if (linearize_cmd->parsed()) return cmd_linearize(in_path, out_path);
        if (delinearize_cmd->parsed()) return cmd_delinearize(in_path, out_path);
        if (codim->parsed()) return cmd_codim(n, d, r, a);
        if (checkshift->parsed()) return cmd_checkshift(in_path);
        if (sample->parsed())
            return cmd_sample(n, d, r, trials, seed, z_text, out_path, dump_prefix);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
