// Command-line front end: parse a spine curve from a JSON coefficient file,
// run the requested pipeline targets, print equations and reports.
//
// Exit codes: 0 success, 1 computational error, 2 input error.

#include "canal/determinant.hpp"
#include "canal/mubasis.hpp"
#include "canal/pipeline.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using nlohmann::ordered_json;
using namespace canal;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kTargets = {
    "dual",  "offset-dual", "gamma",       "canal",       "offset",
    "naive", "naive-d",     "degree-only", "general-type"};

bool known_target(const std::string& t) {
    for (const auto& k : kTargets)
        if (k == t) return true;
    return false;
}

bool needs_d(const std::string& t) {
    return t == "offset" || t == "offset-dual" || t == "naive-d";
}

bool uses_d(const std::string& t) { return needs_d(t) || t == "canal"; }

struct JobSpec {
    SpineCurve spine;
    std::vector<std::string> targets;
    Rational d{0};
    bool affine = false;
    bool affine_early = false;
    std::string format = "text";
    uint64_t seed = 0;
};

Rational parse_rational(const std::string& s, const std::string& field) {
    try {
        return Rational(s);
    } catch (const std::exception& e) {
        throw InputError(field + ": " + e.what());
    }
}

UniPoly parse_poly(const nlohmann::json& arr, const std::string& field) {
    if (!arr.is_array()) throw InputError(field + ": expected a coefficient list");
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& c = arr[i];
        std::string at = field + "[" + std::to_string(i) + "]";
        if (c.is_number_integer())
            cs.push_back(parse_rational(c.dump(), at));
        else if (c.is_string())
            cs.push_back(parse_rational(c.get<std::string>(), at));
        else
            throw InputError(at + ": expected integer or rational string");
    }
    return UniPoly::from_coeffs(std::move(cs));
}

SpineCurve parse_spine(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw InputError(std::string("input file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("numerators") ||
        !doc.contains("denominators"))
        throw InputError("input must be an object with numerators and denominators");
    const auto& nu = doc["numerators"];
    const auto& de = doc["denominators"];
    if (!nu.is_array() || nu.size() != 4)
        throw InputError("numerators: expected exactly 4 coefficient lists");
    if (!de.is_array() || de.size() != 4)
        throw InputError("denominators: expected exactly 4 coefficient lists");
    std::array<UniPoly, 4> nums, dens;
    for (int i = 0; i < 4; ++i) {
        nums[i] = parse_poly(nu[i], "numerators[" + std::to_string(i) + "]");
        dens[i] = parse_poly(de[i], "denominators[" + std::to_string(i) + "]");
    }
    try {
        return make_spine(nums, dens);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

// y0 = 1 before the elimination: specialize the dotted pencil, keep the
// formal t-degrees of the projective forms so nothing silently collapses.
ImplicitResult pencil_equation_affine_early(const PolyVec& A, const PolyVec& B,
                                            int nvars, uint64_t seed) {
    MuBasis mb = mu_basis(A, B);
    int k = plucker_param_degree(A, B, seed);
    auto vars = standard_vars(nvars);
    TPoly f = dot_with_vars(mb.a, vars);
    TPoly g = dot_with_vars(mb.b, vars);
    int df = f.degree(), dg = g.degree();
    auto img = identity_images();
    img[VY0] = MultiPoly::constant(Rational(1));
    f = f.map_coeffs(img);
    g = g.map_coeffs(img);
    ImplicitResult r;
    r.equation = canonical_form(sylvester_resultant(f, g, df, dg));
    r.mu_degrees = mb.deg_pair;
    r.k = k;
    r.degree = r.equation.total_degree();
    r.wdeg = weighted_degree(r.equation);
    return r;
}

MultiPoly affine_quadric(const std::optional<Rational>& d) {
    MultiPoly q = MultiPoly::var(VY1, 2);
    q += MultiPoly::var(VY2, 2);
    q += MultiPoly::var(VY3, 2);
    if (d)
        q -= MultiPoly::constant(*d * *d);
    else
        q -= MultiPoly::var(VY4, 2);
    return q;
}

struct Entry {
    std::string target;
    std::optional<MultiPoly> equation;
    std::optional<int> degree;
    std::optional<int> wdeg;
    std::optional<int> k;
    std::optional<std::pair<int, int>> mu;
    ordered_json flags = ordered_json::object();
};

Entry equation_entry(const JobSpec& job, const std::string& target) {
    const SpineCurve& s = job.spine;
    Entry e;
    e.target = target;
    bool u_space = (target == "dual" || target == "offset-dual");

    if (job.affine_early) {
        ImplicitResult r;
        if (target == "dual" || target == "gamma") {
            auto [A, B] = build_E_Eprime(s);
            r = pencil_equation_affine_early(A, B, 6, job.seed);
            if (target == "gamma")
                r.equation = canonical_form(
                    r.equation.substitute([&] {
                        auto img = identity_images();
                        img[VU] = affine_quadric(std::nullopt);
                        return img;
                    }()));
        } else if (target == "offset-dual" || target == "canal" ||
                   target == "offset") {
            auto [A, B] = build_D_Dprime(s, job.d);
            r = pencil_equation_affine_early(A, B, 5, job.seed);
            if (target != "offset-dual")
                r.equation = canonical_form(
                    r.equation.substitute([&] {
                        auto img = identity_images();
                        img[VU] = affine_quadric(job.d);
                        return img;
                    }()));
        } else {  // naive, naive-d
            TPoly g1 = spine_g1(s);
            if (target == "naive-d") {
                auto img = identity_images();
                img[VY4] = (-job.d) * MultiPoly::var(VY0);
                g1 = g1.map_coeffs(img);
            }
            int dg = g1.degree();
            auto img = identity_images();
            img[VY0] = MultiPoly::constant(Rational(1));
            g1 = g1.map_coeffs(img);
            TPoly g2 = g1.derivative();
            r.equation = canonical_form(
                sylvester_resultant(g1, g2, dg, dg > 0 ? dg - 1 : 0));
            r.degree = r.equation.total_degree();
            e.target = target;
            e.equation = r.equation;
            e.degree = r.degree;
            e.flags["affine_early"] = true;
            return e;
        }
        e.equation = r.equation;
        e.degree = r.equation.total_degree();
        if (u_space) e.wdeg = weighted_degree(r.equation);
        e.k = r.k;
        e.mu = r.mu_degrees;
        e.flags["affine_early"] = true;
        return e;
    }

    if (target == "naive" || target == "naive-d") {
        MultiPoly raw = target == "naive" ? naive_envelope(s)
                                          : naive_envelope_d(s, job.d);
        MultiPoly eq = canonical_form(raw);
        if (job.affine) {
            auto img = identity_images();
            img[VY0] = MultiPoly::constant(Rational(1));
            eq = eq.substitute(img);
            e.flags["affine"] = true;
        }
        e.equation = eq;
        e.degree = eq.total_degree();
        return e;
    }

    ImplicitResult r;
    if (target == "dual")
        r = dual_variety_equation(s, job.seed);
    else if (target == "offset-dual")
        r = offset_dual_equation(s, job.d, job.seed);
    else if (target == "gamma")
        r = gamma_equation(s, job.seed);
    else  // canal, offset
        r = canal_equation(s, job.d, job.seed);

    MultiPoly eq = r.equation;
    if (job.affine) {
        auto img = identity_images();
        img[VY0] = MultiPoly::constant(Rational(1));
        eq = eq.substitute(img);
        e.flags["affine"] = true;
    }
    e.equation = eq;
    e.degree = eq.total_degree();
    if (r.wdeg) e.wdeg = *r.wdeg;
    e.k = r.k;
    e.mu = r.mu_degrees;
    return e;
}

Entry report_entry(const JobSpec& job, const std::string& target) {
    Entry e;
    e.target = target;
    GeneralTypeReport rep = general_type_check(job.spine, job.seed);
    if (target == "degree-only") {
        PredictedDegrees pd = predicted_degrees(job.spine, rep);
        e.flags["general_type"] = rep.general_type;
        e.flags["predicted_dual_degree"] = pd.dual;
        e.flags["predicted_gamma_degree"] = pd.gamma;
        e.flags["conjectured_gamma_degree"] = pd.conjectured_gamma;
    } else {  // general-type
        e.flags["w_coprime"] = rep.w_coprime;
        e.flags["e0_squarefree"] = rep.e0_squarefree;
        e.flags["e0_coprime_norm"] = rep.e0_coprime_norm;
        e.flags["degree_match"] = rep.degree_match;
        e.flags["k_is_one"] = rep.k_is_one;
        e.flags["general_type"] = rep.general_type;
        e.flags["max_w_degree"] = rep.gamma;
        e.flags["w_gcd_degree"] = rep.w_gcd.degree();
    }
    return e;
}

std::string render_structured(const JobSpec& job,
                              const std::vector<Entry>& entries) {
    ordered_json doc;
    doc["seed"] = job.seed;
    doc["d"] = job.d.str();
    doc["results"] = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json r;
        r["target"] = e.target;
        r["equation"] = e.equation ? ordered_json(e.equation->str())
                                   : ordered_json(nullptr);
        r["degree"] = e.degree ? ordered_json(*e.degree) : ordered_json(nullptr);
        r["weighted_degree"] =
            e.wdeg ? ordered_json(*e.wdeg) : ordered_json(nullptr);
        r["monomials"] = e.equation ? ordered_json(e.equation->num_terms())
                                    : ordered_json(nullptr);
        r["k"] = e.k ? ordered_json(*e.k) : ordered_json(nullptr);
        r["mu_degrees"] = e.mu ? ordered_json{e.mu->first, e.mu->second}
                               : ordered_json(nullptr);
        r["flags"] = e.flags;
        doc["results"].push_back(std::move(r));
    }
    return doc.dump(2) + "\n";
}

std::string render_text(const JobSpec& job, const std::vector<Entry>& entries) {
    std::ostringstream out;
    bool first = true;
    for (const auto& e : entries) {
        if (!first) out << "\n";
        first = false;
        out << "target: " << e.target << "\n";
        if (uses_d(e.target)) out << "d: " << job.d.str() << "\n";
        if (e.mu)
            out << "mu degrees: (" << e.mu->first << ", " << e.mu->second
                << ")\n";
        if (e.k) out << "k: " << *e.k << "\n";
        if (e.degree) out << "degree: " << *e.degree << "\n";
        if (e.wdeg) out << "weighted degree: " << *e.wdeg << "\n";
        if (e.equation) {
            out << "monomials: " << e.equation->num_terms() << "\n";
            out << "equation: " << e.equation->str() << "\n";
        }
        for (const auto& [key, val] : e.flags.items())
            out << key << ": " << val.dump() << "\n";
    }
    return out.str();
}

int run(const JobSpec& job) {
    std::vector<Entry> entries;
    for (const auto& t : job.targets) {
        if (t == "degree-only" || t == "general-type")
            entries.push_back(report_entry(job, t));
        else
            entries.push_back(equation_entry(job, t));
    }
    std::cout << (job.format == "structured" ? render_structured(job, entries)
                                             : render_text(job, entries));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact implicit equations of canal surfaces, their offsets, and the "
        "dual varieties swept by a rational curve of spheres"};
    std::string input_path;
    std::vector<std::string> targets;
    std::string d_str;
    std::string format = "text";
    uint64_t seed = 0;
    bool affine = false, affine_early = false, degree_only = false;

    app.add_option("--input", input_path, "spine curve JSON file")->required();
    app.add_option("--target", targets,
                   "targets: dual, offset-dual, gamma, canal, offset, naive, "
                   "naive-d, degree-only, general-type (default: canal)")
        ->delimiter(',');
    app.add_option("--d", d_str, "offset distance, integer or p/q");
    app.add_flag("--affine", affine, "set y0 = 1 in the final equations");
    app.add_flag("--affine-early", affine_early,
                 "set y0 = 1 before the elimination");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--seed", seed, "seed for fiber-degree sampling");
    app.add_flag("--degree-only", degree_only,
                 "predict degrees without computing equations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        JobSpec job;
        job.spine = parse_spine(input_path);
        job.affine = affine;
        job.affine_early = affine_early;
        job.format = format;
        job.seed = seed;
        if (affine && affine_early)
            throw InputError("choose one of --affine and --affine-early");
        for (const auto& t : targets) {
            if (!known_target(t)) throw InputError("unknown target: " + t);
            bool dup = false;
            for (const auto& u : job.targets) dup = dup || u == t;
            if (!dup) job.targets.push_back(t);
        }
        if (degree_only) {
            for (const auto& t : job.targets)
                if (t != "degree-only")
                    throw InputError("degree-only excludes equation targets");
            job.targets = {"degree-only"};
        }
        if (job.targets.empty()) job.targets = {"canal"};
        if (!d_str.empty()) job.d = parse_rational(d_str, "--d");
        for (const auto& t : job.targets)
            if (needs_d(t) && d_str.empty())
                throw InputError("target " + t + " requires --d");
        return run(job);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
