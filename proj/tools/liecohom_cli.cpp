// liecohom: command-line front end for the cohomology engine.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input algebra,
// 3 internal consistency failure (engine and dense oracle disagree).

#include "liecohom/catalog.hpp"
#include "liecohom/claims.hpp"
#include "liecohom/factorization.hpp"
#include "liecohom/io.hpp"
#include "liecohom/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using nlohmann::json;
using namespace liecohom;

namespace {

constexpr int kUsage = 1;
constexpr int kBadAlgebra = 2;
constexpr int kInconsistent = 3;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BadAlgebra : public std::runtime_error {
public:
    BadAlgebra(const std::string& what, json detail) : std::runtime_error(what), detail(std::move(detail)) {}
    json detail;
};

struct Options {
    std::string format = "table";
    std::string algebra;
    std::string ambient;
    std::string levi;
    std::string radical;
    std::string coeff = "adjoint";
    std::size_t degree = 2;
    bool representatives = false;
    std::string cocycle_file;
    long representative = -1;
    std::size_t k = 1;
    std::size_t n_max = 4;
    unsigned seed = 1;
    std::size_t trials = 50;
};

json vector_json(std::span<const Rational> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json witness_json(const std::vector<std::string>& labels, const JacobiViolation& w) {
    json residual = json::object();
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!w.residual[k].is_zero()) residual[labels[k]] = w.residual[k].str();
    }
    return {{"triple", {labels[w.i], labels[w.j], labels[w.k]}}, {"residual", residual}};
}

LieAlgebra load(const std::string& spec) {
    try {
        return catalog::resolve(spec);
    } catch (const NotALieAlgebra& e) {
        throw BadAlgebra(e.what(), {{"jacobi_violation", witness_json(e.labels(), e.witness())}});
    } catch (const std::exception& e) {
        throw BadAlgebra(e.what(), json::object());
    }
}

Representation coefficients(const LieAlgebra& g, const std::string& coeff) {
    if (coeff == "trivial") return trivial_rep(g, 1);
    if (coeff == "adjoint") return adjoint_rep(g);
    throw UsageError("--coeff must be 'trivial' or 'adjoint'");
}

std::vector<std::size_t> complement(std::size_t dim, const std::vector<std::size_t>& part) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::find(part.begin(), part.end(), i) == part.end()) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> labels_to_indices(const LieAlgebra& g, const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty() || text == "none") return out;
    if (text == "sl2") {
        for (const char* l : {"e", "f", "h"}) out.push_back(g.require_index(l));
    } else {
        std::stringstream ss(text);
        std::string label;
        while (std::getline(ss, label, ',')) out.push_back(g.require_index(label));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_complement_word(const std::string& s) {
    return s == "heisenberg" || s == "abelian" || s == "radical" || s == "rest";
}

InvariantSetup make_setup(const Options& o) {
    const LieAlgebra g = load(o.ambient);
    std::vector<std::size_t> levi;
    std::vector<std::size_t> radical;
    try {
        if (o.levi.empty() && o.radical.empty()) {
            auto split = catalog::default_split(o.ambient);
            if (!split) throw UsageError("no default levi/radical split for '" + o.ambient + "'; pass --levi and --radical");
            levi = split->levi;
            radical = split->radical;
        } else if (is_complement_word(o.radical) || o.radical.empty()) {
            levi = labels_to_indices(g, o.levi);
            radical = complement(g.dim(), levi);
        } else {
            radical = labels_to_indices(g, o.radical);
            levi = (o.levi.empty() || is_complement_word(o.levi)) ? complement(g.dim(), radical) : labels_to_indices(g, o.levi);
        }
        return InvariantSetup(coefficients(g, o.coeff), levi, radical);
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

json cohomology_json(const CohomologyResult& r) {
    return {{"degree", r.degree},
            {"dim_cochain", r.dim_cochain},
            {"dim_cocycles", r.dim_cocycles},
            {"dim_coboundaries", r.dim_coboundaries},
            {"dim_cohomology", r.dim_cohomology}};
}

json representatives_json(const Representation& rho, std::size_t n, const std::vector<Vector>& reps) {
    json out = json::array();
    for (const auto& v : reps) out.push_back(cochain_to_json(rho, n, v));
    return out;
}

// ---------------------------------------------------------------------------
// Commands. Each returns {payload, exit code}.

struct Outcome {
    json result;
    int code = 0;
};

Outcome cmd_info(const Options& o) {
    LieAlgebra g;
    try {
        g = catalog::resolve(o.algebra);
    } catch (const NotALieAlgebra& e) {
        return {{{"valid", false}, {"error", e.what()}, {"jacobi_violation", witness_json(e.labels(), e.witness())}},
                kBadAlgebra};
    } catch (const std::exception& e) {
        throw BadAlgebra(e.what(), json::object());
    }
    const Subspace z = center(g);
    json center_basis = json::array();
    for (const auto& v : z.basis()) center_basis.push_back(vector_json(v));
    std::vector<Vector> brackets;
    for (const auto& b : g.brackets()) brackets.push_back(to_dense(b.result, g.dim()));
    return {{{"valid", true},
             {"dim", g.dim()},
             {"basis", g.labels()},
             {"center_dim", z.dim()},
             {"center_basis", center_basis},
             {"derived_dim", Subspace::span(g.dim(), brackets).dim()}},
            0};
}

Outcome cmd_cohomology(const Options& o) {
    const LieAlgebra g = load(o.algebra);
    const Representation rho = coefficients(g, o.coeff);
    const CohomologyResult r = cohomology(rho, o.degree, o.representatives);
    json out = cohomology_json(r);
    out["coeff"] = o.coeff;
    if (o.representatives) out["representatives"] = representatives_json(rho, o.degree, r.representatives);
    return {out, 0};
}

Outcome cmd_derivations(const Options& o) {
    const LieAlgebra g = load(o.algebra);
    const Subspace der = derivation_space(g);
    const Subspace inn = inner_derivations(g);
    json out{{"total", der.dim()}, {"inner", inn.dim()}, {"outer", der.dim() - inn.dim()}};
    if (o.representatives) {
        json outer = json::array();
        for (const auto& v : complement_representatives(der, inn)) outer.push_back(vector_json(v));
        out["outer_representatives"] = outer;
    }
    return {out, 0};
}

Outcome cmd_invariant_cohomology(const Options& o) {
    const InvariantSetup setup = make_setup(o);
    const CohomologyResult r = invariant_cohomology(setup, o.degree, o.representatives);
    const CohomologyResult sub = invariant_subcomplex_cohomology(setup, o.degree);
    json out = cohomology_json(r);
    out["coeff"] = o.coeff;
    out["dim_invariant_cochains"] = r.dim_cochain;
    out["subcomplex_dim_cohomology"] = sub.dim_cohomology;
    out["subcomplex_agrees"] = sub.dim_cohomology == r.dim_cohomology;
    if (o.representatives) {
        out["representatives"] = representatives_json(setup.radical_module(), o.degree, r.representatives);
    }
    return {out, 0};
}

Outcome cmd_extend(const Options& o) {
    const LieAlgebra g = load(o.algebra);
    const Representation coeffs = trivial_rep(g, o.k);
    Vector phi;
    if (!o.cocycle_file.empty()) {
        std::ifstream in(o.cocycle_file);
        if (!in) throw UsageError("cannot open cocycle file '" + o.cocycle_file + "'");
        try {
            phi = cochain_from_json(coeffs, 2, json::parse(in));
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad cocycle file: ") + e.what());
        }
    } else if (o.representative >= 0) {
        if (o.k != 1) throw UsageError("--representative needs --k 1");
        const auto r = cohomology(coeffs, 2, true);
        if (static_cast<std::size_t>(o.representative) >= r.representatives.size()) {
            throw UsageError("H^2 has only " + std::to_string(r.representatives.size()) + " representatives");
        }
        phi = r.representatives[o.representative];
    } else {
        throw UsageError("extend needs --cocycle FILE or --representative I");
    }
    try {
        const LieAlgebra ext = central_extension(g, phi, o.k);
        return {{{"valid", true}, {"dim", ext.dim()}, {"center_dim", center(ext).dim()}, {"algebra", algebra_to_json(ext)}}, 0};
    } catch (const NotACocycle& e) {
        std::vector<std::string> labels = g.labels();
        for (std::size_t c = 1; c <= o.k; ++c) labels.push_back("c" + std::to_string(c));
        const json detail = witness_json(labels, e.witness());
        return {{{"valid", false}, {"error", e.what()}, {"jacobi_violation", detail}}, kBadAlgebra};
    }
}

Outcome cmd_hs_check(const Options& o) {
    const InvariantSetup setup = make_setup(o);
    if (o.degree > 3) throw UsageError("hs-check supports --degree up to 3");
    const HsReport r = hs_crosscheck(setup, o.degree);
    return {{{"degree", o.degree}, {"coeff", o.coeff}, {"direct", r.direct}, {"factorized", r.factorized}, {"agree", r.agree}},
            r.agree ? 0 : kInconsistent};
}

Outcome cmd_verify_paper(const Options& o) {
    if (o.n_max < 2) throw UsageError("--n-max must be at least 2");
    const auto rows = claims::verify_paper(o.n_max);
    json table = json::array();
    bool consistent = true;
    for (const auto& r : rows) {
        consistent = consistent && r.oracle_agrees;
        table.push_back({{"claim", r.claim},
                         {"expected", r.expected},
                         {"computed", r.computed},
                         {"oracle", r.oracle},
                         {"status", claims::to_string(r.status)},
                         {"oracle_agrees", r.oracle_agrees},
                         {"note", r.note}});
    }
    return {{{"n_max", o.n_max}, {"rows", table}, {"consistent", consistent}}, consistent ? 0 : kInconsistent};
}

Outcome cmd_selfcheck(const Options& o) {
    const LieAlgebra g = load(o.algebra);
    std::mt19937 rng(o.seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_vector = [&](std::size_t n) {
        Vector v(n);
        for (auto& x : v) x = Rational(coeff(rng));
        return v;
    };
    std::size_t jacobi_failures = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const Vector u = random_vector(g.dim()), v = random_vector(g.dim()), w = random_vector(g.dim());
        Vector s = g.bracket(g.bracket(u, v), w);
        const Vector a = g.bracket(g.bracket(v, w), u), b = g.bracket(g.bracket(w, u), v);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += a[i] + b[i];
        if (!is_zero(s)) ++jacobi_failures;
    }
    json dd = json::object();
    bool ok = jacobi_failures == 0;
    for (const char* c : {"trivial", "adjoint"}) {
        const Representation rho = coefficients(g, c);
        bool zero = true;
        for (std::size_t n = 0; n + 1 <= std::min<std::size_t>(g.dim(), 2); ++n) {
            zero = zero && (differential(rho, n + 1) * differential(rho, n)).is_zero();
        }
        dd[c] = zero;
        ok = ok && zero;
    }
    std::size_t extension_mismatches = 0;
    const Representation triv = trivial_rep(g, 1);
    for (std::size_t t = 0; t < o.trials; ++t) {
        Vector phi = random_vector(cochain_dim(triv, 2));
        if (t % 2 == 0) phi = differential(triv, 1).apply(random_vector(cochain_dim(triv, 1)));
        bool validated = true;
        try {
            central_extension(g, phi, 1);
        } catch (const NotACocycle&) {
            validated = false;
        }
        if (validated != is_cocycle(triv, 2, phi)) ++extension_mismatches;
    }
    ok = ok && extension_mismatches == 0;
    return {{{"seed", o.seed},
             {"trials", o.trials},
             {"jacobi_failures", jacobi_failures},
             {"d_squared_zero", dd},
             {"extension_mismatches", extension_mismatches},
             {"ok", ok}},
            ok ? 0 : kInconsistent};
}

// ---------------------------------------------------------------------------
// Output

void print_table_value(std::ostream& os, const std::string& key, const json& v, int indent) {
    const std::string pad(indent, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, x] : v.items()) print_table_value(os, k, x, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << pad << key << ":\n";
        for (const auto& x : v) {
            os << pad << "  -";
            bool first = true;
            for (const auto& [k, y] : x.items()) {
                os << (first ? " " : "  ") << k << "=" << (y.is_string() ? y.get<std::string>() : y.dump());
                first = false;
            }
            os << "\n";
        }
    } else {
        os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

void print_verify_table(std::ostream& os, const json& result) {
    std::size_t width = 5;
    for (const auto& r : result["rows"]) width = std::max(width, r["claim"].get<std::string>().size());
    auto cell = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 1, ' '); };
    os << cell("claim", width + 2) << cell("expected", 12) << cell("computed", 10) << cell("oracle", 10) << "status\n";
    for (const auto& r : result["rows"]) {
        os << cell(r["claim"], width + 2) << cell(r["expected"], 12) << cell(r["computed"], 10) << cell(r["oracle"], 10)
           << r["status"].get<std::string>();
        if (!r["note"].get<std::string>().empty()) os << "  (" << r["note"].get<std::string>() << ")";
        os << "\n";
    }
    os << "consistent with oracle: " << (result["consistent"].get<bool>() ? "yes" : "NO") << "\n";
}

void emit(const Options& o, const std::string& command, const std::string& algebra, const json& result, double elapsed_ms) {
    json report{{"command", command}, {"algebra", algebra}, {"result", result}};
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << elapsed_ms;
    report["elapsed_ms"] = ms.str();
    if (o.format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << "command: " << command << "\n";
    if (!algebra.empty()) std::cout << "algebra: " << algebra << "\n";
    if (command == "verify-paper") {
        print_verify_table(std::cout, result);
    } else {
        for (const auto& [k, v] : result.items()) print_table_value(std::cout, k, v, 0);
    }
    std::cout << "elapsed_ms: " << ms.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chevalley-Eilenberg cohomology of finite-dimensional Lie algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", o.seed, "Seed for randomized checks");

    const std::string algebra_help = "sl2 | heisenberg:n | schrodinger:n | schrodinger-quotient:n | abelian:k | file:PATH";
    auto coeff_check = CLI::IsMember({"trivial", "adjoint"});

    auto* info = app.add_subcommand("info", "Dimension, validity and center of an algebra");
    info->add_option("algebra", o.algebra, algebra_help)->required();

    auto* coh = app.add_subcommand("cohomology", "H^n(g, M) for trivial or adjoint M");
    coh->add_option("algebra", o.algebra, algebra_help)->required();
    coh->add_option("--coeff", o.coeff, "Coefficient module")->check(coeff_check);
    coh->add_option("--degree", o.degree, "Cohomological degree");
    coh->add_flag("--representatives", o.representatives, "Print representative cocycles");

    auto* der = app.add_subcommand("derivations", "Derivation algebra and inner derivations");
    der->add_option("algebra", o.algebra, algebra_help)->required();
    der->add_flag("--representatives", o.representatives, "Print outer derivation representatives");

    auto* inv = app.add_subcommand("invariant-cohomology", "H^n(r, M)^s for a split g = s + r");
    inv->add_option("--ambient", o.ambient, algebra_help)->required();
    inv->add_option("--levi", o.levi, "sl2 or comma-separated labels");
    inv->add_option("--radical", o.radical, "heisenberg | abelian | rest | comma-separated labels");
    inv->add_option("--coeff", o.coeff, "Coefficient module")->check(coeff_check);
    inv->add_option("--degree", o.degree, "Cohomological degree");
    inv->add_flag("--representatives", o.representatives, "Print representative invariant cocycles");

    auto* ext = app.add_subcommand("extend", "Central extension by a trivial-coefficient 2-cocycle");
    ext->add_option("algebra", o.algebra, algebra_help)->required();
    ext->add_option("--cocycle", o.cocycle_file, "Cochain file [[[i,j], m, \"p/q\"], ...]");
    ext->add_option("--representative", o.representative, "Use the I-th representative of H^2(g, C)");
    ext->add_option("--k", o.k, "Number of central directions");

    auto* hs = app.add_subcommand("hs-check", "Compare H^p(g, M) with its Hochschild-Serre factorization");
    hs->add_option("--ambient", o.ambient, algebra_help)->required();
    hs->add_option("--levi", o.levi, "sl2 or comma-separated labels");
    hs->add_option("--radical", o.radical, "heisenberg | abelian | rest | comma-separated labels");
    hs->add_option("--coeff", o.coeff, "Coefficient module")->check(coeff_check);
    hs->add_option("--degree", o.degree, "Degree p <= 3");

    auto* verify = app.add_subcommand("verify-paper", "Recompute every published Schrodinger-algebra claim");
    verify->add_option("--n-max", o.n_max, "Largest n to check (>= 2)");

    auto* self = app.add_subcommand("selfcheck", "Randomized identities: Jacobi, d^2 = 0, extension iff cocycle");
    self->add_option("algebra", o.algebra, algebra_help)->required();
    self->add_option("--trials", o.trials, "Random trials per identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    const std::string algebra = !o.algebra.empty() ? o.algebra : o.ambient;
    try {
        Outcome out;
        if (sub == info) out = cmd_info(o);
        else if (sub == coh) out = cmd_cohomology(o);
        else if (sub == der) out = cmd_derivations(o);
        else if (sub == inv) out = cmd_invariant_cohomology(o);
        else if (sub == ext) out = cmd_extend(o);
        else if (sub == hs) out = cmd_hs_check(o);
        else if (sub == verify) out = cmd_verify_paper(o);
        else out = cmd_selfcheck(o);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(o, command, algebra, out.result, ms);
        return out.code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const BadAlgebra& e) {
        std::cerr << "error: invalid algebra: " << e.what() << "\n";
        if (!e.detail.empty()) std::cerr << e.detail.dump() << "\n";
        return kBadAlgebra;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
