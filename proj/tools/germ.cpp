// germ: command-line front end for the plane-curve-germ invariants.
//
// Exit codes: 0 success, 1 input error, 2 precondition or verification
// failure, 3 unsupported instance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "germ/json_io.hpp"
#include "suites/suites.hpp"

namespace {

using germ::io::json;
using germ::io::to_json;

constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;
constexpr int kUnsupported = 3;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw germ::InputError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(text, &used, 0);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::exception&) {
        throw germ::InputError("invalid seed '" + text + "'");
    }
}

struct Options {
    std::string divisor;
    std::string curve;
    std::string epsilon;
    std::string q;
    std::string delta;
    std::string config;
    std::string csv;
    std::string suite;
    std::string seed;
    std::string case_seed;
    std::size_t cases = 0;
    std::int64_t n_max = 64;
    int m_min = 1;
    int m_max = 10;
};

int cmd_mld(const Options& o) {
    germ::DivisorGerm b = germ::parse_divisor(o.divisor);
    json out{{"divisor", germ::render(b)}};
    out.update(to_json(germ::mld_toric(b)));
    emit(out);
    return 0;
}

int cmd_lct(const Options& o) {
    germ::DivisorGerm b = germ::parse_divisor(o.divisor);
    germ::SmoothCurveGerm c = germ::curve_orient(germ::parse_poly(o.curve));
    json out{{"divisor", germ::render(b)}, {"curve", germ::render(c.original_poly())}};
    out.update(to_json(germ::lct_toric(b, c)));
    emit(out);
    return 0;
}

int cmd_newton(const Options& o) {
    germ::DivisorGerm b = germ::parse_divisor(o.divisor);
    germ::NewtonPolytope p = germ::newton_polytope(b);
    json faces = json::array();
    for (const auto& f : germ::faces(p)) {
        faces.push_back(json{{"left", f.left.str()}, {"right", f.right.str()}, {"slope", germ::slope(f).str()},
                             {"normal", to_json(germ::primitive_normal(f))}});
    }
    json out{{"divisor", germ::render(b)}, {"polytope", to_json(p)}, {"faces", faces}};
    out["nondegeneracy"] = to_json(germ::nondegeneracy_check(b));
    emit(out);
    return 0;
}

int cmd_surface(const Options& o) {
    germ::DivisorGerm b = germ::parse_divisor(o.divisor);
    germ::SmoothCurveGerm c = germ::curve_orient(germ::parse_poly(o.curve));
    germ::Rational eps = germ::Rational::parse(o.epsilon);
    germ::SurfaceReport rep = germ::verify_surface_theorem(b, c, eps, o.n_max);
    json out{{"divisor", germ::render(b)}, {"curve", germ::render(c.original_poly())}, {"epsilon", to_json(eps)},
             {"n_max", o.n_max}};
    out.update(to_json(rep));
    emit(out);
    return rep.applicable && !rep.pass ? kVerifyFailed : 0;
}

int cmd_bound(const Options& o) {
    germ::Rational eps = germ::Rational::parse(o.epsilon);
    json out = to_json(germ::delta_bound(eps));
    out["floor_check"] = germ::bound_floor_check(eps);
    emit(out);
    return 0;
}

int cmd_dirichlet(const Options& o) {
    emit(to_json(germ::dirichlet_k(germ::Rational::parse(o.q), germ::Rational::parse(o.delta))));
    return 0;
}

int cmd_family(const Options& o) {
    auto rows = germ::sharpness_sweep(o.m_min, o.m_max);
    if (!o.csv.empty()) {
        std::ofstream csv(o.csv);
        if (!csv) {
            throw germ::InputError("cannot write " + o.csv);
        }
        csv << "m,epsilon,b_D,delta,ratio,coefficient\n";
        for (const auto& r : rows) {
            csv << r.m << ',' << r.epsilon << ',' << r.b_d << ',' << r.delta << ',' << r.ratio << ','
                << r.coefficient << '\n';
        }
    }
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back(to_json(r));
    }
    emit(json{{"rows", out}});
    return 0;
}

int cmd_fiber(const Options& o) {
    germ::FibrationSpec spec = germ::parse_fibration_config(read_file(o.config));
    json points = json::array();
    for (const auto& p : germ::special_points(spec)) {
        points.push_back(p.str());
    }
    germ::TheoremReport rep = germ::verify_main_theorem(spec);
    json out{{"special_points", points},
             {"discriminant", to_json(germ::fiber_lct(spec))},
             {"relative_mld", to_json(rep.epsilon)},
             {"theorem", to_json(rep)}};
    emit(out);
    return rep.pass && rep.multiplicity_ok ? 0 : kVerifyFailed;
}

int cmd_verify(const Options& o) {
    namespace s = germ::suites;
    std::vector<std::string> names;
    if (o.suite == "all") {
        names = s::suite_names();
    } else {
        s::default_cases(o.suite); // validates the name
        names = {o.suite};
    }
    std::uint64_t seed = s::kDefaultSeed;
    if (!o.seed.empty()) {
        seed = parse_seed(o.seed);
    } else if (const char* env = std::getenv("GERM_SEED")) {
        seed = parse_seed(env);
    }
    json results = json::array();
    bool ok = true;
    for (const auto& name : names) {
        s::SuiteResult r = o.case_seed.empty()
                               ? s::run_suite(name, seed, o.cases ? o.cases : s::default_cases(name))
                               : s::run_case(name, parse_seed(o.case_seed));
        for (const auto& rep : r.reports) {
            std::cerr << "FAIL [" << name << "] " << rep << '\n';
        }
        ok = ok && r.ok();
        results.push_back(json{{"suite", r.name},
                               {"seed", r.seed},
                               {"cases", r.cases},
                               {"skipped", r.skipped},
                               {"failures", r.failures},
                               {"reports", r.reports}});
    }
    emit(json{{"seed", seed}, {"suites", results}, {"ok", ok}});
    return ok ? 0 : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Newton-polygon invariants of plane curve germs"};
    app.require_subcommand(1);
    Options o;

    auto* mld = app.add_subcommand("mld", "minimal log discrepancy over toric valuations");
    mld->add_option("--divisor", o.divisor, "e.g. \"3/4*(x^2+y^3)\"")->required();

    auto* lct = app.add_subcommand("lct", "toric log canonical threshold of a smooth curve");
    lct->add_option("--divisor", o.divisor)->required();
    lct->add_option("--curve", o.curve, "smooth curve through the origin, e.g. \"y\"")->required();

    auto* newton = app.add_subcommand("newton", "Newton polytope, faces and nondegeneracy of a divisor");
    newton->add_option("--divisor", o.divisor)->required();

    auto* surface = app.add_subcommand("surface", "check the surface lct bound on one instance");
    surface->add_option("--divisor", o.divisor)->required();
    surface->add_option("--curve", o.curve)->required();
    surface->add_option("--epsilon", o.epsilon)->required();
    surface->add_option("--n-max", o.n_max)->check(CLI::Range(2, 100000));

    auto* bound = app.add_subcommand("bound", "delta(epsilon) = sup (epsilon - 1/n)/(n - 1)");
    bound->add_option("--epsilon", o.epsilon)->required();

    auto* dir = app.add_subcommand("dirichlet", "k <= ceil(1/delta) - 1 with k q within delta of an integer");
    dir->add_option("--q", o.q)->required();
    dir->add_option("--delta", o.delta)->required();

    auto* family = app.add_subcommand("family", "sharpness sweep over the extremal family");
    family->add_option("--m-min", o.m_min)->required();
    family->add_option("--m-max", o.m_max)->required();
    family->add_option("--csv", o.csv, "also write the table as CSV");

    auto* fiber = app.add_subcommand("fiber", "discriminant coefficient and bound check for a fibration config");
    fiber->add_option("--config", o.config, "JSON config file")->required();

    auto* verify = app.add_subcommand("verify", "run a seeded property suite");
    verify->add_option("--suite", o.suite, "suite name or 'all'")->required();
    verify->add_option("--seed", o.seed, "run seed (default: GERM_SEED or built-in)");
    verify->add_option("--cases", o.cases, "number of cases (default per suite)");
    verify->add_option("--case-seed", o.case_seed, "replay a single case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*mld) return cmd_mld(o);
        if (*lct) return cmd_lct(o);
        if (*newton) return cmd_newton(o);
        if (*surface) return cmd_surface(o);
        if (*bound) return cmd_bound(o);
        if (*dir) return cmd_dirichlet(o);
        if (*family) return cmd_family(o);
        if (*fiber) return cmd_fiber(o);
        if (*verify) return cmd_verify(o);
    } catch (const germ::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const germ::DomainError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const germ::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const germ::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    }
    return kInputError;
}
