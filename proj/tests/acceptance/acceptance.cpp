// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Every comparison is exact; the numeric limits below are the only knobs.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "suites/suites.hpp"

using namespace germ;

namespace {

constexpr int kFamilyMax = 50;          // criterion 1
constexpr int kGridMax = 8;             // criteria 2, 3: m, n <= 8
constexpr int kGridDen = 24;            // lambda = j / 24
constexpr int kBruteBound = 200;        // criterion 3: brute-force box
constexpr int kMarginBound = 100;       // criterion 3: margin guard
constexpr int kEpsilonSamples = 500;    // criterion 5
constexpr std::int64_t kEpsilonDen = 100;
constexpr std::int64_t kExhaustiveN = 1000;
constexpr std::int64_t kDirichletDen = 60; // criterion 6
constexpr int kDeltaDenMax = 10;
constexpr int kSweepMax = 25;              // criterion 7
constexpr std::size_t kSurfaceCases = 1000; // criterion 8
constexpr std::size_t kLemmaCases = 1000;   // criterion 9
constexpr std::size_t kHilbertCases = 200;  // criterion 10
constexpr std::uint64_t kEpsilonSeed = 0x5eed0005;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

const SmoothCurveGerm& y_axis() {
    static const SmoothCurveGerm c = curve_orient(parse_poly("y"));
    return c;
}

Outcome extremal_family() {
    Outcome o;
    for (int m = 1; m <= kFamilyMax; ++m) {
        DivisorGerm b = binomial_divisor(Rational(2 * m - 1, static_cast<std::int64_t>(m) * m), m, m + 1);
        ExtRational mld = mld_toric(b).value;
        Rational lct = lct_toric(b, y_axis()).value;
        if (mld != ExtRational(Rational(1, m)) || lct != Rational(1, static_cast<std::int64_t>(m) * m)) {
            o.fail("m = " + std::to_string(m) + ": mld " + mld.str() + ", lct " + lct.str());
        }
    }
    o.detail = o.pass ? "m = 1.." + std::to_string(kFamilyMax) : o.detail;
    return o;
}

Outcome binomial_lct_grid() {
    Outcome o;
    int checked = 0;
    for (int m = 1; m <= kGridMax; ++m) {
        for (int n = 1; n <= kGridMax; ++n) {
            for (int j = 1; j <= kGridDen; ++j) {
                Rational lambda(j, kGridDen);
                Rational gap = lambda * Rational(n) - Rational(n, m);
                DivisorGerm b = binomial_divisor(lambda, m, n);
                if (gap.sign() < 0 || Rational(1) < gap || mld_toric(b).value < ExtRational(Rational(0))) {
                    continue;
                }
                ++checked;
                Rational expected = Rational(1) - lambda * Rational(n) + Rational(n, m);
                Rational got = lct_toric(b, y_axis()).value;
                if (got != expected) {
                    o.fail("lambda = " + lambda.str() + ", m = " + std::to_string(m) + ", n = " + std::to_string(n) +
                           ": got " + got.str() + ", expected " + expected.str());
                }
            }
        }
    }
    o.detail = o.pass ? std::to_string(checked) + " grid points" : o.detail;
    return o;
}

Outcome binomial_mld_brute() {
    Outcome o;
    int equal = 0;
    int bounded = 0;
    for (int m = 1; m <= kGridMax; ++m) {
        for (int n = 1; n <= kGridMax; ++n) {
            for (int j = 1; j <= kGridDen; ++j) {
                ExtRational mld = mld_toric(binomial_divisor(Rational(j, kGridDen), m, n)).value;
                oracle::ScaledMin wide = oracle::binomial_mld24(j, m, n, kBruteBound);
                oracle::ScaledMin inner = oracle::binomial_mld24(j, m, n, kMarginBound);
                ExtRational brute(Rational(wide.value24, kGridDen));
                std::string where = "j = " + std::to_string(j) + ", m = " + std::to_string(m) + ", n = " +
                                    std::to_string(n) + ": mld " + mld.str() + ", brute " + brute.str();
                if (inner.value24 == wide.value24) {
                    ++equal;
                    if (mld != brute) {
                        o.fail(where);
                    }
                } else {
                    ++bounded;
                    if (brute < mld) {
                        o.fail(where);
                    }
                }
            }
        }
    }
    o.detail = o.pass ? std::to_string(equal) + " equal, " + std::to_string(bounded) + " bounded" : o.detail;
    return o;
}

Outcome minkowski_figure() {
    auto pts = [](std::vector<std::pair<int, int>> v) {
        std::vector<Point2> out;
        for (auto [x, y] : v) {
            out.emplace_back(Rational(x), Rational(y));
        }
        return out;
    };
    NewtonPolytope sum = minkowski_sum(NewtonPolytope::from_vertices(pts({{0, 3}, {1, 1}, {4, 0}})),
                                       NewtonPolytope::from_vertices(pts({{0, 2}, {2, 0}})));
    Outcome o;
    if (sum.vertices() != pts({{0, 5}, {1, 3}, {3, 1}, {6, 0}})) {
        o.fail("got " + to_string(sum));
    } else {
        o.detail = to_string(sum);
    }
    return o;
}

Outcome delta_bounds() {
    Outcome o;
    BoundResult one = delta_bound(Rational(1));
    if (one.delta != Rational(1, 2) || one.witness_n != 2) {
        o.fail("delta(1) = " + one.delta.str() + " at n = " + std::to_string(one.witness_n));
    }
    std::mt19937_64 rng(kEpsilonSeed);
    std::uniform_int_distribution<std::int64_t> den(1, kEpsilonDen);
    for (int i = 0; i < kEpsilonSamples; ++i) {
        std::int64_t q = den(rng);
        std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, 3 * q)(rng);
        Rational eps(p, q);
        BoundResult r = delta_bound(eps);
        auto [best, n] = oracle::delta(eps, kExhaustiveN);
        Rational floor = min(eps * eps / Rational(4), Rational(3, 2));
        if (r.delta < floor || !bound_floor_check(eps)) {
            o.fail("eps = " + eps.str() + ": delta " + r.delta.str() + " below " + floor.str());
        }
        if (r.delta != best || r.witness_n != n) {
            o.fail("eps = " + eps.str() + ": delta " + r.delta.str() + " at n = " + std::to_string(r.witness_n) +
                   ", exhaustive " + best.str() + " at n = " + std::to_string(n));
        }
    }
    o.detail = o.pass ? "delta(1) = 1/2 at n = 2; " + std::to_string(kEpsilonSamples) + " random epsilons" : o.detail;
    return o;
}

Outcome dirichlet_grid() {
    Outcome o;
    int checked = 0;
    for (std::int64_t qd = 1; qd <= kDirichletDen; ++qd) {
        for (std::int64_t p = 0; p <= qd; ++p) {
            for (int d = 2; d <= kDeltaDenMax; ++d) {
                Rational q(p, qd);
                Rational delta(1, d);
                ++checked;
                if (auto bad = oracle::trace_violation(dirichlet_k(q, delta), q, delta)) {
                    o.fail("q = " + q.str() + ", delta = " + delta.str() + ": " + *bad);
                }
            }
        }
    }
    o.detail = o.pass ? std::to_string(checked) + " (q, delta) pairs" : o.detail;
    return o;
}

Outcome family_sweep() {
    Outcome o;
    for (int m = 1; m <= kSweepMax; ++m) {
        FibrationSpec spec = example_family_spec(m);
        Rational mm(static_cast<std::int64_t>(m) * m);
        DiscriminantResult disc = fiber_lct(spec);
        Rational eps = relative_mld(spec);
        TheoremReport rep = verify_main_theorem(spec);
        if (disc.coefficient != Rational(1) - mm.reciprocal() || eps != Rational(1, m) || !rep.pass ||
            !rep.multiplicity_ok) {
            o.fail("m = " + std::to_string(m) + ": coefficient " + disc.coefficient.str() + ", mld " + eps.str());
        }
    }
    for (const SweepRow& row : sharpness_sweep(1, kSweepMax)) {
        if (row.ratio != Rational(1)) {
            o.fail("m = " + std::to_string(row.m) + ": ratio " + row.ratio.str());
        }
    }
    o.detail = o.pass ? "m = 1.." + std::to_string(kSweepMax) + ", ratio 1 in every row" : o.detail;
    return o;
}

Outcome suite(const std::string& name, std::size_t cases) {
    suites::SuiteResult r = suites::run_suite(name, suites::kDefaultSeed, cases);
    Outcome o;
    std::ostringstream ss;
    ss << name << ": " << r.cases << " cases, " << r.skipped << " skipped, " << r.failures << " failures";
    if (!r.ok() || r.skipped != 0 || r.cases != cases) {
        o.fail(ss.str() + (r.reports.empty() ? "" : "; first: " + r.reports.front()));
    } else {
        o.detail = ss.str();
    }
    return o;
}

Outcome suites_all(const std::vector<std::string>& names, std::size_t cases) {
    Outcome o;
    std::string summary;
    for (const auto& n : names) {
        Outcome one = suite(n, cases);
        if (!one.pass) {
            o.fail(one.detail);
        }
        summary += (summary.empty() ? "" : "; ") + one.detail;
    }
    if (o.pass) {
        o.detail = summary;
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "extremal binomial family: mld 1/m, lct 1/m^2", extremal_family},
        {2, "binomial lct closed form on the grid", binomial_lct_grid},
        {3, "binomial mld against brute force", binomial_mld_brute},
        {4, "Minkowski sum of the reference polygons", minkowski_figure},
        {5, "delta(epsilon): value, floor and exhaustive max", delta_bounds},
        {6, "Dirichlet approximation traces", dirichlet_grid},
        {7, "fibration family end to end, sharp ratio", family_sweep},
        {8, "surface lct bound property suite", [] { return suite("surface-bound", kSurfaceCases); }},
        {9, "Newton polygon property suites",
         [] { return suites_all({"lemma33", "lemma34", "lemma35", "lemma36", "lemma37"}, kLemmaCases); }},
        {10, "Hilbert bases against brute force", [] { return suite("hilbert", kHilbertCases); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d  %s  [%s] (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
