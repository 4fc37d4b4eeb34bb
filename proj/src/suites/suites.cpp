#include "suites/suites.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "germ/cone.hpp"
#include "oracles/oracles.hpp"
#include "suites/generators.hpp"

namespace germ::suites {

namespace {

using gen::Rng;

struct Outcome {
    enum class Status { pass, fail, skip };
    Status status = Status::pass;
    std::string detail;
};

Outcome pass() { return {}; }
Outcome skip() { return {Outcome::Status::skip, ""}; }
Outcome fail(std::string detail) { return {Outcome::Status::fail, std::move(detail)}; }

std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

bool is_face_of(const NewtonPolytope& p, const Point2& a, const Point2& b) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] == a && v[i + 1] == b) {
            return true;
        }
    }
    return false;
}

bool is_vertex_of(const NewtonPolytope& p, const Point2& a) {
    for (const auto& v : p.vertices()) {
        if (v == a) {
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------- surface bound

Outcome surface_bound(Rng& rng) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        gen::CurveFixture cf = gen::curve(rng);
        SmoothCurveGerm c = curve_orient(cf.g);
        DivisorGerm b = gen::divisor(rng, 2, 3, 3);
        if (gen::uniform(rng, 0, 2) == 0) {
            // Put C inside B with a small coefficient.
            Poly2 with_c = gen::uniform(rng, 0, 1) ? cf.g : cf.g * gen::poly(rng, 2, 2);
            if (with_c.constant_term().is_zero()) {
                b = b + DivisorGerm({Component{gen::rational(rng, Rational(1, 12), Rational(1, 2), 12), with_c}});
            }
        }
        try {
            MldResult mld = mld_toric(b);
            if (!mld.value.is_finite() || mld.value.value().sign() <= 0) {
                continue;
            }
            Rational mult = mult_along_curve(b, c);
            if (!(mult < Rational(1))) {
                continue;
            }
            Rational top = min(mld.value.value(), Rational(1) - mult);
            Rational eps = top * Rational(gen::uniform(rng, 1, 8), 8);
            SurfaceReport rep = verify_surface_theorem(b, c, eps, 64);
            if (!rep.applicable) {
                continue;
            }
            if (!rep.pass) {
                return fail("lct " + rep.lct->value.str() + " < bound " + rep.bound.str() + " (n = " +
                            std::to_string(rep.bound_n) + ") for B = " + render(b) + ", C = " + render(cf.g) +
                            ", eps = " + eps.str());
            }
            return pass();
        } catch (const PreconditionError&) {
            continue;
        } catch (const UnsupportedError&) {
            continue;
        }
    }
    return skip();
}

// ---------------------------------------------------------------- mld

Outcome check_mld(const DivisorGerm& b, int bound, int margin) {
    MldResult r = mld_toric(b);
    std::string where = " for B = " + render(b);
    if (r.value.is_neg_inf()) {
        if (!r.certificate || toric_log_discrepancy(b, *r.certificate).sign() >= 0) {
            return fail("-inf without a negative certificate" + where);
        }
        return pass();
    }
    if (!r.witness || toric_log_discrepancy(b, *r.witness) != r.value.value()) {
        return fail("witness does not attain the reported value" + where);
    }
    oracle::BruteMin brute = oracle::mld(b, bound);
    if (brute.value < r.value.value()) {
        return fail("brute force " + brute.value.str() + " at " + to_string(brute.argmin) + " below mld " +
                    r.value.str() + where);
    }
    if (std::max(brute.argmin.x, brute.argmin.y) <= margin && brute.value != r.value.value()) {
        return fail("mld " + r.value.str() + " != brute force " + brute.value.str() + where);
    }
    return pass();
}

Outcome lemma51(Rng& rng) {
    if (gen::uniform(rng, 0, 1) == 0) {
        Rational lambda = gen::rational(rng, Rational(1, 24), Rational(1), 24);
        int m = static_cast<int>(gen::uniform(rng, 1, 10));
        int n = static_cast<int>(gen::uniform(rng, 1, 10));
        DivisorGerm b = binomial_divisor(lambda, m, n);
        if (binomial_mld(lambda, m, n) != mld_toric(b).value) {
            return fail("binomial_mld disagrees with mld_toric for " + render(b));
        }
        return check_mld(b, 60, 30);
    }
    return check_mld(gen::divisor(rng, 2, 4, 3), 40, 20);
}

// ---------------------------------------------------------------- lct

Outcome lemma52(Rng& rng) {
    Rational lambda = gen::rational(rng, Rational(1, 24), Rational(1), 24);
    int m = static_cast<int>(gen::uniform(rng, 1, 10));
    int n = static_cast<int>(gen::uniform(rng, 1, 10));
    DivisorGerm b = binomial_divisor(lambda, m, n);
    SmoothCurveGerm c = curve_orient(parse_poly("y"));
    std::string where = " for B = " + render(b) + ", C = (y)";
    if (mld_toric(b).value.is_neg_inf()) {
        try {
            lct_toric(b, c);
        } catch (const PreconditionError&) {
            return pass();
        }
        return fail("lct accepted a pair that is not lc" + where);
    }
    LctResult r = lct_toric(b, c);
    Rational expected = oracle::binomial_lct(lambda, m, n);
    if (r.value != expected) {
        return fail("lct " + r.value.str() + " != closed form " + expected.str() + where);
    }
    Rational excess = lambda * Rational(n) - Rational(n, m);
    if (excess.sign() >= 0 && !(Rational(1) < excess) && binomial_lct(lambda, m, n) != r.value) {
        return fail("binomial_lct disagrees with lct_toric" + where);
    }
    if (!r.exact) {
        return fail("binomial pair reported inexact" + where);
    }
    return pass();
}

// ---------------------------------------------------------------- polytopes

Outcome minkowski(Rng& rng) {
    NewtonPolytope p = gen::polytope(rng);
    NewtonPolytope q = gen::uniform(rng, 0, 4) == 0 ? NewtonPolytope::from_support(gen::support(rng, 1, 4))
                                                     : gen::polytope(rng);
    NewtonPolytope s = minkowski_sum(p, q);
    std::string where = " for P = " + to_string(p) + ", Q = " + to_string(q);
    std::vector<Point2> sums;
    for (const auto& a : p.vertices()) {
        for (const auto& b : q.vertices()) {
            sums.push_back(a + b);
        }
    }
    if (!(NewtonPolytope::from_support(sums) == s)) {
        return fail("sum " + to_string(s) + " differs from the hull of vertex sums" + where);
    }
    for (int k = 0; k < 6; ++k) {
        Rational w1 = k == 0 ? Rational(0) : gen::rational(rng, Rational(0), Rational(5), 6);
        Rational w2 = k == 1 || (w1.is_zero() && k != 0) ? Rational(1) : gen::rational(rng, Rational(0), Rational(5), 6);
        if (w1.is_zero() && w2.is_zero()) {
            w2 = Rational(1);
        }
        if (support_value(s, w1, w2) != support_value(p, w1, w2) + support_value(q, w1, w2)) {
            return fail("support not additive at (" + w1.str() + ", " + w2.str() + ")" + where);
        }
    }
    auto fs = faces(s);
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        if (!(slope(fs[i + 1]) < slope(fs[i]))) {
            return fail("face slopes not strictly decreasing" + where);
        }
    }
    for (int k = 0; k < 6; ++k) {
        const Point2& base = s.vertices()[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(s.size()) - 1))];
        Rational dx = gen::rational(rng, Rational(-2), Rational(2), 4);
        Rational dy = gen::rational(rng, Rational(-2), Rational(2), 4);
        Point2 pt(max(base.x + dx, Rational(0)), max(base.y + dy, Rational(0)));
        bool got = contains(s, pt);
        if (got != oracle::contains(sums, pt)) {
            return fail("contains " + to_string(pt) + " disagrees with pairwise check" + where);
        }
        bool dual = !(pt.x < support_value(s, Rational(1), Rational(0))) &&
                    !(pt.y < support_value(s, Rational(0), Rational(1)));
        for (const Face& f : fs) {
            IntVec2 n = primitive_normal(f);
            dual = dual && !(Rational(n.x) * pt.x + Rational(n.y) * pt.y < support_value(s, n));
        }
        if (got != dual) {
            return fail("contains " + to_string(pt) + " disagrees with the face inequalities" + where);
        }
    }
    return pass();
}

Outcome lemma34(Rng& rng) {
    NewtonPolytope p = gen::polytope(rng);
    Rational dp = gen::rational(rng, Rational(1, 4), Rational(5), 4);
    Rational dq = gen::rational(rng, Rational(1, 4), Rational(5), 4);
    Rational t = gen::rational(rng, Rational(1, 6), Rational(3), 6);
    NewtonPolytope d = NewtonPolytope::from_vertices({Point2(Rational(0), dq), Point2(dp, Rational(0))});
    NewtonPolytope s = minkowski_sum(p, scale(d, t));
    std::string where = " for P = " + to_string(p) + ", D = " + to_string(d) + ", t = " + t.str();
    Rational ds = dq / dp;
    if (!(s.leftmost() == Point2(p.leftmost().x, p.leftmost().y + t * dq)) ||
        !(s.lowest() == Point2(p.lowest().x + t * dp, p.lowest().y))) {
        return fail("rays not transported" + where);
    }
    for (const Face& f : faces(s)) {
        if (!f.is_compact()) {
            continue;
        }
        const Point2& l = f.left.point();
        const Point2& r = f.right.point();
        Rational sl = slope(f).value();
        if (ds < sl) {
            if (!is_face_of(p, Point2(l.x, l.y - t * dq), Point2(r.x, r.y - t * dq))) {
                return fail("steep face " + to_string(l) + "-" + to_string(r) + " not transported" + where);
            }
        } else if (sl < ds) {
            if (!is_face_of(p, Point2(l.x - t * dp, l.y), Point2(r.x - t * dp, r.y))) {
                return fail("gentle face " + to_string(l) + "-" + to_string(r) + " not transported" + where);
            }
        } else {
            Point2 a(l.x, l.y - t * dq);
            Point2 b(r.x - t * dp, r.y);
            bool ok = a == b ? is_vertex_of(p, a) : is_face_of(p, a, b);
            Rational h = support_value(p, dq, dp);
            if (!ok || h != a.x * dq + a.y * dp || h != b.x * dq + b.y * dp) {
                return fail("parallel face " + to_string(l) + "-" + to_string(r) + " not shortened correctly" + where);
            }
        }
    }
    return pass();
}

Outcome lemma35(Rng& rng) {
    NewtonPolytope p = gen::polytope(rng);
    Point2 v = gen::support(rng, 1, 5).front();
    Rational t = gen::rational(rng, Rational(1, 6), Rational(3), 6);
    NewtonPolytope d = NewtonPolytope::from_vertices({v});
    NewtonPolytope s = minkowski_sum(p, scale(d, t));
    std::string where = " for P = " + to_string(p) + ", vertex " + to_string(v) + ", t = " + t.str();
    if (s.size() != p.size()) {
        return fail("vertex count changed" + where);
    }
    Point2 shift(t * v.x, t * v.y);
    for (const Face& f : faces(s)) {
        if (!f.is_compact()) {
            continue;
        }
        Point2 a(f.left.point().x - shift.x, f.left.point().y - shift.y);
        Point2 b(f.right.point().x - shift.x, f.right.point().y - shift.y);
        if (!is_face_of(p, a, b)) {
            return fail("face not a translate" + where);
        }
    }
    return pass();
}

// ---------------------------------------------------------------- membership

Outcome lemma33(Rng& rng) {
    DivisorGerm b = gen::divisor(rng, 2, 4, 3);
    std::string where = " for B = " + render(b);
    MldResult r = mld_toric(b);
    if (r.value.is_neg_inf()) {
        return pass();
    }
    Point2 one(Rational(1), Rational(1));
    if (!contains(newton_polytope(b), one)) {
        return fail("mld " + r.value.str() + " >= 0 but (1,1) outside Gamma_+" + where);
    }
    std::vector<std::pair<Rational, std::vector<Point2>>> parts;
    for (const auto& comp : b.components()) {
        parts.emplace_back(comp.coeff, support_points(comp.poly));
    }
    if (!oracle::contains(oracle::minimal_points(oracle::minkowski_support(parts)), one)) {
        return fail("(1,1) outside the brute-force Gamma_+" + where);
    }
    gen::CurveFixture cf = gen::curve(rng);
    SmoothCurveGerm c = curve_orient(cf.g);
    LctResult l;
    try {
        l = lct_toric(b, c);
    } catch (const PreconditionError&) {
        return pass();
    }
    where += ", C = " + render(cf.g);
    if (!l.membership_sup.is_finite()) {
        return fail("membership supremum is infinite" + where);
    }
    auto [lo, hi] = oracle::membership_bracket(b, cf.g, 64);
    const Rational& m = l.membership_sup.value();
    if (m < lo || hi < m) {
        return fail("membership " + m.str() + " outside bisection bracket [" + lo.str() + ", " + hi.str() + "]" +
                    where);
    }
    return pass();
}

Outcome lemma36(Rng& rng) {
    gen::CurveFixture cf;
    SmoothCurveGerm c;
    DivisorGerm rest;
    while (rest.empty()) {
        DivisorGerm b = gen::divisor(rng, 2, 4, 3);
        cf = gen::curve(rng);
        c = curve_orient(cf.g);
        rest = remove_curve_component(b, c);
    }
    std::string where = " for B' = " + render(rest) + ", C = " + render(cf.g);
    Rational inter = local_intersection(rest, c);
    Rational brute;
    for (const auto& comp : rest.components()) {
        auto ord = oracle::order_on_graph(comp.poly, cf.phi, cf.graph_over_y);
        if (!ord) {
            return fail("component vanishes on C after removal" + where);
        }
        brute += comp.coeff * Rational(*ord);
    }
    if (inter != brute) {
        return fail("intersection " + inter.str() + " != substitution " + brute.str() + where);
    }
    NewtonPolytope gamma = newton_polytope(orient_like(rest, c));
    Rational bound;
    if (c.b_invariant) {
        bound = support_value(gamma, IntVec2{*c.b_invariant, 1});
    } else {
        // (+inf, 1) with +inf * 0 = 0: only vertices on the y-axis count.
        if (!gamma.leftmost().x.is_zero()) {
            return fail("no vertex on the y-axis although C is not a component" + where);
        }
        bound = gamma.leftmost().y;
    }
    if (inter < bound) {
        return fail("intersection " + inter.str() + " below <b, Gamma> = " + bound.str() + where);
    }
    return pass();
}

Outcome lemma37(Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        DivisorGerm b = gen::divisor(rng, 2, 3, 3);
        gen::CurveFixture cf = gen::curve(rng);
        SmoothCurveGerm c = curve_orient(cf.g);
        if (!nondegeneracy_check(b).ok()) {
            continue;
        }
        LctResult l;
        try {
            l = lct_toric(b, c);
        } catch (const PreconditionError&) {
            continue;
        }
        Rational mult = mult_along_curve(b, c);
        if (!(mult + l.value < Rational(1))) {
            continue;
        }
        DivisorGerm sum = l.value.sign() > 0 ? b + DivisorGerm({Component{l.value, cf.g}}) : b;
        ExtRational m = mld_toric(sum).value;
        if (m != ExtRational(Rational(0))) {
            return fail("mld of B + lct*C is " + m.str() + ", expected 0, for B = " + render(b) +
                        ", C = " + render(cf.g) + ", lct = " + l.value.str());
        }
        return pass();
    }
    return skip();
}

// ---------------------------------------------------------------- Dirichlet

Outcome dirichlet(Rng& rng) {
    Rational q = gen::rational(rng, Rational(-3), Rational(3), 1000);
    std::int64_t den = gen::uniform(rng, 2, 50);
    Rational delta(gen::uniform(rng, 1, den - 1), den);
    DirichletTrace tr = dirichlet_k(q, delta);
    if (auto bad = oracle::trace_violation(tr, q, delta)) {
        return fail(*bad + " for q = " + q.str() + ", delta = " + delta.str());
    }
    return pass();
}

// ---------------------------------------------------------------- Hilbert bases

Outcome hilbert(Rng& rng) {
    IntVec2 a = gen::primitive_vector(rng, 25);
    IntVec2 b = gen::primitive_vector(rng, 25);
    auto basis = hilbert_basis(Cone2(a, b));
    auto brute = oracle::hilbert_basis(a, b, 50);
    std::string where = " for cone(" + to_string(a) + ", " + to_string(b) + ")";
    if (basis != brute) {
        std::string got;
        for (const auto& v : basis) {
            got += to_string(v);
        }
        return fail("basis " + got + " differs from brute-force enumeration" + where);
    }
    // Every cone lattice point in the box is a non-negative combination.
    constexpr int kBox = 50;
    std::vector<std::vector<char>> reach(kBox + 1, std::vector<char>(kBox + 1, 0));
    reach[0][0] = 1;
    for (int x = 0; x <= kBox; ++x) {
        for (int y = 0; y <= kBox; ++y) {
            for (const auto& h : basis) {
                if (!reach[x][y] && h.x <= x && h.y <= y && reach[x - h.x][y - h.y]) {
                    reach[x][y] = 1;
                }
            }
        }
    }
    auto det = [](const IntVec2& u, const IntVec2& v) { return u.x * v.y - u.y * v.x; };
    Cone2 cone(a, b);
    for (std::int64_t x = 0; x <= kBox; ++x) {
        for (std::int64_t y = 0; y <= kBox; ++y) {
            IntVec2 v{x, y};
            bool inside = cone.is_ray() ? det(cone.lower(), v) == 0
                                        : det(cone.lower(), v) >= 0 && det(v, cone.upper()) >= 0;
            if (inside && !reach[x][y]) {
                return fail(to_string(v) + " not generated" + where);
            }
        }
    }
    return pass();
}

// ---------------------------------------------------------------- fibrations

FibrationSpec random_spec(Rng& rng) {
    static const std::vector<Rational> roots{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2),
                                             Rational(-1, 3)};
    while (true) {
        FibrationSpec spec;
        int count = static_cast<int>(gen::uniform(rng, 1, 3));
        Rational used;
        for (int i = 0; i < count; ++i) {
            int d = static_cast<int>(gen::uniform(rng, 1, 2));
            Poly3 f = Poly3::constant(Rational(1));
            for (int k = 0; k < d; ++k) {
                std::size_t pick = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(roots.size())));
                Poly3 lin = pick == roots.size() ? Poly3::monomial({0, 0, 1})
                                                 : Poly3::monomial({0, 1, 0}) - Poly3::monomial({0, 0, 1}, roots[pick]);
                f = f * lin;
            }
            int tk = static_cast<int>(gen::uniform(rng, 1, 4));
            for (int j = 0; j <= d; ++j) {
                if (gen::uniform(rng, 0, 2) == 0) {
                    f.add_term({tk, j, d - j}, Rational(gen::uniform(rng, -2, 2)));
                }
            }
            if (f.is_zero()) {
                f = Poly3::monomial({0, d, 0});
            }
            Rational coeff = i + 1 < count ? gen::rational(rng, Rational(1, 6), Rational(1), 6)
                                           : (Rational(2) - used) / Rational(d);
            used += coeff * Rational(d);
            spec.components.push_back({coeff, std::move(f), d});
        }
        if (gen::uniform(rng, 0, 3) == 0) {
            spec.components.push_back({gen::rational(rng, Rational(1, 6), Rational(1, 2), 6),
                                       Poly3::monomial({1, 0, 0}), 0});
        }
        bool ok = true;
        for (const auto& comp : spec.components) {
            ok = ok && comp.coeff.sign() > 0 && !(Rational(1) < comp.coeff);
        }
        if (ok) {
            return spec;
        }
    }
}

std::string describe(const FibrationSpec& spec) {
    std::string out;
    for (const auto& comp : spec.components) {
        out += (out.empty() ? "" : " + ") + comp.coeff.str() + "*(" + render<3>(comp.poly, {"t", "x", "y"}) + ")";
    }
    return out;
}

Outcome fibration(Rng& rng) {
    if (gen::uniform(rng, 0, 1) == 0) {
        int m = static_cast<int>(gen::uniform(rng, 1, 50));
        FibrationSpec spec = example_family_spec(m);
        std::string where = " for the sharp family at m = " + std::to_string(m);
        DiscriminantResult d = fiber_lct(spec);
        Rational lambda(2 * m - 1, static_cast<std::int64_t>(m) * m);
        if (d.b_d != binomial_lct(lambda, m, m + 1) || d.coefficient != Rational(1) - Rational(1, m * m)) {
            return fail("b_D = " + d.b_d.str() + " disagrees with the closed form" + where);
        }
        if (relative_mld(spec) != Rational(1, m)) {
            return fail("relative mld differs from 1/m" + where);
        }
        if (!verify_main_theorem(spec).pass) {
            return fail("bound fails" + where);
        }
        return pass();
    }
    for (int attempt = 0; attempt < 50; ++attempt) {
        FibrationSpec spec = random_spec(rng);
        std::string where = " for " + describe(spec);
        DiscriminantResult d;
        Rational eps;
        try {
            d = fiber_lct(spec);
            eps = relative_mld(spec);
        } catch (const PreconditionError&) {
            continue;
        } catch (const UnsupportedError&) {
            continue;
        }
        if (d.coefficient.sign() < 0 || Rational(1) < d.coefficient) {
            return fail("coefficient " + d.coefficient.str() + " outside [0, 1]" + where);
        }
        bool exact = true;
        for (const auto& p : d.points) {
            exact = exact && p.lct.exact && (p.germ.divisor.empty() || nondegeneracy_check(p.germ.divisor).ok());
            if (p.point.at_infinity || p.point.a.is_zero()) {
                continue;
            }
            ChartGerm other = germ_at(spec, p.point, Chart::x_chart);
            LctResult l = lct_toric(other.divisor, other.fiber_curve);
            ExtRational m = other.divisor.empty() ? ExtRational(Rational(2)) : mld_toric(other.divisor).value;
            if (l.value != p.lct.value || m != p.mld) {
                return fail("charts disagree at " + p.point.str() + where);
            }
        }
        if (eps.sign() > 0) {
            if (!(d.coefficient < Rational(1))) {
                return fail("klt fixture with coefficient 1" + where);
            }
            if (exact && !verify_main_theorem(spec).pass) {
                return fail("b_D " + d.b_d.str() + " below delta(" + eps.str() + ")" + where);
            }
        }
        return pass();
    }
    return skip();
}

// ---------------------------------------------------------------- registry

struct SuiteDef {
    std::string name;
    std::size_t cases;
    std::function<Outcome(Rng&)> run;
};

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> defs{
        {"surface-bound", 1000, surface_bound}, {"lemma51", 1000, lemma51},   {"lemma52", 1000, lemma52},
        {"minkowski", 1000, minkowski},         {"lemma34", 1000, lemma34},   {"lemma35", 1000, lemma35},
        {"lemma33", 1000, lemma33},             {"lemma36", 1000, lemma36},   {"lemma37", 1000, lemma37},
        {"dirichlet", 1000, dirichlet},         {"hilbert", 200, hilbert},    {"fibration", 200, fibration},
    };
    return defs;
}

const SuiteDef& find(const std::string& name) {
    for (const auto& d : registry()) {
        if (d.name == name) {
            return d;
        }
    }
    throw InputError("unknown suite '" + name + "'");
}

void record(SuiteResult& res, const std::string& name, std::uint64_t cs, const std::function<Outcome(Rng&)>& run) {
    Rng rng(cs);
    Outcome out;
    try {
        out = run(rng);
    } catch (const std::exception& e) {
        out = fail(std::string("unexpected exception: ") + e.what());
    }
    ++res.cases;
    if (out.status == Outcome::Status::skip) {
        ++res.skipped;
    } else if (out.status == Outcome::Status::fail) {
        ++res.failures;
        res.reports.push_back(out.detail + "\n  reproduce: germ verify --suite " + name + " --case-seed " + hex(cs));
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& d : registry()) {
            out.push_back(d.name);
        }
        return out;
    }();
    return names;
}

std::size_t default_cases(const std::string& name) { return find(name).cases; }

std::uint64_t case_seed(std::uint64_t seed, const std::string& name, std::size_t index) {
    std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    for (char ch : name) {
        material.push_back(static_cast<unsigned char>(ch));
    }
    std::seed_seq seq(material.begin(), material.end());
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t cases) {
    const SuiteDef& def = find(name);
    SuiteResult res{name, seed, 0, 0, 0, {}};
    for (std::size_t i = 0; i < cases; ++i) {
        record(res, name, case_seed(seed, name, i), def.run);
    }
    return res;
}

SuiteResult run_case(const std::string& name, std::uint64_t cs) {
    const SuiteDef& def = find(name);
    SuiteResult res{name, cs, 0, 0, 0, {}};
    record(res, name, cs, def.run);
    return res;
}

} // namespace germ::suites
