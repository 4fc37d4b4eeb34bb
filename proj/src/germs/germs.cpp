#include "germ/germs.hpp"

#include <map>

#include "germ/cone.hpp"
#include "series.hpp"

namespace germ {

namespace {

// Order of f along the oriented curve, computed to the standard truncation.
std::optional<std::size_t> order_along(const Poly2& f_oriented, const SmoothCurveGerm& c) {
    int df = std::max(f_oriented.total_degree(), 1);
    int dg = std::max(c.poly.total_degree(), 1);
    auto order = static_cast<std::size_t>(df) * static_cast<std::size_t>(dg) + 1;
    detail::TruncatedSeries xi = detail::solve_for_x(c.poly, order);
    detail::TruncatedSeries t = detail::TruncatedSeries::variable(order);
    return detail::compose(f_oriented, xi, t).valuation();
}

// Largest k with g^k | f, and the cofactor.
int curve_power(const Poly2& f, const Poly2& g, Poly2* cofactor) {
    int k = 0;
    Poly2 rest = f;
    Poly2 q;
    while (divides_exactly(rest, g, &q)) {
        rest = std::move(q);
        ++k;
    }
    *cofactor = std::move(rest);
    return k;
}

} // namespace

DivisorGerm::DivisorGerm(std::vector<Component> components) : components_(std::move(components)) {
    for (const auto& comp : components_) {
        if (comp.coeff.sign() <= 0) {
            throw InputError("divisor coefficient must be positive, got " + comp.coeff.str());
        }
        if (comp.poly.is_zero()) {
            throw InputError("divisor component is the zero polynomial");
        }
        if (!comp.poly.constant_term().is_zero()) {
            throw InputError("component does not pass through the origin: " + render(comp.poly));
        }
    }
}

DivisorGerm operator+(const DivisorGerm& a, const DivisorGerm& b) {
    std::vector<Component> all = a.components_;
    all.insert(all.end(), b.components_.begin(), b.components_.end());
    return DivisorGerm(std::move(all));
}

std::string render(const DivisorGerm& b, const std::array<std::string, 2>& vars) {
    std::string out;
    for (const auto& comp : b.components()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += comp.coeff.str() + "*(" + render<2>(comp.poly, vars) + ")";
    }
    return out;
}

std::vector<Point2> support_points(const Poly2& p) {
    std::vector<Point2> out;
    out.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) {
        out.emplace_back(Rational(e[0]), Rational(e[1]));
    }
    return out;
}

NewtonPolytope newton_polytope(const Poly2& p) {
    if (p.is_zero()) {
        throw InputError("Newton polytope of the zero polynomial");
    }
    auto pts = support_points(p);
    return NewtonPolytope::from_support(pts);
}

NewtonPolytope newton_polytope(const DivisorGerm& b) {
    if (b.empty()) {
        throw InputError("Newton polytope of an empty divisor");
    }
    std::optional<NewtonPolytope> acc;
    for (const auto& comp : b.components()) {
        NewtonPolytope part = scale(newton_polytope(comp.poly), comp.coeff);
        acc = acc ? minkowski_sum(*acc, part) : part;
    }
    return *acc;
}

UPoly face_form(const Poly2& p, const Face& face) {
    const Point2& left = face.left.point();
    IntVec2 n = primitive_normal(face);
    Rational level = Rational(n.x) * left.x + Rational(n.y) * left.y;
    std::int64_t p1 = left.x.to_int64();
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : p.terms()) {
        if (Rational(n.x * e[0] + n.y * e[1]) != level) {
            continue;
        }
        // Points on the face are left + k * (n.y, -n.x).
        auto k = static_cast<std::size_t>((e[0] - p1) / n.y);
        if (coeffs.size() <= k) {
            coeffs.resize(k + 1);
        }
        coeffs[k] += c;
    }
    return UPoly(std::move(coeffs));
}

NondegeneracyReport nondegeneracy_check(const DivisorGerm& b) {
    NondegeneracyReport report;
    std::map<IntVec2, std::vector<std::pair<std::size_t, UPoly>>> by_direction;
    std::map<IntVec2, Face> face_of;
    const auto& comps = b.components();
    for (std::size_t i = 0; i < comps.size(); ++i) {
        NewtonPolytope gamma = newton_polytope(comps[i].poly);
        for (const Face& f : faces(gamma)) {
            if (!f.is_compact()) {
                continue;
            }
            UPoly form = face_form(comps[i].poly, f);
            if (!is_squarefree(form)) {
                report.verdict = NondegeneracyReport::Verdict::degenerate;
                report.face = f;
                report.components = {i};
                report.reason = "face form of component " + std::to_string(i) + " along " + f.left.str() + "-" +
                                f.right.str() + " is not squarefree";
                return report;
            }
            IntVec2 n = primitive_normal(f);
            by_direction[n].emplace_back(i, std::move(form));
            face_of.try_emplace(n, f);
        }
    }
    for (const auto& [n, forms] : by_direction) {
        for (std::size_t a = 0; a < forms.size(); ++a) {
            for (std::size_t c = a + 1; c < forms.size(); ++c) {
                if (gcd(forms[a].second, forms[c].second).degree() > 0) {
                    report.verdict = NondegeneracyReport::Verdict::degenerate;
                    report.face = face_of.at(n);
                    report.components = {forms[a].first, forms[c].first};
                    report.reason = "components " + std::to_string(forms[a].first) + " and " +
                                    std::to_string(forms[c].first) + " share a face factor in direction " +
                                    to_string(n);
                    return report;
                }
            }
        }
    }
    return report;
}

SmoothCurveGerm curve_orient(const Poly2& g) {
    if (g.is_zero() || !g.constant_term().is_zero()) {
        throw InputError("curve must pass through the origin");
    }
    bool has_x = !g.coefficient({1, 0}).is_zero();
    bool has_y = !g.coefficient({0, 1}).is_zero();
    if (!has_x && !has_y) {
        throw InputError("curve " + render(g) + " is not smooth at the origin");
    }
    SmoothCurveGerm c;
    c.swapped = !has_x;
    c.poly = c.swapped ? swap_variables(g) : g;
    for (const auto& [e, coeff] : c.poly.terms()) {
        if (e[0] == 0 && (!c.b_invariant || e[1] < *c.b_invariant)) {
            c.b_invariant = e[1];
        }
    }
    return c;
}

DivisorGerm orient_like(const DivisorGerm& b, const SmoothCurveGerm& c) {
    if (!c.swapped) {
        return b;
    }
    std::vector<Component> out;
    for (const auto& comp : b.components()) {
        out.push_back(Component{comp.coeff, swap_variables(comp.poly)});
    }
    return DivisorGerm(std::move(out));
}

Rational mult_along_curve(const DivisorGerm& b, const SmoothCurveGerm& c) {
    Poly2 g = c.original_poly();
    Rational total;
    for (const auto& comp : b.components()) {
        Poly2 cofactor;
        int k = curve_power(comp.poly, g, &cofactor);
        Poly2 oriented = c.swapped ? swap_variables(cofactor) : cofactor;
        if (oriented.constant_term().is_zero() && !order_along(oriented, c)) {
            throw DomainError("division inconsistency: curve " + render(g) + " still lies in component " +
                              render(comp.poly) + " after exact division");
        }
        total += comp.coeff * Rational(k);
    }
    return total;
}

DivisorGerm remove_curve_component(const DivisorGerm& b, const SmoothCurveGerm& c) {
    Poly2 g = c.original_poly();
    std::vector<Component> out;
    for (const auto& comp : b.components()) {
        Poly2 cofactor;
        curve_power(comp.poly, g, &cofactor);
        if (cofactor.constant_term().is_zero()) {
            out.push_back(Component{comp.coeff, std::move(cofactor)});
        }
    }
    return DivisorGerm(std::move(out));
}

Rational local_intersection(const DivisorGerm& b, const SmoothCurveGerm& c) {
    Poly2 g = c.original_poly();
    Rational total;
    for (const auto& comp : b.components()) {
        if (divides_exactly(comp.poly, g, nullptr)) {
            throw PreconditionError("component " + render(comp.poly) + " is divisible by the curve; remove it first");
        }
        Poly2 oriented = c.swapped ? swap_variables(comp.poly) : comp.poly;
        auto ord = order_along(oriented, c);
        if (!ord) {
            throw UnsupportedError("order not determined below the truncation bound: raise truncation or component "
                                   "contains the curve");
        }
        total += comp.coeff * Rational(static_cast<std::int64_t>(*ord));
    }
    return total;
}

} // namespace germ
