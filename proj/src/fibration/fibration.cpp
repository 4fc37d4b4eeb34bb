#include "germ/fibration.hpp"

#include <algorithm>
#include <map>

namespace germ {

namespace {

// Binary form F(0; X, 1) as a polynomial in X, after dividing out t^k.
UPoly fiber_form(const FibrationComponent& comp) {
    int k = t_content(comp.poly);
    std::vector<Rational> coeffs(static_cast<std::size_t>(comp.fiber_degree) + 1);
    for (const auto& [e, c] : comp.poly.terms()) {
        if (e[0] == k) {
            coeffs[static_cast<std::size_t>(e[1])] += c;
        }
    }
    return UPoly(std::move(coeffs));
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    mpz_class a = abs(n);
    if (a > mpz_class("1000000000000")) {
        throw UnsupportedError("coefficient " + a.get_str() + " too large for rational root search");
    }
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) {
                large.push_back(a / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Rational roots with multiplicity; the cofactor without rational roots is returned in rest.
std::map<Rational, int> rational_roots(UPoly f, UPoly* rest) {
    std::map<Rational, int> roots;
    auto divide_out = [&](const Rational& r) {
        UPoly lin({-r, Rational(1)});
        UPoly q;
        UPoly rem;
        while (f.degree() > 0 && f(r).is_zero()) {
            divmod(f, lin, &q, &rem);
            f = q;
            ++roots[r];
        }
    };
    divide_out(Rational(0));
    if (f.degree() > 0) {
        mpz_class lcm_den = 1;
        for (const auto& c : f.coeffs()) {
            lcm_den = lcm(lcm_den, c.denominator());
        }
        mpz_class a0 = (f.coeffs().front() * Rational(lcm_den)).numerator();
        mpz_class an = (f.leading() * Rational(lcm_den)).numerator();
        for (const auto& p : positive_divisors(a0)) {
            for (const auto& q : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    if (f.degree() == 0) {
                        break;
                    }
                    divide_out(Rational(mpz_class(p * s), q));
                }
            }
        }
    }
    *rest = f;
    return roots;
}

Poly2 substitute(const Poly3& f, Chart chart, const Rational& shift) {
    // y-chart: (t, x, y) -> (t, u + shift, 1); x-chart: (t, x, y) -> (t, 1, v + shift).
    Poly2 local = Poly2::monomial({0, 1}) + Poly2::constant(shift);
    std::vector<Poly2> powers{Poly2::constant(Rational(1))};
    Poly2 out;
    for (const auto& [e, c] : f.terms()) {
        auto j = static_cast<std::size_t>(chart == Chart::y_chart ? e[1] : e[2]);
        while (powers.size() <= j) {
            powers.push_back(powers.back() * local);
        }
        out += powers[j] * Poly2::monomial({e[0], 0}, c);
    }
    return out;
}

Rational vertical_part(const FibrationSpec& spec) {
    Rational total;
    for (const auto& comp : spec.components) {
        total += comp.coeff * Rational(t_content(comp.poly));
    }
    return total;
}

SmoothCurveGerm fiber_curve() { return curve_orient(Poly2::monomial({1, 0})); }

} // namespace

std::string FiberPoint::str() const { return at_infinity ? "[1:0]" : "[" + a.str() + ":1]"; }

int t_content(const Poly3& f) {
    if (f.is_zero()) {
        throw InputError("zero component");
    }
    int k = -1;
    for (const auto& [e, c] : f.terms()) {
        k = k < 0 ? e[0] : std::min(k, e[0]);
    }
    return k;
}

void validate_spec(const FibrationSpec& spec) {
    Rational sum;
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& comp = spec.components[i];
        if (comp.coeff.sign() <= 0) {
            throw InputError("component " + std::to_string(i) + " has non-positive coefficient " + comp.coeff.str());
        }
        if (comp.poly.is_zero()) {
            throw InputError("component " + std::to_string(i) + " is zero");
        }
        for (const auto& [e, c] : comp.poly.terms()) {
            if (e[1] + e[2] != comp.fiber_degree) {
                throw InputError("component " + std::to_string(i) + " is not homogeneous of degree " +
                                 std::to_string(comp.fiber_degree) + " in the fiber variables");
            }
        }
        sum += comp.coeff * Rational(comp.fiber_degree);
    }
    if (sum != Rational(2)) {
        throw InputError("not lc-trivial on fibers: sum of coeff * fiber_degree is " + sum.str() + ", expected 2");
    }
}

std::vector<FiberPoint> special_points(const FibrationSpec& spec) {
    std::vector<Rational> affine;
    bool infinity = false;
    for (const auto& comp : spec.components) {
        UPoly form = fiber_form(comp);
        if (form.degree() < comp.fiber_degree) {
            infinity = true;
        }
        UPoly rest;
        for (const auto& [r, mult] : rational_roots(form, &rest)) {
            affine.push_back(r);
        }
        if (rest.degree() > 0) {
            throw UnsupportedError("irrational special point; supply chart manually");
        }
    }
    std::sort(affine.begin(), affine.end());
    affine.erase(std::unique(affine.begin(), affine.end()), affine.end());
    std::vector<FiberPoint> out;
    for (auto& a : affine) {
        out.push_back(FiberPoint::affine(std::move(a)));
    }
    if (infinity) {
        out.push_back(FiberPoint::infinity());
    }
    return out;
}

ChartGerm germ_at(const FibrationSpec& spec, const FiberPoint& point) {
    return germ_at(spec, point, point.at_infinity ? Chart::x_chart : Chart::y_chart);
}

ChartGerm germ_at(const FibrationSpec& spec, const FiberPoint& point, Chart chart) {
    Rational shift;
    if (chart == Chart::y_chart) {
        if (point.at_infinity) {
            throw InputError("point [1:0] is not in the y-chart");
        }
        shift = point.a;
    } else {
        if (!point.at_infinity && point.a.is_zero()) {
            throw InputError("point [0:1] is not in the x-chart");
        }
        shift = point.at_infinity ? Rational(0) : point.a.reciprocal();
    }
    std::vector<Component> comps;
    for (const auto& comp : spec.components) {
        Poly2 local = substitute(comp.poly, chart, shift);
        if (local.constant_term().is_zero()) {
            comps.push_back(Component{comp.coeff, std::move(local)});
        }
    }
    return ChartGerm{chart, point, DivisorGerm(std::move(comps)), fiber_curve()};
}

DiscriminantResult fiber_lct(const FibrationSpec& spec) {
    validate_spec(spec);
    DiscriminantResult out;
    out.vertical = vertical_part(spec);
    out.generic_cap = Rational(1) - out.vertical;
    out.b_d = out.generic_cap;
    for (const FiberPoint& p : special_points(spec)) {
        ChartGerm g = germ_at(spec, p);
        PointContribution pc{p, g, lct_toric(g.divisor, g.fiber_curve),
                             g.divisor.empty() ? ExtRational(Rational(2)) : mld_toric(g.divisor).value};
        out.b_d = min(out.b_d, pc.lct.value);
        out.points.push_back(std::move(pc));
    }
    out.coefficient = Rational(1) - out.b_d;
    return out;
}

Rational relative_mld(const FibrationSpec& spec) {
    validate_spec(spec);
    Rational vertical = vertical_part(spec);
    // The fiber itself, then the closed points; a generic point sees only vertical * (t).
    Rational best = min(Rational(1) - vertical, Rational(2) - vertical);
    for (const FiberPoint& p : special_points(spec)) {
        ChartGerm g = germ_at(spec, p);
        if (g.divisor.empty()) {
            continue;
        }
        ExtRational v = mld_toric(g.divisor).value;
        if (v.is_neg_inf()) {
            throw PreconditionError("pair not lc at fiber point " + p.str());
        }
        best = min(best, v.value());
    }
    return best;
}

TheoremReport verify_main_theorem(const FibrationSpec& spec) {
    TheoremReport rep;
    rep.epsilon = relative_mld(spec);
    if (rep.epsilon.sign() <= 0) {
        throw PreconditionError("relative mld " + rep.epsilon.str() + " is not positive");
    }
    BoundResult bound = delta_bound(rep.epsilon);
    rep.delta_required = bound.delta;
    rep.witness_n = bound.witness_n;
    DiscriminantResult disc = fiber_lct(spec);
    rep.b_d = disc.b_d;
    rep.coefficient = disc.coefficient;
    rep.pass = !(rep.b_d < rep.delta_required);
    rep.multiplicity_bound = rep.delta_required.reciprocal();
    rep.multiplicity_ok = !(rep.multiplicity_bound < Rational(rep.fiber_multiplicity));
    return rep;
}

FibrationSpec example_family_spec(int m) {
    if (m < 1) {
        throw InputError("family parameter m must be positive");
    }
    Poly3 main = Poly3::monomial({0, m, 0}) + Poly3::monomial({m + 1, 0, m});
    FibrationSpec spec;
    spec.components.push_back({Rational(2 * m - 1, static_cast<std::int64_t>(m) * m), std::move(main), m});
    spec.components.push_back({Rational(1, m), Poly3::monomial({0, 0, 1}), 1});
    return spec;
}

std::vector<SweepRow> sharpness_sweep(int m_min, int m_max) {
    if (m_min < 1 || m_max < m_min) {
        throw InputError("sweep needs 1 <= m_min <= m_max");
    }
    std::vector<SweepRow> rows;
    for (int m = m_min; m <= m_max; ++m) {
        FibrationSpec spec = example_family_spec(m);
        SweepRow row;
        row.m = m;
        row.epsilon = relative_mld(spec);
        DiscriminantResult disc = fiber_lct(spec);
        row.b_d = disc.b_d;
        row.coefficient = disc.coefficient;
        row.delta = delta_bound(row.epsilon).delta;
        row.ratio = row.b_d / (row.epsilon * row.epsilon);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace germ
