#include <algorithm>

#include "germ/cone.hpp"
#include "germ/invariants.hpp"

namespace germ {

namespace {

NewtonPolytope polytope_or_origin(const DivisorGerm& b) {
    if (b.empty()) {
        std::vector<Point2> origin{Point2(Rational(0), Rational(0))};
        return NewtonPolytope::from_vertices(std::move(origin));
    }
    return newton_polytope(b);
}

// Angle order on the closed first quadrant.
bool angle_less(const IntVec2& a, const IntVec2& b) {
    return static_cast<__int128>(a.y) * b.x < static_cast<__int128>(b.y) * a.x;
}

} // namespace

LctResult lct_toric(const DivisorGerm& b, const SmoothCurveGerm& c) {
    for (const auto& comp : b.components()) {
        if (Rational(1) < comp.coeff) {
            throw PreconditionError("coefficient above one: " + comp.coeff.str());
        }
    }
    NewtonPolytope gamma_b = polytope_or_origin(b);
    MldResult mld = mld_of_polytope(gamma_b);
    if (mld.value.is_neg_inf()) {
        throw PreconditionError("pair not lc before adding C");
    }
    NewtonPolytope gamma_c = newton_polytope(c.original_poly());

    // Rays of the common refinement of both normal fans.
    std::vector<IntVec2> candidates;
    for (const auto* gamma : {&gamma_b, &gamma_c}) {
        for (const Face& f : faces(*gamma)) {
            candidates.push_back(primitive_normal(f));
        }
    }
    std::sort(candidates.begin(), candidates.end(), angle_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    LctResult out;
    out.membership_sup = ExtRational::pos_inf();
    for (const IntVec2& w : candidates) {
        Rational along_c = support_value(gamma_c, w);
        if (along_c.is_zero()) {
            continue;
        }
        Rational ratio = (Rational(w.x + w.y) - support_value(gamma_b, w)) / along_c;
        if (ExtRational(ratio) < out.membership_sup) {
            out.membership_sup = ratio;
            out.witness = w;
        }
    }

    out.coefficient_cap = Rational(1) - mult_along_curve(b, c);
    if (out.coefficient_cap.sign() < 0) {
        throw PreconditionError("pair not lc before adding C: the curve has coefficient above one in B");
    }
    if (out.membership_sup.is_finite() && !(out.coefficient_cap < out.membership_sup.value())) {
        out.value = out.membership_sup.value();
        out.witness_kind = (out.witness->x == 0 || out.witness->y == 0) ? LctResult::WitnessKind::axis
                                                                         : LctResult::WitnessKind::weight;
    } else {
        out.value = out.coefficient_cap;
        out.witness_kind = LctResult::WitnessKind::cap;
        out.witness.reset();
    }

    DivisorGerm combined = b;
    if (out.value.sign() > 0) {
        combined = b + DivisorGerm({Component{out.value, c.original_poly()}});
    }
    out.exact = combined.empty() || nondegeneracy_check(combined).ok();
    return out;
}

Rational binomial_lct(const Rational& lambda, int m, int n) {
    Rational excess = lambda * Rational(n) - Rational(n, m);
    if (excess.sign() < 0) {
        throw DomainError("binomial lct needs lambda*n - n/m >= 0, got " + excess.str());
    }
    if (Rational(1) < excess) {
        throw DomainError("binomial lct needs lambda*n - n/m <= 1, got " + excess.str());
    }
    return Rational(1) - excess;
}

} // namespace germ
