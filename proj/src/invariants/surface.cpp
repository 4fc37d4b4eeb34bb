#include "germ/invariants.hpp"

namespace germ {

SurfaceReport verify_surface_theorem(const DivisorGerm& b, const SmoothCurveGerm& c, const Rational& epsilon,
                                     std::int64_t n_max) {
    if (epsilon.sign() <= 0) {
        throw InputError("epsilon must be positive, got " + epsilon.str());
    }
    if (n_max < 2) {
        throw InputError("n_max must be at least 2");
    }
    SurfaceReport rep;
    for (const auto& comp : b.components()) {
        if (Rational(1) < comp.coeff) {
            rep.reason = "coefficient above one";
            return rep;
        }
    }
    rep.mld = b.empty() ? ExtRational(Rational(2)) : mld_toric(b).value;
    if (rep.mld < ExtRational(epsilon)) {
        rep.reason = "mld " + rep.mld.str() + " below epsilon";
        return rep;
    }
    rep.mult = mult_along_curve(b, c);
    if (Rational(1) - epsilon < rep.mult) {
        rep.reason = "mult along C " + rep.mult.str() + " above 1 - epsilon";
        return rep;
    }
    DivisorGerm rest = remove_curve_component(b, c);
    rep.intersection = rest.empty() ? Rational(0) : local_intersection(rest, c);
    if (Rational(2) < *rep.intersection) {
        rep.reason = "intersection of B' with C " + rep.intersection->str() + " above 2";
        return rep;
    }
    rep.nondegenerate = b.empty() || nondegeneracy_check(b).ok();
    if (!rep.nondegenerate) {
        rep.reason = "degenerate in the given coordinates";
        return rep;
    }
    rep.applicable = true;
    rep.bound = bound_term(epsilon, 2);
    for (std::int64_t n = 3; n <= n_max; ++n) {
        Rational h = bound_term(epsilon, n);
        if (rep.bound < h) {
            rep.bound = h;
            rep.bound_n = n;
        }
    }
    rep.lct = lct_toric(b, c);
    rep.pass = !(rep.lct->value < rep.bound);
    return rep;
}

} // namespace germ
