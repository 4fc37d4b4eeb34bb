#include "germ/cone.hpp"
#include "germ/invariants.hpp"

namespace germ {

namespace {

Rational objective(const IntVec2& w, const Point2& vertex) {
    return Rational(w.x + w.y) - Rational(w.x) * vertex.x - Rational(w.y) * vertex.y;
}

bool is_axis(const IntVec2& w) { return w.x == 0 || w.y == 0; }

// Positive weight with a negative objective on a cone whose axis ray has
// objective axis_value < 0; inner is a positive lattice point of the cone.
Weight push_off_axis(const IntVec2& axis, const Rational& axis_value, const IntVec2& inner, const Rational& inner_value) {
    if (inner_value.sign() < 0) {
        return Weight(inner.x, inner.y);
    }
    std::int64_t n = (inner_value / (-axis_value)).floor().get_si() + 1;
    IntVec2 w = primitive(n * axis.x + inner.x, n * axis.y + inner.y);
    return Weight(w.x, w.y);
}

} // namespace

Rational toric_log_discrepancy(const DivisorGerm& b, const Weight& w) {
    return Rational(w.w1() + w.w2()) - support_value(newton_polytope(b), w.vec());
}

MldResult mld_of_polytope(const NewtonPolytope& gamma) {
    const auto& v = gamma.vertices();
    // Rays of the normal fan inside the quadrant, by increasing angle.
    std::vector<IntVec2> rays{{1, 0}};
    for (const Face& f : faces(gamma)) {
        if (f.is_compact()) {
            rays.push_back(primitive_normal(f));
        }
    }
    rays.push_back({0, 1});

    MldResult result;
    result.axis_x = objective({1, 0}, v.front());
    result.axis_y = objective({0, 1}, v.back());

    std::optional<Rational> best;
    auto consider = [&](const IntVec2& w, const Rational& value) {
        if (!best || value < *best) {
            best = value;
            result.witness = Weight(w.x, w.y);
        }
    };

    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
        const Point2& vertex = v[i];
        auto basis = hilbert_basis(Cone2(rays[i], rays[i + 1]));
        if (basis.size() == 2 && is_axis(basis[0]) && is_axis(basis[1])) {
            // Whole quadrant: positive points are a*e1 + b*e2 with a, b >= 1.
            Rational ex = objective(basis[0], vertex);
            Rational ey = objective(basis[1], vertex);
            if (ex.sign() < 0 || ey.sign() < 0) {
                const IntVec2& neg = ex.sign() < 0 ? basis[0] : basis[1];
                const IntVec2& other = ex.sign() < 0 ? basis[1] : basis[0];
                Rational nv = ex.sign() < 0 ? ex : ey;
                Rational ov = ex.sign() < 0 ? ey : ex;
                // inner = neg + other is positive with objective nv + ov
                result.value = ExtRational::neg_inf();
                result.certificate = push_off_axis(neg, nv, {neg.x + other.x, neg.y + other.y}, nv + ov);
                result.witness.reset();
                return result;
            }
            consider({1, 1}, ex + ey);
            continue;
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const IntVec2& h = basis[j];
            Rational value = objective(h, vertex);
            if (is_axis(h)) {
                if (value.sign() < 0) {
                    // The neighbouring basis element is positive in a non-quadrant cone.
                    const IntVec2& inner = j == 0 ? basis[1] : basis[j - 1];
                    result.value = ExtRational::neg_inf();
                    result.certificate = push_off_axis(h, value, inner, objective(inner, vertex));
                    result.witness.reset();
                    return result;
                }
                continue;
            }
            if (value.sign() < 0) {
                result.value = ExtRational::neg_inf();
                result.certificate = Weight(h.x, h.y);
                result.witness.reset();
                return result;
            }
            consider(h, value);
        }
    }
    result.value = ExtRational(*best);
    result.attained = true;
    return result;
}

MldResult mld_toric(const DivisorGerm& b) { return mld_of_polytope(newton_polytope(b)); }

DivisorGerm binomial_divisor(const Rational& lambda, int m, int n) {
    if (m <= 0 || n <= 0) {
        throw InputError("binomial exponents must be positive");
    }
    Poly2 p = Poly2::monomial({m, 0}) + Poly2::monomial({0, n});
    return DivisorGerm({Component{lambda, std::move(p)}});
}

ExtRational binomial_mld(const Rational& lambda, int m, int n) {
    if (lambda.sign() <= 0 || Rational(1) < lambda) {
        throw InputError("lambda must lie in (0, 1], got " + lambda.str());
    }
    return mld_toric(binomial_divisor(lambda, m, n)).value;
}

} // namespace germ
