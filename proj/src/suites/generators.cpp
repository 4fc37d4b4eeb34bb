#include "suites/generators.hpp"

#include "germ/cone.hpp"

namespace germ::gen {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den) {
    std::int64_t q = uniform(rng, 1, max_den);
    mpz_class a = (lo * Rational(q)).ceil();
    mpz_class b = (hi * Rational(q)).floor();
    if (b < a) {
        return lo;
    }
    mpz_class span = b - a;
    std::int64_t off = uniform(rng, 0, Rational(span).to_int64());
    return Rational(mpz_class(a + off), mpz_class(q));
}

Poly2 poly(Rng& rng, int max_exp, int max_terms) {
    Poly2 p;
    while (p.is_zero()) {
        int terms = static_cast<int>(uniform(rng, 1, max_terms));
        for (int k = 0; k < terms; ++k) {
            int i = static_cast<int>(uniform(rng, 0, max_exp));
            int j = static_cast<int>(uniform(rng, 0, max_exp));
            if (i == 0 && j == 0) {
                continue;
            }
            std::int64_t c = uniform(rng, -5, 4);
            p.add_term({i, j}, Rational(c >= 0 ? c + 1 : c));
        }
    }
    return p;
}

std::vector<Point2> support(Rng& rng, int max_points, int max_coord) {
    std::vector<Point2> pts;
    int n = static_cast<int>(uniform(rng, 1, max_points));
    for (int k = 0; k < n; ++k) {
        pts.emplace_back(rational(rng, Rational(0), Rational(max_coord), 4),
                         rational(rng, Rational(0), Rational(max_coord), 4));
    }
    return pts;
}

NewtonPolytope polytope(Rng& rng) {
    auto pts = support(rng, 6, 8);
    return NewtonPolytope::from_support(pts);
}

DivisorGerm divisor(Rng& rng, int max_comp, int max_exp, int max_terms) {
    std::vector<Component> comps;
    int n = static_cast<int>(uniform(rng, 1, max_comp));
    for (int k = 0; k < n; ++k) {
        comps.push_back(Component{rational(rng, Rational(1, 12), Rational(1), 12), poly(rng, max_exp, max_terms)});
    }
    return DivisorGerm(std::move(comps));
}

CurveFixture curve(Rng& rng) {
    CurveFixture c;
    c.graph_over_y = uniform(rng, 0, 1) == 0;
    int deg = static_cast<int>(uniform(rng, 0, 3));
    c.phi.assign(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (int k = 1; k <= deg; ++k) {
        if (uniform(rng, 0, 2) > 0) {
            c.phi[static_cast<std::size_t>(k)] = Rational(uniform(rng, -3, 3));
        }
    }
    // g = x - phi(y) or y - phi(x)
    int lead = c.graph_over_y ? 0 : 1;
    Poly2::Exponent e{};
    e[static_cast<std::size_t>(lead)] = 1;
    c.g = Poly2::monomial(e);
    for (std::size_t k = 1; k < c.phi.size(); ++k) {
        Poly2::Exponent f{};
        f[static_cast<std::size_t>(1 - lead)] = static_cast<int>(k);
        c.g.add_term(f, -c.phi[k]);
    }
    return c;
}

IntVec2 primitive_vector(Rng& rng, std::int64_t max_coord) {
    while (true) {
        std::int64_t x = uniform(rng, 0, max_coord);
        std::int64_t y = uniform(rng, 0, max_coord);
        if ((x || y) && std::gcd(x, y) == 1) {
            return {x, y};
        }
    }
}

std::string describe(const std::vector<Point2>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += (i ? "," : "") + to_string(pts[i]);
    }
    return out + "}";
}

} // namespace germ::gen
