#pragma once

#include <random>

#include "germ/fibration.hpp"

namespace germ::gen {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);
/// p/q with 1 <= q <= max_den and lo <= p/q <= hi.
Rational rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t max_den);

/// Nonzero polynomial without constant term; exponents in [0, max_exp], integer coefficients in [-5, 5].
Poly2 poly(Rng& rng, int max_exp, int max_terms);
/// Support points of a random polytope, coordinates p/q with q <= 4.
std::vector<Point2> support(Rng& rng, int max_points, int max_coord);
NewtonPolytope polytope(Rng& rng);

/// 1..max_comp components with coefficients in (0, 1].
DivisorGerm divisor(Rng& rng, int max_comp, int max_exp, int max_terms);

/// Smooth curve given as a graph: x = phi(y) (graph_over_y) or y = phi(x), phi(0) = 0.
struct CurveFixture {
    Poly2 g;
    std::vector<Rational> phi;
    bool graph_over_y = true;
};
CurveFixture curve(Rng& rng);

/// Primitive first-quadrant vector with coordinates <= max_coord.
IntVec2 primitive_vector(Rng& rng, std::int64_t max_coord);

std::string describe(const std::vector<Point2>& pts);

} // namespace germ::gen
