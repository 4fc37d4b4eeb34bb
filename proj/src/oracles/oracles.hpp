#pragma once

// Brute-force references. Everything here works from raw supports and
// exhaustive search; none of it calls the hull, fan or series code it checks.

#include <optional>
#include <string>
#include <vector>

#include "germ/fibration.hpp"

namespace germ::oracle {

/// sum_i b_i * min over supp(f_i) of <w, e>.
Rational support_value(const DivisorGerm& b, const Rational& w1, const Rational& w2);

struct BruteMin {
    Rational value;
    IntVec2 argmin; ///< first minimizer in row-major order (w1 outer, w2 inner)
};

/// min of w1 + w2 - <w, Gamma(B)> over 1 <= w1, w2 <= bound.
BruteMin mld(const DivisorGerm& b, int bound);

struct ScaledMin {
    std::int64_t value24; ///< 24 * minimum
    std::int64_t p1;
    std::int64_t p2;
};

/// min over 1 <= p1, p2 <= bound of 24 (p1 + p2) - j min(m p1, n p2), i.e. lambda = j/24 scaled by 24.
ScaledMin binomial_mld24(int j, int m, int n, int bound);

/// Irreducible nonzero lattice points of the cone with both coordinates <= bound.
std::vector<IntVec2> hilbert_basis(const IntVec2& a, const IntVec2& b, int bound);

/// Is p in conv(support) + first quadrant? Checks every pair of support points.
bool contains(const std::vector<Point2>& support, const Point2& p);

/// All sums of one point per part, each part scaled.
std::vector<Point2> minkowski_support(const std::vector<std::pair<Rational, std::vector<Point2>>>& parts);

/// Points not dominated coordinatewise by another point of the set.
std::vector<Point2> minimal_points(std::vector<Point2> pts);

/// Bracket [lo, hi] of sup{t >= 0 : (1,1) in Gamma_+(B) + t Gamma_+(C)} after the given bisection steps.
std::pair<Rational, Rational> membership_bracket(const DivisorGerm& b, const Poly2& c, int steps);

/// Exhaustive max of (eps - 1/n)/(n - 1) over 2 <= n <= n_max; smallest argmax.
std::pair<Rational, std::int64_t> delta(const Rational& eps, std::int64_t n_max);

/// Smallest k >= 1 with dist(k q, Z) <= delta, searched up to k_max.
std::optional<std::int64_t> dirichlet_k(const Rational& q, const Rational& delta, std::int64_t k_max);

/// First violated trace invariant (recurrence, stopping rule, bound on k,
/// distance of k q to the integers), or nullopt.
std::optional<std::string> trace_violation(const DirichletTrace& tr, const Rational& q, const Rational& delta);

/// ord_t of f(phi(t), t), or of f(t, phi(t)) when graph_over_y is false, by exact
/// substitution; phi lists coefficients from degree 0. nullopt if identically zero.
std::optional<int> order_on_graph(const Poly2& f, const std::vector<Rational>& phi, bool graph_over_y);

/// Closed-form threshold of a binomial pair: sup{t >= 0 : min((n+m)/(lambda n m + t m), 1/t, 1/lambda) >= 1}.
Rational binomial_lct(const Rational& lambda, int m, int n);

} // namespace germ::oracle
