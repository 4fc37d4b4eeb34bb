#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germ/germs.hpp"

namespace germ {

/// Infimum of toric log discrepancies over strictly positive weights.
struct MldResult {
    ExtRational value;
    /// Achieving primitive weight when the infimum is attained.
    std::optional<Weight> witness;
    bool attained = false;
    /// Weight with a negative discrepancy when value is -inf.
    std::optional<Weight> certificate;
    /// Diagnostics: the objective at the axis directions (1,0) and (0,1).
    Rational axis_x;
    Rational axis_y;
};

/// Toric log canonical threshold of a smooth curve with respect to a pair.
struct LctResult {
    enum class WitnessKind { weight, axis, cap };

    ExtRational membership_sup;
    Rational coefficient_cap;
    Rational value;
    WitnessKind witness_kind = WitnessKind::cap;
    /// Minimizing direction for weight/axis witnesses.
    std::optional<IntVec2> witness;
    /// True when B + value*C passes the nondegeneracy check.
    bool exact = false;
};

struct BoundResult {
    Rational epsilon;
    Rational delta;
    std::int64_t witness_n = 2;
};

/// Trace of the continued-fraction recurrence that finds k with k*q close to an integer.
struct DirichletTrace {
    Rational q;     ///< input reduced mod 1
    Rational delta;
    std::vector<Rational> remainders;         ///< r_{-1}, r_0, ..., r_m
    std::vector<std::int64_t> partial_quotients; ///< b_1, ..., b_m
    std::vector<std::int64_t> numerators;     ///< a_{-1}, a_0, ..., a_m
    std::int64_t k = 1;
    std::size_t m = 0;
};

/// Hypotheses, intermediate values and verdict of the surface lct bound check.
struct SurfaceReport {
    bool applicable = false;
    std::string reason; ///< why the check does not apply
    ExtRational mld;
    Rational mult;
    std::optional<Rational> intersection;
    bool nondegenerate = false;
    std::optional<LctResult> lct;
    Rational bound;
    std::int64_t bound_n = 2;
    bool pass = false;
};

/// a(E_w, X, B) = w1 + w2 - <w, Gamma(B)>.
Rational toric_log_discrepancy(const DivisorGerm& b, const Weight& w);

/// Objective minimized over the Hilbert bases of the normal-fan cones.
MldResult mld_toric(const DivisorGerm& b);
MldResult mld_of_polytope(const NewtonPolytope& gamma);

LctResult lct_toric(const DivisorGerm& b, const SmoothCurveGerm& c);

SurfaceReport verify_surface_theorem(const DivisorGerm& b, const SmoothCurveGerm& c, const Rational& epsilon,
                                     std::int64_t n_max);

/// (epsilon - 1/n) / (n - 1).
Rational bound_term(const Rational& epsilon, std::int64_t n);

/// sup over n >= 2 of bound_term, searched on [2, max(2, ceil(1 + 4/epsilon))];
/// ties go to the smallest n.
BoundResult delta_bound(const Rational& epsilon);

/// delta_bound(epsilon) >= min(epsilon^2 / 4, 3/2).
bool bound_floor_check(const Rational& epsilon);

DirichletTrace dirichlet_k(const Rational& q, const Rational& delta);

/// lambda * (x^m + y^n).
DivisorGerm binomial_divisor(const Rational& lambda, int m, int n);
ExtRational binomial_mld(const Rational& lambda, int m, int n);
/// 1 - lambda*n + n/m, valid when 0 <= lambda*n - n/m <= 1.
Rational binomial_lct(const Rational& lambda, int m, int n);

} // namespace germ
