#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/invariants.hpp"

namespace germ {

/// Polynomial in (t, x, y): t is the base coordinate, [x:y] the fiber coordinates.
struct FibrationComponent {
    Rational coeff;
    Poly3 poly;
    int fiber_degree = 0;
};

/// Boundary on the trivial bundle A^1 x P^1 -> A^1, studied over t = 0.
struct FibrationSpec {
    std::string base_var = "t";
    std::vector<FibrationComponent> components;
};

/// Rational point of the fiber: [a:1], or [1:0] when at_infinity.
struct FiberPoint {
    bool at_infinity = false;
    Rational a;

    static FiberPoint affine(Rational a) { return {false, std::move(a)}; }
    static FiberPoint infinity() { return {true, Rational(0)}; }

    std::string str() const;
    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
};

/// y-chart: y = 1, fiber coordinate u = x/y - a. x-chart: x = 1, v = y/x - s0.
enum class Chart { x_chart, y_chart };

/// Boundary germ at a fiber point in local coordinates (t, fiber coordinate).
/// Units at the center are dropped; the fiber curve is (t).
struct ChartGerm {
    Chart chart = Chart::y_chart;
    FiberPoint center;
    DivisorGerm divisor;
    SmoothCurveGerm fiber_curve;
};

struct PointContribution {
    FiberPoint point;
    ChartGerm germ;
    LctResult lct;
    ExtRational mld;
};

struct DiscriminantResult {
    Rational b_d;
    Rational coefficient; ///< 1 - b_d
    /// Coefficient of the fiber t = 0 inside B, from the t-content of the components.
    Rational vertical;
    Rational generic_cap; ///< 1 - vertical
    std::vector<PointContribution> points;
};

struct TheoremReport {
    Rational epsilon;
    Rational delta_required;
    std::int64_t witness_n = 2;
    Rational b_d;
    Rational coefficient;
    bool pass = false;
    /// The fiber over 0 is reduced in the product model.
    std::int64_t fiber_multiplicity = 1;
    Rational multiplicity_bound; ///< 1 / delta_required
    bool multiplicity_ok = false;
};

struct SweepRow {
    int m = 1;
    Rational epsilon;
    Rational b_d;
    Rational delta;
    Rational ratio; ///< b_d / epsilon^2
    Rational coefficient;
};

/// Throws InputError on non-homogeneous components or a degree sum other than 2.
void validate_spec(const FibrationSpec& spec);

/// Largest k with t^k dividing the component.
int t_content(const Poly3& f);

/// Rational points of the fiber over t = 0 where some component vanishes,
/// sorted with [1:0] last. Throws UnsupportedError on irrational points.
std::vector<FiberPoint> special_points(const FibrationSpec& spec);

/// Germ in the y-chart, or in the x-chart for [1:0].
ChartGerm germ_at(const FibrationSpec& spec, const FiberPoint& point);
/// Germ in an explicit chart; throws InputError if the chart misses the point.
ChartGerm germ_at(const FibrationSpec& spec, const FiberPoint& point, Chart chart);

DiscriminantResult fiber_lct(const FibrationSpec& spec);
Rational relative_mld(const FibrationSpec& spec);
TheoremReport verify_main_theorem(const FibrationSpec& spec);

/// ((2m-1)/m^2) (x^m + t^(m+1) y^m) + (1/m) (y).
FibrationSpec example_family_spec(int m);

/// One row per m, computed through fiber_lct and relative_mld.
std::vector<SweepRow> sharpness_sweep(int m_min, int m_max);

/// {"base_var": "t", "components": [{"coeff": "3/4", "poly": "...", "fiber_degree": 2}, ...]}
FibrationSpec parse_fibration_config(std::string_view json_text);

} // namespace germ
