#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/parser.hpp"
#include "germ/poly.hpp"
#include "germ/polytope.hpp"

namespace germ {

/// One prime-component term coeff * (poly = 0) of a divisor germ.
struct Component {
    Rational coeff;
    Poly2 poly;

    friend bool operator==(const Component&, const Component&) = default;
};

/// B = sum of coeff_i * (poly_i = 0) on a smooth surface germ at the origin.
/// Every poly vanishes at the origin and every coefficient is positive. The
/// empty divisor is a valid value; operations that need a component say so.
class DivisorGerm {
public:
    DivisorGerm() = default;
    explicit DivisorGerm(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    /// Concatenation of the component lists.
    friend DivisorGerm operator+(const DivisorGerm& a, const DivisorGerm& b);

    friend bool operator==(const DivisorGerm&, const DivisorGerm&) = default;

private:
    std::vector<Component> components_;
};

std::string render(const DivisorGerm& b, const std::array<std::string, 2>& vars = {"x", "y"});

/// Smooth curve germ, oriented so that the monomial x appears in poly.
struct SmoothCurveGerm {
    Poly2 poly;
    bool swapped = false;
    /// y-intercept of the oriented Newton diagram; nullopt encodes +inf.
    std::optional<std::int64_t> b_invariant;

    /// The defining polynomial in the caller's original coordinates.
    Poly2 original_poly() const { return swapped ? swap_variables(poly) : poly; }
};

/// Outcome of the Newton nondegeneracy check.
///
/// The check is one sufficient reading of nondegeneracy: every compact face
/// form of every component is squarefree after dehomogenizing, and components
/// sharing a face direction have coprime face forms. A nondegenerate verdict
/// may be conservative; a degenerate verdict always carries a witness.
struct NondegeneracyReport {
    enum class Verdict { nondegenerate, degenerate };

    Verdict verdict = Verdict::nondegenerate;
    std::optional<Face> face;
    std::vector<std::size_t> components;
    std::string reason;

    bool ok() const { return verdict == Verdict::nondegenerate; }
};

DivisorGerm parse_divisor(std::string_view text, const std::array<std::string, 2>& vars = {"x", "y"});

std::vector<Point2> support_points(const Poly2& p);
NewtonPolytope newton_polytope(const Poly2& p);
/// sum coeff_i * Gamma_+(poly_i); throws InputError on an empty divisor.
NewtonPolytope newton_polytope(const DivisorGerm& b);

NondegeneracyReport nondegeneracy_check(const DivisorGerm& b);

/// Dehomogenized face form of p along the compact face, in the variable
/// x^n2 / y^n1 where (n1, n2) is the primitive face normal.
UPoly face_form(const Poly2& p, const Face& face);

SmoothCurveGerm curve_orient(const Poly2& g);

/// mult_C B: sum of coeff_i * (largest k with C^k | poly_i).
/// Throws DomainError when the curve still lies in a component after the
/// exact division (the curve polynomial was not irreducible as declared).
Rational mult_along_curve(const DivisorGerm& b, const SmoothCurveGerm& c);

/// B - mult_C B * C; components that become units are dropped.
DivisorGerm remove_curve_component(const DivisorGerm& b, const SmoothCurveGerm& c);

/// (B . C) at the origin through a truncated power-series parametrization of C.
/// Requires that no component of B is divisible by the curve.
Rational local_intersection(const DivisorGerm& b, const SmoothCurveGerm& c);

/// B written in the coordinates where c is oriented (swaps x and y if c did).
DivisorGerm orient_like(const DivisorGerm& b, const SmoothCurveGerm& c);

} // namespace germ
