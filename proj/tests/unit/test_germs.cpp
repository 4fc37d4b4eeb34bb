#include <doctest.h>

#include "germ/errors.hpp"
#include "germ/germs.hpp"

using namespace germ;

namespace {

Point2 P(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

} // namespace

TEST_CASE("polynomial parsing") {
    Poly2 p = parse_poly("x^2 + 2*x*y + y^2");
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient({2, 0}) == Rational(1));
    CHECK(p.coefficient({1, 1}) == Rational(2));
    CHECK(p.coefficient({0, 2}) == Rational(1));

    Poly2 q = parse_poly("x^3 + y^4 - y^4");
    CHECK(q.term_count() == 1);
    CHECK(q.coefficient({3, 0}) == Rational(1));

    Poly2 r = parse_poly("x^2 + t^3", {"t", "x"});
    CHECK(r.coefficient({0, 2}) == Rational(1));
    CHECK(r.coefficient({3, 0}) == Rational(1));

    CHECK(parse_poly("-1/2*x*y^2 + 3").coefficient({1, 2}) == Rational(-1, 2));
    CHECK(render(parse_poly("y^3 + x^2 - 2*x*y")) == "y^3 + x^2 - 2*x*y");
}

TEST_CASE("polynomial parse errors carry a position") {
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("x + z"), ParseError);
    CHECK_THROWS_AS(parse_poly("x ** 2"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0*x"), InputError);
    try {
        parse_poly("x + z");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("divisor parsing") {
    DivisorGerm b = parse_divisor("3/4*(x^2 + y^3)");
    REQUIRE(b.components().size() == 1);
    CHECK(b.components()[0].coeff == Rational(3, 4));
    CHECK(b.components()[0].poly == parse_poly("x^2+y^3"));

    CHECK(parse_divisor("1/2*(x^2+y^2) + 1/3*(y)").components().size() == 2);
    CHECK(render(parse_divisor("1/2*(x^2+y^2) + 1/3*(y)")) == "1/2*(x^2 + y^2) + 1/3*(y)");

    CHECK_THROWS_AS(parse_divisor("1*(x + 1)"), InputError);
    CHECK_THROWS_AS(parse_divisor("0*(x)"), InputError);
    CHECK_THROWS_AS(parse_divisor("-1/2*(x)"), InputError);
    CHECK_THROWS_AS(parse_divisor("1/2*(x"), ParseError);
    CHECK_THROWS_AS(parse_divisor("1/2*(x - x)"), InputError);
}

TEST_CASE("newton polytopes of divisors") {
    using V = std::vector<Point2>;
    CHECK(newton_polytope(parse_divisor("3/4*(x^2+y^3)")).vertices() ==
          V{{Rational(0), Rational(9, 4)}, {Rational(3, 2), Rational(0)}});
    CHECK(newton_polytope(parse_divisor("1*(x^4+x*y+y^3)")).vertices() == V{P(0, 3), P(1, 1), P(4, 0)});
    CHECK(newton_polytope(parse_divisor("1*(x^4+x*y+y^3) + 1*(x^2+y^2)")).vertices() ==
          V{P(0, 5), P(1, 3), P(3, 1), P(6, 0)});
    CHECK_THROWS_AS(newton_polytope(DivisorGerm{}), InputError);
}

TEST_CASE("nondegeneracy") {
    NondegeneracyReport bad = nondegeneracy_check(parse_divisor("3/4*(x^2+2*x*y+y^2)"));
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.face.has_value());
    CHECK(*bad.face == Face{P(0, 2), P(2, 0)});
    CHECK(bad.components == std::vector<std::size_t>{0});

    for (int m = 1; m <= 6; ++m) {
        for (int n = 1; n <= 6; ++n) {
            Poly2 f = Poly2::monomial({m, 0}) + Poly2::monomial({0, n});
            CHECK(nondegeneracy_check(DivisorGerm({{Rational(1, 3), f}})).ok());
        }
    }
    // u^2 + 1 and u^2 - 1 are coprime.
    CHECK(nondegeneracy_check(parse_divisor("1/2*(x^2+y^2) + 1/2*(x^2-y^2)")).ok());
    // Same face form twice shares a factor.
    NondegeneracyReport pair = nondegeneracy_check(parse_divisor("1/2*(x+y) + 1/3*(x+y+x*y)"));
    CHECK_FALSE(pair.ok());
    CHECK(pair.components == std::vector<std::size_t>{0, 1});
}

TEST_CASE("face forms") {
    Poly2 f = parse_poly("x^2 + 2*x*y + y^2 + x^5");
    Face face{P(0, 2), P(2, 0)};
    CHECK(face_form(f, face) == UPoly({Rational(1), Rational(2), Rational(1)}));
}

TEST_CASE("curve orientation") {
    SmoothCurveGerm y = curve_orient(parse_poly("y"));
    CHECK(y.swapped);
    CHECK_FALSE(y.b_invariant.has_value());
    CHECK(y.original_poly() == parse_poly("y"));

    SmoothCurveGerm c = curve_orient(parse_poly("x + y^3"));
    CHECK_FALSE(c.swapped);
    CHECK(c.b_invariant == 3);

    CHECK(curve_orient(parse_poly("x + y")).b_invariant == 1);
    CHECK(curve_orient(parse_poly("y - x^2")).b_invariant == 2);

    CHECK_THROWS_AS(curve_orient(parse_poly("x^2 + y^3")), InputError);
    CHECK_THROWS_AS(curve_orient(parse_poly("x*y")), InputError);
    CHECK_THROWS_AS(curve_orient(parse_poly("x + 1")), InputError);
}

TEST_CASE("multiplicity along a curve and removal") {
    SmoothCurveGerm y = curve_orient(parse_poly("y"));
    CHECK(mult_along_curve(parse_divisor("3/4*(x^2+y^3)"), y) == Rational(0));
    CHECK(mult_along_curve(parse_divisor("1/2*(x*y+y^2)"), y) == Rational(1, 2));
    CHECK(mult_along_curve(parse_divisor("1/3*(x*y^2)"), y) == Rational(2, 3));

    CHECK(remove_curve_component(parse_divisor("1/2*(x*y+y^2)"), y) == parse_divisor("1/2*(x+y)"));
    DivisorGerm untouched = parse_divisor("3/4*(x^2+y^3)");
    CHECK(remove_curve_component(untouched, y) == untouched);
    CHECK(remove_curve_component(parse_divisor("1/3*(x*y^2)"), y) == parse_divisor("1/3*(x)"));
    CHECK(remove_curve_component(parse_divisor("1/2*(y)"), y).empty());

    SmoothCurveGerm g = curve_orient(parse_poly("y - x^2"));
    CHECK(mult_along_curve(parse_divisor("1/2*(y^2 - 2*x^2*y + x^4)"), g) == Rational(1));
}

TEST_CASE("local intersection numbers") {
    SmoothCurveGerm y = curve_orient(parse_poly("y"));
    for (int m = 1; m <= 6; ++m) {
        Poly2 f = Poly2::monomial({m, 0}) + Poly2::monomial({0, m + 1});
        CHECK(local_intersection(DivisorGerm({{Rational(1), f}}), y) == Rational(m));
    }
    CHECK(local_intersection(parse_divisor("1*(x^2+y^3)"), curve_orient(parse_poly("y - x^2"))) == Rational(2));
    CHECK(local_intersection(parse_divisor("1/2*(x^2+y^3)"), y) == Rational(1));
    CHECK(local_intersection(parse_divisor("1/2*(x) + 1/3*(x+y)"), curve_orient(parse_poly("x - y^2"))) ==
          Rational(1, 2) * 2 + Rational(1, 3));
    CHECK_THROWS(local_intersection(parse_divisor("1/2*(y)"), y));
}
