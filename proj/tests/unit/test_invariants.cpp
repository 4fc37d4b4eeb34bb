#include <doctest.h>

#include <numeric>

#include "germ/errors.hpp"
#include "germ/invariants.hpp"

using namespace germ;

namespace {

DivisorGerm family(int m) {
    return binomial_divisor(Rational(2 * m - 1, static_cast<std::int64_t>(m) * m), m, m + 1);
}

const SmoothCurveGerm& y_axis() {
    static const SmoothCurveGerm c = curve_orient(parse_poly("y"));
    return c;
}

} // namespace

TEST_CASE("toric log discrepancies") {
    // lambda (x^m + y^n) at the face normal (n', m').
    for (auto [m, n] : {std::pair{2, 3}, {4, 6}, {3, 5}}) {
        Rational lambda(1, 3);
        std::int64_t g = std::gcd(m, n);
        Weight w(n / g, m / g);
        CHECK(toric_log_discrepancy(binomial_divisor(lambda, m, n), w) ==
              Rational(n / g + m / g) - lambda * Rational(m * (n / g)));
    }
    CHECK(toric_log_discrepancy(parse_divisor("5/9*(x^3+y^4)"), Weight(4, 3)) == Rational(1, 3));
    CHECK(toric_log_discrepancy(parse_divisor("1/2*(x+y)"), Weight(1, 1)) == Rational(3, 2));
    CHECK_THROWS_AS(Weight(2, 4), InputError);
    CHECK_THROWS_AS(Weight(0, 1), InputError);
}

TEST_CASE("mld over toric valuations") {
    MldResult a = mld_toric(parse_divisor("3/4*(x^2+y^3)"));
    CHECK(a.value == ExtRational(Rational(1, 2)));
    CHECK(a.attained);
    CHECK(a.witness == Weight(3, 2));

    MldResult b = mld_toric(parse_divisor("1*(x)"));
    CHECK(b.value == ExtRational(Rational(1)));
    CHECK(b.witness == Weight(1, 1));

    MldResult c = mld_toric(parse_divisor("2*(x+y)"));
    CHECK(c.value == ExtRational(Rational(0)));
    CHECK(c.witness == Weight(1, 1));

    // Empty support contributes nothing: the smooth point has mld 2.
    CHECK(mld_of_polytope(NewtonPolytope::from_support(std::vector<Point2>{{Rational(0), Rational(0)}})).value ==
          ExtRational(Rational(2)));
}

TEST_CASE("mld detects non-lc pairs with a certificate") {
    DivisorGerm b = parse_divisor("3/2*(x)");
    MldResult r = mld_toric(b);
    CHECK(r.value.is_neg_inf());
    CHECK_FALSE(r.attained);
    REQUIRE(r.certificate.has_value());
    CHECK(toric_log_discrepancy(b, *r.certificate).sign() < 0);

    DivisorGerm d = parse_divisor("3/2*(x^2+y^2)");
    MldResult s = mld_toric(d);
    CHECK(s.value.is_neg_inf());
    REQUIRE(s.certificate.has_value());
    CHECK(toric_log_discrepancy(d, *s.certificate).sign() < 0);
}

TEST_CASE("lct of a smooth curve") {
    LctResult a = lct_toric(parse_divisor("3/4*(x^2+y^3)"), y_axis());
    CHECK(a.value == Rational(1, 4));
    CHECK(a.exact);

    CHECK(lct_toric(parse_divisor("1/2*(x^2+y^2)"), y_axis()).value == Rational(1));

    LctResult c = lct_toric(parse_divisor("1/2*(x)"), y_axis());
    CHECK(c.membership_sup == ExtRational(Rational(1)));
    CHECK(c.coefficient_cap == Rational(1));
    CHECK(c.value == Rational(1));

    // The curve already sits in B; the axis weight (0,1) sees its coefficient.
    LctResult d = lct_toric(parse_divisor("1/3*(y) + 1/4*(x)"), y_axis());
    CHECK(d.coefficient_cap == Rational(2, 3));
    CHECK(d.value == Rational(2, 3));
    CHECK(d.witness_kind == LctResult::WitnessKind::axis);

    // A curve off the axes is invisible to axis weights; only the cap catches it.
    LctResult e = lct_toric(parse_divisor("1/2*(y-x^2)"), curve_orient(parse_poly("y-x^2")));
    CHECK(e.membership_sup == ExtRational(Rational(1)));
    CHECK(e.coefficient_cap == Rational(1, 2));
    CHECK(e.value == Rational(1, 2));
    CHECK(e.witness_kind == LctResult::WitnessKind::cap);

    CHECK_THROWS_WITH_AS(lct_toric(parse_divisor("2*(x)"), y_axis()), doctest::Contains("coefficient above one"),
                         PreconditionError);
    CHECK_THROWS_WITH_AS(lct_toric(parse_divisor("1*(x^2+y^3)"), y_axis()),
                         doctest::Contains("pair not lc before adding C"), PreconditionError);
}

TEST_CASE("lct agrees with the binomial closed form") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            for (int j = 1; j <= 12; ++j) {
                Rational lambda(j, 12);
                Rational gap = lambda * Rational(n) - Rational(n, m);
                DivisorGerm b = binomial_divisor(lambda, m, n);
                if (gap.sign() < 0 || Rational(1) < gap || mld_toric(b).value < ExtRational(Rational(0))) {
                    continue;
                }
                CAPTURE(m);
                CAPTURE(n);
                CAPTURE(j);
                CHECK(lct_toric(b, y_axis()).value == binomial_lct(lambda, m, n));
            }
        }
    }
}

TEST_CASE("extremal family") {
    for (int m = 1; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(mld_toric(family(m)).value == ExtRational(Rational(1, m)));
        CHECK(lct_toric(family(m), y_axis()).value == Rational(1, m * m));
        CHECK(binomial_mld(Rational(2 * m - 1, m * m), m, m + 1) == ExtRational(Rational(1, m)));
    }
}

TEST_CASE("binomial closed forms") {
    CHECK(binomial_mld(Rational(9, 25), 5, 6) == ExtRational(Rational(1, 5)));
    CHECK(binomial_mld(Rational(1), 1, 1) == ExtRational(Rational(1)));
    // Attained at (1, 1); brute force over weights up to 200 agrees.
    CHECK(binomial_mld(Rational(1, 2), 2, 3) == ExtRational(Rational(1)));
    CHECK_THROWS_AS(binomial_mld(Rational(0), 2, 3), InputError);
    CHECK_THROWS_AS(binomial_mld(Rational(3, 2), 2, 3), InputError);

    CHECK(binomial_lct(Rational(1, 2), 2, 2) == Rational(1));
    CHECK(binomial_lct(Rational(3, 4), 2, 3) == Rational(1, 4));
    for (int n = 1; n <= 6; ++n) {
        CHECK(binomial_lct(Rational(1, n), n, n) == Rational(1));
    }
    CHECK_THROWS_WITH_AS(binomial_lct(Rational(1, 12), 2, 3), doctest::Contains(">= 0"), DomainError);
    CHECK_THROWS_WITH_AS(binomial_lct(Rational(1), 2, 4), doctest::Contains("<= 1"), DomainError);
}

TEST_CASE("delta bound") {
    BoundResult one = delta_bound(Rational(1));
    CHECK(one.delta == Rational(1, 2));
    CHECK(one.witness_n == 2);

    // n = 3 and n = 4 tie; the smaller wins.
    BoundResult half = delta_bound(Rational(1, 2));
    CHECK(half.delta == Rational(1, 12));
    CHECK(half.witness_n == 3);

    BoundResult four = delta_bound(Rational(4));
    CHECK(four.delta == Rational(7, 2));
    CHECK(four.witness_n == 2);

    BoundResult seventh = delta_bound(Rational(1, 7));
    CHECK(seventh.delta == Rational(1, 182));
    CHECK(seventh.witness_n == 13);

    CHECK(bound_term(Rational(1, 3), 5) == Rational(1, 30));
    CHECK_THROWS_AS(bound_term(Rational(1), 1), InputError);
    CHECK_THROWS_AS(delta_bound(Rational(0)), InputError);

    CHECK(bound_floor_check(Rational(1)));
    CHECK(bound_floor_check(Rational(1, 7)));
    CHECK(bound_floor_check(Rational(3)));

    Rational prev(-1);
    for (int k = 1; k <= 120; ++k) {
        Rational d = delta_bound(Rational(k, 40)).delta;
        CHECK_FALSE(d < prev);
        prev = d;
    }
}

TEST_CASE("dirichlet recurrence") {
    DirichletTrace a = dirichlet_k(Rational(3, 7), Rational(1, 3));
    CHECK(a.k == 2);
    CHECK(a.m == 1);
    CHECK(a.partial_quotients == std::vector<std::int64_t>{2});
    CHECK(a.remainders == std::vector<Rational>{Rational(1), Rational(3, 7), Rational(1, 7)});
    CHECK(a.numerators == std::vector<std::int64_t>{0, 1, 2});

    DirichletTrace b = dirichlet_k(Rational(5), Rational(1, 2));
    CHECK(b.k == 1);
    CHECK(b.m == 0);

    DirichletTrace c = dirichlet_k(Rational(1, 2), Rational(2, 5));
    CHECK(c.k == 2);
    CHECK(c.remainders.back() == Rational(0));

    // q is reduced mod 1 first.
    CHECK(dirichlet_k(Rational(-4, 7), Rational(1, 3)).q == Rational(3, 7));

    CHECK_THROWS_AS(dirichlet_k(Rational(1, 3), Rational(0)), InputError);
    CHECK_THROWS_AS(dirichlet_k(Rational(1, 3), Rational(1)), InputError);
}

TEST_CASE("surface bound checker") {
    SurfaceReport a = verify_surface_theorem(family(3), y_axis(), Rational(1, 3), 10);
    CHECK(a.applicable);
    CHECK(a.bound == Rational(1, 30));
    CHECK(a.bound_n == 5);
    REQUIRE(a.lct.has_value());
    CHECK(a.lct->value == Rational(1, 9));
    CHECK(a.pass);

    SurfaceReport b = verify_surface_theorem(parse_divisor("1/2*(x^2+y^2)"), y_axis(), Rational(1, 2), 64);
    CHECK(b.applicable);
    CHECK(b.mult == Rational(0));
    CHECK(b.intersection == Rational(1));
    CHECK(b.mld == ExtRational(Rational(1)));
    CHECK(b.bound == Rational(1, 12));
    CHECK(b.lct->value == Rational(1));
    CHECK(b.pass);

    SurfaceReport c = verify_surface_theorem(parse_divisor("1*(y) + 1/4*(x)"), y_axis(), Rational(1, 2), 64);
    CHECK_FALSE(c.applicable);
    CHECK(c.mult == Rational(1));

    SurfaceReport d = verify_surface_theorem(family(2), y_axis(), Rational(3, 4), 64);
    CHECK_FALSE(d.applicable); // mld 1/2 < 3/4

    // (x - y^5) meets (x) with multiplicity 5, so (B . C) = 5/2 > 2.
    SurfaceReport e = verify_surface_theorem(parse_divisor("1/2*(x-y^5)"), curve_orient(parse_poly("x")),
                                             Rational(1, 4), 64);
    CHECK_FALSE(e.applicable);
    CHECK(e.intersection == Rational(5, 2));
}
