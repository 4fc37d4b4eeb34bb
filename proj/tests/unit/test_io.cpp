#include <doctest.h>

#include "germ/errors.hpp"
#include "germ/json_io.hpp"

using namespace germ;
using germ::io::json;

TEST_CASE("rationals serialize as string pairs") {
    CHECK(io::to_json(Rational(-3, 4)) == json{{"num", "-3"}, {"den", "4"}});
    // Values beyond 64 bits survive the round trip.
    Rational big(mpz_class("123456789012345678901234567890"), mpz_class("7"));
    CHECK(io::rational_from_json(io::to_json(big)) == big);
    CHECK(io::to_json(ExtRational::neg_inf()) == json{{"neg_inf", true}});
    CHECK(io::to_json(ExtRational::pos_inf()) == json{{"pos_inf", true}});
    CHECK(io::to_json(ExtRational(Rational(2))) == io::to_json(Rational(2)));
    CHECK_THROWS_AS(io::rational_from_json(json{{"num", "1"}, {"den", "0"}}), InputError);
    CHECK_THROWS_AS(io::rational_from_json(json{{"num", 1}, {"den", "2"}}), InputError);
}

TEST_CASE("witnesses serialize as integer pairs") {
    CHECK(io::to_json(Weight(3, 2)) == json::array({3, 2}));
    json m = io::to_json(mld_toric(parse_divisor("3/4*(x^2+y^3)")));
    CHECK(m["witness"] == json::array({3, 2}));
    CHECK(m["value"] == io::to_json(Rational(1, 2)));
    CHECK(m["attained"] == true);

    json neg = io::to_json(mld_toric(parse_divisor("3/2*(x)")));
    CHECK(neg["value"] == json{{"neg_inf", true}});
    CHECK(neg["witness"].is_null());
    CHECK(neg["certificate"].is_array());
}

TEST_CASE("polytopes round trip") {
    NewtonPolytope p = newton_polytope(parse_divisor("3/4*(x^4+x*y+y^3)"));
    json j = io::to_json(p);
    CHECK(j["vertices"][0] == json::array({json::array({"0", "1"}), json::array({"9", "4"})}));
    CHECK(io::polytope_from_json(j) == p);
    CHECK_THROWS_AS(io::polytope_from_json(json{{"points", json::array()}}), InputError);
}

TEST_CASE("reports carry every field") {
    json b = io::to_json(delta_bound(Rational(1, 2)));
    CHECK(b["delta"] == io::to_json(Rational(1, 12)));
    CHECK(b["witness_n"] == 3);

    json d = io::to_json(dirichlet_k(Rational(3, 7), Rational(1, 3)));
    CHECK(d["k"] == 2);
    CHECK(d["partial_quotients"] == json::array({2}));

    json l = io::to_json(lct_toric(parse_divisor("3/4*(x^2+y^3)"), curve_orient(parse_poly("y"))));
    CHECK(l["value"] == io::to_json(Rational(1, 4)));
    CHECK(l["exact"] == true);
    CHECK(l["witness_kind"] == "weight");

    json t = io::to_json(verify_main_theorem(example_family_spec(2)));
    CHECK(t["pass"] == true);
    CHECK(t["b_D"] == io::to_json(Rational(1, 4)));

    json disc = io::to_json(fiber_lct(example_family_spec(2)));
    CHECK(disc["points"].size() == 2);
    CHECK(disc["points"][0]["point"] == "[0:1]");
    CHECK(disc["assumption"].is_string());
}
