#include <doctest.h>

#include "facet/polynomial.hpp"

using namespace facet;

TEST_CASE("parse and format") {
    IntPolynomial p = parse_poly("1,4,5,2");
    CHECK(p.degree() == 3);
    CHECK(to_string(p) == "1,4,5,2");
    CHECK(parse_poly(" 1 , 2 ").coeffs == std::vector<Int>{1, 2});
    CHECK(parse_poly("1,0,0").degree() == 0);  // trailing zeros trimmed
    CHECK_THROWS_AS(parse_poly("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("1,x"), std::invalid_argument);
}

TEST_CASE("real-rootedness examples") {
    CHECK(is_real_rooted(parse_poly("1,4,5,2")));    // (1+t)^2 (1+2t)
    CHECK_FALSE(is_real_rooted(parse_poly("1,4,6,3")));
    CHECK(is_real_rooted(parse_poly("1,1")));
    CHECK_FALSE(is_real_rooted(parse_poly("1,1,1")));
    CHECK(is_real_rooted(parse_poly("5")));  // constants have no roots
    CHECK_THROWS_AS(is_real_rooted(IntPolynomial{}), std::invalid_argument);
}

TEST_CASE("real-rootedness handles multiplicities") {
    IntPolynomial lin = parse_poly("1,1");
    IntPolynomial p = poly_product(lin, poly_product(lin, lin));  // (1+t)^3
    CHECK(is_real_rooted(p));
    CHECK(distinct_real_roots(p) == 1);
    IntPolynomial q = poly_product(parse_poly("1,1,1"), lin);
    CHECK_FALSE(is_real_rooted(q));
    CHECK(distinct_real_roots(q) == 1);
}

TEST_CASE("products of linear factors are real rooted") {
    for (int r1 = 1; r1 <= 5; ++r1)
        for (int r2 = r1; r2 <= 5; ++r2)
            for (int r3 = r2; r3 <= 5; ++r3) {
                IntPolynomial p = parse_poly("1," + std::to_string(r1));
                p = poly_product(p, parse_poly("1," + std::to_string(r2)));
                p = poly_product(p, parse_poly("1," + std::to_string(r3)));
                CHECK(is_real_rooted(p));
                CHECK(is_ultra_log_concave(p));  // Newton's inequalities
            }
}

TEST_CASE("ultra log-concavity") {
    CHECK(is_ultra_log_concave(parse_poly("1,4,5,2")));
    CHECK_FALSE(is_ultra_log_concave(parse_poly("1,10,3,1")));  // 9 < 10
    CHECK(is_ultra_log_concave(parse_poly("1,2,1")));
    CHECK_THROWS_AS(is_ultra_log_concave(parse_poly("1,-2,1")), std::invalid_argument);
    CHECK_THROWS_AS(is_ultra_log_concave(parse_poly("3")), std::invalid_argument);
}

TEST_CASE("poly_product") {
    CHECK(to_string(poly_product(parse_poly("1,2,1"), parse_poly("1,2,1"))) ==
          "1,4,6,4,1");
    IntPolynomial p = parse_poly("1,7,3");
    CHECK(poly_product(p, parse_poly("1")) == p);
    CHECK(to_string(poly_product(parse_poly("1,1"), parse_poly("1,10,3,1"))) ==
          "1,11,13,4,1");
}

TEST_CASE("poly_hadamard") {
    CHECK(to_string(poly_hadamard(parse_poly("1,2,1"), parse_poly("1,3,3,1"))) ==
          "1,6,3");
    CHECK(to_string(poly_hadamard(parse_poly("1,9,9"), parse_poly("1"))) == "1");
    IntPolynomial p = parse_poly("1,4,5,2");
    CHECK(to_string(poly_hadamard(p, p)) == "1,16,25,4");
}

TEST_CASE("poly_dilate") {
    CHECK(to_string(poly_dilate(parse_poly("1,2,1"), 2)) == "1,4,4");
    IntPolynomial p = parse_poly("1,6,2");
    CHECK(poly_dilate(p, 1) == p);
    CHECK(to_string(poly_dilate(parse_poly("1,3"), 5)) == "1,15");
}

TEST_CASE("poly_add_tderiv") {
    CHECK(to_string(poly_add_tderiv(parse_poly("1,3,3,1"))) == "1,6,9,4");
    CHECK(to_string(poly_add_tderiv(parse_poly("1"))) == "1");
    CHECK(to_string(poly_add_tderiv(parse_poly("1,2"))) == "1,4");
}
