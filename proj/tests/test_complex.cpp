#include <doctest.h>

#include "facet/complex.hpp"
#include "facet/polynomial.hpp"

using namespace facet;

namespace {

SimplicialComplex glued_triangles() {
    return SimplicialComplex::from_facets({"1", "2", "3", "4"},
                                          {{"1", "2", "3"}, {"2", "3", "4"}});
}

IntPolynomial fpoly(const SimplicialComplex& c) {
    IntPolynomial p;
    p.coeffs = c.f_vector().entries;
    return p;
}

}  // namespace

TEST_CASE("from_facets and f_vector") {
    SimplicialComplex c = glued_triangles();
    CHECK(c.faces().size() == 12);  // 11 nonempty faces plus the empty set
    CHECK(c.f_vector() == parse_fvector("1,4,5,2"));

    SimplicialComplex empty = SimplicialComplex::from_facets({"a"}, {});
    CHECK(empty.f_vector() == parse_fvector("1"));
    CHECK(empty.dimension() == -1);

    SimplicialComplex tri =
        SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2", "3"}});
    CHECK(tri.f_vector() == parse_fvector("1,3,3,1"));

    CHECK_THROWS_AS(SimplicialComplex::from_facets({"1"}, {{"2"}}),
                    std::invalid_argument);
}

TEST_CASE("boundary complexes with known f-vectors") {
    // boundary of the tetrahedron with one triangle's interior removed
    SimplicialComplex c = SimplicialComplex::from_facets(
        {"1", "2", "3", "4"}, {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"},
                               {"2", "3"}, {"2", "4"}, {"3", "4"}});
    CHECK(c.f_vector() == parse_fvector("1,4,6,3"));

    // triangle plus seven isolated vertices
    std::vector<std::string> ground = {"1", "2", "3"};
    std::vector<std::vector<std::string>> facets = {{"1", "2", "3"}};
    for (int v = 4; v <= 10; ++v) {
        ground.push_back(std::to_string(v));
        facets.push_back({std::to_string(v)});
    }
    CHECK(SimplicialComplex::from_facets(ground, facets).f_vector() ==
          parse_fvector("1,10,3,1"));
}

TEST_CASE("link") {
    SimplicialComplex tri =
        SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2", "3"}});
    SimplicialComplex lk = tri.link({"1"});
    CHECK(lk.f_vector() == parse_fvector("1,2,1"));
    CHECK(lk.ground() == std::vector<std::string>{"2", "3"});

    SimplicialComplex c = glued_triangles();
    CHECK(c.link({}).f_vector() == c.f_vector());
    CHECK(c.link({"2", "3"}).f_vector() == parse_fvector("1,2"));
    CHECK_THROWS_AS(c.link({"1", "4"}), std::invalid_argument);
}

TEST_CASE("compressed_realize") {
    SimplicialComplex c = compressed_realize(parse_fvector("1,4,5,2"));
    CHECK(c.f_vector() == parse_fvector("1,4,5,2"));
    CHECK(c.ground().size() == 4);

    c = compressed_realize(parse_fvector("1,3,3,1"));
    CHECK(c.faces().size() == 8);  // full triangle

    c = compressed_realize(parse_fvector("1,10,3,1"));
    CHECK(c.has_face({"1", "2", "3"}));
    CHECK(c.f_vector() == parse_fvector("1,10,3,1"));

    CHECK_THROWS_AS(compressed_realize(parse_fvector("1,1,1")),
                    std::invalid_argument);
}

TEST_CASE("join") {
    SimplicialComplex edge =
        SimplicialComplex::from_facets({"1", "2"}, {{"1", "2"}});
    CHECK(join(edge, edge).f_vector() == parse_fvector("1,4,6,4,1"));

    SimplicialComplex c = glued_triangles();
    SimplicialComplex trivial = SimplicialComplex::from_facets({}, {});
    CHECK(join(c, trivial).f_vector() == c.f_vector());

    SimplicialComplex pt = SimplicialComplex::from_facets({"p"}, {{"p"}});
    CHECK(join(pt, pt).f_vector() == parse_fvector("1,2,1"));
}

TEST_CASE("hadamard_complex") {
    SimplicialComplex edge =
        SimplicialComplex::from_facets({"1", "2"}, {{"1", "2"}});
    SimplicialComplex tri =
        SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2", "3"}});
    CHECK(hadamard_complex(edge, tri).f_vector() == parse_fvector("1,6,3"));

    SimplicialComplex pt = SimplicialComplex::from_facets({"p"}, {{"p"}});
    CHECK(hadamard_complex(tri, pt).f_vector() == parse_fvector("1,3"));

    SimplicialComplex c = glued_triangles();
    CHECK(hadamard_complex(c, c).f_vector() == parse_fvector("1,16,25,4"));
}

TEST_CASE("dilate_complex") {
    SimplicialComplex edge =
        SimplicialComplex::from_facets({"1", "2"}, {{"1", "2"}});
    CHECK(dilate_complex(edge, 2).f_vector() == parse_fvector("1,4,4"));

    SimplicialComplex c = glued_triangles();
    CHECK(dilate_complex(c, 1).f_vector() == c.f_vector());

    SimplicialComplex tri =
        SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2", "3"}});
    CHECK(dilate_complex(tri, 2).f_vector() == parse_fvector("1,6,12,8"));
}

TEST_CASE("constructions match the coefficient-level operations") {
    SimplicialComplex a = glued_triangles();
    SimplicialComplex b =
        SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2"}, {"3"}});
    CHECK(fpoly(join(a, b)) == poly_product(fpoly(a), fpoly(b)));
    CHECK(fpoly(hadamard_complex(a, b)) == poly_hadamard(fpoly(a), fpoly(b)));
    for (unsigned c = 1; c <= 4; ++c)
        CHECK(fpoly(dilate_complex(a, c)) == poly_dilate(fpoly(a), c));
}

TEST_CASE("link_sum_decomposition") {
    SimplicialComplex tri =
        SimplicialComplex::from_facets({"1", "2", "3"}, {{"1", "2", "3"}});
    LinkSumResult r = link_sum_decomposition(tri);
    CHECK(r.ok);
    REQUIRE(r.betas.size() == 3);
    CHECK(r.betas[0] == AdmissibleVector({0, 1, 2, 1}));
    CHECK(r.certified_sum == parse_fvector("1,6,9,4"));

    SimplicialComplex edge =
        SimplicialComplex::from_facets({"1", "2"}, {{"1", "2"}});
    r = link_sum_decomposition(edge);
    CHECK(r.ok);
    CHECK(r.certified_sum == parse_fvector("1,4,3"));

    SimplicialComplex pt = SimplicialComplex::from_facets({"p"}, {{"p"}});
    r = link_sum_decomposition(pt);
    CHECK(r.ok);
    CHECK(r.certified_sum == parse_fvector("1,2"));
}

TEST_CASE("random_complex") {
    CHECK(random_complex(3, Rat(1), 5).f_vector() == parse_fvector("1,3,3,1"));
    CHECK(random_complex(5, Rat(0), 5).f_vector() == parse_fvector("1,5"));
    SimplicialComplex a = random_complex(6, Rat(1, 2), 42);
    SimplicialComplex b = random_complex(6, Rat(1, 2), 42);
    CHECK(a.f_vector() == b.f_vector());
    CHECK(a.faces() == b.faces());
    CHECK_THROWS_AS(random_complex(20, Rat(1, 2), 1), std::invalid_argument);
}

TEST_CASE("random_complex golden fixture") {
    // generated once from (n=6, density=1/2, seed=42) and frozen
    SimplicialComplex c = random_complex(6, Rat(1, 2), 42);
    CHECK(to_string(c.f_vector()) == "1,6,15,14,4");
    CHECK(format_facets(c) == "1 2 3 4; 1 3 4 5; 1 4 6; 2 3 4 6; 2 4 5 6");
}

TEST_CASE("link sum identity on random complexes") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        SimplicialComplex c = random_complex(7, Rat(1, 3), seed);
        FVector f = c.f_vector();
        std::vector<Int> total(f.entries.size(), Int(0));
        for (const auto& v : c.vertices()) {
            FVector lk = c.link({v}).f_vector();
            for (std::size_t j = 0; j < lk.entries.size(); ++j)
                total[j + 1] += lk.entries[j];
        }
        // sum over vertices of f_{i-1}(lk(v)) = (i+1) f_i
        for (std::size_t j = 1; j < f.entries.size(); ++j)
            CHECK(total[j] == f.entries[j] * Int(j));
    }
}
