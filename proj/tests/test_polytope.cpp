#include <doctest.h>

#include "torc/errors.hpp"
#include "torc/json_io.hpp"
#include "torc/polytope.hpp"

using namespace torc;

namespace {

std::vector<int> face_count_by_dim(const SimplePolytope& p) {
    std::vector<int> counts(p.dim() + 1, 0);
    for (const Face& f : p.faces()) ++counts[f.dim];
    return counts;
}

}  // namespace

TEST_SUITE("polytope") {

TEST_CASE("triangle lattice from facets") {
    SimplePolytope t = build_polytope({{"a", "b"}, {"b", "c"}, {"a", "c"}}, 2);
    CHECK(face_count_by_dim(t) == std::vector<int>{3, 3, 1});
    CHECK(t.vertex_labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(t.face_label(t.facets()[0]) == "F1");
    CHECK(t.face_label({0, 1, 2}) == "P");
    CHECK(t.face_label({1}) == "{b}");
}

TEST_CASE("square is simple, octahedron is not") {
    CHECK_NOTHROW(build_polytope({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}}, 2));
    // octahedron: every vertex lies in 4 of the 8 triangles
    std::vector<std::vector<std::string>> oct = {{"1", "3", "5"}, {"1", "3", "6"}, {"1", "4", "5"},
                                                 {"1", "4", "6"}, {"2", "3", "5"}, {"2", "3", "6"},
                                                 {"2", "4", "5"}, {"2", "4", "6"}};
    CHECK_THROWS_AS(build_polytope(oct, 3), NotSimple);
}

TEST_CASE("generators") {
    CHECK(ngon(5).vertex_count() == 5);
    CHECK(ngon(5).facet_count() == 5);
    CHECK_THROWS_AS(ngon(2), BadParameter);
    CHECK(simplex(1).vertex_count() == 2);
    CHECK(simplex(3).facet_count() == 4);
    CHECK_THROWS_AS(simplex(0), BadParameter);
    CHECK(cube(3).vertex_count() == 8);
    CHECK(cube(3).facet_count() == 6);
}

TEST_CASE("f-vectors") {
    FVector f3 = f_vector(simplex(3));
    REQUIRE(f3.entries.size() == 3);
    CHECK(f3.entries == std::vector<Int>{4, 6, 4});
    CHECK(f_vector(ngon(5)).entries == std::vector<Int>{5, 5});
    CHECK(f_vector(cube(3)).entries == std::vector<Int>{6, 12, 8});
}

TEST_CASE("h-polynomials") {
    CHECK(h_polynomial(ngon(5)).coeffs == std::vector<Int>{1, 3, 1});
    for (int n = 1; n <= 5; ++n) {
        HPolynomial h = h_polynomial(simplex(n));
        CHECK(h.coeffs == std::vector<Int>(n + 1, 1));
    }
    CHECK(eval_h(h_polynomial(simplex(2)), -3) == 7);
}

TEST_CASE("h-vector invariants across generated families") {
    std::vector<SimplePolytope> family;
    for (int m = 3; m <= 9; ++m) family.push_back(ngon(m));
    for (int n = 1; n <= 5; ++n) family.push_back(simplex(n));
    family.push_back(cube(2));
    family.push_back(cube(3));
    for (const SimplePolytope& p : family) {
        HPolynomial h = h_polynomial(p);
        int n = p.dim();
        CHECK(h.coeffs.front() == 1);
        CHECK(h.coeffs.back() == 1);
        for (int i = 0; i <= n; ++i) CHECK(h.coeffs[i] == h.coeffs[n - i]);
        CHECK(eval_h(h, 1) == p.vertex_count());

        // defining identity: h(t) = (t-1)^n + sum_i f_i (t-1)^{n-1-i},
        // evaluated directly at several points
        FVector f = f_vector(p);
        for (Int t = -3; t <= 3; ++t) {
            Int rhs = ipow(t - 1, n);
            for (int i = 0; i < n; ++i) rhs += f.entries[i] * ipow(t - 1, n - 1 - i);
            CHECK(eval_h(h, t) == rhs);
        }

        // Euler's relation for the natural cell structure: one i-cell per
        // i-face plus the open top cell
        Int alternating = (n % 2 == 0) ? 1 : -1;
        for (int i = 0; i < n; ++i) {
            Int faces_dim_i = f.entries[n - i - 1];
            alternating += (i % 2 == 0) ? faces_dim_i : -faces_dim_i;
        }
        CHECK(alternating == 1);
    }
}

TEST_CASE("characteristic function validation") {
    SimplePolytope d2 = simplex(2);
    // facets of simplex(2) in construction order: {1,2}, {0,2}, {0,1}
    CharacteristicFunction ok{1, {{1, 0}, {0, 1}, {1, 1}}};
    CHECK(validate_characteristic_function(d2, ok).valid);

    CharacteristicFunction bad{1, {{1, 0}, {0, 1}, {1, 0}}};
    CharFnReport rep = validate_characteristic_function(d2, bad);
    CHECK_FALSE(rep.valid);
    // facets 1 and 3 share vertex "1"; that is where the basis condition fails
    for (const auto& [vertex, pass] : rep.per_vertex) CHECK(pass == (vertex != "1"));

    SimplePolytope sq = ngon(4);
    CharacteristicFunction prod{2, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}};
    CHECK(validate_characteristic_function(sq, prod).valid);

    CHECK_THROWS_AS(validate_characteristic_function(d2, CharacteristicFunction{1, {{1, 0}}}),
                    DimensionMismatch);
}

TEST_CASE("diagonal preimage cell vectors") {
    auto [cv, chi] = diagonal_preimage_cell_vector(simplex(2), 1, 2);
    CHECK(cv.counts == std::vector<Int>{3, 12, 16});
    CHECK(chi == 7);
    CHECK(chi == eval_h(h_polynomial(simplex(2)), -3));

    auto [cv1, chi1] = diagonal_preimage_cell_vector(simplex(2), 1, 1);
    CHECK(chi1 == 1);

    for (int ell = 1; ell <= 3; ++ell) {
        auto [cv2, chi2] = diagonal_preimage_cell_vector(ngon(6), 2, ell);
        CHECK(chi2 == 6);  // the vertex count, independent of ell
    }
    CHECK_THROWS_AS(diagonal_preimage_cell_vector(simplex(2), 1, 0), BadParameter);
    CHECK_THROWS_AS(diagonal_preimage_cell_vector(simplex(2), 3, 1), BadParameter);
}

TEST_CASE("diagonal preimage Euler characteristic equals h(1 - 2^ell)") {
    std::vector<SimplePolytope> family;
    for (int m = 3; m <= 8; ++m) family.push_back(ngon(m));
    for (int n = 2; n <= 4; ++n) family.push_back(simplex(n));
    for (const SimplePolytope& p : family) {
        HPolynomial h = h_polynomial(p);
        for (int ell = 1; ell <= 6; ++ell) {
            auto [cv, chi] = diagonal_preimage_cell_vector(p, 1, ell);
            CHECK(chi == eval_h(h, 1 - pow2(ell)));
        }
    }
}

TEST_CASE("polytope json round trip") {
    SimplePolytope p = ngon(4);
    json j = polytope_to_json(p, true);
    CHECK(j["vertices"] == json::array({"v1", "v2", "v3", "v4"}));
    CHECK(j["faces"].size() == p.faces().size());
    SimplePolytope q = polytope_from_json(j);
    CHECK(q.dim() == p.dim());
    CHECK(q.vertex_labels() == p.vertex_labels());
    CHECK(q.facets() == p.facets());

    json bad = j;
    bad["vertices"].push_back("v9");
    CHECK_THROWS_AS(polytope_from_json(bad), BadParameter);
}

}  // TEST_SUITE
