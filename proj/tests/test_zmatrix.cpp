#include <doctest.h>

#include "torc/gf2.hpp"
#include "torc/zmatrix.hpp"

using namespace torc;

namespace {

ZMat from_rows(const std::vector<std::vector<long long>>& rows) {
    int nr = static_cast<int>(rows.size());
    int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
    ZMat m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    return m;
}

}  // namespace

TEST_SUITE("zmatrix") {

TEST_CASE("smith normal form of diag(2,3) is (1,6)") {
    SmithResult s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    REQUIRE(s.rank == 2);
    CHECK(s.diagonal == std::vector<Int>{1, 6});
}

TEST_CASE("smith normal form edge cases") {
    CHECK(smith_normal_form(ZMat(3, 4)).rank == 0);
    SmithResult id = smith_normal_form(ZMat::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.diagonal == std::vector<Int>{1, 1, 1});
    SmithResult t = smith_normal_form(from_rows({{2}}));
    CHECK(t.diagonal == std::vector<Int>{2});
}

TEST_CASE("smith normal form with mixed torsion") {
    // diag(4,6) ~ (2,12)
    SmithResult s = smith_normal_form(from_rows({{4, 0}, {0, 6}}));
    CHECK(s.diagonal == std::vector<Int>{2, 12});
    // a dense matrix with known form: [[2,4],[2,2]] has det -4, gcd 2 -> (2,2)
    SmithResult d = smith_normal_form(from_rows({{2, 4}, {2, 2}}));
    CHECK(d.diagonal == std::vector<Int>{2, 2});
}

TEST_CASE("rank over Z vs rank over GF(2)") {
    ZMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank_z(m) == 2);
    // mod 2 the first two rows become (1,0,1) and (0,0,0)
    CHECK(GF2Mat::from_zmat(m).rank() == 2);
    CHECK(GF2Mat::from_zmat(from_rows({{2}})).rank() == 0);
}

TEST_CASE("determinant by fraction-free elimination") {
    CHECK(determinant(from_rows({{3, 1}, {1, 2}})) == 5);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})) == -1);
    CHECK(determinant(from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, 1}})) == 5);
}

TEST_CASE("matrix arithmetic") {
    ZMat a = from_rows({{1, 2}, {0, 1}});
    ZMat b = from_rows({{1, 0}, {3, 1}});
    CHECK((a * b) == from_rows({{7, 2}, {3, 1}}));
    CHECK((a + b) == from_rows({{2, 2}, {3, 2}}));
    CHECK((a - a).is_zero());
    CHECK(a.transposed() == from_rows({{1, 0}, {2, 1}}));
    CHECK(from_rows({{3, 1}, {1, 2}}).equals_mod2(from_rows({{1, 1}, {1, 0}})));
}

TEST_CASE("gf2 reduced lows count ranks of prefix-suffix submatrices") {
    // columns: c0 = e0+e2, c1 = e2, c2 = e0 (over GF(2))
    GF2Mat g(3, 3);
    g.set(0, 0, true);
    g.set(2, 0, true);
    g.set(2, 1, true);
    g.set(0, 2, true);
    auto lows = g.reduced_lows();
    REQUIRE(lows.size() == 3);
    CHECK(lows[0] == 2);
    CHECK(lows[1] == 0);   // c1 cancels against c0 and becomes e0
    CHECK(lows[2] == -1);  // c2 = e0 then collides with the reduced c1
    CHECK(g.rank() == 2);
    // rank of rows >= 1, all columns: lows >= 1 appear once
    int r = 0;
    for (int l : lows)
        if (l >= 1) ++r;
    CHECK(r == 1);
}

TEST_CASE("rational reduced lows") {
    std::vector<std::map<int, Rat>> cols(2);
    cols[0][0] = 1;
    cols[0][1] = 2;
    cols[1][0] = 2;
    cols[1][1] = 4;  // dependent
    auto lows = rational_reduced_lows(cols, 2);
    CHECK(lows[0] == 1);
    CHECK(lows[1] == -1);
}

TEST_CASE("smith rank equals gf2 rank plus even torsion count") {
    ZMat m = from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 1}});
    SmithResult s = smith_normal_form(m);
    int even = 0;
    for (const Int& d : s.diagonal)
        if (d % 2 == 0) ++even;
    CHECK(GF2Mat::from_zmat(m).rank() == s.rank - even);
}

TEST_CASE("random matrices: snf rank matches rational elimination, chain divides") {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 60; ++trial) {
        int nr = 3 + static_cast<int>(next() % 5), nc = 3 + static_cast<int>(next() % 5);
        ZMat m(nr, nc);
        std::vector<std::map<int, Rat>> cols(nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) {
                long long v = static_cast<long long>(next() % 9) - 4;
                if (next() % 3 == 0) v = 0;  // keep it sparse-ish
                if (v != 0) {
                    m.set(i, j, v);
                    cols[j][i] = v;
                }
            }
        SmithResult s = smith_normal_form(m);
        int rational_rank = 0;
        for (int l : rational_reduced_lows(cols, nr))
            if (l >= 0) ++rational_rank;
        CHECK(s.rank == rational_rank);
        for (size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
            CHECK(s.diagonal[i] > 0);
            CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
    }
}

}  // TEST_SUITE
