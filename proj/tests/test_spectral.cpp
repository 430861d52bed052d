#include <doctest.h>

#include "torc/complexes.hpp"
#include "torc/errors.hpp"
#include "torc/reproduce.hpp"
#include "torc/spectral.hpp"

using namespace torc;

namespace {

// ---------------------------------------------------------------------------
// Brute-force page oracle: dense rational row reduction with explicit bases,
// computing dim E^r = dim Z^r - dim(Z^{r-1}_{p-1,q+1} + D Z^{r-1}_{p+r-1,q-r+2})
// directly from the definition. Independent of the rank-count engine.
// ---------------------------------------------------------------------------

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

int q_rank(QMat m) {
    int rank = 0;
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

std::vector<QVec> q_kernel(QMat m, int cols) {
    int rows = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int rr = r; rr < rows; ++rr)
            if (m[rr][c] != 0) {
                piv = rr;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat lead = m[r][c];
        for (int cc = 0; cc < cols; ++cc) m[r][cc] /= lead;
        for (int rr = 0; rr < rows; ++rr) {
            if (rr == r || m[rr][c] == 0) continue;
            Rat f = m[rr][c];
            for (int cc = 0; cc < cols; ++cc) m[rr][cc] -= f * m[r][cc];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<QVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, 0);
        v[c] = 1;
        for (size_t pr = 0; pr < pivot_col.size(); ++pr) v[pivot_col[pr]] = -m[pr][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct BruteOracle {
    const DoubleComplex& dc;

    int imax() const { return dc.pmax + dc.qmax; }
    int fdim(int P, int i) const {
        int f = 0;
        for (int p = 0; p <= std::min(P, dc.pmax); ++p) f += dc.dim(p, i - p);
        return f;
    }
    QMat dense(int i) const {
        ZMat t = dc.total_differential(i);
        QMat m(t.rows(), QVec(t.cols(), 0));
        for (int r = 0; r < t.rows(); ++r)
            for (const auto& [c, v] : t.row(r)) m[r][c] = Rat(v);
        return m;
    }

    // basis of Z^r = {x in F_P Tot_i : Dx in F_{P-r}}, in Tot_i coordinates
    std::vector<QVec> zbasis(int r, int P, int i) const {
        if (P < 0 || i < 0 || i > imax()) return {};
        int f = fdim(P, i), n = dc.total_dim(i);
        if (f == 0) return {};
        std::vector<QVec> ker;
        if (i == 0) {
            for (int c = 0; c < f; ++c) {
                QVec v(f, 0);
                v[c] = 1;
                ker.push_back(std::move(v));
            }
        } else {
            int cut = 0;  // rows of Tot_{i-1} in blocks below P-r+1 are allowed images
            for (int p = 0; p < std::max(0, P - r + 1) && p <= dc.pmax; ++p)
                cut += dc.dim(p, i - 1 - p);
            QMat d = dense(i);
            QMat restricted;
            for (int rr = cut; rr < static_cast<int>(d.size()); ++rr)
                restricted.emplace_back(d[rr].begin(), d[rr].begin() + f);
            if (restricted.empty()) {
                for (int c = 0; c < f; ++c) {
                    QVec v(f, 0);
                    v[c] = 1;
                    ker.push_back(std::move(v));
                }
            } else {
                ker = q_kernel(std::move(restricted), f);
            }
        }
        for (auto& v : ker) v.resize(n, 0);
        return ker;
    }

    long long dimE(int r, int p, int q) const {
        int i = p + q;
        auto numerator = zbasis(r, p, i);
        QMat denominator;
        for (auto& v : zbasis(r - 1, p - 1, i)) denominator.push_back(std::move(v));
        auto upstairs = zbasis(r - 1, p + r - 1, i + 1);
        if (!upstairs.empty()) {
            QMat d = dense(i + 1);
            for (const auto& v : upstairs) {
                QVec w(dc.total_dim(i), 0);
                for (int rr = 0; rr < dc.total_dim(i); ++rr)
                    for (size_t cc = 0; cc < v.size(); ++cc)
                        if (d[rr][cc] != 0 && v[cc] != 0) w[rr] += d[rr][cc] * v[cc];
                denominator.push_back(std::move(w));
            }
        }
        return static_cast<long long>(numerator.size()) - q_rank(std::move(denominator));
    }
};

void compare_pages_with_oracle(const DoubleComplex& dc) {
    SpectralPages pg = pages(dc, Coeff::Q);
    BruteOracle oracle{dc};
    for (int r = 1; r <= pg.r_stop; ++r)
        for (int p = 0; p <= pg.pmax; ++p)
            for (int q = 0; q <= pg.qmax; ++q) {
                CAPTURE(r);
                CAPTURE(p);
                CAPTURE(q);
                CHECK(pg.dim(r, p, q) == oracle.dimE(r, p, q));
            }
}

CoverModel circle_pair_model() {
    // two circles glued at a point: nerve is one edge
    CoverModel cm;
    cm.coeff = Coeff::Z;
    cm.context = CoverModel::Context::Custom;
    cm.nerve = SimplicialComplex::from_maximal({{"A", "B"}});
    cm.piece_space.emplace(SimplexKey{0}, StandardSpace::circle());
    cm.piece_space.emplace(SimplexKey{1}, StandardSpace::circle());
    cm.piece_space.emplace(SimplexKey{0, 1}, StandardSpace::point());
    for (const auto& [key, space] : cm.piece_space) cm.piece.emplace(key, standard_complex(space, Coeff::Z));
    cm.face_maps.emplace(std::make_pair(SimplexKey{0, 1}, SimplexKey{0}),
                         inclusion_chain_map(StandardSpace::point(), StandardSpace::circle(), Coeff::Z));
    cm.face_maps.emplace(std::make_pair(SimplexKey{0, 1}, SimplexKey{1}),
                         inclusion_chain_map(StandardSpace::point(), StandardSpace::circle(), Coeff::Z));
    return cm;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("single-piece nerve reproduces the piece") {
    CoverModel cm;
    cm.coeff = Coeff::Z;
    cm.context = CoverModel::Context::Custom;
    cm.nerve = SimplicialComplex::from_maximal({{"A"}});
    cm.piece_space.emplace(SimplexKey{0}, StandardSpace::circle().times(StandardSpace::circle()));
    cm.piece.emplace(SimplexKey{0}, standard_complex(cm.piece_space.at(SimplexKey{0}), Coeff::Z));

    DoubleComplex dc = double_complex(cm);
    CHECK(dc.pmax == 0);
    CHECK(dc.dims[0] == std::vector<int>{1, 2, 1});
    CHECK(total_homology(dc, Coeff::Z).betti == std::vector<int>{1, 2, 1});

    SpectralPages pg = pages(dc, Coeff::Q);
    CHECK(pg.stabilization_page == 1);
    CHECK(pg.dim(1, 0, 0) == 1);
    CHECK(pg.dim(1, 0, 1) == 2);
    CHECK(pg.dim(1, 0, 2) == 1);
    CHECK(pg.dim(2, 0, 1) == 2);  // E^infinity equals E^1 here
}

TEST_CASE("two circles glued at a point") {
    DoubleComplex dc = double_complex(circle_pair_model());
    HomologyResult h = total_homology(dc, Coeff::Z);
    CHECK(trim_zeros(h.betti) == std::vector<int>{1, 2});

    SpectralPages pg = pages(dc, Coeff::Q);
    CHECK(pg.dim(1, 0, 0) == 2);
    CHECK(pg.dim(1, 1, 0) == 1);
    CHECK(pg.dim(1, 0, 1) == 2);
    CHECK(pg.dim(2, 0, 0) == 1);
    CHECK(pg.dim(2, 1, 0) == 0);
    CHECK(pg.dim(2, 0, 1) == 2);
    CHECK(convergence_report(pg, total_homology(dc, Coeff::Q)).pass);
}

TEST_CASE("polygon model homology tables") {
    CHECK(trim_zeros(total_homology(double_complex(polygon_cover_model(3, 1, Coeff::Z)), Coeff::Z).betti) ==
          std::vector<int>{1, 7});
    CHECK(trim_zeros(total_homology(double_complex(polygon_cover_model(5, 2, Coeff::Z)), Coeff::Z).betti) ==
          std::vector<int>{1, 1, 10, 0, 10});
    HomologyResult h41 = total_homology(double_complex(polygon_cover_model(4, 1, Coeff::Z)), Coeff::Z);
    CHECK(trim_zeros(h41.betti) == std::vector<int>{1, 9, 4});
    CHECK(h41.torsion_free());
}

TEST_CASE("simplex model over Z2") {
    DoubleComplex dc = double_complex(simplex_cover_model(2, 1));
    CHECK(trim_zeros(total_homology(dc, Coeff::Z2).betti) == std::vector<int>{1, 7});
}

TEST_CASE("pages of the square model over Q") {
    DoubleComplex dc = double_complex(polygon_cover_model(4, 1, Coeff::Q));
    CHECK(dc.dim(0, 2) == 4);  // one torus top cell per nerve vertex
    SpectralPages pg = pages(dc, Coeff::Q);
    CHECK(pg.dim(2, 0, 1) == 8);
    CHECK(pg.dim(2, 1, 1) == 0);
    CHECK(pg.stabilization_page == 2);
}

TEST_CASE("first page is the blockwise piece homology") {
    CoverModel cm = polygon_cover_model(5, 1, Coeff::Q);
    DoubleComplex dc = double_complex(cm);
    SpectralPages pg = pages(dc, Coeff::Q);
    for (int p = 0; p <= dc.pmax; ++p)
        for (int q = 0; q <= dc.qmax; ++q) {
            int expected = 0;
            for (const auto& a : cm.nerve.simplices[p]) {
                HomologyResult h = homology(cm.piece_of(a));
                if (q <= cm.piece_of(a).top_degree()) expected += h.betti[q];
            }
            CHECK(pg.dim(1, p, q) == expected);
        }

    CoverModel sm = simplex_cover_model(3, 1);
    DoubleComplex sdc = double_complex(sm);
    SpectralPages spg = pages(sdc, Coeff::Z2);
    for (int p = 0; p <= sdc.pmax; ++p)
        for (int q = 0; q <= sdc.qmax; ++q) {
            int expected = 0;
            for (const auto& a : sm.nerve.simplices[p]) {
                HomologyResult h = homology(sm.piece_of(a));
                if (q <= sm.piece_of(a).top_degree()) expected += h.betti[q];
            }
            CHECK(spg.dim(1, p, q) == expected);
        }
}

TEST_CASE("bottom row of the second page is the nerve homology") {
    for (int m : {4, 6}) {
        CoverModel cm = polygon_cover_model(m, 1, Coeff::Q);
        DoubleComplex dc = double_complex(cm);
        SpectralPages pg = pages(dc, Coeff::Q);
        std::vector<int> nerve_betti = betti(cm.nerve, Coeff::Q);
        for (int p = 0; p <= dc.pmax; ++p) {
            int expected = p < static_cast<int>(nerve_betti.size()) ? nerve_betti[p] : 0;
            CHECK(pg.dim(2, p, 0) == expected);
        }
    }
}

TEST_CASE("euler characteristic is conserved through the pages") {
    DoubleComplex dc = double_complex(polygon_cover_model(6, 1, Coeff::Q));
    long long chi_d = 0;
    for (int p = 0; p <= dc.pmax; ++p)
        for (int q = 0; q <= dc.qmax; ++q)
            chi_d += ((p + q) % 2 == 0) ? dc.dim(p, q) : -dc.dim(p, q);
    SpectralPages pg = pages(dc, Coeff::Q);
    for (int r = 1; r <= pg.r_stop; ++r) {
        long long chi_r = 0;
        for (int p = 0; p <= pg.pmax; ++p)
            for (int q = 0; q <= pg.qmax; ++q)
                chi_r += ((p + q) % 2 == 0) ? pg.dim(r, p, q) : -pg.dim(r, p, q);
        CHECK(chi_r == chi_d);
    }
}

TEST_CASE("convergence and collapse for small models") {
    for (int m : {3, 4, 5}) {
        for (int d : {1, 2}) {
            DoubleComplex dcq = double_complex(polygon_cover_model(m, d, Coeff::Q));
            SpectralPages pq = pages(dcq, Coeff::Q);
            CHECK(convergence_report(pq, total_homology(dcq, Coeff::Q)).pass);
            CHECK(pq.stabilization_page <= 2);

            DoubleComplex dc2 = double_complex(polygon_cover_model(m, d, Coeff::Z2));
            SpectralPages p2 = pages(dc2, Coeff::Z2);
            CHECK(convergence_report(p2, total_homology(dc2, Coeff::Z2)).pass);
            CHECK(p2.stabilization_page <= 2);
        }
    }
}

TEST_CASE("second page of simplex models matches the chain band homology") {
    int n = 3;
    DoubleComplex dc = double_complex(simplex_cover_model(n, 1));
    SpectralPages pg = pages(dc, Coeff::Z2);
    for (int p = 0; p <= pg.pmax; ++p)
        for (int q = 0; q <= pg.qmax; ++q) {
            int expected = 0;
            for (int i = 0; i <= q; ++i) {
                int j = q - i;
                if (i + j + 1 > n) continue;
                std::vector<int> b = betti(k_ij(n, i, j).complex, Coeff::Z2);
                if (p < static_cast<int>(b.size())) expected += b[p];
            }
            CHECK(pg.dim(2, p, q) == expected);
            CHECK(pg.dim(2, p, q) == expected_simplex_e2(n, p, q));
        }
}

TEST_CASE("d=1 and d=2 second pages match dimensionwise") {
    CHECK(theorem15_check_polygon(4).pass);
    CHECK(theorem15_check_polygon(6).pass);
    CHECK(theorem15_check_simplex(2).pass);
    CHECK(theorem15_check_simplex(3).pass);
}

TEST_CASE("a zig-zag double complex stabilizes only at page 3") {
    // D_{2,0} = <a>, D_{1,0} = <b>, D_{1,1} = <c>, D_{0,1} = <d> with
    // d2(a) = b, d1(c) = b, d2(c) = d. The only page-2 survivors are (2,0)
    // and (0,1), and the second-page differential between them is an
    // isomorphism, so everything dies at page 3.
    DoubleComplex dc;
    dc.coeff = Coeff::Q;
    dc.pmax = 2;
    dc.qmax = 1;
    dc.dims = {{0, 1}, {1, 1}, {1, 0}};
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 1; ++q) {
            dc.d1[{p, q}] = ZMat(q >= 1 ? dc.dims[p][q - 1] : 0, dc.dims[p][q]);
            dc.d2[{p, q}] = ZMat(p >= 1 ? dc.dims[p - 1][q] : 0, dc.dims[p][q]);
        }
    dc.d2.at({2, 0}).set(0, 0, 1);  // a -> b
    dc.d1.at({1, 1}).set(0, 0, 1);  // c -> b
    dc.d2.at({1, 1}).set(0, 0, 1);  // c -> d
    dc.validate();

    HomologyResult total = total_homology(dc, Coeff::Q);
    CHECK(trim_zeros(total.betti).empty());

    SpectralPages pg = pages(dc, Coeff::Q);
    CHECK(pg.dim(1, 2, 0) == 1);
    CHECK(pg.dim(1, 0, 1) == 1);
    CHECK(pg.dim(1, 1, 0) == 0);
    CHECK(pg.dim(1, 1, 1) == 0);
    CHECK(pg.dim(2, 2, 0) == 1);
    CHECK(pg.dim(2, 0, 1) == 1);
    CHECK(pg.dim(3, 2, 0) == 0);
    CHECK(pg.dim(3, 0, 1) == 0);
    CHECK(pg.stabilization_page == 3);
    CHECK(convergence_report(pg, total).pass);

    SpectralPages pg2 = pages(dc, Coeff::Z2);
    CHECK(pg2.stabilization_page == 3);
}

TEST_CASE("rank-count pages agree with the explicit subquotient oracle") {
    compare_pages_with_oracle(double_complex(polygon_cover_model(3, 1, Coeff::Q)));
    compare_pages_with_oracle(double_complex(polygon_cover_model(4, 1, Coeff::Q)));
    compare_pages_with_oracle(double_complex(polygon_cover_model(5, 2, Coeff::Q)));
    compare_pages_with_oracle(double_complex(simplex_cover_model(2, 2, Coeff::Q)));
    compare_pages_with_oracle(double_complex(simplex_cover_model(3, 2, Coeff::Q)));
    compare_pages_with_oracle(double_complex(circle_pair_model()));

    // tensor products of chain complexes give double complexes directly; use
    // one whose columns have nonzero boundaries
    DoubleComplex dc;
    dc.coeff = Coeff::Q;
    dc.qmax = 1;
    // columns: chains of a path a-b-c; rows: chains of a single edge
    // D_{p,q} = C_p(path) (x) C_q(edge), d2 = del (x) 1, d1 = 1 (x) del
    std::vector<int> path_dims{3, 2};
    std::vector<int> edge_dims{2, 1};
    ZMat del_path(3, 2);  // edges ab, bc with vertices a,b,c
    del_path.set(0, 0, -1);
    del_path.set(1, 0, 1);
    del_path.set(1, 1, -1);
    del_path.set(2, 1, 1);
    ZMat del_edge(2, 1);
    del_edge.set(0, 0, -1);
    del_edge.set(1, 0, 1);
    dc.pmax = 1;
    dc.dims = {{path_dims[0] * edge_dims[0], path_dims[0] * edge_dims[1]},
               {path_dims[1] * edge_dims[0], path_dims[1] * edge_dims[1]}};
    for (int p = 0; p <= 1; ++p)
        for (int q = 0; q <= 1; ++q) {
            ZMat m1(q >= 1 ? dc.dims[p][q - 1] : 0, dc.dims[p][q]);
            ZMat m2(p >= 1 ? dc.dims[p - 1][q] : 0, dc.dims[p][q]);
            for (int pa = 0; pa < path_dims[p]; ++pa)
                for (int qa = 0; qa < edge_dims[q]; ++qa) {
                    int col = pa * edge_dims[q] + qa;
                    if (q >= 1)
                        for (int rq = 0; rq < edge_dims[q - 1]; ++rq) {
                            const Int& v = del_edge.at(rq, qa);  // d1 and d2 commute as given
                            if (v != 0) m1.add(pa * edge_dims[q - 1] + rq, col, v);
                        }
                    if (p >= 1)
                        for (int rp = 0; rp < path_dims[p - 1]; ++rp) {
                            const Int& v = del_path.at(rp, pa);
                            if (v != 0) m2.add(rp * edge_dims[q] + qa, col, v);
                        }
                }
            dc.d1[{p, q}] = std::move(m1);
            dc.d2[{p, q}] = std::move(m2);
        }
    dc.validate();
    // path x edge is contractible
    CHECK(trim_zeros(total_homology(dc, Coeff::Q).betti) == std::vector<int>{1});
    compare_pages_with_oracle(dc);
}

TEST_CASE("pages demand field coefficients") {
    DoubleComplex dc = double_complex(polygon_cover_model(3, 1, Coeff::Z));
    CHECK_THROWS_AS(pages(dc, Coeff::Z), NonFieldCoefficients);
    DoubleComplex dc2 = double_complex(simplex_cover_model(2, 1));
    CHECK_THROWS_AS(pages(dc2, Coeff::Q), CoefficientMismatch);
}

}  // TEST_SUITE
