#include "torc/spectral.hpp"

#include <algorithm>

#include "torc/errors.hpp"
#include "torc/gf2.hpp"

namespace torc {

int DoubleComplex::total_dim(int i) const {
    int total = 0;
    for (int p = 0; p <= pmax; ++p) total += dim(p, i - p);
    return total;
}

void DoubleComplex::validate() const {
    auto zero = [&](const ZMat& m) { return coeff == Coeff::Z2 ? m.is_zero_mod2() : m.is_zero(); };
    auto equal = [&](const ZMat& a, const ZMat& b) {
        return coeff == Coeff::Z2 ? a.equals_mod2(b) : a == b;
    };
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
            if (dim(p, q) == 0) continue;
            if (q >= 2 && !zero(d1.at({p, q - 1}) * d1.at({p, q})))
                throw ValidationFailed("d1 d1 != 0");
            if (p >= 2 && !zero(d2.at({p - 1, q}) * d2.at({p, q})))
                throw ValidationFailed("d2 d2 != 0");
            if (p >= 1 && q >= 1 && !equal(d1.at({p - 1, q}) * d2.at({p, q}),
                                           d2.at({p, q - 1}) * d1.at({p, q})))
                throw ValidationFailed("d1 d2 != d2 d1");
        }
}

ZMat DoubleComplex::total_differential(int i) const {
    std::vector<int> col_offset(pmax + 2, 0), row_offset(pmax + 2, 0);
    for (int p = 0; p <= pmax; ++p) col_offset[p + 1] = col_offset[p] + dim(p, i - p);
    for (int p = 0; p <= pmax; ++p) row_offset[p + 1] = row_offset[p] + dim(p, i - 1 - p);

    ZMat t(row_offset[pmax + 1], col_offset[pmax + 1]);
    for (int p = 0; p <= pmax; ++p) {
        int q = i - p;
        if (q < 0 || q > qmax || dim(p, q) == 0) continue;
        if (q >= 1 && dim(p, q - 1) > 0) {
            const ZMat& b = d1.at({p, q});
            for (int r = 0; r < b.rows(); ++r)
                for (const auto& [c, v] : b.row(r)) t.add(row_offset[p] + r, col_offset[p] + c, v);
        }
        if (p >= 1 && dim(p - 1, q) > 0) {
            const ZMat& b = d2.at({p, q});
            bool flip = (q % 2 != 0);  // total differential d1 + (-1)^q d2
            for (int r = 0; r < b.rows(); ++r)
                for (const auto& [c, v] : b.row(r))
                    t.add(row_offset[p - 1] + r, col_offset[p] + c, flip ? -v : v);
        }
    }
    return t;
}

DoubleComplex double_complex(const CoverModel& cm) {
    CoverValidation v = validate_cover_model(cm);
    if (!v.pass) {
        std::string msg = "cover model validation failed";
        if (!v.failures.empty()) msg += ": " + v.failures.front();
        throw ValidationFailed(msg);
    }

    DoubleComplex dc;
    dc.coeff = cm.coeff;
    dc.pmax = cm.nerve.dim();
    dc.qmax = 0;
    for (const auto& [key, piece] : cm.piece) dc.qmax = std::max(dc.qmax, piece.top_degree());

    dc.dims.assign(dc.pmax + 1, std::vector<int>(dc.qmax + 1, 0));
    dc.labels.assign(dc.pmax + 1,
                     std::vector<std::vector<std::string>>(dc.qmax + 1));

    // Block offsets per (p, q): nerve simplices in their canonical order.
    std::map<SimplexKey, int> block_offset_at_q;  // reused per (p,q)
    auto simplex_name = [&](const SimplexKey& a) {
        std::string s;
        for (size_t i = 0; i < a.size(); ++i) s += (i ? "<" : "") + cm.nerve.vertices[a[i]];
        return s;
    };

    std::vector<std::map<SimplexKey, std::vector<int>>> offsets(dc.pmax + 1);
    for (int p = 0; p <= dc.pmax; ++p) {
        for (int q = 0; q <= dc.qmax; ++q) {
            int off = 0;
            for (const auto& a : cm.nerve.simplices[p]) {
                const ChainComplex& piece = cm.piece_of(a);
                if (q == 0) offsets[p][a] = std::vector<int>(dc.qmax + 1, 0);
                offsets[p][a][q] = off;
                int d = piece.dim_at(q);
                for (int c = 0; c < d; ++c)
                    dc.labels[p][q].push_back(simplex_name(a) + "|" + piece.basis[q][c]);
                off += d;
            }
            dc.dims[p][q] = off;
        }
    }

    for (int p = 0; p <= dc.pmax; ++p)
        for (int q = 0; q <= dc.qmax; ++q) {
            ZMat m1(q >= 1 ? dc.dims[p][q - 1] : 0, dc.dims[p][q]);
            ZMat m2(p >= 1 ? dc.dims[p - 1][q] : 0, dc.dims[p][q]);
            for (const auto& a : cm.nerve.simplices[p]) {
                const ChainComplex& piece = cm.piece_of(a);
                int col0 = offsets[p].at(a)[q];
                if (piece.dim_at(q) == 0) continue;
                if (q >= 1 && piece.dim_at(q - 1) > 0) {
                    const ZMat& b = piece.boundary[q];
                    int row0 = offsets[p].at(a)[q - 1];
                    for (int r = 0; r < b.rows(); ++r)
                        for (const auto& [c, v] : b.row(r)) m1.add(row0 + r, col0 + c, v);
                }
                if (p >= 1) {
                    for (size_t drop = 0; drop < a.size(); ++drop) {
                        SimplexKey b;
                        b.reserve(a.size() - 1);
                        for (size_t i = 0; i < a.size(); ++i)
                            if (i != drop) b.push_back(a[i]);
                        const ChainMap& f = cm.face_map_of(a, b);
                        if (q >= static_cast<int>(f.mats.size())) continue;
                        const ZMat& fm = f.mats[q];
                        int row0 = offsets[p - 1].at(b)[q];
                        int sign = (drop % 2 == 0) ? 1 : -1;
                        for (int r = 0; r < fm.rows(); ++r)
                            for (const auto& [c, v] : fm.row(r))
                                m2.add(row0 + r, col0 + c, sign > 0 ? v : -v);
                    }
                }
            }
            dc.d1[{p, q}] = std::move(m1);
            dc.d2[{p, q}] = std::move(m2);
        }

    dc.validate();
    return dc;
}

HomologyResult total_homology(const DoubleComplex& dc, Coeff coeff) {
    int imax = dc.pmax + dc.qmax;
    std::vector<int> rank(imax + 2, 0);
    std::vector<std::vector<Int>> torsion_from(imax + 2);
    for (int i = 1; i <= imax; ++i) {
        ZMat t = dc.total_differential(i);
        if (coeff == Coeff::Z2) {
            rank[i] = GF2Mat::from_zmat(t).rank();
        } else {
            SmithResult snf = smith_normal_form(t);
            rank[i] = snf.rank;
            if (coeff == Coeff::Z)
                for (const Int& d : snf.diagonal)
                    if (d > 1) torsion_from[i].push_back(d);
        }
    }
    HomologyResult res;
    res.betti.resize(imax + 1);
    res.torsion.resize(imax + 1);
    for (int i = 0; i <= imax; ++i) {
        res.betti[i] = dc.total_dim(i) - rank[i] - rank[i + 1];
        res.torsion[i] = torsion_from[i + 1];
    }
    return res;
}

namespace {

// Reduced form of one total differential with block bookkeeping: supports
// rank queries over (column blocks <= P, row blocks >= U).
struct ReducedDifferential {
    int nblocks = 0;
    std::vector<std::vector<long long>> count;  // [P][lb+1]: cols in block <= P with low block lb

    // rank of the submatrix on columns in blocks <= P and rows in blocks >= U
    long long rank(int P, int U) const {
        if (P < 0) return 0;
        P = std::min(P, nblocks - 1);
        U = std::max(U, 0);
        long long r = 0;
        for (int lb = U; lb < nblocks; ++lb) r += count[P][lb + 1];
        return r;
    }
};

ReducedDifferential reduce_total_differential(const DoubleComplex& dc, int i, Coeff field) {
    ReducedDifferential rd;
    rd.nblocks = dc.pmax + 1;

    std::vector<int> colblock, rowblock_start(dc.pmax + 2, 0);
    for (int p = 0; p <= dc.pmax; ++p) {
        int d = dc.dim(p, i - p);
        for (int c = 0; c < d; ++c) colblock.push_back(p);
    }
    for (int p = 0; p <= dc.pmax; ++p)
        rowblock_start[p + 1] = rowblock_start[p] + dc.dim(p, i - 1 - p);
    auto rowblock_of = [&](int r) {
        int p = 0;
        while (rowblock_start[p + 1] <= r) ++p;
        return p;
    };

    ZMat t = dc.total_differential(i);
    std::vector<int> lows;
    if (field == Coeff::Z2) {
        lows = GF2Mat::from_zmat(t).reduced_lows();
    } else {
        std::vector<std::map<int, Rat>> cols(t.cols());
        for (int r = 0; r < t.rows(); ++r)
            for (const auto& [c, v] : t.row(r)) cols[c][r] = Rat(v);
        lows = rational_reduced_lows(std::move(cols), t.rows());
    }

    rd.count.assign(dc.pmax + 1, std::vector<long long>(dc.pmax + 2, 0));
    for (size_t j = 0; j < lows.size(); ++j) {
        int lb = lows[j] < 0 ? -1 : rowblock_of(lows[j]);
        rd.count[colblock[j]][lb + 1] += 1;
    }
    // prefix over column blocks
    for (int p = 1; p <= dc.pmax; ++p)
        for (int lb = 0; lb <= dc.pmax + 1; ++lb) rd.count[p][lb] += rd.count[p - 1][lb];
    return rd;
}

}  // namespace

int SpectralPages::dim(int r, int p, int q) const {
    if (r < 1) throw BadParameter("pages start at r = 1");
    int rr = std::min(r, r_stop);
    if (p < 0 || p > pmax || q < 0 || q > qmax) return 0;
    return page[rr - 1][p][q];
}

SpectralPages pages(const DoubleComplex& dc, Coeff field, int r_max) {
    if (field == Coeff::Z) throw NonFieldCoefficients("pages are computed over Q or Z2");
    if (dc.coeff == Coeff::Z2 && field != Coeff::Z2)
        throw CoefficientMismatch("a Z2 double complex only supports Z2 pages");

    SpectralPages pg;
    pg.coeff = field;
    pg.pmax = std::max(dc.pmax, 0);
    pg.qmax = std::max(dc.qmax, 0);
    int imax = dc.pmax + dc.qmax;

    std::vector<ReducedDifferential> reduced(imax + 1);
    for (int i = 1; i <= imax; ++i) reduced[i] = reduce_total_differential(dc, i, field);

    // dim Z^r_{P,*} inside F_P Tot_i: cut the reduced differential at
    // column prefix P and row suffix P - r + 1. Degree 0 has no outgoing
    // differential, so Z^r = F_P Tot_0 there.
    auto z = [&](int r, int P, int i) -> long long {
        if (P < 0 || i < 0 || i > imax) return 0;
        long long f = 0;
        for (int p = 0; p <= std::min(P, dc.pmax); ++p) f += dc.dim(p, i - p);
        if (i == 0) return f;
        return f - reduced[i].rank(P, P - r + 1);
    };

    // All differentials out of or into the first quadrant vanish for
    // r > pmax, so page pmax+1 is already E^infinity.
    int r_stop = std::max(2, dc.pmax + 1);
    if (r_max > 0) r_stop = std::max(r_stop, std::min(r_max, dc.pmax + 4));
    pg.r_stop = r_stop;
    pg.page.assign(r_stop, std::vector<std::vector<int>>(pg.pmax + 1, std::vector<int>(pg.qmax + 1, 0)));

    for (int r = 1; r <= r_stop; ++r)
        for (int p = 0; p <= pg.pmax; ++p)
            for (int q = 0; q <= pg.qmax; ++q) {
                int i = p + q;
                long long dim_e = z(r, p, i) - z(r - 1, p - 1, i) -
                                  z(r - 1, p + r - 1, i + 1) + z(r, p + r - 1, i + 1);
                if (dim_e < 0) throw Error("negative page dimension (internal error)");
                pg.page[r - 1][p][q] = static_cast<int>(dim_e);
                if (r >= 2 && pg.page[r - 1][p][q] > pg.page[r - 2][p][q])
                    throw Error("page dimensions increased (internal error)");
            }

    pg.stabilization_page = r_stop;
    for (int r = r_stop - 1; r >= 1; --r) {
        if (pg.page[r - 1] == pg.page[r_stop - 1])
            pg.stabilization_page = r;
        else
            break;
    }
    return pg;
}

ConvergenceReport convergence_report(const SpectralPages& pg, const HomologyResult& total) {
    ConvergenceReport rep;
    int imax = pg.pmax + pg.qmax;
    rep.total_by_degree.assign(imax + 1, 0);
    rep.einf_sum_by_degree.assign(imax + 1, 0);
    for (int i = 0; i <= imax; ++i) {
        rep.total_by_degree[i] = i < static_cast<int>(total.betti.size()) ? total.betti[i] : 0;
        int sum = 0;
        for (int p = 0; p <= pg.pmax; ++p) {
            int q = i - p;
            if (q >= 0 && q <= pg.qmax) sum += pg.einf()[p][q];
        }
        rep.einf_sum_by_degree[i] = sum;
    }
    rep.collapse_page = pg.stabilization_page;
    rep.pass = rep.total_by_degree == rep.einf_sum_by_degree;
    return rep;
}

namespace {

Thm15Report theorem15_compare(const DoubleComplex& dc1, const DoubleComplex& dc2) {
    SpectralPages pg1 = pages(dc1, Coeff::Z2);
    SpectralPages pg2 = pages(dc2, Coeff::Z2);

    Thm15Report rep;
    rep.pass = true;
    rep.pmax = std::max(pg1.pmax, pg2.pmax);
    rep.qmax = std::max(pg1.qmax, (pg2.qmax + 1) / 2);
    rep.e2_d1.assign(rep.pmax + 1, std::vector<int>(rep.qmax + 1, 0));
    rep.e2_d2.assign(rep.pmax + 1, std::vector<int>(rep.qmax + 1, 0));

    for (int p = 0; p <= rep.pmax; ++p) {
        for (int q = 0; q <= rep.qmax; ++q) {
            int a = pg1.dim(2, p, q);
            int b = pg2.dim(2, p, 2 * q);
            rep.e2_d1[p][q] = a;
            rep.e2_d2[p][q] = b;
            if (a != b) {
                rep.pass = false;
                rep.mismatches.push_back("E2(" + std::to_string(p) + "," + std::to_string(q) +
                                         ") d=1 gives " + std::to_string(a) + ", E2(" +
                                         std::to_string(p) + "," + std::to_string(2 * q) +
                                         ") d=2 gives " + std::to_string(b));
            }
        }
        // Odd rows of the d=2 page must vanish for the comparison to cover everything.
        for (int q = 1; q <= pg2.qmax; q += 2)
            if (pg2.dim(2, p, q) != 0) {
                rep.pass = false;
                rep.mismatches.push_back("E2(" + std::to_string(p) + "," + std::to_string(q) +
                                         ") d=2 is nonzero on an odd row");
            }
    }
    return rep;
}

}  // namespace

Thm15Report theorem15_check_polygon(int m) {
    DoubleComplex dc1 = double_complex(polygon_cover_model(m, 1, Coeff::Z2));
    DoubleComplex dc2 = double_complex(polygon_cover_model(m, 2, Coeff::Z2));
    return theorem15_compare(dc1, dc2);
}

Thm15Report theorem15_check_simplex(int n) {
    DoubleComplex dc1 = double_complex(simplex_cover_model(n, 1));
    DoubleComplex dc2 = double_complex(simplex_cover_model(n, 2, Coeff::Z2));
    return theorem15_compare(dc1, dc2);
}

}  // namespace torc
