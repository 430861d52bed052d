#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torc/cover.hpp"
#include "torc/homology.hpp"

namespace torc {

/**
 * First-quadrant double complex assembled from a cover model: D_{p,q} sums
 * the degree-q chains of the pieces over nerve p-simplices, d1 is the
 * blockwise piece boundary and d2 the signed sum of face maps over nerve
 * incidences. d1 and d2 commute.
 */
struct DoubleComplex {
    Coeff coeff = Coeff::Z;
    int pmax = -1, qmax = -1;
    std::vector<std::vector<int>> dims;                        // [p][q]
    std::vector<std::vector<std::vector<std::string>>> labels; // [p][q] basis labels
    std::map<std::pair<int, int>, ZMat> d1;  // (p,q): D_{p,q} -> D_{p,q-1}
    std::map<std::pair<int, int>, ZMat> d2;  // (p,q): D_{p,q} -> D_{p-1,q}

    int dim(int p, int q) const {
        if (p < 0 || p > pmax || q < 0 || q > qmax) return 0;
        return dims[p][q];
    }
    int total_dim(int i) const;  // dim of the total complex in degree i
    void validate() const;       // d1 d1 = 0, d2 d2 = 0, d1 d2 = d2 d1

    /// Total differential Tot_i -> Tot_{i-1}, blocks ordered by p ascending,
    /// with the sign twist d1 + (-1)^q d2.
    ZMat total_differential(int i) const;
};

/// Builds and validates the double complex of a cover model. Throws
/// ValidationFailed when validate_cover_model reports a failure.
DoubleComplex double_complex(const CoverModel& cm);

/// Homology of the total complex over the given coefficients (the integral
/// route goes through Smith normal form).
HomologyResult total_homology(const DoubleComplex& dc, Coeff coeff);

/**
 * Spectral pages of the column filtration F_p Tot = sum of blocks p' <= p.
 * E^r_{p,q} = Z^r_{p,q} / (Z^{r-1}_{p-1,q+1} + D Z^{r-1}_{p+r-1,q-r+2}) with
 * Z^r_{p,q} = {x in F_p Tot : Dx in F_{p-r}}; all dimensions are evaluated
 * by exact rank counts of one reduced form per total differential.
 */
struct SpectralPages {
    Coeff coeff = Coeff::Q;
    int pmax = 0, qmax = 0;
    int r_stop = 1;              // pages computed for r = 1..r_stop; page r_stop = E^infinity
    int stabilization_page = 1;  // least r with E^r = E^infinity dimensionwise
    std::vector<std::vector<std::vector<int>>> page;  // [r-1][p][q]

    int dim(int r, int p, int q) const;
    const std::vector<std::vector<int>>& einf() const { return page.back(); }
};

SpectralPages pages(const DoubleComplex& dc, Coeff field, int r_max = -1);

struct ConvergenceReport {
    bool pass = false;
    int collapse_page = 0;
    std::vector<int> total_by_degree;
    std::vector<int> einf_sum_by_degree;
};

/// Per-degree check that the E^infinity column sums match total homology.
ConvergenceReport convergence_report(const SpectralPages& pg, const HomologyResult& total);

struct Thm15Report {
    bool pass = false;
    int pmax = 0, qmax = 0;                 // ranges of the d=1 page
    std::vector<std::vector<int>> e2_d1;    // [p][q] over Z2
    std::vector<std::vector<int>> e2_d2;    // [p][q] over Z2 (rows 2q compared)
    std::vector<std::string> mismatches;
};

/// Compares dim E^2_{p,q} of the d=1 model with dim E^2_{p,2q} of the d=2
/// model, both over Z2 on the same nerve.
Thm15Report theorem15_check_polygon(int m);
Thm15Report theorem15_check_simplex(int n);

}  // namespace torc
