#pragma once

#include "torc/ints.hpp"
#include "torc/polytope.hpp"

namespace torc {

struct OrbitConfigSpec {
    int d = 1;  // 1 or 2
    int k = 2;  // number of orbit-distinct points, >= 2
};

/**
 * Euler characteristic of the space of k points in the manifold over P with
 * pairwise disjoint torus orbits, d = 1 (real) or d = 2 (complex), as a
 * partition sum in the h-polynomial of P.
 */
Int chi_orbit_config(const SimplePolytope& p, int d, int k);
Int chi_orbit_config(const SimplePolytope& p, const OrbitConfigSpec& spec);

/// chi(F(M,k)) = (-1)^{kn} * chi(M) * (chi(M)-1) * ... * (chi(M)-k+1).
Int chi_classical_closed(const Int& chi_m, int n, int k);

/// Same value as a partition sum (-1)^{kn} * sum_I C_I chi(M)^s.
Int chi_classical_partition(const Int& chi_m, int n, int k);

/**
 * Euler characteristic of the orbit configuration space of the real
 * moment-angle manifold over P: 2^{(m-n)k} times the d=1 orbit value.
 * The caller asserts that a small cover over P exists.
 */
Int chi_real_moment_angle(const SimplePolytope& p, int k);

/// Always 0: the diagonal circle acts freely on the moment-angle manifold.
Int chi_moment_angle_torus(const SimplePolytope& p, int k);

}  // namespace torc
