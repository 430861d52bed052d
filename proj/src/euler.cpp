#include "torc/euler.hpp"

#include "torc/combinatorics.hpp"
#include "torc/errors.hpp"

namespace torc {

Int chi_orbit_config(const SimplePolytope& p, int d, int k) {
    if (d != 1 && d != 2) throw BadParameter("d must be 1 or 2");
    if (k < 2) throw BadParameter("orbit configuration spaces need k >= 2");
    int n = p.dim();
    HPolynomial h = h_polynomial(p);

    Int sum = 0;
    for (const Partition& I : partitions(k)) {
        Int term = coeff_closed(I);
        if (d == 1) {
            for (int part : I.parts) term *= eval_h(h, 1 - pow2(part));
        } else {
            term *= ipow(eval_h(h, 1), I.s());
        }
        sum += term;
    }
    if (d == 1 && (static_cast<long long>(k) * n) % 2 != 0) sum = -sum;
    return sum;
}

Int chi_orbit_config(const SimplePolytope& p, const OrbitConfigSpec& spec) {
    return chi_orbit_config(p, spec.d, spec.k);
}

Int chi_classical_closed(const Int& chi_m, int n, int k) {
    if (k < 1) throw BadParameter("need k >= 1");
    Int prod = 1;
    for (int i = 0; i < k; ++i) prod *= chi_m - i;
    if ((static_cast<long long>(k) * n) % 2 != 0) prod = -prod;
    return prod;
}

Int chi_classical_partition(const Int& chi_m, int n, int k) {
    if (k < 1) throw BadParameter("need k >= 1");
    Int sum = 0;
    for (const Partition& I : partitions(k)) sum += coeff_closed(I) * ipow(chi_m, I.s());
    if ((static_cast<long long>(k) * n) % 2 != 0) sum = -sum;
    return sum;
}

Int chi_real_moment_angle(const SimplePolytope& p, int k) {
    if (k < 2) throw BadParameter("need k >= 2");
    long long m = p.facet_count(), n = p.dim();
    return pow2((m - n) * k) * chi_orbit_config(p, 1, k);
}

Int chi_moment_angle_torus(const SimplePolytope& p, int k) {
    if (k < 2) throw BadParameter("need k >= 2");
    (void)p;
    return 0;
}

}  // namespace torc
