#pragma once

#include <map>
#include <string>
#include <vector>

#include "torc/homology.hpp"
#include "torc/polytope.hpp"

namespace torc {

/// Ordered pair of disjoint faces of a polytope, as vertex-index sets.
struct FacePair {
    std::vector<int> first, second;

    bool operator==(const FacePair& o) const { return first == o.first && second == o.second; }
    bool operator<(const FacePair& o) const {
        return first != o.first ? first < o.first : second < o.second;
    }
};

/// A simplicial complex whose vertices stand for face pairs of a polytope;
/// pairs[i] corresponds to complex.vertices[i].
struct PairedComplex {
    SimplicialComplex complex;
    std::vector<FacePair> pairs;
};

/// Maximal disjoint face pairs of P: kept iff no other disjoint pair strictly
/// contains the pair componentwise.
std::vector<FacePair> maximal_disjoint_pairs(const SimplePolytope& p);

/// Nerve of the maximal disjoint-pair pieces: vertex set = maximal pairs, a
/// subset is a simplex iff the componentwise intersection is nonempty.
PairedComplex k_p(const SimplePolytope& p);

/// The explicit polygon nerve: hexagon (m=3), square (m=4), and for m >= 5
/// the cyclic pattern of 3-simplices plus boundary 2-simplices.
PairedComplex k_pm(int m);

/// Locally nice subcomplex over the m-gon: equals k_pm for m <= 5; for
/// m >= 6 all vertices plus the two cyclic families of 2-simplices.
PairedComplex l_pm(int m);

/// Barycentric subdivision of the boundary complex of the n-simplex; vertex
/// i stands for the proper face face_of_vertex[i] (a subset of {0..n}).
struct SdComplex {
    SimplicialComplex complex;
    std::vector<std::vector<int>> face_of_vertex;
};

SdComplex sd_boundary_simplex(int n);

/// Subcomplex of sd_boundary_simplex(n) of chains whose members have
/// dimension in [i, n-j-1].
SdComplex k_ij(int n, int i, int j);

/// sigma -> complement face, as a label map on sd_boundary_simplex(n).
std::map<std::string, std::string> complement_vertex_map(int n);

struct LocallyNiceReport {
    bool pass = false;
    int supports_checked = 0;
    std::vector<std::string> failures;
};

/**
 * Definition check for a locally nice subcomplex L of the disjoint-pair
 * nerve of P: L must contain every maximal disjoint pair as a vertex, and
 * for every disjoint face pair G of P the full subcomplex of L on
 * {vertices B : G <= B componentwise} must be acyclic. Throws VertexMismatch
 * when the vertex sets do not agree.
 */
LocallyNiceReport locally_nice_check(const SimplicialComplex& l, const std::vector<FacePair>& pairs,
                                     const SimplePolytope& p);

}  // namespace torc
