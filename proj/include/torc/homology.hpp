#pragma once

#include <map>
#include <string>
#include <vector>

#include "torc/ints.hpp"
#include "torc/zmatrix.hpp"

namespace torc {

/**
 * Abstract simplicial complex with labeled vertices. Vertices are kept in
 * lexicographic label order and simplices as sorted index vectors grouped by
 * dimension, so chain-complex bases and boundary matrices are reproducible
 * bit for bit.
 */
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim] -> sorted list of sorted index vectors
    bool includes_empty = false;  // bookkeeping flag for nerve complexes

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    long long simplex_count() const;
    std::vector<long long> face_counts() const;  // per dimension
    bool contains(const std::vector<int>& simplex) const;
    int vertex_index(const std::string& label) const;
    std::vector<std::string> labels_of(const std::vector<int>& simplex) const;

    /// Builds the downward closure of the given maximal simplices.
    static SimplicialComplex from_maximal(const std::vector<std::vector<std::string>>& maximal,
                                          bool includes_empty = false);
    /// Same, with simplices already expressed over an explicit vertex list.
    static SimplicialComplex from_maximal_indexed(std::vector<std::string> vertices,
                                                  const std::vector<std::vector<int>>& maximal,
                                                  bool includes_empty = false);

    /// Full subcomplex on a vertex subset (indices into this->vertices).
    SimplicialComplex full_subcomplex(const std::vector<int>& vertex_subset) const;

    bool operator==(const SimplicialComplex& o) const {
        return vertices == o.vertices && simplices == o.simplices;
    }
};

/**
 * Chain complex of free modules with integer boundary matrices, readable
 * over Z, Q or Z2. boundary[q] maps degree q to degree q-1; boundary[0] has
 * zero rows. d(d(x)) = 0 is enforced at construction.
 */
struct ChainComplex {
    Coeff coeff = Coeff::Z;
    std::vector<std::vector<std::string>> basis;
    std::vector<ZMat> boundary;

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    int dim_at(int q) const {
        return (q < 0 || q > top_degree()) ? 0 : static_cast<int>(basis[q].size());
    }
    void validate() const;  // throws NotAComplex
};

struct HomologyResult {
    std::vector<int> betti;                 // per degree
    std::vector<std::vector<Int>> torsion;  // per degree; empty over fields

    bool torsion_free() const;
    Int euler_characteristic() const;
};

/// Simplicial chains with the orientation induced by sorted vertex order.
ChainComplex oriented_chain_complex(const SimplicialComplex& k, Coeff coeff);

HomologyResult homology(const ChainComplex& c);

std::vector<int> betti(const SimplicialComplex& k, Coeff coeff);
std::vector<int> reduced_betti(const SimplicialComplex& k, Coeff coeff);

/// Reduced integral homology trivial in every degree (torsion included).
bool is_acyclic(const SimplicialComplex& k);

/// True iff vertex_map is a bijection of vertex sets carrying simplices onto
/// simplices bijectively.
bool verify_simplicial_iso(const SimplicialComplex& k1, const SimplicialComplex& k2,
                           const std::map<std::string, std::string>& vertex_map);

}  // namespace torc
