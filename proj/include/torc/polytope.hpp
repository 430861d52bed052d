#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torc/ints.hpp"
#include "torc/zmatrix.hpp"

namespace torc {

/// A face of a simple polytope, identified by its (sorted) vertex-index set.
struct Face {
    std::vector<int> vertices;  // sorted indices into SimplePolytope::vertex_labels()
    int dim = 0;
    std::vector<int> facets;  // sorted indices of facets containing this face
};

/**
 * Combinatorial face lattice of a simple convex n-polytope, built from the
 * facet/vertex incidence alone. The lattice is the intersection closure of
 * the facet vertex sets; a face lying in exactly c facets has dimension n-c,
 * which is what simplicity guarantees. The polytope itself is the face of
 * dimension n contained in no facet.
 */
class SimplePolytope {
public:
    int dim() const { return n_; }
    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }

    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    /// All faces including the polytope itself, sorted by (dim, vertex set).
    const std::vector<Face>& faces() const { return faces_; }

    int vertex_index(const std::string& label) const;
    const Face* find_face(const std::vector<int>& vertex_set) const;
    bool is_face(const std::vector<int>& vertex_set) const { return find_face(vertex_set) != nullptr; }

    /// "F3" for the third facet, "P" for the whole polytope, "{a,b}" otherwise.
    std::string face_label(const std::vector<int>& vertex_set) const;

    friend SimplePolytope build_polytope(const std::vector<std::vector<std::string>>& facets, int n);

private:
    int n_ = 0;
    std::vector<std::string> vertex_labels_;    // sorted lexicographically
    std::vector<std::vector<int>> facets_;      // input order, sorted index sets
    std::vector<Face> faces_;
};

SimplePolytope build_polytope(const std::vector<std::vector<std::string>>& facets, int n);
SimplePolytope ngon(int m);     // cycle polytope, facets F_i = {v_i, v_{i+1}}
SimplePolytope simplex(int n);  // vertices "0".."n", facets all n-subsets
SimplePolytope cube(int n);     // vertices = n-bit strings, 2n facets

struct FVector {
    std::vector<Int> entries;  // f_0 .. f_{n-1}, f_i = #faces of codimension i+1
};

struct HPolynomial {
    std::vector<Int> coeffs;  // h_0 .. h_n
};

FVector f_vector(const SimplePolytope& p);
HPolynomial h_polynomial(const SimplePolytope& p);
Int eval_h(const HPolynomial& h, const Int& t);

struct CharacteristicFunction {
    int d = 1;                                  // 1: vectors over Z2, 2: over Z
    std::vector<std::vector<Int>> assignment;   // per facet, length n
};

struct CharFnReport {
    bool valid = false;
    std::vector<std::pair<std::string, bool>> per_vertex;  // (vertex label, basis condition)
};

CharFnReport validate_characteristic_function(const SimplePolytope& p, const CharacteristicFunction& lambda);

struct CellVector {
    int d = 1;
    int ell = 1;
    std::vector<Int> counts;  // per dimension, starting at 0
};

/// Cell vector and Euler characteristic of the preimage of the strong
/// diagonal of P^ell under the ell-fold product projection.
std::pair<CellVector, Int> diagonal_preimage_cell_vector(const SimplePolytope& p, int d, int ell);

}  // namespace torc
