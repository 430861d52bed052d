#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torc/complexes.hpp"
#include "torc/homology.hpp"

namespace torc {

/**
 * Product of standard fiber spaces. Each factor carries its minimal CW
 * structure: point (one 0-cell), circle (1,1), 2-sphere (1,0,1), real
 * projective s-space (one cell per degree, Z2 coefficients only), complex
 * projective s-space (one cell per even degree).
 */
struct StandardSpace {
    enum class Kind { Point, Circle, Sphere2, RealProj, CplxProj };
    struct Factor {
        Kind kind = Kind::Point;
        int param = 0;  // projective dimension for RealProj/CplxProj
        bool operator==(const Factor& o) const { return kind == o.kind && param == o.param; }
    };
    std::vector<Factor> factors;

    static StandardSpace point() { return {{{Kind::Point, 0}}}; }
    static StandardSpace circle() { return {{{Kind::Circle, 0}}}; }
    static StandardSpace sphere2() { return {{{Kind::Sphere2, 0}}}; }
    static StandardSpace real_proj(int s) { return {{{Kind::RealProj, s}}}; }
    static StandardSpace cplx_proj(int s) { return {{{Kind::CplxProj, s}}}; }
    StandardSpace times(const StandardSpace& other) const;

    std::string to_string() const;
    bool operator==(const StandardSpace& o) const { return factors == o.factors; }
};

ChainComplex standard_complex(const StandardSpace& space, Coeff coeff);

/// Tensor product of chain complexes with Koszul signs.
ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b);

/// Degree-preserving chain map given by per-degree matrices (target x source).
struct ChainMap {
    std::vector<ZMat> mats;
};

/// Cellwise inclusion: skeletal for projective factors, basepoint for point
/// factors, identity otherwise; factorwise on products.
ChainMap inclusion_chain_map(const StandardSpace& sub, const StandardSpace& super, Coeff coeff);

bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f, Coeff coeff);
ChainMap compose(const ChainMap& second, const ChainMap& first);
bool chain_maps_equal(const ChainMap& a, const ChainMap& b, Coeff coeff);

using SimplexKey = std::vector<int>;  // sorted nerve vertex indices

/**
 * Chain-level model of a union of pieces glued along a nerve: for every
 * nerve simplex a the chain complex of the intersection piece X_a, and for
 * every codimension-1 face b of a the chain map induced by X_a -> X_b.
 */
struct CoverModel {
    enum class Context { Polygon, Simplex, Custom };

    Coeff coeff = Coeff::Z;
    int d = 1;
    Context context = Context::Custom;
    int context_param = 0;

    SimplicialComplex nerve;
    std::vector<FacePair> nerve_pairs;  // aligned with nerve.vertices; empty for Custom
    std::map<SimplexKey, StandardSpace> piece_space;
    std::map<SimplexKey, ChainComplex> piece;
    std::map<std::pair<SimplexKey, SimplexKey>, ChainMap> face_maps;

    const ChainComplex& piece_of(const SimplexKey& a) const;
    const ChainMap& face_map_of(const SimplexKey& a, const SimplexKey& b) const;
};

/// Model over the m-gon: nerve l_pm(m); a piece is the product of a point
/// per polygon-vertex coordinate and a circle (d=1) or 2-sphere (d=2) per
/// edge coordinate.
CoverModel polygon_cover_model(int m, int d, Coeff coeff);

/// Model over the n-simplex: nerve sd(Bd Delta^n); the piece of a chain is
/// RP(dim min) x RP(n-1-dim max) for d=1 (Z2 coefficients) and the complex
/// projective version for d=2.
CoverModel simplex_cover_model(int n, int d, std::optional<Coeff> coeff = std::nullopt);

struct CoverValidation {
    bool pass = false;
    std::vector<std::string> failures;
};

/// Chain-map property of every face map, commuting codimension-2 composites,
/// and the locally nice check where a polytope context exists.
CoverValidation validate_cover_model(const CoverModel& cm);

}  // namespace torc
