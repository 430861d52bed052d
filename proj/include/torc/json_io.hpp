#pragma once

#include <json.hpp>

#include "torc/cover.hpp"
#include "torc/homology.hpp"
#include "torc/polytope.hpp"
#include "torc/reproduce.hpp"
#include "torc/spectral.hpp"

namespace torc {

using nlohmann::json;

// Polytope schema: {"dim": n, "vertices": [labels], "facets": [[labels]]}.
// Output lists vertex labels sorted lexicographically; the optional face
// dump is sorted by (dim, vertex set).
json polytope_to_json(const SimplePolytope& p, bool with_faces = false);
SimplePolytope polytope_from_json(const json& j);

// Simplicial complex schema: {"vertices": [...], "maximal_simplices": [[...]]};
// the downward closure is taken on load.
json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// Homology schema: per-degree {"betti": n, "torsion": ["2", ...]}.
json homology_to_json(const HomologyResult& h);

json cover_model_to_json(const CoverModel& cm);

json pages_to_json(const SpectralPages& pg);

json check_rows_to_json(const std::vector<CheckRow>& rows);
std::string check_rows_table(const std::vector<CheckRow>& rows);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

}  // namespace torc
