#include "torc/json_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "torc/errors.hpp"

namespace torc {

std::string int_to_string(const Int& v) {
    return v.str();
}

Int int_from_string(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw BadParameter("not a decimal integer: " + s);
    }
}

json polytope_to_json(const SimplePolytope& p, bool with_faces) {
    json j;
    j["dim"] = p.dim();
    j["vertices"] = p.vertex_labels();  // already sorted lexicographically
    json facets = json::array();
    for (const auto& f : p.facets()) {
        json labels = json::array();
        for (int v : f) labels.push_back(p.vertex_labels()[v]);
        facets.push_back(labels);
    }
    j["facets"] = facets;
    if (with_faces) {
        json faces = json::array();  // faces() is sorted by (dim, vertex set)
        for (const Face& f : p.faces()) {
            json jf;
            jf["dim"] = f.dim;
            json labels = json::array();
            for (int v : f.vertices) labels.push_back(p.vertex_labels()[v]);
            jf["vertices"] = labels;
            jf["label"] = p.face_label(f.vertices);
            faces.push_back(jf);
        }
        j["faces"] = faces;
    }
    return j;
}

SimplePolytope polytope_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("facets")) throw BadParameter("polytope JSON needs dim and facets");
    int n = j.at("dim").get<int>();
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<std::string>>());
    SimplePolytope p = build_polytope(facets, n);
    if (j.contains("vertices")) {
        std::vector<std::string> declared = j.at("vertices").get<std::vector<std::string>>();
        std::sort(declared.begin(), declared.end());
        if (declared != p.vertex_labels())
            throw BadParameter("declared vertex list does not match the facet union");
    }
    return p;
}

namespace {

// Maximal simplices: those not properly contained in another simplex.
std::vector<std::vector<int>> maximal_simplices(const SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (int d = 0; d <= k.dim(); ++d) {
        for (const auto& s : k.simplices[d]) {
            bool maximal = true;
            if (d + 1 <= k.dim()) {
                // s is non-maximal iff some coface s + {v} is a simplex
                for (size_t v = 0; v < k.vertices.size() && maximal; ++v) {
                    if (std::binary_search(s.begin(), s.end(), static_cast<int>(v))) continue;
                    std::vector<int> t = s;
                    t.insert(std::lower_bound(t.begin(), t.end(), static_cast<int>(v)),
                             static_cast<int>(v));
                    if (k.contains(t)) maximal = false;
                }
            }
            if (maximal) out.push_back(s);
        }
    }
    return out;
}

}  // namespace

json complex_to_json(const SimplicialComplex& k) {
    json j;
    j["vertices"] = k.vertices;
    json maximal = json::array();
    for (const auto& s : maximal_simplices(k)) {
        json labels = json::array();
        for (int v : s) labels.push_back(k.vertices[v]);
        maximal.push_back(labels);
    }
    j["maximal_simplices"] = maximal;
    json counts = json::array();
    for (long long c : k.face_counts()) counts.push_back(c);
    j["face_counts"] = counts;
    if (k.includes_empty) j["includes_empty"] = true;
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("maximal_simplices")) throw BadParameter("complex JSON needs maximal_simplices");
    std::vector<std::vector<std::string>> maximal;
    for (const auto& s : j.at("maximal_simplices")) maximal.push_back(s.get<std::vector<std::string>>());
    bool includes_empty = j.value("includes_empty", false);
    SimplicialComplex k = SimplicialComplex::from_maximal(maximal, includes_empty);
    if (j.contains("vertices")) {
        std::vector<std::string> declared = j.at("vertices").get<std::vector<std::string>>();
        std::sort(declared.begin(), declared.end());
        if (declared != k.vertices)
            throw BadParameter("declared vertex list does not match the simplices");
    }
    return k;
}

json homology_to_json(const HomologyResult& h) {
    json j = json::array();
    for (size_t q = 0; q < h.betti.size(); ++q) {
        json entry;
        entry["betti"] = h.betti[q];
        json tors = json::array();
        if (q < h.torsion.size())
            for (const Int& t : h.torsion[q]) tors.push_back(int_to_string(t));
        entry["torsion"] = tors;
        j.push_back(entry);
    }
    return j;
}

json cover_model_to_json(const CoverModel& cm) {
    json j;
    j["coeff"] = coeff_name(cm.coeff);
    j["d"] = cm.d;
    j["nerve"] = complex_to_json(cm.nerve);

    auto name_of = [&](const SimplexKey& a) {
        std::string s;
        for (size_t i = 0; i < a.size(); ++i) s += (i ? "<" : "") + cm.nerve.vertices[a[i]];
        return s;
    };
    auto mats_to_json = [](const std::vector<ZMat>& mats) {
        json out = json::array();
        for (const ZMat& m : mats) {
            json jm;
            jm["rows"] = m.rows();
            jm["cols"] = m.cols();
            json entries = json::array();
            for (int r = 0; r < m.rows(); ++r)
                for (const auto& [c, v] : m.row(r))
                    entries.push_back({r, c, int_to_string(v)});
            jm["entries"] = entries;
            out.push_back(jm);
        }
        return out;
    };

    json pieces = json::array();
    for (const auto& [a, piece] : cm.piece) {
        json jp;
        jp["simplex"] = name_of(a);
        jp["space"] = cm.piece_space.at(a).to_string();
        json basis = json::array();
        for (const auto& level : piece.basis) basis.push_back(level);
        jp["basis"] = basis;
        jp["boundary"] = mats_to_json(piece.boundary);
        pieces.push_back(jp);
    }
    j["pieces"] = pieces;

    json maps = json::array();
    for (const auto& [ab, f] : cm.face_maps) {
        json jm;
        jm["from"] = name_of(ab.first);
        jm["to"] = name_of(ab.second);
        jm["matrices"] = mats_to_json(f.mats);
        maps.push_back(jm);
    }
    j["face_maps"] = maps;
    return j;
}

json pages_to_json(const SpectralPages& pg) {
    json j;
    j["coeff"] = coeff_name(pg.coeff);
    json pages = json::object();
    for (int r = 1; r <= pg.r_stop; ++r) {
        json page = json::object();
        for (int p = 0; p <= pg.pmax; ++p)
            for (int q = 0; q <= pg.qmax; ++q)
                if (pg.dim(r, p, q) != 0)
                    page[std::to_string(p) + "," + std::to_string(q)] = pg.dim(r, p, q);
        pages[std::to_string(r)] = page;
    }
    j["pages"] = pages;
    j["stabilization_page"] = pg.stabilization_page;
    return j;
}

json check_rows_to_json(const std::vector<CheckRow>& rows) {
    json j = json::array();
    for (const auto& r : rows) {
        json row;
        row["label"] = r.label;
        row["computed"] = r.computed;
        row["expected"] = r.expected;
        row["pass"] = r.pass;
        j.push_back(row);
    }
    return j;
}

std::string check_rows_table(const std::vector<CheckRow>& rows) {
    size_t wl = 5, wc = 8, we = 8;
    for (const auto& r : rows) {
        wl = std::max(wl, r.label.size());
        wc = std::max(wc, r.computed.size());
        we = std::max(we, r.expected.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(wl)) << "check" << "  "
       << std::setw(static_cast<int>(wc)) << "computed" << "  "
       << std::setw(static_cast<int>(we)) << "expected" << "  verdict\n";
    for (const auto& r : rows)
        os << std::left << std::setw(static_cast<int>(wl)) << r.label << "  "
           << std::setw(static_cast<int>(wc)) << r.computed << "  "
           << std::setw(static_cast<int>(we)) << r.expected << "  "
           << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace torc
