#include "torc/complexes.hpp"

#include <algorithm>
#include <set>

#include "torc/errors.hpp"
#include "torc/parallel.hpp"

namespace torc {

namespace {

bool disjoint_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

bool subset_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string pair_label(const SimplePolytope& p, const FacePair& fp) {
    return p.face_label(fp.first) + "x" + p.face_label(fp.second);
}

// Assembles a PairedComplex from pair-indexed maximal simplices; the complex
// gets lexicographically sorted vertex labels and pairs[] follows suit.
PairedComplex assemble(const SimplePolytope& p, const std::vector<FacePair>& pairs,
                       const std::vector<std::vector<int>>& maximal, bool includes_empty) {
    std::vector<std::string> labels(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) labels[i] = pair_label(p, pairs[i]);

    std::vector<int> order(pairs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> position(pairs.size());
    for (size_t r = 0; r < order.size(); ++r) position[order[r]] = static_cast<int>(r);

    std::vector<std::string> sorted_labels(pairs.size());
    std::vector<FacePair> sorted_pairs(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        sorted_labels[position[i]] = labels[i];
        sorted_pairs[position[i]] = pairs[i];
    }

    std::vector<std::vector<int>> remapped;
    remapped.reserve(maximal.size());
    for (const auto& s : maximal) {
        std::vector<int> t;
        t.reserve(s.size());
        for (int v : s) t.push_back(position[v]);
        remapped.push_back(std::move(t));
    }
    // Every vertex must appear even if it lies in no larger simplex.
    for (size_t i = 0; i < pairs.size(); ++i) remapped.push_back({position[i]});

    PairedComplex out;
    out.complex = SimplicialComplex::from_maximal_indexed(sorted_labels, remapped, includes_empty);
    out.pairs = std::move(sorted_pairs);
    return out;
}

}  // namespace

std::vector<FacePair> maximal_disjoint_pairs(const SimplePolytope& p) {
    std::vector<const Face*> proper;
    for (const Face& f : p.faces())
        if (f.dim < p.dim()) proper.push_back(&f);

    std::vector<FacePair> disjoint;
    for (const Face* a : proper)
        for (const Face* b : proper)
            if (disjoint_sorted(a->vertices, b->vertices)) disjoint.push_back({a->vertices, b->vertices});

    std::vector<FacePair> maximal;
    for (const FacePair& cand : disjoint) {
        bool dominated = false;
        for (const FacePair& other : disjoint) {
            if (&other == &cand) continue;
            if (subset_sorted(cand.first, other.first) && subset_sorted(cand.second, other.second) &&
                !(cand == other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(cand);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

PairedComplex k_p(const SimplePolytope& p) {
    if (p.dim() < 2) throw BadParameter("the disjoint-pair nerve needs dim P >= 2");
    std::vector<FacePair> pairs = maximal_disjoint_pairs(p);

    // Every simplex of the nerve lies in the support of a pair of distinct
    // polytope vertices, so those supports generate the whole complex.
    std::vector<std::vector<int>> maximal;
    int nv = p.vertex_count();
    for (int v = 0; v < nv; ++v)
        for (int w = 0; w < nv; ++w) {
            if (v == w) continue;
            std::vector<int> support;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (std::binary_search(pairs[i].first.begin(), pairs[i].first.end(), v) &&
                    std::binary_search(pairs[i].second.begin(), pairs[i].second.end(), w))
                    support.push_back(static_cast<int>(i));
            if (!support.empty()) maximal.push_back(std::move(support));
        }
    return assemble(p, pairs, maximal, true);
}

PairedComplex k_pm(int m) {
    if (m < 3) throw BadParameter("polygons need m >= 3");
    SimplePolytope p = ngon(m);
    auto vertex_set = [&](int i) { return std::vector<int>{p.vertex_index("v" + std::to_string((i % m + m) % m + 1))}; };
    auto facet_set = [&](int i) { return p.facets()[(i % m + m) % m]; };

    std::vector<FacePair> pairs;
    std::map<FacePair, int> index;
    auto pair_id = [&](FacePair fp) {
        auto it = index.find(fp);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(pairs.size());
        index.emplace(fp, id);
        pairs.push_back(std::move(fp));
        return id;
    };

    std::vector<std::vector<int>> maximal;
    if (m == 3) {
        // Hexagon on {vertex x opposite facet} and {facet x opposite vertex}.
        for (int i = 0; i < 3; ++i) {
            pair_id({vertex_set(i), facet_set(i + 1)});
            pair_id({facet_set(i + 1), vertex_set(i)});
        }
        for (size_t a = 0; a < pairs.size(); ++a)
            for (size_t b = a + 1; b < pairs.size(); ++b)
                if (!disjoint_sorted(pairs[a].first, pairs[b].first) &&
                    !disjoint_sorted(pairs[a].second, pairs[b].second))
                    maximal.push_back({static_cast<int>(a), static_cast<int>(b)});
    } else if (m == 4) {
        for (int i = 0; i < 4; ++i) pair_id({facet_set(i), facet_set(i + 2)});
        for (int i = 0; i < 4; ++i)
            maximal.push_back({pair_id({facet_set(i), facet_set(i + 2)}),
                               pair_id({facet_set(i + 1), facet_set(i + 3)})});
    } else {
        auto facets_disjoint = [&](int i, int j) {
            int g = ((j - i) % m + m) % m;
            return g >= 2 && g <= m - 2;
        };
        // Square blocks where all four corners are disjoint pairs.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (facets_disjoint(i, j) && facets_disjoint(i + 1, j) && facets_disjoint(i, j + 1) &&
                    facets_disjoint(i + 1, j + 1))
                    maximal.push_back({pair_id({facet_set(i), facet_set(j)}),
                                       pair_id({facet_set(i + 1), facet_set(j)}),
                                       pair_id({facet_set(i), facet_set(j + 1)}),
                                       pair_id({facet_set(i + 1), facet_set(j + 1)})});
        // Boundary triangles at the two-step gap, on both sides.
        for (int i = 0; i < m; ++i) {
            maximal.push_back({pair_id({facet_set(i), facet_set(i + 2)}),
                               pair_id({facet_set(i), facet_set(i + 3)}),
                               pair_id({facet_set(i + 1), facet_set(i + 3)})});
            maximal.push_back({pair_id({facet_set(i + 2), facet_set(i)}),
                               pair_id({facet_set(i + 3), facet_set(i)}),
                               pair_id({facet_set(i + 3), facet_set(i + 1)})});
        }
        // All remaining disjoint pairs as vertices.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (facets_disjoint(i, j)) pair_id({facet_set(i), facet_set(j)});
    }
    return assemble(p, pairs, maximal, true);
}

PairedComplex l_pm(int m) {
    if (m < 3) throw BadParameter("polygons need m >= 3");
    if (m <= 5) return k_pm(m);

    SimplePolytope p = ngon(m);
    auto facet_set = [&](int i) { return p.facets()[(i % m + m) % m]; };
    auto facets_disjoint = [&](int i, int j) {
        int g = ((j - i) % m + m) % m;
        return g >= 2 && g <= m - 2;
    };

    std::vector<FacePair> pairs;
    std::map<FacePair, int> index;
    auto pair_id = [&](FacePair fp) {
        auto it = index.find(fp);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(pairs.size());
        index.emplace(fp, id);
        pairs.push_back(std::move(fp));
        return id;
    };

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (facets_disjoint(i, j)) pair_id({facet_set(i), facet_set(j)});

    std::vector<std::vector<int>> maximal;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (facets_disjoint(i, j) && facets_disjoint(i + 1, j) && facets_disjoint(i + 1, j + 1))
                maximal.push_back({pair_id({facet_set(i), facet_set(j)}),
                                   pair_id({facet_set(i + 1), facet_set(j)}),
                                   pair_id({facet_set(i + 1), facet_set(j + 1)})});
            if (facets_disjoint(i, j) && facets_disjoint(i, j + 1) && facets_disjoint(i + 1, j + 1))
                maximal.push_back({pair_id({facet_set(i), facet_set(j)}),
                                   pair_id({facet_set(i), facet_set(j + 1)}),
                                   pair_id({facet_set(i + 1), facet_set(j + 1)})});
        }
    return assemble(p, pairs, maximal, true);
}

namespace {

std::string face_mask_label(int n, uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int v = 0; v <= n; ++v)
        if (mask & (uint32_t(1) << v)) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
    return s + "}";
}

// Complex of all strict chains within the given set of faces (bitmasks over
// {0..n}); a simplex is a set of pairwise nested faces.
SdComplex chains_complex(int n, const std::vector<uint32_t>& faces) {
    std::vector<std::string> labels;
    labels.reserve(faces.size());
    for (uint32_t f : faces) labels.push_back(face_mask_label(n, f));

    std::vector<int> order(faces.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> position(faces.size());
    for (size_t r = 0; r < order.size(); ++r) position[order[r]] = static_cast<int>(r);

    SdComplex out;
    out.complex.vertices.resize(faces.size());
    out.face_of_vertex.resize(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) {
        out.complex.vertices[position[i]] = labels[i];
        std::vector<int>& vs = out.face_of_vertex[position[i]];
        for (int v = 0; v <= n; ++v)
            if (faces[i] & (uint32_t(1) << v)) vs.push_back(v);
    }

    // Strict-superset successors within the face set, ordered by size so the
    // chain enumeration extends monotonically.
    std::vector<std::vector<int>> successors(faces.size());
    for (size_t a = 0; a < faces.size(); ++a)
        for (size_t b = 0; b < faces.size(); ++b)
            if (a != b && (faces[a] & faces[b]) == faces[a] && faces[a] != faces[b])
                successors[a].push_back(static_cast<int>(b));

    std::vector<std::vector<std::vector<int>>> levels;
    std::vector<int> chain;
    auto emit = [&]() {
        std::vector<int> simplex;
        simplex.reserve(chain.size());
        for (int f : chain) simplex.push_back(position[f]);
        std::sort(simplex.begin(), simplex.end());
        size_t d = simplex.size() - 1;
        if (levels.size() <= d) levels.resize(d + 1);
        levels[d].push_back(std::move(simplex));
    };
    auto rec = [&](auto&& self, int last) -> void {
        emit();
        for (int nxt : successors[last]) {
            chain.push_back(nxt);
            self(self, nxt);
            chain.pop_back();
        }
    };
    for (size_t f = 0; f < faces.size(); ++f) {
        chain.assign(1, static_cast<int>(f));
        rec(rec, static_cast<int>(f));
    }
    for (auto& level : levels) std::sort(level.begin(), level.end());
    out.complex.simplices = std::move(levels);
    return out;
}

}  // namespace

SdComplex sd_boundary_simplex(int n) {
    if (n < 2) throw BadParameter("barycentric boundary subdivision needs n >= 2");
    std::vector<uint32_t> faces;
    uint32_t full = (uint32_t(1) << (n + 1)) - 1;
    for (uint32_t mask = 1; mask < full; ++mask) faces.push_back(mask);
    return chains_complex(n, faces);
}

SdComplex k_ij(int n, int i, int j) {
    if (n < 2) throw BadParameter("need n >= 2");
    if (i < 0 || j < 0 || i + j + 1 > n) throw BadParameter("need i, j >= 0 with i + j + 1 <= n");
    std::vector<uint32_t> faces;
    uint32_t full = (uint32_t(1) << (n + 1)) - 1;
    for (uint32_t mask = 1; mask < full; ++mask) {
        int d = __builtin_popcount(mask) - 1;
        if (d >= i && d <= n - j - 1) faces.push_back(mask);
    }
    return chains_complex(n, faces);
}

std::map<std::string, std::string> complement_vertex_map(int n) {
    if (n < 2) throw BadParameter("need n >= 2");
    std::map<std::string, std::string> out;
    uint32_t full = (uint32_t(1) << (n + 1)) - 1;
    for (uint32_t mask = 1; mask < full; ++mask)
        out[face_mask_label(n, mask)] = face_mask_label(n, full & ~mask);
    return out;
}

LocallyNiceReport locally_nice_check(const SimplicialComplex& l, const std::vector<FacePair>& pairs,
                                     const SimplePolytope& p) {
    if (pairs.size() != l.vertices.size())
        throw VertexMismatch("pair list does not match the complex's vertex list");

    std::set<FacePair> have(pairs.begin(), pairs.end());
    std::vector<FacePair> required = maximal_disjoint_pairs(p);
    for (const FacePair& fp : required)
        if (!have.count(fp))
            throw VertexMismatch("missing nerve vertex " + p.face_label(fp.first) + "x" +
                                 p.face_label(fp.second));
    for (const FacePair& fp : pairs)
        if (!std::binary_search(required.begin(), required.end(), fp))
            throw VertexMismatch("vertex is not a maximal disjoint pair: " + p.face_label(fp.first) +
                                 "x" + p.face_label(fp.second));

    // Distinct supports over all disjoint face pairs of P.
    std::set<std::vector<int>> supports;
    for (const Face& g1 : p.faces()) {
        if (g1.dim >= p.dim()) continue;
        for (const Face& g2 : p.faces()) {
            if (g2.dim >= p.dim()) continue;
            if (!disjoint_sorted(g1.vertices, g2.vertices)) continue;
            std::vector<int> support;
            for (size_t v = 0; v < pairs.size(); ++v)
                if (subset_sorted(g1.vertices, pairs[v].first) &&
                    subset_sorted(g2.vertices, pairs[v].second))
                    support.push_back(static_cast<int>(v));
            supports.insert(std::move(support));
        }
    }

    std::vector<std::vector<int>> support_list(supports.begin(), supports.end());
    std::vector<char> acyclic(support_list.size(), 0);
    parallel_chunks(static_cast<long long>(support_list.size()), [&](long long b, long long e) {
        for (long long s = b; s < e; ++s) {
            if (support_list[s].empty()) {
                acyclic[s] = 0;
                continue;
            }
            acyclic[s] = is_acyclic(l.full_subcomplex(support_list[s])) ? 1 : 0;
        }
    });

    LocallyNiceReport report;
    report.pass = true;
    report.supports_checked = static_cast<int>(support_list.size());
    for (size_t s = 0; s < support_list.size(); ++s) {
        if (acyclic[s]) continue;
        report.pass = false;
        std::string desc = "support {";
        for (size_t i = 0; i < support_list[s].size(); ++i)
            desc += (i ? "," : "") + l.vertices[support_list[s][i]];
        desc += "} is not acyclic";
        report.failures.push_back(desc);
    }
    return report;
}

}  // namespace torc
