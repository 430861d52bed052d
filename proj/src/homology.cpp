#include "torc/homology.hpp"

#include <algorithm>
#include <set>

#include "torc/errors.hpp"
#include "torc/gf2.hpp"

namespace torc {

long long SimplicialComplex::simplex_count() const {
    long long n = 0;
    for (const auto& level : simplices) n += static_cast<long long>(level.size());
    return n;
}

std::vector<long long> SimplicialComplex::face_counts() const {
    std::vector<long long> out;
    for (const auto& level : simplices) out.push_back(static_cast<long long>(level.size()));
    return out;
}

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
    int d = static_cast<int>(simplex.size()) - 1;
    if (d < 0 || d > dim()) return false;
    return std::binary_search(simplices[d].begin(), simplices[d].end(), simplex);
}

int SimplicialComplex::vertex_index(const std::string& label) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
    if (it == vertices.end() || *it != label) throw BadParameter("unknown vertex label: " + label);
    return static_cast<int>(it - vertices.begin());
}

std::vector<std::string> SimplicialComplex::labels_of(const std::vector<int>& simplex) const {
    std::vector<std::string> out;
    out.reserve(simplex.size());
    for (int v : simplex) out.push_back(vertices[v]);
    return out;
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<std::vector<std::string>>& maximal,
                                                  bool includes_empty) {
    std::set<std::string> labels;
    for (const auto& s : maximal) labels.insert(s.begin(), s.end());
    std::vector<std::string> verts(labels.begin(), labels.end());

    SimplicialComplex tmp;
    tmp.vertices = verts;
    std::vector<std::vector<int>> maximal_idx;
    for (const auto& s : maximal) {
        std::set<int> idx;
        for (const auto& l : s) idx.insert(tmp.vertex_index(l));
        maximal_idx.emplace_back(idx.begin(), idx.end());
    }
    return from_maximal_indexed(std::move(verts), maximal_idx, includes_empty);
}

SimplicialComplex SimplicialComplex::from_maximal_indexed(std::vector<std::string> vertices,
                                                          const std::vector<std::vector<int>>& maximal,
                                                          bool includes_empty) {
    SimplicialComplex k;
    k.vertices = std::move(vertices);
    k.includes_empty = includes_empty;
    std::set<std::vector<int>> closed;
    for (const auto& simplex : maximal) {
        std::vector<int> s(simplex);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && (s.front() < 0 || s.back() >= static_cast<int>(k.vertices.size())))
            throw BadParameter("simplex vertex index out of range");
        size_t n = s.size();
        if (n == 0) continue;
        if (n > 24) throw TooLarge("maximal simplex too large for closure");
        for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < n; ++b)
                if (mask & (uint32_t(1) << b)) face.push_back(s[b]);
            closed.insert(std::move(face));
        }
    }
    int top = 0;
    for (const auto& s : closed) top = std::max<int>(top, static_cast<int>(s.size()));
    k.simplices.assign(top, {});
    for (const auto& s : closed) k.simplices[s.size() - 1].push_back(s);
    for (auto& level : k.simplices) std::sort(level.begin(), level.end());
    return k;
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<int>& vertex_subset) const {
    std::vector<char> keep(vertices.size(), 0);
    for (int v : vertex_subset) {
        if (v < 0 || v >= static_cast<int>(vertices.size()))
            throw BadParameter("vertex index out of range");
        keep[v] = 1;
    }
    SimplicialComplex sub;
    sub.vertices = vertices;  // keep ambient labels/indices for simplicity
    sub.includes_empty = includes_empty;
    for (const auto& level : simplices) {
        std::vector<std::vector<int>> kept;
        for (const auto& s : level)
            if (std::all_of(s.begin(), s.end(), [&](int v) { return keep[v]; })) kept.push_back(s);
        sub.simplices.push_back(std::move(kept));
    }
    while (!sub.simplices.empty() && sub.simplices.back().empty()) sub.simplices.pop_back();
    return sub;
}

void ChainComplex::validate() const {
    if (basis.size() != boundary.size()) throw NotAComplex("basis/boundary length mismatch");
    for (int q = 0; q <= top_degree(); ++q) {
        int expected_rows = q == 0 ? 0 : dim_at(q - 1);
        if (boundary[q].rows() != expected_rows || boundary[q].cols() != dim_at(q))
            throw NotAComplex("boundary matrix shape mismatch at degree " + std::to_string(q));
    }
    for (int q = 1; q < top_degree(); ++q) {
        ZMat dd = boundary[q] * boundary[q + 1];
        bool zero = (coeff == Coeff::Z2) ? dd.is_zero_mod2() : dd.is_zero();
        if (!zero) throw NotAComplex("d(d(x)) != 0 at degree " + std::to_string(q + 1));
    }
}

bool HomologyResult::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

Int HomologyResult::euler_characteristic() const {
    Int chi = 0;
    for (size_t i = 0; i < betti.size(); ++i) chi += (i % 2 == 0) ? Int(betti[i]) : Int(-betti[i]);
    return chi;
}

ChainComplex oriented_chain_complex(const SimplicialComplex& k, Coeff coeff) {
    ChainComplex c;
    c.coeff = coeff;
    int top = k.dim();
    if (top < 0) return c;
    c.basis.resize(top + 1);
    c.boundary.resize(top + 1);

    // Canonical basis order: the complex's sorted simplex lists; labels are
    // comma-joined vertex labels.
    std::vector<std::map<std::vector<int>, int>> index(top + 1);
    for (int q = 0; q <= top; ++q) {
        for (const auto& s : k.simplices[q]) {
            index[q].emplace(s, static_cast<int>(c.basis[q].size()));
            std::string label;
            for (size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + k.vertices[s[i]];
            c.basis[q].push_back(label);
        }
    }
    c.boundary[0] = ZMat(0, static_cast<int>(c.basis[0].size()));
    for (int q = 1; q <= top; ++q) {
        ZMat d(static_cast<int>(c.basis[q - 1].size()), static_cast<int>(c.basis[q].size()));
        for (const auto& s : k.simplices[q]) {
            int col = index[q].at(s);
            for (size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<int> face;
                face.reserve(s.size() - 1);
                for (size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                int row = index[q - 1].at(face);
                d.add(row, col, (drop % 2 == 0) ? 1 : -1);
            }
        }
        c.boundary[q] = std::move(d);
    }
    c.validate();
    return c;
}

HomologyResult homology(const ChainComplex& c) {
    c.validate();
    HomologyResult res;
    int top = c.top_degree();
    if (top < 0) return res;

    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<Int>> torsion_from(top + 2);
    for (int q = 1; q <= top; ++q) {
        if (c.coeff == Coeff::Z2) {
            rank[q] = GF2Mat::from_zmat(c.boundary[q]).rank();
        } else {
            SmithResult snf = smith_normal_form(c.boundary[q]);
            rank[q] = snf.rank;
            if (c.coeff == Coeff::Z)
                for (const Int& d : snf.diagonal)
                    if (d > 1) torsion_from[q].push_back(d);
        }
    }

    res.betti.resize(top + 1);
    res.torsion.resize(top + 1);
    for (int q = 0; q <= top; ++q) {
        res.betti[q] = c.dim_at(q) - rank[q] - rank[q + 1];
        res.torsion[q] = torsion_from[q + 1];  // torsion of H_q comes from d_{q+1}
    }
    return res;
}

std::vector<int> betti(const SimplicialComplex& k, Coeff coeff) {
    return homology(oriented_chain_complex(k, coeff)).betti;
}

std::vector<int> reduced_betti(const SimplicialComplex& k, Coeff coeff) {
    std::vector<int> b = betti(k, coeff);
    if (!b.empty()) b[0] -= 1;  // augmentation only changes degree 0
    return b;
}

bool is_acyclic(const SimplicialComplex& k) {
    if (k.dim() < 0) return false;  // the empty complex is not acyclic
    HomologyResult h = homology(oriented_chain_complex(k, Coeff::Z));
    if (!h.torsion_free()) return false;
    if (h.betti.empty() || h.betti[0] != 1) return false;
    for (size_t q = 1; q < h.betti.size(); ++q)
        if (h.betti[q] != 0) return false;
    return true;
}

bool verify_simplicial_iso(const SimplicialComplex& k1, const SimplicialComplex& k2,
                           const std::map<std::string, std::string>& vertex_map) {
    // Total on k1's vertices, injective, into k2's vertex set.
    std::vector<int> image(k1.vertices.size(), -1);
    std::set<int> hit;
    for (size_t v = 0; v < k1.vertices.size(); ++v) {
        auto it = vertex_map.find(k1.vertices[v]);
        if (it == vertex_map.end()) return false;
        auto pos = std::lower_bound(k2.vertices.begin(), k2.vertices.end(), it->second);
        if (pos == k2.vertices.end() || *pos != it->second) return false;
        int w = static_cast<int>(pos - k2.vertices.begin());
        if (!hit.insert(w).second) return false;
        image[v] = w;
    }
    if (hit.size() != k2.vertices.size()) return false;
    if (k1.dim() != k2.dim()) return false;
    for (int q = 0; q <= k1.dim(); ++q) {
        if (k1.simplices[q].size() != k2.simplices[q].size()) return false;
        for (const auto& s : k1.simplices[q]) {
            std::vector<int> mapped;
            mapped.reserve(s.size());
            for (int v : s) mapped.push_back(image[v]);
            std::sort(mapped.begin(), mapped.end());
            if (!k2.contains(mapped)) return false;
        }
    }
    return true;
}

}  // namespace torc
