#include "torc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "torc/errors.hpp"

namespace torc {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int SimplePolytope::vertex_index(const std::string& label) const {
    auto it = std::lower_bound(vertex_labels_.begin(), vertex_labels_.end(), label);
    if (it == vertex_labels_.end() || *it != label)
        throw BadParameter("unknown vertex label: " + label);
    return static_cast<int>(it - vertex_labels_.begin());
}

const Face* SimplePolytope::find_face(const std::vector<int>& vertex_set) const {
    for (const Face& f : faces_)
        if (f.vertices == vertex_set) return &f;
    return nullptr;
}

std::string SimplePolytope::face_label(const std::vector<int>& vertex_set) const {
    for (size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i] == vertex_set) return "F" + std::to_string(i + 1);
    if (static_cast<int>(vertex_set.size()) == vertex_count()) return "P";
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < vertex_set.size(); ++i)
        os << (i ? "," : "") << vertex_labels_[vertex_set[i]];
    os << "}";
    return os.str();
}

SimplePolytope build_polytope(const std::vector<std::vector<std::string>>& facets, int n) {
    if (n < 1) throw BadParameter("polytope dimension must be >= 1");
    if (facets.empty()) throw BadParameter("polytope needs at least one facet");

    std::set<std::string> label_set;
    for (const auto& f : facets) {
        if (f.empty()) throw BadParameter("empty facet");
        label_set.insert(f.begin(), f.end());
    }

    SimplePolytope p;
    p.n_ = n;
    p.vertex_labels_.assign(label_set.begin(), label_set.end());

    for (const auto& f : facets) {
        std::set<int> idx;
        for (const auto& v : f) idx.insert(p.vertex_index(v));
        p.facets_.emplace_back(idx.begin(), idx.end());
    }

    // Simplicity: each vertex lies in exactly n facets.
    for (int v = 0; v < p.vertex_count(); ++v) {
        int count = 0;
        for (const auto& f : p.facets_)
            if (std::binary_search(f.begin(), f.end(), v)) ++count;
        if (count != n)
            throw NotSimple("vertex " + p.vertex_labels_[v] + " lies in " + std::to_string(count) +
                            " facets, expected " + std::to_string(n));
    }

    // Intersection closure of the facet sets gives every proper face.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (const auto& f : p.facets_)
        if (seen.insert(f).second) frontier.push_back(f);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& f : p.facets_) {
                auto h = intersect_sorted(g, f);
                if (!h.empty() && seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }

    std::vector<int> all(p.vertex_count());
    for (int v = 0; v < p.vertex_count(); ++v) all[v] = v;
    seen.insert(all);  // the polytope itself, in no facet

    for (const auto& vs : seen) {
        Face face;
        face.vertices = vs;
        for (size_t i = 0; i < p.facets_.size(); ++i)
            if (subset_sorted(vs, p.facets_[i])) face.facets.push_back(static_cast<int>(i));
        if (static_cast<int>(face.facets.size()) > n)
            throw InconsistentLattice("face lies in more than n facets");
        face.dim = n - static_cast<int>(face.facets.size());
        p.faces_.push_back(std::move(face));
    }

    std::sort(p.faces_.begin(), p.faces_.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });

    // In a simple polytope the lattice's 0-faces are exactly the vertices.
    int zero_faces = 0;
    for (const Face& f : p.faces_)
        if (f.dim == 0) {
            if (f.vertices.size() != 1) throw InconsistentLattice("0-face with several vertices");
            ++zero_faces;
        }
    if (zero_faces != p.vertex_count())
        throw InconsistentLattice("lattice 0-faces do not match the vertex set");

    return p;
}

SimplePolytope ngon(int m) {
    if (m < 3) throw BadParameter("an m-gon needs m >= 3");
    std::vector<std::vector<std::string>> facets;
    auto v = [](int i) { return "v" + std::to_string(i + 1); };
    for (int i = 0; i < m; ++i) facets.push_back({v(i), v((i + 1) % m)});
    return build_polytope(facets, 2);
}

SimplePolytope simplex(int n) {
    if (n < 1) throw BadParameter("a simplex needs n >= 1");
    std::vector<std::vector<std::string>> facets;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<std::string> f;
        for (int v = 0; v <= n; ++v)
            if (v != skip) f.push_back(std::to_string(v));
        facets.push_back(std::move(f));
    }
    return build_polytope(facets, n);
}

SimplePolytope cube(int n) {
    if (n < 1) throw BadParameter("a cube needs n >= 1");
    if (n > 16) throw BadParameter("cube dimension too large");
    auto bits = [n](int mask) {
        std::string s(n, '0');
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) s[b] = '1';
        return s;
    };
    std::vector<std::vector<std::string>> facets;
    for (int axis = 0; axis < n; ++axis)
        for (int side = 0; side <= 1; ++side) {
            std::vector<std::string> f;
            for (int mask = 0; mask < (1 << n); ++mask)
                if (((mask >> axis) & 1) == side) f.push_back(bits(mask));
            facets.push_back(std::move(f));
        }
    return build_polytope(facets, n);
}

FVector f_vector(const SimplePolytope& p) {
    int n = p.dim();
    std::vector<Int> f(n, 0);
    for (const Face& face : p.faces()) {
        if (face.dim == n) continue;
        int codim = n - face.dim;  // 1..n
        f[codim - 1] += 1;
    }
    return FVector{std::move(f)};
}

HPolynomial h_polynomial(const SimplePolytope& p) {
    int n = p.dim();
    FVector f = f_vector(p);
    // Horner-style expansion of (t-1)^n + f_0 (t-1)^{n-1} + ... + f_{n-1}.
    std::vector<Int> h{1};  // running polynomial, low degree first
    for (int i = 0; i < n; ++i) {
        std::vector<Int> next(h.size() + 1, 0);
        for (size_t j = 0; j < h.size(); ++j) {
            next[j] -= h[j];
            next[j + 1] += h[j];
        }
        next[0] += f.entries[i];
        h = std::move(next);
    }
    return HPolynomial{std::move(h)};
}

Int eval_h(const HPolynomial& h, const Int& t) {
    Int r = 0;
    for (auto it = h.coeffs.rbegin(); it != h.coeffs.rend(); ++it) r = r * t + *it;
    return r;
}

CharFnReport validate_characteristic_function(const SimplePolytope& p, const CharacteristicFunction& lambda) {
    int n = p.dim();
    if (lambda.d != 1 && lambda.d != 2) throw BadParameter("characteristic function needs d in {1,2}");
    if (static_cast<int>(lambda.assignment.size()) != p.facet_count())
        throw DimensionMismatch("characteristic function must assign a vector to every facet");
    for (const auto& vec : lambda.assignment)
        if (static_cast<int>(vec.size()) != n)
            throw DimensionMismatch("characteristic vectors must have length n");

    CharFnReport report;
    report.valid = true;
    for (const Face& face : p.faces()) {
        if (face.dim != 0) continue;
        ZMat m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.set(r, c, lambda.assignment[face.facets[r]][c]);
        Int det = determinant(m);
        bool ok = lambda.d == 2 ? (det == 1 || det == -1) : (det % 2 != 0);
        report.per_vertex.emplace_back(p.vertex_labels()[face.vertices[0]], ok);
        if (!ok) report.valid = false;
    }
    return report;
}

std::pair<CellVector, Int> diagonal_preimage_cell_vector(const SimplePolytope& p, int d, int ell) {
    if (ell < 1) throw BadParameter("ell must be >= 1");
    if (d != 1 && d != 2) throw BadParameter("d must be 1 or 2");
    int n = p.dim();
    FVector f = f_vector(p);
    auto f_at = [&](int i) -> Int {  // faces of dimension i, with f_{-1} := 1 for P itself
        return i == n ? Int(1) : f.entries[n - i - 1];
    };

    CellVector cv;
    cv.d = d;
    cv.ell = ell;
    Int chi = 0;
    if (d == 1) {
        // An i-face contributes 2^{i*ell} diagonal cells of dimension i.
        cv.counts.assign(n + 1, 0);
        for (int i = 0; i <= n; ++i) cv.counts[i] = pow2(static_cast<long long>(i) * ell) * f_at(i);
        for (int i = 0; i <= n; ++i) chi += (i % 2 == 0 ? cv.counts[i] : -cv.counts[i]);
    } else {
        // An i-face contributes binom(i*ell, j) cells of dimension i+j, 0 <= j <= i*ell.
        cv.counts.assign(static_cast<size_t>(n) * ell + n + 1, 0);
        for (int i = 0; i <= n; ++i)
            for (long long j = 0; j <= static_cast<long long>(i) * ell; ++j)
                cv.counts[i + j] += binomial(static_cast<long long>(i) * ell, j) * f_at(i);
        for (size_t k = 0; k < cv.counts.size(); ++k)
            chi += (k % 2 == 0 ? cv.counts[k] : -cv.counts[k]);
    }
    return {std::move(cv), chi};
}

}  // namespace torc
