#include "torc/cover.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "torc/errors.hpp"

namespace torc {

namespace {

ChainComplex atom_complex(const StandardSpace::Factor& f, Coeff coeff) {
    using Kind = StandardSpace::Kind;
    ChainComplex c;
    c.coeff = coeff;
    switch (f.kind) {
        case Kind::Point:
            c.basis = {{"pt"}};
            break;
        case Kind::Circle:
            c.basis = {{"c0"}, {"c1"}};
            break;
        case Kind::Sphere2:
            c.basis = {{"s0"}, {}, {"s2"}};
            break;
        case Kind::RealProj: {
            if (coeff != Coeff::Z2)
                throw CoefficientMismatch("real projective pieces carry Z2 coefficients only");
            if (f.param < 0) throw BadParameter("negative projective dimension");
            c.basis.resize(f.param + 1);
            for (int q = 0; q <= f.param; ++q) c.basis[q] = {"r" + std::to_string(q)};
            break;
        }
        case Kind::CplxProj: {
            if (f.param < 0) throw BadParameter("negative projective dimension");
            c.basis.resize(2 * f.param + 1);
            for (int q = 0; q <= 2 * f.param; q += 2) c.basis[q] = {"p" + std::to_string(q)};
            break;
        }
    }
    c.boundary.resize(c.basis.size());
    c.boundary[0] = ZMat(0, c.dim_at(0));
    for (int q = 1; q <= c.top_degree(); ++q) c.boundary[q] = ZMat(c.dim_at(q - 1), c.dim_at(q));
    return c;
}

// Per-degree enumeration of the tensor basis: triples (i, ai, bi) meaning
// basis element ai of A_i tensor bi of B_{n-i}, listed with i ascending.
std::vector<std::vector<std::array<int, 3>>> tensor_enumeration(const ChainComplex& a,
                                                               const ChainComplex& b) {
    int top = a.top_degree() + b.top_degree();
    std::vector<std::vector<std::array<int, 3>>> items(top + 1);
    for (int n = 0; n <= top; ++n)
        for (int i = std::max(0, n - b.top_degree()); i <= std::min(n, a.top_degree()); ++i)
            for (int ai = 0; ai < a.dim_at(i); ++ai)
                for (int bi = 0; bi < b.dim_at(n - i); ++bi)
                    items[n].push_back({i, ai, bi});
    return items;
}

int tensor_position(const std::vector<std::array<int, 3>>& level, int i, int ai, int bi) {
    auto it = std::lower_bound(level.begin(), level.end(), std::array<int, 3>{i, ai, bi});
    return static_cast<int>(it - level.begin());
}

}  // namespace

ChainComplex tensor_product(const ChainComplex& a, const ChainComplex& b) {
    if (a.coeff != b.coeff) throw CoefficientMismatch("tensor factors over different coefficients");
    ChainComplex c;
    c.coeff = a.coeff;
    auto items = tensor_enumeration(a, b);
    int top = static_cast<int>(items.size()) - 1;
    c.basis.resize(top + 1);
    for (int n = 0; n <= top; ++n)
        for (const auto& [i, ai, bi] : items[n])
            c.basis[n].push_back(a.basis[i][ai] + "|" + b.basis[n - i][bi]);

    std::vector<ZMat> at(a.top_degree() + 1), bt(b.top_degree() + 1);
    for (int q = 0; q <= a.top_degree(); ++q) at[q] = a.boundary[q].transposed();
    for (int q = 0; q <= b.top_degree(); ++q) bt[q] = b.boundary[q].transposed();

    c.boundary.resize(top + 1);
    c.boundary[0] = ZMat(0, c.dim_at(0));
    for (int n = 1; n <= top; ++n) {
        ZMat d(c.dim_at(n - 1), c.dim_at(n));
        for (size_t col = 0; col < items[n].size(); ++col) {
            auto [i, ai, bi] = items[n][col];
            // d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy
            if (i >= 1)
                for (const auto& [row_a, v] : at[i].row(ai))
                    d.add(tensor_position(items[n - 1], i - 1, row_a, bi), static_cast<int>(col), v);
            if (n - i >= 1)
                for (const auto& [row_b, v] : bt[n - i].row(bi))
                    d.add(tensor_position(items[n - 1], i, ai, row_b), static_cast<int>(col),
                          (i % 2 == 0) ? v : -v);
        }
        c.boundary[n] = std::move(d);
    }
    c.validate();
    return c;
}

StandardSpace StandardSpace::times(const StandardSpace& other) const {
    StandardSpace s = *this;
    s.factors.insert(s.factors.end(), other.factors.begin(), other.factors.end());
    return s;
}

std::string StandardSpace::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << "x";
        switch (factors[i].kind) {
            case Kind::Point: os << "pt"; break;
            case Kind::Circle: os << "S1"; break;
            case Kind::Sphere2: os << "S2"; break;
            case Kind::RealProj: os << "RP" << factors[i].param; break;
            case Kind::CplxProj: os << "CP" << factors[i].param; break;
        }
    }
    return os.str();
}

ChainComplex standard_complex(const StandardSpace& space, Coeff coeff) {
    if (space.factors.empty()) throw BadParameter("standard space needs at least one factor");
    ChainComplex c = atom_complex(space.factors[0], coeff);
    for (size_t i = 1; i < space.factors.size(); ++i)
        c = tensor_product(c, atom_complex(space.factors[i], coeff));
    return c;
}

namespace {

// Per-degree matrices of the cellwise inclusion between two atoms.
std::vector<ZMat> atom_inclusion(const StandardSpace::Factor& sub, const StandardSpace::Factor& super,
                                 Coeff coeff) {
    using Kind = StandardSpace::Kind;
    ChainComplex src = atom_complex(sub, coeff);
    ChainComplex dst = atom_complex(super, coeff);

    bool ok = false;
    if (sub.kind == Kind::Point) ok = true;
    else if (sub.kind == super.kind && (sub.kind == Kind::Circle || sub.kind == Kind::Sphere2)) ok = true;
    else if (sub.kind == super.kind &&
             (sub.kind == Kind::RealProj || sub.kind == Kind::CplxProj) && sub.param <= super.param)
        ok = true;
    if (!ok)
        throw NotASubspacePattern("no cellwise inclusion from " +
                                  StandardSpace{{sub}}.to_string() + " into " +
                                  StandardSpace{{super}}.to_string());

    std::vector<ZMat> mats(src.top_degree() + 1);
    for (int q = 0; q <= src.top_degree(); ++q) {
        mats[q] = ZMat(dst.dim_at(q), src.dim_at(q));
        for (int s = 0; s < src.dim_at(q); ++s) {
            if (sub.kind == Kind::Point) {
                mats[q].set(0, s, 1);  // basepoint 0-cell of the target
                continue;
            }
            const std::string& label = src.basis[q][s];
            auto it = std::find(dst.basis[q].begin(), dst.basis[q].end(), label);
            if (it == dst.basis[q].end()) throw NotASubspacePattern("missing target cell " + label);
            mats[q].set(static_cast<int>(it - dst.basis[q].begin()), s, 1);
        }
    }
    return mats;
}

}  // namespace

ChainMap inclusion_chain_map(const StandardSpace& sub, const StandardSpace& super, Coeff coeff) {
    if (sub.factors.size() != super.factors.size())
        throw NotASubspacePattern("factor counts differ");
    if (sub.factors.empty()) throw BadParameter("empty product");

    // Fold factorwise: map of (A x B) = map(A) tensor map(B), no signs for
    // degree-zero chain maps.
    ChainComplex src_acc = atom_complex(sub.factors[0], coeff);
    ChainComplex dst_acc = atom_complex(super.factors[0], coeff);
    std::vector<ZMat> acc = atom_inclusion(sub.factors[0], super.factors[0], coeff);

    for (size_t f = 1; f < sub.factors.size(); ++f) {
        ChainComplex src_b = atom_complex(sub.factors[f], coeff);
        ChainComplex dst_b = atom_complex(super.factors[f], coeff);
        std::vector<ZMat> mb = atom_inclusion(sub.factors[f], super.factors[f], coeff);

        auto src_items = tensor_enumeration(src_acc, src_b);
        auto dst_items = tensor_enumeration(dst_acc, dst_b);
        std::vector<ZMat> acct(acc.size()), mbt(mb.size());
        for (size_t q = 0; q < acc.size(); ++q) acct[q] = acc[q].transposed();
        for (size_t q = 0; q < mb.size(); ++q) mbt[q] = mb[q].transposed();
        std::vector<ZMat> out(src_items.size());
        for (size_t n = 0; n < src_items.size(); ++n) {
            int dst_dim = n < dst_items.size() ? static_cast<int>(dst_items[n].size()) : 0;
            out[n] = ZMat(dst_dim, static_cast<int>(src_items[n].size()));
            for (size_t col = 0; col < src_items[n].size(); ++col) {
                auto [i, ai, bi] = src_items[n][col];
                for (const auto& [ra, va] : acct[i].row(ai))
                    for (const auto& [rb, vb] : mbt[n - i].row(bi))
                        out[n].add(tensor_position(dst_items[n], i, ra, rb), static_cast<int>(col),
                                   va * vb);
            }
        }
        acc = std::move(out);
        src_acc = tensor_product(src_acc, src_b);
        dst_acc = tensor_product(dst_acc, dst_b);
    }
    return ChainMap{std::move(acc)};
}

bool is_chain_map(const ChainComplex& src, const ChainComplex& dst, const ChainMap& f, Coeff coeff) {
    if (static_cast<int>(f.mats.size()) != src.top_degree() + 1) return false;
    for (int q = 0; q <= src.top_degree(); ++q)
        if (f.mats[q].rows() != dst.dim_at(q) || f.mats[q].cols() != src.dim_at(q)) return false;
    for (int q = 1; q <= src.top_degree(); ++q) {
        ZMat lhs = dst.boundary[q] * f.mats[q];
        ZMat rhs = f.mats[q - 1] * src.boundary[q];
        if (coeff == Coeff::Z2 ? !lhs.equals_mod2(rhs) : !(lhs == rhs)) return false;
    }
    return true;
}

ChainMap compose(const ChainMap& second, const ChainMap& first) {
    ChainMap out;
    out.mats.resize(first.mats.size());
    for (size_t q = 0; q < first.mats.size(); ++q) {
        if (q < second.mats.size())
            out.mats[q] = second.mats[q] * first.mats[q];
        else
            out.mats[q] = ZMat(0, first.mats[q].cols());
    }
    return out;
}

bool chain_maps_equal(const ChainMap& a, const ChainMap& b, Coeff coeff) {
    if (a.mats.size() != b.mats.size()) return false;
    for (size_t q = 0; q < a.mats.size(); ++q) {
        if (coeff == Coeff::Z2 ? !a.mats[q].equals_mod2(b.mats[q]) : !(a.mats[q] == b.mats[q]))
            return false;
    }
    return true;
}

const ChainComplex& CoverModel::piece_of(const SimplexKey& a) const {
    auto it = piece.find(a);
    if (it == piece.end()) throw BadParameter("no piece for the given nerve simplex");
    return it->second;
}

const ChainMap& CoverModel::face_map_of(const SimplexKey& a, const SimplexKey& b) const {
    auto it = face_maps.find({a, b});
    if (it == face_maps.end()) throw BadParameter("no face map for the given pair");
    return it->second;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void build_face_maps(CoverModel& cm) {
    for (int dim = 1; dim <= cm.nerve.dim(); ++dim)
        for (const auto& a : cm.nerve.simplices[dim]) {
            for (size_t drop = 0; drop < a.size(); ++drop) {
                SimplexKey b;
                b.reserve(a.size() - 1);
                for (size_t i = 0; i < a.size(); ++i)
                    if (i != drop) b.push_back(a[i]);
                cm.face_maps.emplace(std::make_pair(a, b),
                                     inclusion_chain_map(cm.piece_space.at(a), cm.piece_space.at(b),
                                                         cm.coeff));
            }
        }
}

}  // namespace

CoverModel polygon_cover_model(int m, int d, Coeff coeff) {
    if (m < 3) throw BadParameter("polygons need m >= 3");
    if (d != 1 && d != 2) throw BadParameter("d must be 1 or 2");

    PairedComplex nerve = l_pm(m);
    CoverModel cm;
    cm.coeff = coeff;
    cm.d = d;
    cm.context = CoverModel::Context::Polygon;
    cm.context_param = m;
    cm.nerve = nerve.complex;
    cm.nerve_pairs = nerve.pairs;

    auto coordinate_space = [&](const std::vector<int>& face) {
        if (face.size() == 1) return StandardSpace::point();
        return d == 1 ? StandardSpace::circle() : StandardSpace::sphere2();
    };

    for (int dim = 0; dim <= cm.nerve.dim(); ++dim)
        for (const auto& a : cm.nerve.simplices[dim]) {
            std::vector<int> first = cm.nerve_pairs[a[0]].first;
            std::vector<int> second = cm.nerve_pairs[a[0]].second;
            for (size_t i = 1; i < a.size(); ++i) {
                first = intersect_sorted(first, cm.nerve_pairs[a[i]].first);
                second = intersect_sorted(second, cm.nerve_pairs[a[i]].second);
            }
            if (first.empty() || second.empty())
                throw ValidationFailed("nerve simplex with empty intersection face");
            StandardSpace space = coordinate_space(first).times(coordinate_space(second));
            cm.piece_space.emplace(a, space);
            cm.piece.emplace(a, standard_complex(space, coeff));
        }
    build_face_maps(cm);
    return cm;
}

CoverModel simplex_cover_model(int n, int d, std::optional<Coeff> coeff_opt) {
    if (n < 2) throw BadParameter("simplex models need n >= 2");
    if (d != 1 && d != 2) throw BadParameter("d must be 1 or 2");
    Coeff coeff = coeff_opt.value_or(d == 1 ? Coeff::Z2 : Coeff::Z);
    if (d == 1 && coeff != Coeff::Z2)
        throw CoefficientMismatch("d=1 simplex models are computed over Z2");

    SdComplex sd = sd_boundary_simplex(n);
    SimplePolytope p = simplex(n);

    CoverModel cm;
    cm.coeff = coeff;
    cm.d = d;
    cm.context = CoverModel::Context::Simplex;
    cm.context_param = n;
    cm.nerve = sd.complex;

    // Nerve vertex sigma stands for the disjoint pair (sigma, complement).
    cm.nerve_pairs.resize(sd.face_of_vertex.size());
    for (size_t v = 0; v < sd.face_of_vertex.size(); ++v) {
        std::vector<int> first, second;
        const auto& face = sd.face_of_vertex[v];
        for (int x : face) first.push_back(p.vertex_index(std::to_string(x)));
        for (int x = 0; x <= n; ++x)
            if (!std::binary_search(face.begin(), face.end(), x))
                second.push_back(p.vertex_index(std::to_string(x)));
        std::sort(first.begin(), first.end());
        std::sort(second.begin(), second.end());
        cm.nerve_pairs[v] = FacePair{std::move(first), std::move(second)};
    }

    auto proj = [&](int s) {
        return d == 1 ? StandardSpace::real_proj(s) : StandardSpace::cplx_proj(s);
    };

    for (int dim = 0; dim <= cm.nerve.dim(); ++dim)
        for (const auto& a : cm.nerve.simplices[dim]) {
            size_t min_size = SIZE_MAX, max_size = 0;
            for (int v : a) {
                size_t sz = sd.face_of_vertex[v].size();
                min_size = std::min(min_size, sz);
                max_size = std::max(max_size, sz);
            }
            int s = static_cast<int>(min_size) - 1;              // dim of the chain minimum
            int t = n - 1 - (static_cast<int>(max_size) - 1);    // complement dim of the maximum
            StandardSpace space = proj(s).times(proj(t));
            cm.piece_space.emplace(a, space);
            cm.piece.emplace(a, standard_complex(space, coeff));
        }
    build_face_maps(cm);
    return cm;
}

CoverValidation validate_cover_model(const CoverModel& cm) {
    CoverValidation report;
    report.pass = true;
    auto fail = [&](std::string msg) {
        report.pass = false;
        report.failures.push_back(std::move(msg));
    };

    auto key_name = [&](const SimplexKey& a) {
        std::string s;
        for (size_t i = 0; i < a.size(); ++i) s += (i ? "<" : "") + cm.nerve.vertices[a[i]];
        return s;
    };

    for (const auto& [ab, f] : cm.face_maps) {
        if (!is_chain_map(cm.piece_of(ab.first), cm.piece_of(ab.second), f, cm.coeff))
            fail("face map is not a chain map: " + key_name(ab.first) + " -> " + key_name(ab.second));
    }

    // Codimension-2 commutation.
    for (int dim = 2; dim <= cm.nerve.dim(); ++dim)
        for (const auto& a : cm.nerve.simplices[dim])
            for (size_t t1 = 0; t1 < a.size(); ++t1)
                for (size_t t2 = t1 + 1; t2 < a.size(); ++t2) {
                    SimplexKey c;
                    for (size_t i = 0; i < a.size(); ++i)
                        if (i != t1 && i != t2) c.push_back(a[i]);
                    SimplexKey b1 = c, b2 = c;
                    b1.insert(std::lower_bound(b1.begin(), b1.end(), a[t1]), a[t1]);
                    b2.insert(std::lower_bound(b2.begin(), b2.end(), a[t2]), a[t2]);
                    ChainMap path1 = compose(cm.face_map_of(b1, c), cm.face_map_of(a, b1));
                    ChainMap path2 = compose(cm.face_map_of(b2, c), cm.face_map_of(a, b2));
                    if (!chain_maps_equal(path1, path2, cm.coeff))
                        fail("codim-2 composites differ below " + key_name(a));
                }

    if (cm.context != CoverModel::Context::Custom) {
        SimplePolytope p = cm.context == CoverModel::Context::Polygon ? ngon(cm.context_param)
                                                                      : simplex(cm.context_param);
        try {
            LocallyNiceReport ln = locally_nice_check(cm.nerve, cm.nerve_pairs, p);
            if (!ln.pass)
                for (const auto& f : ln.failures) fail("locally nice: " + f);
        } catch (const VertexMismatch& e) {
            fail(std::string("locally nice: ") + e.what());
        }
    }
    return report;
}

}  // namespace torc
