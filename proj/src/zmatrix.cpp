#include "torc/zmatrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace torc {

namespace {
const Int kZero = 0;

void check_index(int i, int n, const char* what) {
    if (i < 0 || i >= n) throw BadParameter(std::string("matrix index out of range: ") + what);
}
}  // namespace

const Int& ZMat::at(int i, int j) const {
    check_index(i, nr_, "row");
    check_index(j, nc_, "col");
    auto it = rows_[i].find(j);
    return it == rows_[i].end() ? kZero : it->second;
}

void ZMat::set(int i, int j, Int v) {
    check_index(i, nr_, "row");
    check_index(j, nc_, "col");
    if (v == 0)
        rows_[i].erase(j);
    else
        rows_[i][j] = std::move(v);
}

void ZMat::add(int i, int j, const Int& v) {
    if (v == 0) return;
    check_index(i, nr_, "row");
    check_index(j, nc_, "col");
    auto [it, inserted] = rows_[i].try_emplace(j, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) rows_[i].erase(it);
    }
}

long long ZMat::nnz() const {
    long long n = 0;
    for (const auto& r : rows_) n += static_cast<long long>(r.size());
    return n;
}

bool ZMat::is_zero_mod2() const {
    for (const auto& r : rows_)
        for (const auto& [j, v] : r)
            if (v % 2 != 0) return false;
    return true;
}

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ZMat ZMat::transposed() const {
    ZMat t(nc_, nr_);
    for (int i = 0; i < nr_; ++i)
        for (const auto& [j, v] : rows_[i]) t.set(j, i, v);
    return t;
}

ZMat ZMat::operator*(const ZMat& other) const {
    if (nc_ != other.nr_) throw DimensionMismatch("matrix product shape mismatch");
    ZMat out(nr_, other.nc_);
    for (int i = 0; i < nr_; ++i)
        for (const auto& [k, v] : rows_[i])
            for (const auto& [j, w] : other.rows_[k]) out.add(i, j, v * w);
    return out;
}

ZMat ZMat::operator+(const ZMat& other) const {
    if (nr_ != other.nr_ || nc_ != other.nc_) throw DimensionMismatch("matrix sum shape mismatch");
    ZMat out = *this;
    for (int i = 0; i < nr_; ++i)
        for (const auto& [j, v] : other.rows_[i]) out.add(i, j, v);
    return out;
}

ZMat ZMat::operator-(const ZMat& other) const {
    if (nr_ != other.nr_ || nc_ != other.nc_) throw DimensionMismatch("matrix sum shape mismatch");
    ZMat out = *this;
    for (int i = 0; i < nr_; ++i)
        for (const auto& [j, v] : other.rows_[i]) out.add(i, j, -v);
    return out;
}

bool ZMat::operator==(const ZMat& other) const {
    return nr_ == other.nr_ && nc_ == other.nc_ && rows_ == other.rows_;
}

bool ZMat::equals_mod2(const ZMat& other) const {
    if (nr_ != other.nr_ || nc_ != other.nc_) return false;
    return (*this - other).is_zero_mod2();
}

std::string ZMat::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < nr_; ++i) {
        for (int j = 0; j < nc_; ++j) os << at(i, j) << (j + 1 == nc_ ? "" : " ");
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

struct EliminationState {
    int nr, nc;
    std::vector<std::unordered_map<int, Int>> rows;  // live entries
    std::vector<std::unordered_set<int>> col_rows;   // rows with an entry per column
    std::vector<char> row_alive, col_alive;

    explicit EliminationState(const ZMat& m)
        : nr(m.rows()), nc(m.cols()), rows(m.rows()), col_rows(m.cols()),
          row_alive(m.rows(), 1), col_alive(m.cols(), 1) {
        for (int i = 0; i < nr; ++i)
            for (const auto& [j, v] : m.row(i)) {
                rows[i].emplace(j, v);
                col_rows[j].insert(i);
            }
    }

    Int get(int i, int j) const {
        auto it = rows[i].find(j);
        return it == rows[i].end() ? Int(0) : it->second;
    }

    void put(int i, int j, Int v) {
        auto it = rows[i].find(j);
        if (v == 0) {
            if (it != rows[i].end()) {
                rows[i].erase(it);
                col_rows[j].erase(i);
            }
        } else if (it == rows[i].end()) {
            rows[i].emplace(j, std::move(v));
            col_rows[j].insert(i);
        } else {
            it->second = std::move(v);
        }
    }

    // rows[dst] += c * rows[src]
    void row_addmul(int dst, int src, const Int& c) {
        if (c == 0) return;
        for (const auto& [j, v] : rows[src]) put(dst, j, get(dst, j) + c * v);
    }

    // col[dst] += c * col[src]
    void col_addmul(int dst, int src, const Int& c) {
        if (c == 0) return;
        std::vector<int> src_rows(col_rows[src].begin(), col_rows[src].end());
        for (int r : src_rows) put(r, dst, get(r, dst) + c * rows[r].at(src));
    }

    void kill(int i, int j) {
        for (const auto& [c, v] : rows[i]) col_rows[c].erase(i);
        rows[i].clear();
        row_alive[i] = 0;
        std::vector<int> rs(col_rows[j].begin(), col_rows[j].end());
        for (int r : rs) rows[r].erase(j);
        col_rows[j].clear();
        col_alive[j] = 0;
    }
};

// Quotient with remainder of minimal absolute value.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0) {
        Int ab = abs(b);
        if (2 * abs(r) > ab) {
            if ((r < 0) == (b < 0))
                q += 1;
            else
                q -= 1;
        }
    }
    return q;
}

struct Pivot {
    int row = -1, col = -1;
    bool found() const { return row >= 0; }
};

// Prefer unit entries with small Markowitz fill estimate; fall back to the
// entry of minimal absolute value.
Pivot select_pivot(const EliminationState& st) {
    Pivot best;
    bool best_unit = false;
    long long best_cost = std::numeric_limits<long long>::max();
    Int best_abs = 0;

    // Scan the sparsest columns first; a bounded scan keeps selection cheap.
    std::vector<std::pair<size_t, int>> cols;
    cols.reserve(64);
    for (int j = 0; j < st.nc; ++j)
        if (st.col_alive[j] && !st.col_rows[j].empty()) cols.push_back({st.col_rows[j].size(), j});
    if (cols.empty()) return best;
    size_t scan = std::min<size_t>(cols.size(), 48);
    std::partial_sort(cols.begin(), cols.begin() + scan, cols.end());

    for (size_t t = 0; t < scan; ++t) {
        int j = cols[t].second;
        for (int i : st.col_rows[j]) {
            const Int& v = st.rows[i].at(j);
            Int av = abs(v);
            bool unit = av == 1;
            long long cost = static_cast<long long>(st.rows[i].size() - 1) *
                             static_cast<long long>(st.col_rows[j].size() - 1);
            bool better;
            if (unit != best_unit)
                better = unit;
            else if (unit)
                better = cost < best_cost;
            else
                better = !best.found() || av < best_abs || (av == best_abs && cost < best_cost);
            if (better) {
                best = {i, j};
                best_unit = unit;
                best_cost = cost;
                best_abs = av;
            }
        }
        if (best_unit && best_cost == 0) break;
    }
    return best;
}

void divisibility_chain(std::vector<Int>& d) {
    for (auto& v : d) v = abs(v);
    std::sort(d.begin(), d.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] % d[i] != 0) {
                Int g = gcd(d[i], d[i + 1]);
                Int l = d[i] / g * d[i + 1];
                d[i] = g;
                d[i + 1] = l;
                changed = true;
            }
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const ZMat& m) {
    EliminationState st(m);
    std::vector<Int> diag;
    Int content_multiplier = 1;
    long long steps = 0;

    while (true) {
        // Periodic whole-matrix content extraction keeps entries small when
        // no unit pivot is left: snf(g*M) == g*snf(M).
        if ((++steps & 0x1ff) == 0) {
            Int g = 0;
            bool any_unit = false;
            for (int i = 0; i < st.nr && !any_unit; ++i)
                for (const auto& [j, v] : st.rows[i]) {
                    g = gcd(g, v);
                    if (g == 1) {
                        any_unit = true;
                        break;
                    }
                }
            if (!any_unit && g > 1) {
                for (int i = 0; i < st.nr; ++i)
                    for (auto& [j, v] : st.rows[i]) v /= g;
                content_multiplier *= g;
            }
        }

        Pivot pv = select_pivot(st);
        if (!pv.found()) break;
        int pi = pv.row, pj = pv.col;

        // Shrink the pivot until it clears its row and column exactly.
        bool clean = false;
        while (!clean) {
            clean = true;
            Int p = st.get(pi, pj);
            std::vector<int> col(st.col_rows[pj].begin(), st.col_rows[pj].end());
            for (int r : col) {
                if (r == pi) continue;
                Int q = nearest_quotient(st.rows[r].at(pj), p);
                st.row_addmul(r, pi, -q);
                Int rem = st.get(r, pj);
                if (rem != 0) {
                    pi = r;  // strictly smaller remainder becomes the pivot
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            p = st.get(pi, pj);
            std::vector<int> rowcols;
            rowcols.reserve(st.rows[pi].size());
            for (const auto& [c, v] : st.rows[pi])
                if (c != pj) rowcols.push_back(c);
            for (int c : rowcols) {
                Int q = nearest_quotient(st.rows[pi].at(c), p);
                st.col_addmul(c, pj, -q);
                Int rem = st.get(pi, c);
                if (rem != 0) {
                    pj = c;
                    clean = false;
                    break;
                }
            }
        }

        diag.push_back(abs(st.get(pi, pj)) * content_multiplier);
        st.kill(pi, pj);
    }

    divisibility_chain(diag);
    SmithResult res;
    res.diagonal = std::move(diag);
    res.rank = static_cast<int>(res.diagonal.size());
    return res;
}

int rank_z(const ZMat& m) {
    return smith_normal_form(m).rank;
}

Int determinant(const ZMat& m) {
    if (m.rows() != m.cols()) throw BadParameter("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : m.row(i)) a[i][j] = v;

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<int> rational_reduced_lows(std::vector<std::map<int, Rat>> cols, int nrows) {
    int nc = static_cast<int>(cols.size());
    std::vector<int> low(nc, -1);
    std::vector<int> owner(nrows, -1);
    for (int j = 0; j < nc; ++j) {
        while (!cols[j].empty()) {
            int l = cols[j].rbegin()->first;
            int k = owner[l];
            if (k < 0) break;
            Rat factor = cols[j].rbegin()->second / cols[k].rbegin()->second;
            for (const auto& [r, v] : cols[k]) {
                auto it = cols[j].find(r);
                if (it == cols[j].end()) {
                    cols[j].emplace(r, -factor * v);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) cols[j].erase(it);
                }
            }
        }
        if (!cols[j].empty()) {
            low[j] = cols[j].rbegin()->first;
            owner[low[j]] = j;
        }
    }
    return low;
}

}  // namespace torc
