#include "torc/gf2.hpp"

#include <bit>

namespace torc {

GF2Mat::GF2Mat(int rows, int cols)
    : nr_(rows), nc_(cols), words_((rows + 63) / 64),
      data_(static_cast<size_t>(cols) * words_, 0) {}

GF2Mat GF2Mat::from_zmat(const ZMat& m) {
    GF2Mat g(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            if (v % 2 != 0) g.set(i, j, true);
    return g;
}

void GF2Mat::set(int i, int j, bool v) {
    uint64_t& w = data_[static_cast<size_t>(j) * words_ + (i >> 6)];
    uint64_t bit = uint64_t(1) << (i & 63);
    if (v)
        w |= bit;
    else
        w &= ~bit;
}

bool GF2Mat::get(int i, int j) const {
    return (data_[static_cast<size_t>(j) * words_ + (i >> 6)] >> (i & 63)) & 1;
}

int GF2Mat::column_low(int j) const {
    const uint64_t* col = &data_[static_cast<size_t>(j) * words_];
    for (int w = words_ - 1; w >= 0; --w)
        if (col[w] != 0) return (w << 6) + 63 - std::countl_zero(col[w]);
    return -1;
}

void GF2Mat::column_xor(int dst, int src) {
    uint64_t* d = &data_[static_cast<size_t>(dst) * words_];
    const uint64_t* s = &data_[static_cast<size_t>(src) * words_];
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
}

std::vector<int> GF2Mat::reduced_lows() const {
    GF2Mat work = *this;
    std::vector<int> low(nc_, -1);
    std::vector<int> owner(nr_, -1);
    for (int j = 0; j < nc_; ++j) {
        int l = work.column_low(j);
        while (l >= 0 && owner[l] >= 0) {
            work.column_xor(j, owner[l]);
            l = work.column_low(j);
        }
        low[j] = l;
        if (l >= 0) owner[l] = j;
    }
    return low;
}

int GF2Mat::rank() const {
    int r = 0;
    for (int l : reduced_lows())
        if (l >= 0) ++r;
    return r;
}

}  // namespace torc
