#pragma once

#include <cstdint>
#include <vector>

#include "torc/zmatrix.hpp"

namespace torc {

/**
 * Dense bit-packed matrix over GF(2), stored column-major so column
 * operations are word-wide XORs.
 */
class GF2Mat {
public:
    GF2Mat(int rows, int cols);
    static GF2Mat from_zmat(const ZMat& m);  // entries reduced mod 2

    int rows() const { return nr_; }
    int cols() const { return nc_; }
    void set(int i, int j, bool v);
    bool get(int i, int j) const;

    int rank() const;

    // Same contract as rational_reduced_lows: left-to-right column reduction
    // with distinct lowest nonzero rows; returns the lowest row per column.
    std::vector<int> reduced_lows() const;

private:
    int nr_, nc_, words_;
    std::vector<uint64_t> data_;  // column j occupies data_[j*words_ .. +words_)
    int column_low(int j) const;
    void column_xor(int dst, int src);
};

}  // namespace torc
