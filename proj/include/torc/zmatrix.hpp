#pragma once

#include <map>
#include <string>
#include <vector>

#include "torc/errors.hpp"
#include "torc/ints.hpp"

namespace torc {

/**
 * Sparse integer matrix with ordered rows (column index -> nonzero value).
 * Small enough for chain maps and piece boundaries, and sparse enough for
 * the boundary matrices of barycentric subdivisions with tens of thousands
 * of simplices.
 */
class ZMat {
public:
    ZMat() : nr_(0), nc_(0) {}
    ZMat(int rows, int cols) : nr_(rows), nc_(cols), rows_(rows) {
        if (rows < 0 || cols < 0) throw BadParameter("negative matrix shape");
    }

    int rows() const { return nr_; }
    int cols() const { return nc_; }

    const Int& at(int i, int j) const;
    void set(int i, int j, Int v);
    void add(int i, int j, const Int& v);
    const std::map<int, Int>& row(int i) const { return rows_[i]; }

    long long nnz() const;
    bool is_zero() const { return nnz() == 0; }
    bool is_zero_mod2() const;

    static ZMat identity(int n);
    ZMat transposed() const;
    ZMat operator*(const ZMat& other) const;
    ZMat operator+(const ZMat& other) const;
    ZMat operator-(const ZMat& other) const;
    bool operator==(const ZMat& other) const;
    bool equals_mod2(const ZMat& other) const;

    std::string to_string() const;

private:
    int nr_, nc_;
    std::vector<std::map<int, Int>> rows_;
};

struct SmithResult {
    std::vector<Int> diagonal;  // positive, d1 | d2 | ... (nonzero entries only)
    int rank = 0;               // == diagonal.size()
};

// Exact Smith normal form by unimodular row/column operations. Pivots prefer
// units with a Markowitz fill estimate; non-unit pivots go through nearest
// remainder reduction, and the diagonal is normalized to a divisibility chain
// at the end.
SmithResult smith_normal_form(const ZMat& m);

// Rank over Z (equivalently over Q).
int rank_z(const ZMat& m);

// Determinant by fraction-free (Bareiss) elimination; square matrices only.
Int determinant(const ZMat& m);

// Persistence-style column reduction over Q for spectral-page rank queries.
// Columns are reduced left to right by adding earlier columns so that the
// lowest nonzero rows of the surviving columns are distinct; returns that
// lowest row per column (-1 for columns reduced to zero). For any column
// prefix C and row suffix u, rank(rows >= u, cols <= C) equals the number of
// j <= C with low(j) >= u.
std::vector<int> rational_reduced_lows(std::vector<std::map<int, Rat>> cols, int nrows);

}  // namespace torc
