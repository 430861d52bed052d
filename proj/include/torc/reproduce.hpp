#pragma once

#include <string>
#include <vector>

#include "torc/ints.hpp"

namespace torc {

/// One comparison row of a reproduction table.
struct CheckRow {
    std::string label;
    std::string computed;
    std::string expected;
    bool pass = false;
};

bool all_pass(const std::vector<CheckRow>& rows);

// Reference value tables, hardcoded as the comparison oracles.
std::vector<int> expected_polygon_betti(int m, int d);
std::vector<int> expected_simplex_betti_d1(int n);  // mod 2 Betti numbers
std::vector<int> expected_simplex_betti_d2(int n);  // integral Betti numbers
std::vector<int> expected_kij_betti(int n, int i, int j);
long long expected_simplex_e2(int n, int p, int q);  // E^2 dims of the d=1 model over Z2

// Reproduction tables; every computed value in them comes from the library,
// every expected value from the closed forms above.
std::vector<CheckRow> reproduce_prop_b1(int m_max);
std::vector<CheckRow> reproduce_prop_b2(int n_max);
std::vector<CheckRow> reproduce_prop_hom(int n_max);
std::vector<CheckRow> reproduce_thm15(int m_max, int n_max);
std::vector<CheckRow> reproduce_lemma_annulus(int m_max);

std::string format_betti(const std::vector<int>& betti);
std::vector<int> trim_zeros(std::vector<int> v);

}  // namespace torc
