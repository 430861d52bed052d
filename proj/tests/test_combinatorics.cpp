#include <doctest.h>

#include "torc/combinatorics.hpp"
#include "torc/errors.hpp"

using namespace torc;

namespace {

// Oracle for the signed Stirling identity: coefficients of the falling
// factorial x(x-1)...(x-k+1), low degree first.
std::vector<Int> falling_factorial_coeffs(int k) {
    std::vector<Int> poly{1};  // constant 1
    for (int l = 0; l < k; ++l) {
        std::vector<Int> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= Int(l) * poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

// Unsigned count of vertex-full subgraphs per component partition.
std::map<Partition, Int> subgraph_counts(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    std::map<Partition, Int> counts;
    for (uint32_t mask = 0; mask < (uint32_t(1) << edges.size()); ++mask) {
        std::vector<std::pair<int, int>> used;
        for (size_t e = 0; e < edges.size(); ++e)
            if (mask & (uint32_t(1) << e)) used.push_back(edges[e]);
        counts[component_partition(k, used)] += 1;
    }
    return counts;
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("partition enumeration") {
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    std::vector<std::vector<int>> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    auto got = partitions(4);
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts == expected[i]);
    CHECK_THROWS_AS(partitions(0), BadParameter);
}

TEST_CASE("closed-form coefficients") {
    for (int k = 1; k <= 8; ++k) {
        Int want = factorial(k - 1);
        if (k % 2 == 0) want = -want;
        CHECK(coeff_closed(Partition{{k}}) == want);
        CHECK(coeff_closed(Partition{std::vector<int>(k, 1)}) == 1);
    }
    CHECK(coeff_closed(Partition{{2, 1}}) == -3);
    CHECK(coeff_closed(Partition{{2, 2}}) == 3);
    CHECK_THROWS_AS(coeff_closed(Partition{{1, 2}}), BadParameter);
    CHECK_THROWS_AS(coeff_closed(Partition{{2, 0}}), BadParameter);
    CHECK_THROWS_AS(coeff_closed(Partition{}), BadParameter);
}

TEST_CASE("brute-force coefficients for small k") {
    auto c2 = coeff_bruteforce(2);
    CHECK(c2.at(Partition{{1, 1}}) == 1);
    CHECK(c2.at(Partition{{2}}) == -1);

    auto c3 = coeff_bruteforce(3);
    CHECK(c3.at(Partition{{1, 1, 1}}) == 1);
    CHECK(c3.at(Partition{{2, 1}}) == -3);
    CHECK(c3.at(Partition{{3}}) == 2);

    CHECK(coeff_bruteforce(4).at(Partition{{2, 2}}) == 3);
    CHECK_THROWS_AS(coeff_bruteforce(7), TooLarge);
    CHECK_THROWS_AS(coeff_bruteforce(1), BadParameter);
}

TEST_CASE("closed form agrees with brute force for k <= 6") {
    for (int k = 2; k <= 6; ++k) {
        auto brute = coeff_bruteforce(k);
        auto parts = partitions(k);
        CHECK(brute.size() == parts.size());
        for (const Partition& p : parts) CHECK(coeff_closed(p) == brute.at(p));
    }
}

TEST_CASE("cycle type counts match magnitudes and signs") {
    CHECK(cycle_type_count(Partition{{4}}) == 6);
    CHECK(cycle_type_count(Partition{{1, 1, 1}}) == 1);
    CHECK(cycle_type_count(Partition{{2, 2}}) == 3);
    for (int k = 1; k <= 10; ++k) {
        Int total = 0;
        for (const Partition& p : partitions(k)) {
            Int c = coeff_closed(p);
            Int count = cycle_type_count(p);
            CHECK(abs(c) == count);
            CHECK((c > 0) == ((k - p.s()) % 2 == 0));
            total += count;
        }
        CHECK(total == factorial(k));  // cycle types partition the symmetric group
    }
}

TEST_CASE("part-count sums give falling factorial coefficients") {
    for (int k = 1; k <= 8; ++k) {
        std::vector<Int> sums(k + 1, 0);
        for (const Partition& p : partitions(k)) sums[p.s()] += coeff_closed(p);
        std::vector<Int> oracle = falling_factorial_coeffs(k);
        for (int s = 1; s <= k; ++s) CHECK(sums[s] == oracle[s]);
        CHECK(oracle[0] == 0);
    }
}

TEST_CASE("bucketed subgraph totals factor through shapes") {
    CHECK(connected_graph_count(1) == 1);
    CHECK(connected_graph_count(2) == 1);
    CHECK(connected_graph_count(3) == 4);
    CHECK(connected_graph_count(4) == 38);
    CHECK(connected_graph_count(5) == 728);
    for (int k = 2; k <= 6; ++k) {
        auto counts = subgraph_counts(k);
        for (const Partition& p : partitions(k)) {
            Int shape = set_partition_count(p);
            for (int part : p.parts) shape *= connected_graph_count(part);
            CHECK(counts.at(p) == shape);
        }
    }
}

TEST_CASE("component partitions and subgraph summaries") {
    CHECK(component_partition(4, {}).parts == std::vector<int>{1, 1, 1, 1});
    CHECK(component_partition(4, {{0, 1}, {2, 3}}).parts == std::vector<int>{2, 2});
    CHECK(component_partition(3, {{0, 1}, {1, 2}}).parts == std::vector<int>{3});

    SubgraphSummary s = summarize_subgraph(4, {{1, 0}, {2, 3}, {0, 1}});
    CHECK(s.edge_count == 2);  // duplicates and orientation are normalized away
    CHECK(s.edge_subset == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(s.component_size_partition.parts == std::vector<int>{2, 2});
    CHECK_THROWS_AS(summarize_subgraph(3, {{1, 1}}), BadParameter);
}

TEST_CASE("brute force is deterministic under a thread cap") {
    auto reference = coeff_bruteforce(5);
#ifdef _WIN32
    _putenv_s("TORCFG_THREADS", "3");
#else
    setenv("TORCFG_THREADS", "3", 1);
#endif
    auto capped = coeff_bruteforce(5);
#ifndef _WIN32
    unsetenv("TORCFG_THREADS");
#endif
    CHECK(capped == reference);
}

}  // TEST_SUITE
