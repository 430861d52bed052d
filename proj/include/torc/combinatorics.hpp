#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torc/ints.hpp"

namespace torc {

/**
 * Integer partition in canonical descending order. Partitions compare by
 * lexicographically descending part sequence, so iterating a
 * std::map<Partition, ...> lists (k) first and (1,...,1) last, matching the
 * enumeration order of partitions().
 */
struct Partition {
    std::vector<int> parts;  // descending

    int k() const;                              // sum of parts
    int s() const { return static_cast<int>(parts.size()); }
    std::map<int, int> multiplicities() const;  // distinct part -> count
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts > o.parts; }
};

/// A subgraph of the complete graph on [k], recorded by its edge subset
/// together with the partition of component sizes; isolated vertices count
/// as size-1 components.
struct SubgraphSummary {
    std::vector<std::pair<int, int>> edge_subset;  // pairs (i, j) with 0 <= i < j < k
    Partition component_size_partition;
    int edge_count = 0;
};

SubgraphSummary summarize_subgraph(int k, std::vector<std::pair<int, int>> edges);

/// All partitions of k, lexicographically descending: (k), ..., (1,...,1).
std::vector<Partition> partitions(int k);

/// Signed coefficient k!(-1)^{k-s} / (prod r_i! * prod k_i); always an integer.
Int coeff_closed(const Partition& I);

/**
 * Brute-force coefficients for all partitions of k: enumerate every edge
 * subset of the complete graph on [k], bucket by the partition of component
 * sizes (isolated vertices count as size-1 components), and accumulate
 * (-1)^{#edges}. k must be in [2, 6].
 */
std::map<Partition, Int> coeff_bruteforce(int k);

/// Number of permutations of [k] with cycle type I: k!/(prod r_i! * prod k_i).
Int cycle_type_count(const Partition& I);

/// Component-size partition of the graph on vertex set [k] with the given edges.
Partition component_partition(int k, const std::vector<std::pair<int, int>>& edges);

/// Number of connected graphs on j labeled vertices (by enumeration, j <= 6).
Int connected_graph_count(int j);

/// Number of set partitions of [k] with block sizes I: k!/(prod k_i! * prod r_i!).
Int set_partition_count(const Partition& I);

}  // namespace torc
