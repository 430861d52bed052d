#include "torc/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "torc/errors.hpp"
#include "torc/parallel.hpp"

namespace torc {

int Partition::k() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts) ++m[p];
    return m;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

std::vector<Partition> partitions(int k) {
    if (k < 1) throw BadParameter("partitions need k >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Descending-lex enumeration: place the largest allowed part first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

namespace {

void require_canonical(const Partition& I) {
    if (I.parts.empty()) throw BadParameter("empty partition");
    for (size_t i = 0; i < I.parts.size(); ++i) {
        if (I.parts[i] < 1) throw BadParameter("partition parts must be positive");
        if (i > 0 && I.parts[i - 1] < I.parts[i])
            throw BadParameter("partition parts must be in descending order");
    }
}

}  // namespace

Int coeff_closed(const Partition& I) {
    require_canonical(I);
    int k = I.k(), s = I.s();
    Int num = factorial(k);
    Int den = 1;
    for (const auto& [part, mult] : I.multiplicities()) den *= factorial(mult);
    for (int part : I.parts) den *= part;
    Int value = num / den;
    return (k - s) % 2 == 0 ? value : -value;
}

Int cycle_type_count(const Partition& I) {
    require_canonical(I);
    Int den = 1;
    for (const auto& [part, mult] : I.multiplicities()) den *= factorial(mult);
    for (int part : I.parts) den *= part;
    return factorial(I.k()) / den;
}

Int set_partition_count(const Partition& I) {
    require_canonical(I);
    Int den = 1;
    for (const auto& [part, mult] : I.multiplicities()) den *= factorial(mult);
    for (int part : I.parts) den *= factorial(part);
    return factorial(I.k()) / den;
}

SubgraphSummary summarize_subgraph(int k, std::vector<std::pair<int, int>> edges) {
    for (auto& [a, b] : edges) {
        if (a == b) throw BadParameter("loops are not edges of the complete graph");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    SubgraphSummary s;
    s.component_size_partition = component_partition(k, edges);
    s.edge_count = static_cast<int>(edges.size());
    s.edge_subset = std::move(edges);
    return s;
}

Partition component_partition(int k, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= k || b >= k) throw BadParameter("edge endpoint out of range");
        parent[find(a)] = find(b);
    }
    std::vector<int> size(k, 0);
    for (int v = 0; v < k; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (int v = 0; v < k; ++v)
        if (size[v] > 0) parts.push_back(size[v]);
    std::sort(parts.rbegin(), parts.rend());
    return Partition{std::move(parts)};
}

namespace {

// Component-size partition for one edge subset, encoded as a bitmask over
// the C(k,2) edges of the complete graph.
Partition partition_of_mask(int k, const std::vector<std::pair<int, int>>& all_edges, uint32_t mask) {
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t e = 0; e < all_edges.size(); ++e)
        if (mask & (uint32_t(1) << e)) parent[find(all_edges[e].first)] = find(all_edges[e].second);
    std::vector<int> size(k, 0);
    for (int v = 0; v < k; ++v) ++size[find(v)];
    std::vector<int> parts;
    for (int v = 0; v < k; ++v)
        if (size[v] > 0) parts.push_back(size[v]);
    std::sort(parts.rbegin(), parts.rend());
    return Partition{std::move(parts)};
}

}  // namespace

std::map<Partition, Int> coeff_bruteforce(int k) {
    if (k < 2) throw BadParameter("coeff_bruteforce needs k >= 2");
    if (k > 6) throw TooLarge("coeff_bruteforce capped at k = 6");

    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) all_edges.emplace_back(i, j);
    const long long total = 1LL << all_edges.size();

    int workers = thread_count();
    std::vector<std::map<Partition, Int>> partial(workers);
    std::vector<std::pair<long long, long long>> spans;
    long long chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w)
        spans.emplace_back(w * chunk, std::min<long long>(total, (w + 1) * chunk));

    parallel_chunks(workers, [&](long long wb, long long we) {
        for (long long w = wb; w < we; ++w) {
            auto [b, e] = spans[w];
            for (long long mask = b; mask < e; ++mask) {
                Partition p = partition_of_mask(k, all_edges, static_cast<uint32_t>(mask));
                int edges = __builtin_popcountll(mask);
                partial[w][std::move(p)] += (edges % 2 == 0) ? 1 : -1;
            }
        }
    });

    std::map<Partition, Int> out;
    for (const auto& part : partial)
        for (const auto& [p, v] : part) out[p] += v;
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

Int connected_graph_count(int j) {
    if (j < 1) throw BadParameter("need j >= 1");
    if (j > 6) throw TooLarge("connected_graph_count capped at j = 6");
    if (j == 1) return 1;
    std::vector<std::pair<int, int>> all_edges;
    for (int a = 0; a < j; ++a)
        for (int b = a + 1; b < j; ++b) all_edges.emplace_back(a, b);
    Int count = 0;
    for (uint32_t mask = 0; mask < (uint32_t(1) << all_edges.size()); ++mask) {
        Partition p = partition_of_mask(j, all_edges, mask);
        if (p.s() == 1) ++count;
    }
    return count;
}

}  // namespace torc
