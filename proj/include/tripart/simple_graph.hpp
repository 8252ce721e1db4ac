#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tripart/rng.hpp"

namespace tripart {

using Edge2 = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1 with bitset rows, optionally
/// carrying a part label per vertex (for cylinders).
class SimpleGraph {
public:
    explicit SimpleGraph(int n, std::optional<std::vector<int>> parts = std::nullopt);

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }
    const std::optional<std::vector<int>>& parts() const { return parts_; }

    /// Returns false if the edge was already present. Throws on loops and
    /// out-of-range vertices.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    /// Edges (u < v) in lexicographic order.
    std::vector<Edge2> edges() const;

    const std::uint64_t* row(int v) const { return &adj_[static_cast<std::size_t>(v) * words_]; }
    std::size_t words() const { return words_; }

private:
    int n_;
    std::size_t words_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> adj_;
    std::optional<std::vector<int>> parts_;
};

/// Greedy matching over edges in lexicographic order. Always maximal.
std::vector<Edge2> greedy_matching(const SimpleGraph& g);
bool is_matching(const SimpleGraph& g, const std::vector<Edge2>& m);
bool is_maximal_matching(const SimpleGraph& g, const std::vector<Edge2>& m);

/// Number of triangles, by common-neighbourhood intersection above each edge.
std::uint64_t count_triangles(const SimpleGraph& g);

SimpleGraph sample_gnp(int n, double p, Rng& rng);

/// 3-partite graph with three parts of size m; each cross pair is an edge
/// independently with probability 1/l. Parts are {0..m-1}, {m..2m-1}, {2m..3m-1}.
SimpleGraph sample_cylinder(int l, int m, Rng& rng);

} // namespace tripart
