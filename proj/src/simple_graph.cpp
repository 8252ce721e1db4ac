#include "tripart/simple_graph.hpp"

#include <bit>
#include <stdexcept>

namespace tripart {

SimpleGraph::SimpleGraph(int n, std::optional<std::vector<int>> parts)
    : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)), parts_(std::move(parts)) {
    if (n < 0) throw std::invalid_argument("graph order must be >= 0");
    if (parts_ && parts_->size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("part labels must cover every vertex");
    }
    adj_.assign(static_cast<std::size_t>(n) * words_, 0);
}

bool SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (has_edge(u, v)) return false;
    const auto set = [&](int a, int b) {
        adj_[static_cast<std::size_t>(a) * words_ + static_cast<std::size_t>(b / 64)] |= std::uint64_t{1} << (b % 64);
    };
    set(u, v);
    set(v, u);
    ++edge_count_;
    return true;
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return (row(u)[v / 64] >> (v % 64)) & 1U;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
    return d;
}

std::vector<Edge2> SimpleGraph::edges() const {
    std::vector<Edge2> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (has_edge(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Edge2> greedy_matching(const SimpleGraph& g) {
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    std::vector<Edge2> m;
    for (const auto& [u, v] : g.edges()) {
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
        m.emplace_back(u, v);
    }
    return m;
}

bool is_matching(const SimpleGraph& g, const std::vector<Edge2>& m) {
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    for (const auto& [u, v] : m) {
        if (!g.has_edge(u, v)) return false;
        if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool is_maximal_matching(const SimpleGraph& g, const std::vector<Edge2>& m) {
    if (!is_matching(g, m)) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    for (const auto& [u, v] : m) used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    for (const auto& [u, v] : g.edges()) {
        if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

std::uint64_t count_triangles(const SimpleGraph& g) {
    std::uint64_t total = 0;
    const std::size_t words = g.words();
    for (int u = 0; u < g.order(); ++u) {
        const std::uint64_t* ru = g.row(u);
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            const std::uint64_t* rv = g.row(v);
            // Count common neighbours w > v.
            const std::size_t first = static_cast<std::size_t>((v + 1) / 64);
            for (std::size_t w = first; w < words; ++w) {
                std::uint64_t common = ru[w] & rv[w];
                if (w == first) common &= ~std::uint64_t{0} << ((v + 1) % 64);
                total += static_cast<std::uint64_t>(std::popcount(common));
            }
        }
    }
    return total;
}

SimpleGraph sample_gnp(int n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("edge probability must lie in [0,1]");
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }
    }
    return g;
}

SimpleGraph sample_cylinder(int l, int m, Rng& rng) {
    if (l < 1 || m < 1) throw std::domain_error("cylinder needs l >= 1 and m >= 1");
    std::vector<int> parts(static_cast<std::size_t>(3 * m));
    for (int v = 0; v < 3 * m; ++v) parts[static_cast<std::size_t>(v)] = v / m;
    SimpleGraph g(3 * m, parts);
    const double p = 1.0 / l;
    for (int u = 0; u < 3 * m; ++u) {
        for (int v = (u / m + 1) * m; v < 3 * m; ++v) {
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace tripart
