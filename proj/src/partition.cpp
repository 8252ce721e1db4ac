#include "tripart/partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tripart/errors.hpp"

namespace tripart {

Partition3::Partition3(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
    for (auto l : labels_) {
        if (l > 2) throw std::invalid_argument("part label must be 0, 1 or 2");
    }
}

Partition3 Partition3::from_parts(int n, const std::vector<std::vector<Vertex>>& parts) {
    if (parts.size() > 3) throw std::invalid_argument("at most three parts");
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (Vertex v : parts[p]) {
            if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
            if (labels[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("vertex listed twice");
            labels[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    }
    std::vector<std::uint8_t> out;
    for (int l : labels) {
        if (l < 0) throw std::invalid_argument("partition must cover every vertex");
        out.push_back(static_cast<std::uint8_t>(l));
    }
    return Partition3(std::move(out));
}

std::uint64_t Partition3::part_mask(int part) const {
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (labels_[v] == part) m |= vertex_bit(static_cast<Vertex>(v));
    }
    return m;
}

std::array<int, 3> Partition3::part_sizes() const {
    std::array<int, 3> s{};
    for (auto l : labels_) ++s[l];
    return s;
}

Partition3 Partition3::normalized() const {
    std::array<int, 3> rename{-1, -1, -1};
    int next = 0;
    std::vector<std::uint8_t> out(labels_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        auto& r = rename[labels_[v]];
        if (r < 0) r = next++;
        out[v] = static_cast<std::uint8_t>(r);
    }
    return Partition3(std::move(out));
}

bool is_crossing(const Triple& e, const Partition3& p) {
    const int x = p.part_of(e.a);
    const int y = p.part_of(e.b);
    const int z = p.part_of(e.c);
    return x != y && y != z && x != z;
}

std::size_t non_crossing_count(const TripleSystem& h, const Partition3& p) {
    if (p.order() != h.order()) throw ContractViolation("partition does not cover the vertex set");
    std::size_t bad = 0;
    for (const Triple& e : h.edges()) bad += is_crossing(e, p) ? 0 : 1;
    return bad;
}

namespace {

// Branch and bound over restricted-growth label vectors (vertex 0 gets part 0,
// a new part index is always the smallest unused one). Vertices are labeled in
// index order; assigning v settles every edge whose largest vertex is v.
class OptimalPartitionSearch {
public:
    explicit OptimalPartitionSearch(const TripleSystem& h)
        : n_(h.order()), closing_(static_cast<std::size_t>(n_)), labels_(static_cast<std::size_t>(n_), 0),
          best_labels_(static_cast<std::size_t>(n_), 0), best_bad_(h.size()) {
        for (const Triple& e : h.edges()) closing_[static_cast<std::size_t>(e.c)].push_back({e.a, e.b});
    }

    PartitionResult run() {
        if (n_ > 0 && best_bad_ > 0) descend(0, 0, 0);
        return {Partition3(best_labels_), best_bad_, true};
    }

private:
    void descend(int v, std::size_t bad, int used) {
        if (v == n_) {
            best_bad_ = bad;
            best_labels_ = labels_;
            return;
        }
        const int max_label = std::min(used, 2);
        for (int l = 0; l <= max_label; ++l) {
            labels_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(l);
            std::size_t added = 0;
            for (const auto& [a, b] : closing_[static_cast<std::size_t>(v)]) {
                const int la = labels_[static_cast<std::size_t>(a)];
                const int lb = labels_[static_cast<std::size_t>(b)];
                if (la == lb || la == l || lb == l) ++added;
            }
            if (bad + added >= best_bad_) continue;
            descend(v + 1, bad + added, std::max(used, l + 1));
            if (best_bad_ == 0) return;
        }
    }

    int n_;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> closing_;
    std::vector<std::uint8_t> labels_;
    std::vector<std::uint8_t> best_labels_;
    std::size_t best_bad_;
};

// Constraint propagation search for a proper 3-labeling (every edge crossing).
class TripartitionSearch {
public:
    explicit TripartitionSearch(const TripleSystem& h)
        : n_(h.order()), incident_(static_cast<std::size_t>(n_)) {
        for (const Triple& e : h.edges()) {
            incident_[static_cast<std::size_t>(e.a)].push_back({e.b, e.c});
            incident_[static_cast<std::size_t>(e.b)].push_back({e.a, e.c});
            incident_[static_cast<std::size_t>(e.c)].push_back({e.a, e.b});
        }
    }

    std::optional<Partition3> run() {
        std::vector<std::uint8_t> domain(static_cast<std::size_t>(n_), 0b111);
        if (!solve(domain, 0)) return std::nullopt;
        std::vector<std::uint8_t> labels(static_cast<std::size_t>(n_));
        for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::uint8_t>(std::countr_zero(domain[v]));
        return Partition3(std::move(labels)).normalized();
    }

private:
    static bool single(std::uint8_t d) { return std::popcount(d) == 1; }

    // Narrows domain[v] to `allowed`; queues v when it becomes fixed.
    bool narrow(std::vector<std::uint8_t>& domain, std::vector<Vertex>& queue, Vertex v, std::uint8_t allowed) {
        auto& d = domain[static_cast<std::size_t>(v)];
        const std::uint8_t nd = d & allowed;
        if (nd == d) return true;
        if (nd == 0) return false;
        d = nd;
        if (single(nd)) queue.push_back(v);
        return true;
    }

    bool propagate(std::vector<std::uint8_t>& domain, std::vector<Vertex> queue) {
        while (!queue.empty()) {
            const Vertex v = queue.back();
            queue.pop_back();
            const std::uint8_t dv = domain[static_cast<std::size_t>(v)];
            for (const auto& [x, y] : incident_[static_cast<std::size_t>(v)]) {
                const std::uint8_t dx = domain[static_cast<std::size_t>(x)];
                const std::uint8_t dy = domain[static_cast<std::size_t>(y)];
                if (!narrow(domain, queue, x, static_cast<std::uint8_t>(~dv & 0b111))) return false;
                if (!narrow(domain, queue, y, static_cast<std::uint8_t>(~dv & 0b111))) return false;
                if (single(dx) && single(dy) && dx == dy) return false;
                const std::uint8_t nx = domain[static_cast<std::size_t>(x)];
                const std::uint8_t ny = domain[static_cast<std::size_t>(y)];
                if (single(nx) && !narrow(domain, queue, y, static_cast<std::uint8_t>(~(dv | nx) & 0b111))) return false;
                if (single(ny) && !narrow(domain, queue, x, static_cast<std::uint8_t>(~(dv | ny) & 0b111))) return false;
            }
        }
        return true;
    }

    bool solve(std::vector<std::uint8_t>& domain, std::uint8_t used) {
        // Most constrained unfixed vertex first; ties to the smallest index.
        Vertex pick = -1;
        int best = 4;
        for (Vertex v = 0; v < n_; ++v) {
            const int c = std::popcount(domain[static_cast<std::size_t>(v)]);
            if (c > 1 && c < best) {
                best = c;
                pick = v;
            }
        }
        if (pick < 0) return true;
        bool tried_fresh = false;
        for (int l = 0; l < 3; ++l) {
            const std::uint8_t bit = static_cast<std::uint8_t>(1U << l);
            if (!(domain[static_cast<std::size_t>(pick)] & bit)) continue;
            // Unused part labels are interchangeable: try only one of them.
            if (!(used & bit)) {
                if (tried_fresh) continue;
                tried_fresh = true;
            }
            auto trial = domain;
            trial[static_cast<std::size_t>(pick)] = bit;
            if (!propagate(trial, {pick})) continue;
            std::uint8_t now_used = used;
            for (auto d : trial) {
                if (single(d)) now_used |= d;
            }
            if (solve(trial, now_used)) {
                domain = std::move(trial);
                return true;
            }
        }
        return false;
    }

    int n_;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> incident_;
};

} // namespace

PartitionResult optimal_partition(const TripleSystem& h, int max_n) {
    const int bound = std::min(max_n, kPartitionSearchBound);
    if (h.order() > bound) {
        throw UnsupportedSize("optimal_partition supports n <= " + std::to_string(bound) + ", got n = " +
                              std::to_string(h.order()));
    }
    return OptimalPartitionSearch(h).run();
}

std::optional<Partition3> find_tripartition(const TripleSystem& h) { return TripartitionSearch(h).run(); }

bool is_tripartite(const TripleSystem& h) { return find_tripartition(h).has_value(); }

LinkSet link(const TripleSystem& h, const Partition3& p, Vertex u, Vertex v) {
    if (u == v) throw ContractViolation("link needs two distinct vertices");
    LinkSet out;
    if (p.part_of(u) == p.part_of(v)) {
        out.same_part = true;
        return out;
    }
    const int third = 3 - p.part_of(u) - p.part_of(v);
    out.vertices = PairLinks(h)(u, v) & p.part_mask(third);
    return out;
}

int LinkProfile::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
    static constexpr int kIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return kIndex[i][j];
}

std::size_t LinkProfile::total() const {
    std::size_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

LinkProfile link_profile(const TripleSystem& h, const Partition3& p, Vertex x) {
    LinkProfile prof;
    prof.vertex = x;
    for (const Triple& e : h.edges()) {
        if (!e.contains(x)) continue;
        Vertex o[2];
        int k = 0;
        for (Vertex w : {e.a, e.b, e.c}) {
            if (w != x) o[k++] = w;
        }
        ++prof.counts[static_cast<std::size_t>(LinkProfile::pair_index(p.part_of(o[0]), p.part_of(o[1])))];
    }
    return prof;
}

std::optional<Partition3> recover_partition(const TripleSystem& h) {
    if (h.empty()) return std::nullopt;
    const int n = h.order();
    const PairLinks links(h);
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    auto place = [&](Vertex w, int part) {
        int& l = label[static_cast<std::size_t>(w)];
        if (l >= 0 && l != part) return false;
        l = part;
        return true;
    };
    auto place_all = [&](std::uint64_t set, int part) {
        for (; set; set &= set - 1) {
            if (!place(static_cast<Vertex>(std::countr_zero(set)), part)) return false;
        }
        return true;
    };

    const Triple seed = h.edges().front();
    const Vertex u = seed.a;
    const Vertex v = seed.b;
    place(u, 0);
    place(v, 1);
    const std::uint64_t luv = links(u, v);
    if (!place_all(luv, 2)) return std::nullopt;
    for (std::uint64_t ws = luv; ws; ws &= ws - 1) {
        const Vertex w = static_cast<Vertex>(std::countr_zero(ws));
        if (!place_all(links(u, w), 1) || !place_all(links(v, w), 0)) return std::nullopt;
    }

    // Remaining vertices: repeated passes placing each vertex in the part with
    // strictly the most crossing edges to already-placed vertices.
    const auto edges = h.edges();
    bool progress = true;
    while (progress) {
        progress = false;
        for (Vertex x = 0; x < n; ++x) {
            if (label[static_cast<std::size_t>(x)] >= 0) continue;
            std::array<std::size_t, 3> evidence{};
            for (const Triple& e : edges) {
                if (!e.contains(x)) continue;
                int other[2];
                int k = 0;
                for (Vertex w : {e.a, e.b, e.c}) {
                    if (w != x) other[k++] = label[static_cast<std::size_t>(w)];
                }
                if (other[0] < 0 || other[1] < 0 || other[0] == other[1]) continue;
                ++evidence[static_cast<std::size_t>(3 - other[0] - other[1])];
            }
            const auto top = std::max_element(evidence.begin(), evidence.end());
            if (*top == 0 || std::count(evidence.begin(), evidence.end(), *top) > 1) continue;
            label[static_cast<std::size_t>(x)] = static_cast<int>(top - evidence.begin());
            progress = true;
        }
    }

    std::vector<std::uint8_t> out;
    out.reserve(label.size());
    for (int l : label) {
        if (l < 0) return std::nullopt;
        out.push_back(static_cast<std::uint8_t>(l));
    }
    Partition3 p(std::move(out));
    if (non_crossing_count(h, p) != 0) return std::nullopt;
    return p;
}

} // namespace tripart
