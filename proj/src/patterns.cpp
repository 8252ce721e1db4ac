#include "tripart/patterns.hpp"

#include <array>
#include <bit>

#include "tripart/errors.hpp"

namespace tripart {
namespace {

Vertex lowest(std::uint64_t mask) { return static_cast<Vertex>(std::countr_zero(mask)); }

PatternHit make_f5_hit(PatternKind kind, Vertex u, Vertex v, Vertex x, Vertex y, Vertex z) {
    PatternHit hit;
    hit.kind = kind;
    hit.edges = {Triple::of(u, v, x), Triple::of(u, v, y), Triple::of(x, y, z)};
    hit.pair = std::pair{std::min(u, v), std::max(u, v)};
    hit.apexes = std::pair{x, y};
    hit.extra = z;
    return hit;
}

// (x, y, z) labelings of e with (x, y) running over its pairs.
std::array<std::array<Vertex, 3>, 3> pair_roles(const Triple& e) {
    return {{{e.a, e.b, e.c}, {e.a, e.c, e.b}, {e.b, e.c, e.a}}};
}

} // namespace

std::string to_string(PatternKind kind) {
    switch (kind) {
    case PatternKind::F5: return "F5";
    case PatternKind::K4Minus: return "K4minus";
    case PatternKind::CancellationViolation: return "CancellationViolation";
    case PatternKind::ForcedPair: return "ForcedPair";
    }
    return "unknown";
}

std::optional<PatternHit> find_f5(const TripleSystem& h) {
    const int n = h.order();
    if (n < 5 || h.size() < 3) return std::nullopt;
    const PairLinks links(h);
    const auto edges = h.edges();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const std::uint64_t link = links(u, v);
            if (std::popcount(link) < 2) continue;
            const std::uint64_t uv = vertex_bit(u) | vertex_bit(v);
            for (const Triple& e : edges) {
                const std::uint64_t em = e.mask();
                if (em & uv) continue;
                const std::uint64_t apex = em & link;
                if (std::popcount(apex) < 2) continue;
                const Vertex x = lowest(apex);
                const Vertex y = lowest(apex & (apex - 1));
                const Vertex z = lowest(em & ~(vertex_bit(x) | vertex_bit(y)));
                return make_f5_hit(PatternKind::F5, u, v, x, y, z);
            }
        }
    }
    return std::nullopt;
}

std::optional<PatternHit> find_k4minus(const TripleSystem& h) {
    const int n = h.order();
    if (n < 4 || h.size() < 3) return std::nullopt;
    for (const Triple& e : h.edges()) {
        for (Vertex w = 0; w < n; ++w) {
            if (e.contains(w)) continue;
            std::vector<Triple> found{e};
            for (const Triple& t : {Triple::of(e.a, e.b, w), Triple::of(e.a, e.c, w), Triple::of(e.b, e.c, w)}) {
                if (h.contains(t)) found.push_back(t);
            }
            if (found.size() >= 3) {
                found.resize(3);
                PatternHit hit;
                hit.kind = PatternKind::K4Minus;
                hit.edges = std::move(found);
                return hit;
            }
        }
    }
    return std::nullopt;
}

bool is_f5_free(const TripleSystem& h) { return !find_f5(h).has_value(); }
bool is_k4minus_free(const TripleSystem& h) { return !find_k4minus(h).has_value(); }

std::optional<PatternHit> find_cancellation_violation(const TripleSystem& h) {
    const auto edges = h.edges();
    std::vector<std::uint64_t> masks;
    masks.reserve(edges.size());
    for (const Triple& t : edges) masks.push_back(t.mask());
    const std::size_t m = masks.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (b == a) continue;
            const std::uint64_t ab = masks[a] | masks[b];
            for (std::size_t c = b + 1; c < m; ++c) {
                if (c == a) continue;
                if ((masks[a] | masks[c]) == ab) {
                    PatternHit hit;
                    hit.kind = PatternKind::CancellationViolation;
                    hit.edges = {edges[a], edges[b], edges[c]};
                    return hit;
                }
            }
        }
    }
    return std::nullopt;
}

bool is_cancellative(const TripleSystem& h) { return !find_cancellation_violation(h).has_value(); }

std::optional<PatternHit> forced_pair_violation(const TripleSystem& h, const Triple& e) {
    if (!h.contains(e)) throw ContractViolation("forced_pair_violation: " + to_string(e) + " is not an edge");
    const PairLinks links(h);
    const std::uint64_t em = e.mask();
    for (const auto& [x, y, z] : pair_roles(e)) {
        for (Vertex u = 0; u < h.order(); ++u) {
            if (em & vertex_bit(u)) continue;
            const std::uint64_t common = links(x, u) & links(y, u) & ~em;
            if (common) return make_f5_hit(PatternKind::ForcedPair, u, lowest(common), x, y, z);
        }
    }
    return std::nullopt;
}

bool f5_through(const PairLinks& links, const Triple& e) {
    const std::uint64_t em = e.mask();
    for (const auto& [p, q, r] : pair_roles(e)) {
        // e as the apex edge: x = p, y = q.
        for (Vertex u = 0; u < links.order(); ++u) {
            if (em & vertex_bit(u)) continue;
            if (links(p, u) & links(q, u) & ~em) return true;
        }
        // e as a pair edge: pair (p, q), apex x = r, other apex y.
        std::uint64_t ys = links(p, q) & ~em;
        while (ys) {
            const Vertex y = lowest(ys);
            ys &= ys - 1;
            if (links(r, y) & ~(vertex_bit(p) | vertex_bit(q))) return true;
        }
    }
    return false;
}

bool k4minus_through(const PairLinks& links, const Triple& e) {
    // A fourth vertex w completes a K4⁻ with e iff it lies in two of the three pair links of e.
    const std::uint64_t ab = links(e.a, e.b);
    const std::uint64_t ac = links(e.a, e.c);
    const std::uint64_t bc = links(e.b, e.c);
    return (((ab & ac) | (ab & bc) | (ac & bc)) & ~e.mask()) != 0;
}

bool is_f5_shape(const Triple& e1, const Triple& e2, const Triple& e3) {
    const std::array<std::uint64_t, 3> m{e1.mask(), e2.mask(), e3.mask()};
    if (m[0] == m[1] || m[1] == m[2] || m[0] == m[2]) return false;
    if (std::popcount(m[0] | m[1] | m[2]) != 5) return false;
    for (int apex = 0; apex < 3; ++apex) {
        const std::uint64_t p = m[static_cast<std::size_t>((apex + 1) % 3)];
        const std::uint64_t q = m[static_cast<std::size_t>((apex + 2) % 3)];
        const std::uint64_t t = m[static_cast<std::size_t>(apex)];
        const std::uint64_t shared = p & q;
        if (std::popcount(shared) != 2 || (shared & t)) continue;
        if (((p ^ q) & ~t) == 0) return true;
    }
    return false;
}

bool is_k4minus_shape(const Triple& e1, const Triple& e2, const Triple& e3) {
    if (e1 == e2 || e2 == e3 || e1 == e3) return false;
    return std::popcount(e1.mask() | e2.mask() | e3.mask()) == 4;
}

bool witness_is_valid(const TripleSystem& h, const PatternHit& hit) {
    if (hit.edges.size() != 3) return false;
    for (const Triple& t : hit.edges) {
        if (!h.contains(t)) return false;
    }
    const Triple& a = hit.edges[0];
    const Triple& b = hit.edges[1];
    const Triple& c = hit.edges[2];
    switch (hit.kind) {
    case PatternKind::F5:
    case PatternKind::ForcedPair: return is_f5_shape(a, b, c);
    case PatternKind::K4Minus: return is_k4minus_shape(a, b, c);
    case PatternKind::CancellationViolation: return !(b == c) && !(a == b) && !(a == c) && (a.mask() | b.mask()) == (a.mask() | c.mask());
    }
    return false;
}

} // namespace tripart
