#include "tripart/triple_system.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tripart {
namespace {

constexpr std::size_t choose2(std::size_t x) { return x * (x - 1) / 2; }
constexpr std::size_t choose3(std::size_t x) { return x < 3 ? 0 : x * (x - 1) * (x - 2) / 6; }

} // namespace

Triple Triple::of(Vertex x, Vertex y, Vertex z) {
    if (x == y || y == z || x == z) {
        throw std::invalid_argument("triple needs three distinct vertices");
    }
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return Triple{x, y, z};
}

std::size_t triple_slots(int n) { return n < 3 ? 0 : choose3(static_cast<std::size_t>(n)); }

std::size_t triple_rank(const Triple& t) {
    return choose3(static_cast<std::size_t>(t.c)) + (t.b < 2 ? 0 : choose2(static_cast<std::size_t>(t.b))) +
           static_cast<std::size_t>(t.a);
}

Triple triple_unrank(std::size_t rank) {
    std::size_t c = 2;
    while (choose3(c + 1) <= rank) ++c;
    rank -= choose3(c);
    std::size_t b = 1;
    while (b + 1 < c && choose2(b + 1) <= rank) ++b;
    rank -= b < 2 ? 0 : choose2(b);
    return Triple{static_cast<Vertex>(rank), static_cast<Vertex>(b), static_cast<Vertex>(c)};
}

TripleSystem::TripleSystem(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count must lie in 0.." + std::to_string(kMaxVertices));
    }
    words_.assign((triple_slots(n) + 63) / 64, 0);
}

TripleSystem::TripleSystem(int n, std::span<const Triple> edges) : TripleSystem(n) {
    for (const Triple& t : edges) {
        check_vertex(t.a);
        check_vertex(t.b);
        check_vertex(t.c);
        if (!(t.a < t.b && t.b < t.c)) throw std::invalid_argument("triple must be sorted and distinct");
        const std::size_t r = triple_rank(t);
        if (contains_slot(r)) throw std::invalid_argument("duplicate edge " + to_string(t));
        set_slot(r);
    }
}

TripleSystem::TripleSystem(int n, std::initializer_list<Triple> edges)
    : TripleSystem(n, std::span<const Triple>(edges.begin(), edges.size())) {}

TripleSystem TripleSystem::from_slot_words(int n, std::span<const std::uint64_t> words) {
    TripleSystem h(n);
    if (words.size() != h.words_.size()) throw std::invalid_argument("slot word count mismatch");
    const std::size_t slots = triple_slots(n);
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t w = words[i];
        if (i + 1 == words.size() && slots % 64 != 0) {
            if (w >> (slots % 64)) throw std::invalid_argument("slot bits beyond C(n,3)");
        }
        h.words_[i] = w;
        h.edge_count_ += static_cast<std::size_t>(std::popcount(w));
    }
    return h;
}

void TripleSystem::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

void TripleSystem::set_slot(std::size_t rank) {
    words_[rank >> 6] |= std::uint64_t{1} << (rank & 63);
    ++edge_count_;
}

bool TripleSystem::contains(const Triple& t) const {
    if (t.c >= n_ || t.a < 0) return false;
    return contains_slot(triple_rank(t));
}

std::vector<Triple> TripleSystem::edges() const {
    std::vector<Triple> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            const int bit = std::countr_zero(w);
            w &= w - 1;
            out.push_back(triple_unrank(i * 64 + static_cast<std::size_t>(bit)));
        }
    }
    return out;
}

int TripleSystem::degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (const Triple& t : edges()) d += t.contains(v) ? 1 : 0;
    return d;
}

std::vector<int> TripleSystem::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_), 0);
    for (const Triple& t : edges()) {
        ++d[static_cast<std::size_t>(t.a)];
        ++d[static_cast<std::size_t>(t.b)];
        ++d[static_cast<std::size_t>(t.c)];
    }
    return d;
}

TripleSystem TripleSystem::with_edge(const Triple& t) const {
    check_vertex(t.c);
    TripleSystem out = *this;
    const std::size_t r = triple_rank(t);
    if (!out.contains_slot(r)) out.set_slot(r);
    return out;
}

TripleSystem TripleSystem::without_edge(const Triple& t) const {
    TripleSystem out = *this;
    if (contains(t)) {
        const std::size_t r = triple_rank(t);
        out.words_[r >> 6] &= ~(std::uint64_t{1} << (r & 63));
        --out.edge_count_;
    }
    return out;
}

TripleSystem TripleSystem::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("permutation size mismatch");
    std::uint64_t seen = 0;
    for (Vertex v : perm) {
        check_vertex(v);
        seen |= vertex_bit(v);
    }
    if (std::popcount(seen) != n_) throw std::invalid_argument("not a permutation");
    TripleSystem out(n_);
    for (const Triple& t : edges()) {
        out.set_slot(triple_rank(Triple::of(perm[static_cast<std::size_t>(t.a)], perm[static_cast<std::size_t>(t.b)],
                                            perm[static_cast<std::size_t>(t.c)])));
    }
    return out;
}

PairLinks::PairLinks(int n) : n_(n), table_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

PairLinks::PairLinks(const TripleSystem& h) : PairLinks(h.order()) {
    for (const Triple& t : h.edges()) add(t);
}

void PairLinks::add(const Triple& t) {
    auto put = [&](Vertex u, Vertex v, Vertex w) {
        table_[static_cast<std::size_t>(u * n_ + v)] |= vertex_bit(w);
        table_[static_cast<std::size_t>(v * n_ + u)] |= vertex_bit(w);
    };
    put(t.a, t.b, t.c);
    put(t.a, t.c, t.b);
    put(t.b, t.c, t.a);
}

void PairLinks::remove(const Triple& t) {
    auto clear = [&](Vertex u, Vertex v, Vertex w) {
        table_[static_cast<std::size_t>(u * n_ + v)] &= ~vertex_bit(w);
        table_[static_cast<std::size_t>(v * n_ + u)] &= ~vertex_bit(w);
    };
    clear(t.a, t.b, t.c);
    clear(t.a, t.c, t.b);
    clear(t.b, t.c, t.a);
}

std::string to_string(const Triple& t) {
    const bool compact = t.c < 9;
    std::string s;
    for (Vertex v : {t.a, t.b, t.c}) {
        if (!compact && !s.empty()) s += '.';
        s += std::to_string(v + 1);
    }
    return s;
}

std::string to_string(const TripleSystem& h) {
    std::string s = "{";
    bool first = true;
    for (const Triple& t : h.edges()) {
        if (!first) s += ',';
        first = false;
        s += to_string(t);
    }
    return s + "}";
}

} // namespace tripart
