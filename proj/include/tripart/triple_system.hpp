#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tripart {

/// Internal vertex index, 0-based. Files and user-facing output are 1-based.
using Vertex = int;

/// Largest vertex count a TripleSystem can hold (vertex sets are 64-bit masks).
inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t vertex_bit(Vertex v) { return std::uint64_t{1} << v; }

/// A 3-element vertex set stored sorted, a < b < c.
struct Triple {
    Vertex a = 0;
    Vertex b = 1;
    Vertex c = 2;

    /// Sorts the three vertices; throws std::invalid_argument if two coincide.
    static Triple of(Vertex x, Vertex y, Vertex z);

    std::uint64_t mask() const { return vertex_bit(a) | vertex_bit(b) | vertex_bit(c); }
    bool contains(Vertex v) const { return v == a || v == b || v == c; }

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Number of 3-subsets of an n-set.
std::size_t triple_slots(int n);

/// Colex rank: C(c,3) + C(b,2) + a. Triples with largest vertex k occupy
/// the contiguous rank block [C(k,3), C(k+1,3)).
std::size_t triple_rank(const Triple& t);
Triple triple_unrank(std::size_t rank);

/// A 3-uniform hypergraph on vertices 0..n-1, stored as a bit set over the
/// C(n,3) triple slots in colex order. Immutable after construction.
class TripleSystem {
public:
    explicit TripleSystem(int n = 0);
    TripleSystem(int n, std::span<const Triple> edges);
    TripleSystem(int n, std::initializer_list<Triple> edges);

    /// Builds from raw slot words (bit r of word r/64 is the triple of rank r).
    /// Bits beyond C(n,3) must be clear.
    static TripleSystem from_slot_words(int n, std::span<const std::uint64_t> words);

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }
    bool empty() const { return edge_count_ == 0; }

    bool contains(const Triple& t) const;
    bool contains_slot(std::size_t rank) const {
        return (words_[rank >> 6] >> (rank & 63)) & 1U;
    }

    /// Edges in colex order.
    std::vector<Triple> edges() const;
    std::span<const std::uint64_t> slot_words() const { return words_; }

    int degree(Vertex v) const;
    std::vector<int> degrees() const;

    TripleSystem with_edge(const Triple& t) const;
    TripleSystem without_edge(const Triple& t) const;

    /// Image under the vertex map v -> perm[v]; perm must be a permutation of 0..n-1.
    TripleSystem relabeled(std::span<const Vertex> perm) const;

    friend bool operator==(const TripleSystem& x, const TripleSystem& y) {
        return x.n_ == y.n_ && x.words_ == y.words_;
    }

private:
    void set_slot(std::size_t rank);
    void check_vertex(Vertex v) const;

    int n_;
    std::size_t edge_count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// link(u,v) has bit w set iff {u,v,w} is an edge. Symmetric in (u,v).
class PairLinks {
public:
    explicit PairLinks(const TripleSystem& h);
    /// Empty link table on n vertices.
    explicit PairLinks(int n);

    std::uint64_t operator()(Vertex u, Vertex v) const { return table_[static_cast<std::size_t>(u * n_ + v)]; }
    int order() const { return n_; }

    void add(const Triple& t);
    void remove(const Triple& t);

private:
    int n_;
    std::vector<std::uint64_t> table_;
};

/// Triple-core text format: "n m" then m lines "a b c" (1-based).
TripleSystem parse_system(std::string_view text);
std::string serialize_system(const TripleSystem& h);

TripleSystem read_system_file(const std::string& path);
void write_system_file(const std::string& path, const TripleSystem& h);

/// Human-readable 1-based edge list, e.g. "{123,124,345}" (multi-digit
/// vertices are separated by dots).
std::string to_string(const TripleSystem& h);
std::string to_string(const Triple& t);

} // namespace tripart
