#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tripart/triple_system.hpp"

namespace tripart {

/// Total map from vertices to parts {0,1,2}. Parts may be empty.
class Partition3 {
public:
    Partition3() = default;
    explicit Partition3(std::vector<std::uint8_t> labels);
    static Partition3 from_parts(int n, const std::vector<std::vector<Vertex>>& parts);

    int order() const { return static_cast<int>(labels_.size()); }
    int part_of(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
    const std::vector<std::uint8_t>& labels() const { return labels_; }
    std::uint64_t part_mask(int part) const;
    std::array<int, 3> part_sizes() const;

    /// Relabels parts by order of first appearance (vertex 0 gets part 0, ...).
    Partition3 normalized() const;
    bool same_up_to_renaming(const Partition3& other) const { return normalized() == other.normalized(); }

    friend bool operator==(const Partition3&, const Partition3&) = default;

private:
    std::vector<std::uint8_t> labels_;
};

bool is_crossing(const Triple& e, const Partition3& p);
std::size_t non_crossing_count(const TripleSystem& h, const Partition3& p);

inline constexpr int kExhaustivePartitionBound = 15;
inline constexpr int kPartitionSearchBound = 24;

struct PartitionResult {
    Partition3 partition;
    std::size_t bad_count = 0;
    bool optimal = false;
};

/// Exact minimum of non-crossing edges over all 3-partitions (D_H), with the
/// lexicographically smallest minimizing label vector. Throws UnsupportedSize
/// above max_n.
PartitionResult optimal_partition(const TripleSystem& h, int max_n = kPartitionSearchBound);

/// A partition under which every edge crosses, if one exists (early-exit search).
std::optional<Partition3> find_tripartition(const TripleSystem& h);
bool is_tripartite(const TripleSystem& h);

struct LinkSet {
    std::uint64_t vertices = 0;
    /// u and v lie in the same part; the link is then empty by definition.
    bool same_part = false;
};

/// {w : uvw ∈ h, w in the part containing neither u nor v}.
LinkSet link(const TripleSystem& h, const Partition3& p, Vertex u, Vertex v);

/// Edges through a vertex, counted by the (unordered) parts of the other two vertices.
struct LinkProfile {
    Vertex vertex = 0;
    /// counts[pair_index(i,j)] for 0 <= i <= j <= 2.
    std::array<std::size_t, 6> counts{};

    static int pair_index(int i, int j);
    std::size_t count(int i, int j) const { return counts[static_cast<std::size_t>(pair_index(i, j))]; }
    std::size_t total() const;
};

LinkProfile link_profile(const TripleSystem& h, const Partition3& p, Vertex x);

/// Propagation recovery of a tripartition: seed with the first edge, push
/// forced placements through edges with two placed vertices, then place the
/// remaining vertices by crossing-edge evidence. Returns nullopt on any
/// contradiction, ambiguity or leftover non-crossing edge.
std::optional<Partition3> recover_partition(const TripleSystem& h);

} // namespace tripart
