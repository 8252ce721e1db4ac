#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "tripart/errors.hpp"
#include "tripart/partition.hpp"
#include "tripart/patterns.hpp"

using namespace tripart;
using namespace testing_support;

namespace {

Partition3 parts1(int n, std::vector<std::vector<Vertex>> one_based) {
    for (auto& part : one_based)
        for (auto& v : part) --v;
    return Partition3::from_parts(n, one_based);
}

// Minimum over all 3^n labelings, keeping the lexicographically smallest minimizer.
PartitionResult brute_optimal(const TripleSystem& h) {
    const int n = h.order();
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);
    PartitionResult best;
    best.bad_count = h.size() + 1;
    while (true) {
        const Partition3 p(labels);
        const std::size_t bad = non_crossing_count(h, p);
        if (bad < best.bad_count) best = {p, bad, true};
        int i = n - 1;
        while (i >= 0 && labels[static_cast<std::size_t>(i)] == 2) labels[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++labels[static_cast<std::size_t>(i)];
    }
    return best;
}

} // namespace

TEST(Partition, ConstructionValidates) {
    EXPECT_THROW(Partition3(std::vector<std::uint8_t>{0, 3}), std::invalid_argument);
    EXPECT_THROW(Partition3::from_parts(3, {{0}, {1}}), std::invalid_argument);
    EXPECT_THROW(Partition3::from_parts(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    const Partition3 p = parts1(5, {{1}, {2}, {3, 4, 5}});
    EXPECT_EQ(p.part_sizes(), (std::array<int, 3>{1, 1, 3}));
    EXPECT_TRUE(p.same_up_to_renaming(parts1(5, {{3, 4, 5}, {1}, {2}})));
    EXPECT_FALSE(p.same_up_to_renaming(parts1(5, {{1, 3}, {2}, {4, 5}})));
}

TEST(Partition, NonCrossingExamples) {
    EXPECT_EQ(non_crossing_count(f5(), parts1(5, {{1}, {2}, {3, 4, 5}})), 1U);
    EXPECT_EQ(non_crossing_count(k4(), parts1(4, {{1, 2}, {3}, {4}})), 2U);
    Rng rng(31);
    const TripleSystem h = random_system(8, 0.3, rng);
    EXPECT_EQ(non_crossing_count(h, Partition3(std::vector<std::uint8_t>(8, 1))), h.size());
}

TEST(Partition, OptimalExamples) {
    EXPECT_EQ(optimal_partition(f5()).bad_count, 1U);
    EXPECT_EQ(optimal_partition(k4()).bad_count, 2U);
    const PartitionResult single = optimal_partition(TripleSystem(3, {Triple{0, 1, 2}}));
    EXPECT_EQ(single.bad_count, 0U);
    EXPECT_TRUE(single.optimal);
    EXPECT_THROW(optimal_partition(TripleSystem(25)), UnsupportedSize);
}

TEST(Partition, TripartiteExamples) {
    EXPECT_TRUE(is_tripartite(TripleSystem(3, {Triple{0, 1, 2}})));
    EXPECT_FALSE(is_tripartite(f5()));
    EXPECT_FALSE(is_tripartite(k4minus()));
    const auto p = find_tripartition(from_one_based(6, {{1, 2, 3}, {4, 5, 6}, {1, 5, 6}}));
    ASSERT_TRUE(p);
}

TEST(Partition, LinkExamples) {
    const Partition3 p = parts1(5, {{1}, {2}, {3, 4, 5}});
    const LinkSet l12 = link(f5(), p, 0, 1);
    EXPECT_FALSE(l12.same_part);
    EXPECT_EQ(l12.vertices, vertex_bit(2) | vertex_bit(3));
    const LinkSet l34 = link(f5(), p, 2, 3);
    EXPECT_TRUE(l34.same_part);
    EXPECT_EQ(l34.vertices, 0U);
    const TripleSystem e = TripleSystem(3, {Triple{0, 1, 2}});
    EXPECT_EQ(link(e, parts1(3, {{1}, {2}, {3}}), 0, 2).vertices, vertex_bit(1));
    EXPECT_THROW(link(e, parts1(3, {{1}, {2}, {3}}), 1, 1), ContractViolation);
}

TEST(Partition, LinkProfileExamples) {
    const LinkProfile f = link_profile(f5(), parts1(5, {{1}, {2}, {3, 4, 5}}), 0);
    EXPECT_EQ(f.count(1, 2), 2U);
    EXPECT_EQ(f.total(), 2U);
    const LinkProfile k = link_profile(k4(), parts1(4, {{1, 2}, {3}, {4}}), 0);
    EXPECT_EQ(k.count(0, 1), 1U);
    EXPECT_EQ(k.count(0, 2), 1U);
    EXPECT_EQ(k.count(1, 2), 1U);
    EXPECT_EQ(k.count(1, 0), 1U);
    EXPECT_EQ(k.total(), 3U);
    const TripleSystem isolated = from_one_based(5, {{1, 2, 3}});
    EXPECT_EQ(link_profile(isolated, parts1(5, {{1, 4}, {2, 5}, {3}}), 3).total(), 0U);
}

TEST(Partition, RecoverExamples) {
    EXPECT_FALSE(recover_partition(f5()));
    const auto single = recover_partition(TripleSystem(3, {Triple{0, 1, 2}}));
    ASSERT_TRUE(single);
    EXPECT_TRUE(single->same_up_to_renaming(parts1(3, {{1}, {2}, {3}})));
    EXPECT_FALSE(recover_partition(k4minus()));
}

TEST(PartitionProperty, OptimalMatchesBruteForce) {
    Rng rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        const TripleSystem h = random_system(n, 0.1 + 0.6 * rng.uniform(), rng);
        const PartitionResult fast = optimal_partition(h);
        const PartitionResult slow = brute_optimal(h);
        EXPECT_EQ(fast.bad_count, slow.bad_count) << to_string(h);
        EXPECT_EQ(fast.partition, slow.partition) << to_string(h);
        EXPECT_EQ(non_crossing_count(h, fast.partition), fast.bad_count);
        EXPECT_EQ(fast.bad_count == 0, is_tripartite(h));
    }
}

TEST(PartitionProperty, InvariantUnderPartRenaming) {
    Rng rng(33);
    const std::array<std::array<std::uint8_t, 3>, 6> renamings{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (int trial = 0; trial < 50; ++trial) {
        const TripleSystem h = random_system(9, 0.3, rng);
        std::vector<std::uint8_t> labels(9);
        for (auto& l : labels) l = static_cast<std::uint8_t>(rng.below(3));
        const Partition3 p(labels);
        for (const auto& r : renamings) {
            std::vector<std::uint8_t> renamed(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i) renamed[i] = r[labels[i]];
            EXPECT_EQ(non_crossing_count(h, Partition3(renamed)), non_crossing_count(h, p));
        }
    }
}

TEST(PartitionProperty, TripartiteSystemsAreCancellative) {
    Rng rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        const TripleSystem h = random_system(7, 0.15, rng);
        const auto p = find_tripartition(h);
        if (p) {
            EXPECT_EQ(non_crossing_count(h, *p), 0U);
            EXPECT_TRUE(is_cancellative(h));
        }
        const auto r = recover_partition(h);
        if (r) EXPECT_EQ(non_crossing_count(h, *r), 0U);
    }
}
