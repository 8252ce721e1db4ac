#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "tripart/errors.hpp"
#include "tripart/patterns.hpp"

using namespace tripart;
using namespace testing_support;

namespace {

// Brute force over edge triples with the shape predicates only.
bool brute_has_shape(const TripleSystem& h, bool (*shape)(const Triple&, const Triple&, const Triple&)) {
    const auto es = h.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j)
            for (std::size_t k = 0; k < es.size(); ++k)
                if (i != j && j != k && i != k && shape(es[i], es[j], es[k])) return true;
    return false;
}

} // namespace

TEST(Patterns, F5Examples) {
    const auto hit = find_f5(f5());
    ASSERT_TRUE(hit);
    EXPECT_TRUE(witness_is_valid(f5(), *hit));
    EXPECT_FALSE(find_f5(k4()));
    EXPECT_FALSE(find_f5(k4minus()));
    const TripleSystem relabeled = from_one_based(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}});
    const auto hit2 = find_f5(relabeled);
    ASSERT_TRUE(hit2);
    EXPECT_TRUE(witness_is_valid(relabeled, *hit2));
    EXPECT_EQ(hit2->pair, std::make_pair(3, 4));
}

TEST(Patterns, K4MinusExamples) {
    EXPECT_TRUE(find_k4minus(k4minus()));
    EXPECT_TRUE(find_k4minus(k4()));
    EXPECT_FALSE(find_k4minus(from_one_based(6, {{1, 2, 3}, {4, 5, 6}})));
    EXPECT_TRUE(is_k4minus_free(f5()));
}

TEST(Patterns, CancellativeExamples) {
    EXPECT_FALSE(is_cancellative(f5()));
    EXPECT_FALSE(is_cancellative(k4minus()));
    EXPECT_TRUE(is_cancellative(from_one_based(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}})));
    EXPECT_TRUE(is_cancellative(TripleSystem(3)));
    const auto hit = find_cancellation_violation(f5());
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->kind, PatternKind::CancellationViolation);
    EXPECT_TRUE(witness_is_valid(f5(), *hit));
}

TEST(Patterns, ForcedPairExamples) {
    const auto hit = forced_pair_violation(f5(), t1(3, 4, 5));
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->pair, std::make_pair(0, 1));
    EXPECT_EQ(hit->apexes, std::make_pair(2, 3));
    EXPECT_EQ(hit->extra, 4);
    EXPECT_TRUE(witness_is_valid(f5(), *hit));
    for (const Triple& e : k4().edges()) EXPECT_FALSE(forced_pair_violation(k4(), e));
    const TripleSystem disjoint = from_one_based(6, {{1, 2, 3}, {4, 5, 6}});
    EXPECT_FALSE(forced_pair_violation(disjoint, t1(1, 2, 3)));
    EXPECT_THROW(forced_pair_violation(f5(), t1(1, 3, 4)), ContractViolation);
}

TEST(Patterns, ShapePredicates) {
    EXPECT_TRUE(is_f5_shape(t1(1, 2, 3), t1(1, 2, 4), t1(3, 4, 5)));
    EXPECT_TRUE(is_f5_shape(t1(3, 4, 5), t1(1, 2, 4), t1(1, 2, 3)));
    EXPECT_FALSE(is_f5_shape(t1(1, 2, 3), t1(1, 2, 4), t1(2, 3, 4)));
    EXPECT_TRUE(is_k4minus_shape(t1(1, 2, 3), t1(1, 2, 4), t1(2, 3, 4)));
    EXPECT_FALSE(is_k4minus_shape(t1(1, 2, 3), t1(1, 2, 4), t1(3, 4, 5)));
}

TEST(PatternsProperty, DetectorsMatchBruteForceAndWitnessesValidate) {
    Rng rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(5));
        const TripleSystem h = random_system(n, 0.05 + 0.3 * rng.uniform(), rng);
        const auto f = find_f5(h);
        const auto k = find_k4minus(h);
        EXPECT_EQ(f.has_value(), brute_has_shape(h, is_f5_shape)) << to_string(h);
        EXPECT_EQ(k.has_value(), brute_has_shape(h, is_k4minus_shape)) << to_string(h);
        if (f) EXPECT_TRUE(witness_is_valid(h, *f));
        if (k) EXPECT_TRUE(witness_is_valid(h, *k));
        const auto c = find_cancellation_violation(h);
        EXPECT_EQ(c.has_value(), !is_cancellative(h));
        if (c) EXPECT_TRUE(witness_is_valid(h, *c));
    }
}

TEST(PatternsProperty, F5IffSomeEdgeHasForcedPair) {
    Rng rng(22);
    for (int trial = 0; trial < 400; ++trial) {
        const TripleSystem h = random_system(7, 0.05 + 0.2 * rng.uniform(), rng);
        bool any = false;
        for (const Triple& e : h.edges()) {
            const auto hit = forced_pair_violation(h, e);
            if (hit) {
                EXPECT_TRUE(witness_is_valid(h, *hit));
                any = true;
            }
        }
        EXPECT_EQ(any, !is_f5_free(h)) << to_string(h);
    }
}

TEST(PatternsProperty, IncrementalChecksAgreeWithFullDetectors) {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const TripleSystem base = random_system(7, 0.1, rng);
        if (!is_f5_free(base) || !is_k4minus_free(base)) continue;
        const Triple added = triple_unrank(static_cast<std::size_t>(rng.below(triple_slots(7))));
        if (base.contains(added)) continue;
        const TripleSystem child = base.with_edge(added);
        const PairLinks links(child);
        EXPECT_EQ(f5_through(links, added), !is_f5_free(child));
        EXPECT_EQ(k4minus_through(links, added), !is_k4minus_free(child));
    }
}
