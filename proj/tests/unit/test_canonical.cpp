#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_helpers.hpp"
#include "tripart/canonical.hpp"
#include "tripart/errors.hpp"

using namespace tripart;
using namespace testing_support;

namespace {

// Automorphism count straight from the definition.
std::uint64_t brute_aut(const TripleSystem& h) {
    std::vector<Vertex> perm(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
    std::uint64_t count = 0;
    do {
        if (h.relabeled(perm) == h) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool brute_isomorphic(const TripleSystem& a, const TripleSystem& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<Vertex> perm(static_cast<std::size_t>(a.order()));
    for (int i = 0; i < a.order(); ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
        if (a.relabeled(perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

TEST(Canonical, SpecAutomorphismOrders) {
    EXPECT_EQ(canonical_form(f5()).aut_order, 4U);
    EXPECT_EQ(canonical_form(k4()).aut_order, 24U);
    EXPECT_EQ(canonical_form(TripleSystem(4)).aut_order, 24U);
    EXPECT_EQ(brute_aut(f5()), 4U);
}

TEST(Canonical, LabeledCounts) {
    EXPECT_EQ(labeled_count(f5()), 30U);
    EXPECT_EQ(labeled_count(TripleSystem(4)), 1U);
    EXPECT_EQ(labeled_count(TripleSystem(3, {Triple{0, 1, 2}})), 1U);
}

TEST(Canonical, IsomorphismExamples) {
    EXPECT_TRUE(is_isomorphic(f5(), from_one_based(5, {{1, 2, 3}, {1, 4, 5}, {2, 4, 5}})));
    EXPECT_FALSE(is_isomorphic(f5(), k4minus()));
    EXPECT_TRUE(is_isomorphic(TripleSystem(4), TripleSystem(4)));
}

TEST(Canonical, SizeBound) {
    EXPECT_THROW(canonical_form(TripleSystem(11)), UnsupportedSize);
    EXPECT_NO_THROW(canonical_form(TripleSystem(11), kHardCanonicalBound));
    EXPECT_THROW(canonical_form(TripleSystem(13), kHardCanonicalBound), UnsupportedSize);
}

TEST(Canonical, RepresentativeIsIsomorphicAndFixed) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(5));
        const TripleSystem h = random_system(n, 0.4, rng);
        const CanonicalForm f = canonical_form(h);
        EXPECT_TRUE(brute_isomorphic(h, f.system()));
        EXPECT_EQ(canonical_form(f.system()), f);
    }
}

TEST(Canonical, LabelingMapsInputToRepresentative) {
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const TripleSystem h = random_system(7, 0.3, rng);
        const CanonicalLabeling lab = canonical_labeling(h, true);
        EXPECT_EQ(h.relabeled(lab.labeling), lab.form.system());
        EXPECT_EQ(lab.automorphisms.size(), lab.form.aut_order);
        for (const auto& alpha : lab.automorphisms) EXPECT_EQ(h.relabeled(alpha), h);
    }
}

TEST(CanonicalProperty, InvariantUnder100RandomPermutations) {
    Rng rng(7);
    const std::vector<TripleSystem> systems{f5(), k4minus(), k4(), random_system(8, 0.3, rng), random_system(9, 0.2, rng),
                                            random_system(10, 0.1, rng)};
    for (const TripleSystem& h : systems) {
        const CanonicalForm f = canonical_form(h);
        for (int i = 0; i < 100; ++i) {
            const auto perm = random_permutation(h.order(), rng);
            const CanonicalForm g = canonical_form(h.relabeled(perm));
            EXPECT_EQ(g, f);
            EXPECT_EQ(g.aut_order, f.aut_order);
        }
    }
}

TEST(CanonicalProperty, AutOrderMatchesBruteForceAtN6) {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const TripleSystem h = random_system(6, rng.uniform(), rng);
        EXPECT_EQ(canonical_form(h).aut_order, brute_aut(h)) << to_string(h);
    }
}

TEST(CanonicalProperty, LabeledCountsSumToAllSystems) {
    for (int n : {4, 5}) {
        std::map<std::string, std::uint64_t> classes;
        const std::uint64_t total = std::uint64_t{1} << triple_slots(n);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const TripleSystem h = from_mask(n, mask);
            classes.emplace(key_string(canonical_form(h)), labeled_count(h));
        }
        std::uint64_t sum = 0;
        for (const auto& [key, count] : classes) sum += count;
        EXPECT_EQ(sum, total) << "n=" << n;
    }
}

TEST(CanonicalProperty, IsomorphicIffEqualKeysUpToN4) {
    for (int n = 3; n <= 4; ++n) {
        const std::uint64_t total = std::uint64_t{1} << triple_slots(n);
        for (std::uint64_t x = 0; x < total; ++x) {
            for (std::uint64_t y = 0; y < total; ++y) {
                const TripleSystem a = from_mask(n, x);
                const TripleSystem b = from_mask(n, y);
                EXPECT_EQ(brute_isomorphic(a, b), canonical_form(a) == canonical_form(b));
                EXPECT_EQ(is_isomorphic(a, b), canonical_form(a) == canonical_form(b));
            }
        }
    }
}
