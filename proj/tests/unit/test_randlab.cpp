#include <gtest/gtest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "tripart/errors.hpp"
#include "tripart/formulas.hpp"
#include "tripart/patterns.hpp"
#include "tripart/randlab.hpp"

using namespace tripart;
using namespace testing_support;

namespace {

const Verdict* find_verdict(const RunReport& r, const std::string& prefix) {
    for (const Verdict& v : r.verdicts)
        if (v.name.rfind(prefix, 0) == 0) return &v;
    return nullptr;
}

SimpleGraph graph_of(int n, std::initializer_list<Edge2> edges) {
    SimpleGraph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

} // namespace

TEST(Rng, DeterministicAndStreamSeparated) {
    Rng a(42, 7), b(42, 7), c(42, 8);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        differs |= x != c.next();
    }
    EXPECT_TRUE(differs);
    Rng u(1);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.uniform();
        EXPECT_GE(x, 0.0);
        EXPECT_LT(x, 1.0);
        EXPECT_LT(u.below(7), 7U);
    }
}

TEST(SimpleGraph, Basics) {
    SimpleGraph g(5);
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 5), std::out_of_range);
    EXPECT_EQ(g.size(), 1U);
    EXPECT_EQ(g.degree(1), 1);
    EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(SimpleGraph, MatchingFixtures) {
    const SimpleGraph star = graph_of(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    EXPECT_EQ(greedy_matching(star).size(), 1U);
    const SimpleGraph perfect = graph_of(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
    EXPECT_EQ(greedy_matching(perfect).size(), 5U);
    const SimpleGraph path = graph_of(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    EXPECT_EQ(greedy_matching(path).size(), 3U);
    for (const SimpleGraph* g : {&star, &perfect, &path}) {
        const auto m = greedy_matching(*g);
        EXPECT_TRUE(is_matching(*g, m));
        EXPECT_TRUE(is_maximal_matching(*g, m));
        EXPECT_GE(2.0 * g->order() * static_cast<double>(m.size()), static_cast<double>(g->size()));
    }
    EXPECT_FALSE(is_maximal_matching(path, {{0, 1}}));
    EXPECT_FALSE(is_matching(path, {{0, 1}, {1, 2}}));
}

TEST(SimpleGraph, MatchingBoundOnRandomGraphs) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng(99, i);
        const SimpleGraph g = sample_gnp(50, 0.2, rng);
        const auto m = greedy_matching(g);
        EXPECT_TRUE(is_maximal_matching(g, m));
        EXPECT_GE(100.0 * static_cast<double>(m.size()), static_cast<double>(g.size()));
    }
}

TEST(SimpleGraph, TrianglesAgainstNaiveCount) {
    Rng rng(3);
    const SimpleGraph g = sample_gnp(40, 0.3, rng);
    std::uint64_t naive = 0;
    for (int a = 0; a < 40; ++a)
        for (int b = a + 1; b < 40; ++b)
            for (int c = b + 1; c < 40; ++c)
                naive += g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
    EXPECT_EQ(count_triangles(g), naive);
}

TEST(SimpleGraph, CylinderControls) {
    Rng rng(4);
    const SimpleGraph full = sample_cylinder(1, 70, rng);
    EXPECT_EQ(count_triangles(full), 70U * 70U * 70U);
    EXPECT_EQ(full.size(), 3U * 70U * 70U);
    const SimpleGraph half = sample_cylinder(2, 30, rng);
    for (const auto& [u, v] : half.edges()) EXPECT_NE(u / 30, v / 30);
}

TEST(Planted, Examples) {
    const PlantedSample full = sample_planted(9, 1.0, 5);
    EXPECT_EQ(full.system.size(), 27U);
    EXPECT_EQ(full.planted.part_sizes(), (std::array<int, 3>{3, 3, 3}));
    EXPECT_TRUE(sample_planted(9, 0.0, 5).system.empty());
    EXPECT_EQ(sample_planted(30, 0.5, 8).system, sample_planted(30, 0.5, 8).system);
    EXPECT_THROW(sample_planted(2, 0.5, 1), std::domain_error);
}

TEST(Planted, EdgeCountsWithinFourSigma) {
    const double sigma = std::sqrt(1000.0 * 0.25);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PlantedSample s = sample_planted(30, 0.5, seed);
        EXPECT_LE(std::abs(static_cast<double>(s.system.size()) - 500.0), 4.0 * sigma) << seed;
        EXPECT_EQ(non_crossing_count(s.system, s.planted), 0U);
    }
}

TEST(Density, CompleteTripartiteVerified) {
    const PlantedSample full = sample_planted(12, 1.0, 1);
    const DensityAudit a = density_audit(full, 1.0 / 6.0, AuditMode::Exact, 200, 1);
    EXPECT_EQ(a.conditions[0].status, ConditionStatus::Verified);
    EXPECT_EQ(a.conditions[3].status, ConditionStatus::Verified);
    EXPECT_FALSE(a.conditions[1].status == ConditionStatus::Refuted);
    EXPECT_FALSE(a.conditions[2].status == ConditionStatus::Refuted);
}

TEST(Density, EmptySystemRefuted) {
    const TripleSystem empty(12);
    const Partition3 p = sample_planted(12, 0.0, 1).planted;
    for (AuditMode mode : {AuditMode::Exact, AuditMode::Sampled}) {
        const DensityAudit a = density_audit(empty, p, 0.1, mode, 50, 2);
        ASSERT_EQ(a.conditions[0].status, ConditionStatus::Refuted);
        ASSERT_TRUE(a.conditions[0].witness);
        EXPECT_TRUE(witness_refutes(empty, p, 0.1, *a.conditions[0].witness));
        EXPECT_TRUE(a.refuted());
    }
}

TEST(Density, UnbalancedPartsRefuteConditionFour) {
    const TripleSystem h(10);
    const Partition3 p = Partition3::from_parts(10, {{0, 1, 2, 3, 4, 5, 6, 7}, {8}, {9}});
    const DensityAudit a = density_audit(h, p, 0.1, AuditMode::Sampled, 10, 3);
    EXPECT_EQ(a.conditions[3].status, ConditionStatus::Refuted);
    ASSERT_TRUE(a.conditions[3].witness);
    EXPECT_TRUE(witness_refutes(h, p, 0.1, *a.conditions[3].witness));
}

TEST(Density, DomainAndSizeErrors) {
    const PlantedSample s = sample_planted(60, 0.5, 1);
    EXPECT_THROW(density_audit(s, 0.0, AuditMode::Sampled, 10, 1), std::domain_error);
    EXPECT_THROW(density_audit(s, 1.0, AuditMode::Sampled, 10, 1), std::domain_error);
    EXPECT_THROW(density_audit(s, 0.1, AuditMode::Exact, 10, 1), UnsupportedSize);
    EXPECT_EQ(density_min_set(0.1, 45), 5U);
    EXPECT_EQ(density_min_pairs(0.1, 45), 21U);
    EXPECT_EQ(density_min_set(0.001, 10), 1U);
}

TEST(Density, IndependentOfWorkers) {
    const PlantedSample s = sample_planted(30, 0.5, 9);
    const DensityAudit a = density_audit(s, 0.1, AuditMode::Sampled, 300, 4, 1);
    const DensityAudit b = density_audit(s, 0.1, AuditMode::Sampled, 300, 4, 3);
    for (std::size_t c = 0; c < 4; ++c) {
        EXPECT_EQ(a.conditions[c].status, b.conditions[c].status);
        EXPECT_EQ(a.conditions[c].refutations, b.conditions[c].refutations);
    }
}

TEST(BadVertex, Examples) {
    const PlantedSample s = sample_planted(30, 0.5, 2);
    EXPECT_TRUE(bad_vertex_audit(s.system, s.planted, 0.01).empty());

    const TripleSystem inside(9, {Triple{0, 1, 2}, Triple{0, 1, 3}, Triple{0, 2, 3}});
    const Partition3 p = Partition3::from_parts(9, {{0, 1, 2, 3}, {4, 5, 6}, {7, 8}});
    const auto flagged = bad_vertex_audit(inside, p, 0.01);
    ASSERT_FALSE(flagged.empty());
    EXPECT_EQ(flagged.front().vertex, 0);
    EXPECT_EQ(flagged.front().link_class, "L11");
    EXPECT_EQ(flagged.front().count, 3U);

    const PartitionResult opt = optimal_partition(f5());
    EXPECT_FALSE(bad_vertex_audit(f5(), opt.partition, 0.01).empty());
}

TEST(Experiments, TriangleControlIsExact) {
    TriangleOptions opt;
    opt.l = 1;
    opt.m = 20;
    opt.trials = 5;
    const RunReport r = triangle_experiment(opt);
    const Verdict* exact = find_verdict(r, "l = 1");
    ASSERT_NE(exact, nullptr);
    EXPECT_EQ(exact->status, VerdictStatus::Pass);
    EXPECT_TRUE(r.passed());
}

TEST(Experiments, TriangleSmallCylinderIsObservational) {
    TriangleOptions opt;
    opt.m = 2;
    opt.trials = 50;
    const RunReport r = triangle_experiment(opt);
    const Verdict* band = find_verdict(r, "triangle count");
    ASSERT_NE(band, nullptr);
    EXPECT_EQ(band->status, VerdictStatus::Observed);
}

TEST(Experiments, ChernoffImpossibleEvent) {
    ChernoffOptions opt;
    opt.m = 10;
    opt.a = 6.0;
    opt.trials = 2000;
    const RunReport r = chernoff_empirical(opt);
    EXPECT_TRUE(r.passed());
    opt.trials = 999;
    EXPECT_THROW(chernoff_empirical(opt), std::domain_error);
}

TEST(Experiments, UniquePartitionCompleteAlwaysRecovers) {
    UniquePartitionOptions opt;
    opt.n = 15;
    opt.p = 1.0;
    opt.trials = 10;
    opt.min_rate = 1.0;
    const RunReport r = unique_partition_experiment(opt);
    const Verdict* rec = find_verdict(r, "planted partition recovered");
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->status, VerdictStatus::Pass);
}

TEST(Experiments, MatchingExperimentPasses) {
    EXPECT_TRUE(matching_experiment(30, 0.2, 20, 5).passed());
}

TEST(Experiments, ReportsIndependentOfWorkers) {
    TriangleOptions t;
    t.m = 40;
    t.trials = 12;
    t.workers = 1;
    const RunReport a = triangle_experiment(t);
    t.workers = 4;
    EXPECT_EQ(a.to_machine(false), triangle_experiment(t).to_machine(false));
}
