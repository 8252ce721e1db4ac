#include <gtest/gtest.h>

#include "test_helpers.hpp"
#include "tripart/canonical.hpp"
#include "tripart/errors.hpp"
#include "tripart/triple_system.hpp"

using namespace tripart;
using namespace testing_support;

TEST(Triple, OfSortsAndRejectsRepeats) {
    const Triple t = Triple::of(4, 1, 2);
    EXPECT_EQ(t.a, 1);
    EXPECT_EQ(t.b, 2);
    EXPECT_EQ(t.c, 4);
    EXPECT_THROW(Triple::of(1, 1, 2), std::invalid_argument);
}

TEST(Triple, ColexRanking) {
    EXPECT_EQ(triple_rank({0, 1, 2}), 0U);
    EXPECT_EQ(triple_rank({0, 1, 3}), 1U);
    EXPECT_EQ(triple_rank({0, 2, 3}), 2U);
    EXPECT_EQ(triple_rank({1, 2, 3}), 3U);
    EXPECT_EQ(triple_rank({0, 1, 4}), 4U);
    for (std::size_t r = 0; r < triple_slots(20); ++r) EXPECT_EQ(triple_rank(triple_unrank(r)), r);
    EXPECT_EQ(triple_slots(64), 41664U);
}

TEST(TripleSystem, ConstructionValidates) {
    EXPECT_THROW(TripleSystem(65), std::invalid_argument);
    EXPECT_THROW(TripleSystem(3, {Triple{0, 1, 3}}), std::out_of_range);
    EXPECT_THROW(TripleSystem(4, {Triple{0, 1, 2}, Triple{0, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(TripleSystem(4, {Triple{1, 0, 2}}), std::invalid_argument);
}

TEST(TripleSystem, BasicQueries) {
    const TripleSystem h = f5();
    EXPECT_EQ(h.order(), 5);
    EXPECT_EQ(h.size(), 3U);
    EXPECT_TRUE(h.contains(t1(3, 4, 5)));
    EXPECT_FALSE(h.contains(t1(1, 3, 4)));
    EXPECT_EQ(h.degrees(), (std::vector<int>{2, 2, 2, 2, 1}));
    EXPECT_EQ(to_string(h), "{123,124,345}");
    EXPECT_EQ(h.with_edge(t1(1, 3, 4)).size(), 4U);
    EXPECT_EQ(h.without_edge(t1(3, 4, 5)).size(), 2U);
}

TEST(TripleSystem, PairLinks) {
    const PairLinks links(f5());
    EXPECT_EQ(links(0, 1), vertex_bit(2) | vertex_bit(3));
    EXPECT_EQ(links(1, 0), links(0, 1));
    EXPECT_EQ(links(2, 3), vertex_bit(4));
    PairLinks grow(5);
    grow.add(t1(1, 2, 3));
    EXPECT_EQ(grow(0, 1), vertex_bit(2));
    grow.remove(t1(1, 2, 3));
    EXPECT_EQ(grow(0, 1), 0U);
}

TEST(Parse, SpecExamples) {
    EXPECT_EQ(parse_system("5 3\n1 2 3\n1 2 4\n3 4 5"), f5());
    const TripleSystem empty = parse_system("4 0");
    EXPECT_EQ(empty.order(), 4);
    EXPECT_TRUE(empty.empty());
    try {
        parse_system("3 1\n1 2 2");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
        EXPECT_NE(std::string(e.what()).find("3-uniform"), std::string::npos);
    }
}

TEST(Parse, ErrorsCarryLineNumbers) {
    const auto line_of = [](const char* text) -> std::size_t {
        try {
            parse_system(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of(""), 1U);
    EXPECT_EQ(line_of("x 1\n1 2 3"), 1U);
    EXPECT_EQ(line_of("4 2\n1 2 3\n1 2 5"), 3U);
    EXPECT_EQ(line_of("4 2\n1 2 3\n3 2 1"), 3U);
    EXPECT_EQ(line_of("4 1\n1 2"), 2U);
    EXPECT_EQ(line_of("4 2\n1 2 3"), 2U);
    EXPECT_EQ(line_of("4 2\n1 2 3\n1 2 3"), 3U);
    EXPECT_EQ(line_of("3 2\n1 2 3\n1 2 3"), 1U);
    EXPECT_EQ(line_of("4 1\n1 2 a"), 2U);
    EXPECT_EQ(line_of("4 2\n1 2 3\n"), 2U);
}

TEST(Parse, AcceptsUnsortedVerticesAndTrailingBlankLines) {
    EXPECT_EQ(parse_system("5 3\n3 2 1\n4 2 1\n5 4 3\n\n"), f5());
}

TEST(Serialize, ColexOrderOneBased) {
    const TripleSystem h = from_one_based(5, {{3, 4, 5}, {1, 2, 3}, {1, 2, 4}});
    EXPECT_EQ(serialize_system(h), "5 3\n1 2 3\n1 2 4\n3 4 5\n");
}

TEST(Serialize, RoundTripRandom) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(20));
        const TripleSystem h = random_system(n, rng.uniform(), rng);
        EXPECT_EQ(parse_system(serialize_system(h)), h);
    }
}

TEST(Serialize, FileRoundTrip) {
    const std::string path = ::testing::TempDir() + "/f5.txt";
    write_system_file(path, f5());
    EXPECT_EQ(read_system_file(path), f5());
    EXPECT_THROW(read_system_file(::testing::TempDir() + "/does-not-exist.txt"), std::invalid_argument);
}

TEST(Relabel, RejectsNonPermutations) {
    const std::vector<Vertex> bad{0, 0, 1, 2, 3};
    EXPECT_THROW(f5().relabeled(bad), std::invalid_argument);
    const std::vector<Vertex> perm{1, 0, 3, 2, 4};
    EXPECT_EQ(f5().relabeled(perm), f5());
}
