#pragma once

// Golden constants. Every value below was produced by
//   python3 tests/oracles/count_oracle.py 3 4 5 6
// (independent numpy brute force over all edge subsets; classes by Burnside),
// whose output is kept in tests/oracles/count_oracle_output.txt, and agreed
// with brute_force_count on first run.

#include <cstdint>

namespace golden {

struct Row {
    int n;
    std::uint64_t all;
    std::uint64_t f5free;
    std::uint64_t cancellative;
    std::uint64_t tripartite;
    std::uint64_t classes_f5free;
    std::uint64_t classes_cancellative;
    std::uint64_t classes_tripartite;
    int ex_f5free;
    int ex_cancellative;
};

inline constexpr Row kRows[] = {
    {3, 2, 2, 2, 2, 2, 2, 2, 1, 1},
    {4, 16, 16, 11, 11, 5, 3, 3, 4, 2},
    {5, 1024, 261, 141, 141, 12, 7, 7, 6, 4},
    {6, 1048576, 9259, 4738, 4666, 55, 30, 29, 10, 8},
};

inline const Row& row(int n) { return kRows[n - 3]; }

// Isomorphism classes of all 3-graphs on n vertices (OEIS A000665).
inline constexpr std::uint64_t kAllClasses[] = {1, 1, 1, 2, 5, 34, 2136};

} // namespace golden
