#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tripart {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// floor(n/3) * floor((n+1)/3) * floor((n+2)/3): the largest edge count of a
/// tripartite triple system on n vertices.
BigInt tripartite_max_edges(int n);

/// Part sizes (floor((n+2)/3), floor((n+1)/3), floor(n/3)).
std::array<int, 3> balanced_split(int n);

/// -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0. Throws std::domain_error outside [0,1].
double binary_entropy(double x);

/// n! / (a! b! c!). Throws std::domain_error unless a+b+c = n with all parts >= 0.
BigInt multinomial(int n, int a, int b, int c);
BigInt binomial(int n, int k);
BigInt big_pow(int base, unsigned exp);

/// One certified inequality instance. lhs/rhs are exact decimal or rational
/// strings (rhs may be a symbolic description when it is transcendental and
/// the comparison was done in an exactly equivalent integer form).
struct BoundCheck {
    std::string name;
    std::string parameters;
    std::string lhs;
    std::string relation;
    std::string rhs;
    bool holds = false;
    /// Observational quantity reported alongside (e.g. a ratio trend).
    std::optional<double> observed;
    std::string note;
};

/// T(n) < 3^n 2^s(n). Also reports T / (multinomial(balanced) 2^s(n)).
BoundCheck check_tripartite_count_bound(int n, const BigInt& t_exact);

/// T(n-2) < n^2 2^(-2n^2/9 + n) T(n), decided as the equivalent integer inequality
/// T(n-2)^9 2^(2n^2) < n^18 2^(9n) T(n)^9.
BoundCheck check_tripartite_count_ratio(int n, const BigInt& t_n_minus_2, const BigInt& t_n);

/// s(n) - s(n-2) >= 2n^2/9 - n for every 3 <= n <= n_max, in exact arithmetic.
std::vector<BoundCheck> check_s_gap(int n_max);

/// exp(-a^2 / (2 p m)). Throws std::domain_error unless m >= 1, 0 < p <= 1, a > 0.
double chernoff_bound(long long m, double p, double a);

struct EntropyBinomialCheck {
    BoundCheck single;       ///< C(n, xn) < 2^(H(x) n)
    BoundCheck partial_sum;  ///< sum_{i <= xn} C(n, i) < 2^(H(x) n)
};

/// x = num/den with 0 < x < 1/2 and xn integral, else std::domain_error.
/// For x = k/n, 2^(H(x) n) = n^n / (k^k (n-k)^(n-k)) exactly, so both
/// comparisons are integer comparisons.
EntropyBinomialCheck check_entropy_binomial(int n, long long num, long long den);

/// Largest k < n/2 such that the partial-sum inequality holds for every
/// 1 <= k' <= k (nullopt if it fails already at k = 1).
std::optional<int> entropy_sum_threshold(int n);

/// Σ_{a+b+c=n} multinomial = 3^n.
BoundCheck check_multinomial_sum(int n);
/// The balanced split maximizes the multinomial over all splits.
BoundCheck check_balanced_maximum(int n);
/// 3^n < 0.6 n^2 multinomial(balanced), as 5 * 3^n < 3 n^2 multinomial.
BoundCheck check_multinomial_dominance(int n);
/// Smallest n0 <= n_max such that the dominance holds for all n0 <= n <= n_max.
std::optional<int> smallest_dominance_start(int n_max);

std::string to_decimal(const BigInt& x);
std::string to_string(const BigRational& q);

} // namespace tripart
