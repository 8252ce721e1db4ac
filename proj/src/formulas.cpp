#include "tripart/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace tripart {

BigInt tripartite_max_edges(int n) {
    if (n < 0) throw std::domain_error("s(n) needs n >= 0");
    return BigInt(n / 3) * BigInt((n + 1) / 3) * BigInt((n + 2) / 3);
}

std::array<int, 3> balanced_split(int n) { return {(n + 2) / 3, (n + 1) / 3, n / 3}; }

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary entropy needs 0 <= x <= 1");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

BigInt big_pow(int base, unsigned exp) { return boost::multiprecision::pow(BigInt(base), exp); }

namespace {

BigInt big_factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BoundCheck make_check(std::string name, std::string params, const BigInt& lhs, std::string rel, const BigInt& rhs,
                      bool holds) {
    BoundCheck c;
    c.name = std::move(name);
    c.parameters = std::move(params);
    c.lhs = to_decimal(lhs);
    c.relation = std::move(rel);
    c.rhs = to_decimal(rhs);
    c.holds = holds;
    return c;
}

double ratio_of(const BigInt& num, const BigInt& den) {
    return static_cast<double>(BigRational(num, den));
}

} // namespace

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt multinomial(int n, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != n) {
        throw std::domain_error("multinomial needs a+b+c = n with nonnegative parts");
    }
    return big_factorial(n) / (big_factorial(a) * big_factorial(b) * big_factorial(c));
}

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_string(const BigRational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

BoundCheck check_tripartite_count_bound(int n, const BigInt& t_exact) {
    const BigInt s = tripartite_max_edges(n);
    const BigInt rhs = big_pow(3, static_cast<unsigned>(n)) * big_pow(2, static_cast<unsigned>(s));
    BoundCheck c = make_check("T(n) < 3^n 2^s(n)", "n=" + std::to_string(n), t_exact, "<", rhs, t_exact < rhs);
    const auto split = balanced_split(n);
    const BigInt lower_scale = multinomial(n, split[0], split[1], split[2]) * big_pow(2, static_cast<unsigned>(s));
    c.observed = ratio_of(t_exact, lower_scale);
    c.note = "observed = T(n) / (multinomial(n; balanced) 2^s(n)); lower-bound trend, not asserted";
    if (n == 0) c.note += "; n=0 is a boundary case where the strict bound fails (1 < 1)";
    return c;
}

BoundCheck check_tripartite_count_ratio(int n, const BigInt& t_n_minus_2, const BigInt& t_n) {
    const unsigned nn = static_cast<unsigned>(n);
    const BigInt lhs = boost::multiprecision::pow(t_n_minus_2, 9) * big_pow(2, 2 * nn * nn);
    const BigInt rhs = big_pow(n, 18) * big_pow(2, 9 * nn) * boost::multiprecision::pow(t_n, 9);
    BoundCheck c;
    c.name = "T(n-2) < n^2 2^(-2n^2/9+n) T(n)";
    c.parameters = "n=" + std::to_string(n) + " T(n-2)=" + to_decimal(t_n_minus_2) + " T(n)=" + to_decimal(t_n);
    c.lhs = to_decimal(t_n_minus_2);
    c.relation = "<";
    c.rhs = "n^2 2^(-2n^2/9+n) * " + to_decimal(t_n);
    c.holds = lhs < rhs;
    c.observed = std::log2(static_cast<double>(t_n_minus_2)) - std::log2(static_cast<double>(t_n)) -
                 (2.0 * std::log2(static_cast<double>(n)) - 2.0 * n * n / 9.0 + n);
    c.note = "decided as T(n-2)^9 2^(2n^2) < n^18 2^(9n) T(n)^9; observed = log2(lhs/rhs)";
    return c;
}

std::vector<BoundCheck> check_s_gap(int n_max) {
    if (n_max < 3) throw std::domain_error("s-gap sweep needs n_max >= 3");
    std::vector<BoundCheck> out;
    out.reserve(static_cast<std::size_t>(n_max - 2));
    for (int n = 3; n <= n_max; ++n) {
        const BigInt gap = tripartite_max_edges(n) - tripartite_max_edges(n - 2);
        const BigRational rhs = BigRational(2 * n * n, 9) - n;
        BoundCheck c;
        c.name = "s(n) - s(n-2) >= 2n^2/9 - n";
        c.parameters = "n=" + std::to_string(n);
        c.lhs = to_decimal(gap);
        c.relation = ">=";
        c.rhs = to_string(rhs);
        c.holds = BigRational(gap) >= rhs;
        out.push_back(std::move(c));
    }
    return out;
}

double chernoff_bound(long long m, double p, double a) {
    if (m < 1) throw std::domain_error("chernoff_bound needs m >= 1");
    if (!(p > 0.0 && p <= 1.0)) throw std::domain_error("chernoff_bound needs 0 < p <= 1");
    if (!(a > 0.0)) throw std::domain_error("chernoff_bound needs a > 0");
    return std::exp(-a * a / (2.0 * p * static_cast<double>(m)));
}

EntropyBinomialCheck check_entropy_binomial(int n, long long num, long long den) {
    if (n < 1 || den <= 0 || num <= 0 || 2 * num >= den) {
        throw std::domain_error("entropy check needs 0 < x < 1/2");
    }
    if ((static_cast<long long>(n) * num) % den != 0) throw std::domain_error("entropy check needs xn integral");
    const int k = static_cast<int>(static_cast<long long>(n) * num / den);
    const BigInt scale = big_pow(k, static_cast<unsigned>(k)) * big_pow(n - k, static_cast<unsigned>(n - k));
    const BigInt target = big_pow(n, static_cast<unsigned>(n));
    const double h = binary_entropy(static_cast<double>(num) / static_cast<double>(den));
    const std::string params = "n=" + std::to_string(n) + " x=" + std::to_string(num) + "/" + std::to_string(den);

    EntropyBinomialCheck out;
    const BigInt single = binomial(n, k);
    out.single = make_check("C(n,xn) < 2^(H(x)n)", params, single, "<", target / scale, single * scale < target);
    out.single.rhs = "2^" + std::to_string(h * n);
    out.single.note = "decided as C(n,k) k^k (n-k)^(n-k) < n^n";

    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) sum += binomial(n, i);
    out.partial_sum = make_check("sum_{i<=xn} C(n,i) < 2^(H(x)n)", params, sum, "<", target / scale, sum * scale < target);
    out.partial_sum.rhs = "2^" + std::to_string(h * n);
    out.partial_sum.note = "decided as (sum) k^k (n-k)^(n-k) < n^n; needs x small enough";
    return out;
}

std::optional<int> entropy_sum_threshold(int n) {
    std::optional<int> last;
    for (int k = 1; 2 * k < n; ++k) {
        if (!check_entropy_binomial(n, k, n).partial_sum.holds) break;
        last = k;
    }
    return last;
}

BoundCheck check_multinomial_sum(int n) {
    BigInt sum = 0;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) sum += multinomial(n, a, b, n - a - b);
    }
    const BigInt rhs = big_pow(3, static_cast<unsigned>(n));
    return make_check("sum_{a+b+c=n} multinomial = 3^n", "n=" + std::to_string(n), sum, "=", rhs, sum == rhs);
}

BoundCheck check_balanced_maximum(int n) {
    const auto s = balanced_split(n);
    const BigInt balanced = multinomial(n, s[0], s[1], s[2]);
    BigInt best = 0;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) best = std::max(best, multinomial(n, a, b, n - a - b));
    }
    return make_check("balanced split maximizes multinomial", "n=" + std::to_string(n), balanced, ">=", best,
                      balanced >= best);
}

BoundCheck check_multinomial_dominance(int n) {
    const auto s = balanced_split(n);
    const BigInt m = multinomial(n, s[0], s[1], s[2]);
    const BigInt lhs = big_pow(3, static_cast<unsigned>(n));
    BoundCheck c = make_check("3^n < 0.6 n^2 multinomial(balanced)", "n=" + std::to_string(n), lhs, "<", m,
                              5 * lhs < 3 * BigInt(n) * n * m);
    c.rhs = "0.6*" + std::to_string(n * n) + "*" + to_decimal(m);
    return c;
}

std::optional<int> smallest_dominance_start(int n_max) {
    std::optional<int> start;
    for (int n = n_max; n >= 1; --n) {
        if (!check_multinomial_dominance(n).holds) break;
        start = n;
    }
    return start;
}

} // namespace tripart
