#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tripart/canonical.hpp"
#include "tripart/triple_system.hpp"

namespace tripart {

using BigInt = boost::multiprecision::cpp_int;

enum class Predicate { All, F5Free, K4MinusFree, Cancellative, Tripartite };

std::string to_string(Predicate p);
/// Accepts "all", "f5free", "k4mfree", "cancellative", "tripartite".
Predicate parse_predicate(std::string_view name);

/// A system property for the generator. `extends` may short-cut the check of
/// child = parent + added when the parent is already known to satisfy it.
struct PredicateSpec {
    std::string name;
    bool hereditary = true;
    std::function<bool(const TripleSystem&)> accepts;
    std::function<bool(const TripleSystem& child, const Triple& added)> extends;
};

PredicateSpec predicate_spec(Predicate p);

struct PredicateFlags {
    bool f5free = false;
    bool k4mfree = false;
    bool cancellative = false;
    bool tripartite = false;

    friend bool operator==(const PredicateFlags&, const PredicateFlags&) = default;
};

PredicateFlags classify(const TripleSystem& h);

/// One unlabeled representative (stored in canonical labeling).
struct EnumRecord {
    CanonicalForm form;
    std::size_t edge_count = 0;
    PredicateFlags flags;

    TripleSystem system() const { return form.system(); }
    std::uint64_t aut_order() const { return form.aut_order; }
};

/// Exact counts for one (n, predicate).
struct CountTable {
    int n = 0;
    std::string predicate;
    BigInt labeled_total = 0;
    std::optional<std::uint64_t> unlabeled_total;
    /// Indexed by edge count 0..C(n,3).
    std::vector<BigInt> labeled_by_edges;
    /// Empty when unlabeled counts are not known.
    std::vector<std::uint64_t> unlabeled_by_edges;

    friend bool operator==(const CountTable&, const CountTable&) = default;
};

inline constexpr int kBruteForceBound = 6;

/// Tests every edge subset of the complete 3-graph on [n]. Exact, slow, obvious.
/// Workers shard the subset rank range; the result does not depend on their number.
/// With `dedup`, accepted subsets are also grouped by canonical key to give
/// unlabeled counts.
CountTable brute_force_count(int n, Predicate p, unsigned workers = 1, bool dedup = false);

/// Isomorph-free generation by canonical augmentation. Emits one record per
/// isomorphism class of systems on n vertices that satisfy `pred`, sorted by
/// (edge count, key). Throws ContractViolation for non-hereditary predicates.
std::vector<EnumRecord> generate_isofree(int n, const PredicateSpec& pred, unsigned workers = 1);
std::vector<EnumRecord> generate_isofree(int n, Predicate p, unsigned workers = 1);

/// Σ n!/|Aut| over pairwise non-isomorphic records.
BigInt labeled_total(const std::vector<EnumRecord>& records, int n);

CountTable tabulate(int n, const std::string& predicate, const std::vector<EnumRecord>& records);

inline constexpr int kExtremalBound = 7;

struct ExtremalResult {
    int value = 0;
    TripleSystem witness;
    std::uint64_t nodes = 0;
};

/// Maximum edge count of an F5-free / cancellative system on n vertices by
/// branch and bound over triples in colex order. Throws BudgetExceeded when the
/// node budget runs out before the bound is proven.
ExtremalResult extremal_search(int n, Predicate p, std::uint64_t node_budget = 2'000'000'000ULL);
int extremal_number(int n, Predicate p);

} // namespace tripart
