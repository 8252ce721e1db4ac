#include "tripart/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

#include "tripart/errors.hpp"
#include "tripart/parallel.hpp"
#include "tripart/partition.hpp"
#include "tripart/patterns.hpp"

namespace tripart {

std::string to_string(Predicate p) {
    switch (p) {
    case Predicate::All: return "all";
    case Predicate::F5Free: return "f5free";
    case Predicate::K4MinusFree: return "k4mfree";
    case Predicate::Cancellative: return "cancellative";
    case Predicate::Tripartite: return "tripartite";
    }
    return "unknown";
}

Predicate parse_predicate(std::string_view name) {
    for (Predicate p : {Predicate::All, Predicate::F5Free, Predicate::K4MinusFree, Predicate::Cancellative,
                        Predicate::Tripartite}) {
        if (name == to_string(p)) return p;
    }
    throw std::invalid_argument("unknown predicate '" + std::string(name) +
                                "' (expected all|f5free|k4mfree|cancellative|tripartite)");
}

PredicateSpec predicate_spec(Predicate p) {
    PredicateSpec spec;
    spec.name = to_string(p);
    spec.hereditary = true;
    switch (p) {
    case Predicate::All:
        spec.accepts = [](const TripleSystem&) { return true; };
        spec.extends = [](const TripleSystem&, const Triple&) { return true; };
        break;
    case Predicate::F5Free:
        spec.accepts = is_f5_free;
        spec.extends = [](const TripleSystem& child, const Triple& e) { return !f5_through(PairLinks(child), e); };
        break;
    case Predicate::K4MinusFree:
        spec.accepts = is_k4minus_free;
        spec.extends = [](const TripleSystem& child, const Triple& e) { return !k4minus_through(PairLinks(child), e); };
        break;
    case Predicate::Cancellative:
        // Full checks use the definition; incremental checks use the two patterns.
        spec.accepts = is_cancellative;
        spec.extends = [](const TripleSystem& child, const Triple& e) {
            const PairLinks links(child);
            return !k4minus_through(links, e) && !f5_through(links, e);
        };
        break;
    case Predicate::Tripartite:
        spec.accepts = is_tripartite;
        spec.extends = [](const TripleSystem& child, const Triple&) { return is_tripartite(child); };
        break;
    }
    return spec;
}

PredicateFlags classify(const TripleSystem& h) {
    PredicateFlags f;
    f.f5free = is_f5_free(h);
    f.k4mfree = is_k4minus_free(h);
    f.cancellative = is_cancellative(h);
    f.tripartite = is_tripartite(h);
    return f;
}

CountTable brute_force_count(int n, Predicate p, unsigned workers, bool dedup) {
    if (n < 0 || n > kBruteForceBound) {
        throw UnsupportedSize("brute_force_count supports n <= " + std::to_string(kBruteForceBound));
    }
    const std::size_t slots = triple_slots(n);
    const std::uint64_t subsets = std::uint64_t{1} << slots;
    const PredicateSpec spec = predicate_spec(p);

    constexpr std::size_t kShards = 64;
    std::vector<std::vector<std::uint64_t>> hist(kShards, std::vector<std::uint64_t>(slots + 1, 0));
    std::vector<std::set<std::pair<std::size_t, std::string>>> classes(kShards);
    parallel_for(kShards, workers, [&](std::size_t shard) {
        const std::uint64_t lo = subsets * shard / kShards;
        const std::uint64_t hi = subsets * (shard + 1) / kShards;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            const TripleSystem h = slots == 0 ? TripleSystem(n)
                                              : TripleSystem::from_slot_words(n, std::span<const std::uint64_t>(&mask, 1));
            if (!spec.accepts(h)) continue;
            ++hist[shard][static_cast<std::size_t>(std::popcount(mask))];
            if (dedup) classes[shard].emplace(h.size(), key_string(canonical_form(h)));
        }
    });

    CountTable table;
    table.n = n;
    table.predicate = spec.name;
    table.labeled_by_edges.assign(slots + 1, 0);
    for (const auto& h : hist) {
        for (std::size_t k = 0; k <= slots; ++k) table.labeled_by_edges[k] += h[k];
    }
    for (const auto& c : table.labeled_by_edges) table.labeled_total += c;
    if (dedup) {
        std::set<std::pair<std::size_t, std::string>> all;
        for (auto& c : classes) all.merge(c);
        table.unlabeled_by_edges.assign(slots + 1, 0);
        for (const auto& [edges, key] : all) ++table.unlabeled_by_edges[edges];
        table.unlabeled_total = all.size();
    }
    return table;
}

namespace {

std::size_t image_rank(const std::vector<Vertex>& alpha, const Triple& t) {
    return triple_rank(Triple::of(alpha[static_cast<std::size_t>(t.a)], alpha[static_cast<std::size_t>(t.b)],
                                  alpha[static_cast<std::size_t>(t.c)]));
}

std::size_t highest_slot(const std::vector<std::uint64_t>& words) {
    for (std::size_t i = words.size(); i-- > 0;) {
        if (words[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words[i]));
    }
    throw std::logic_error("highest_slot of an empty system");
}

struct Node {
    TripleSystem system;
    CanonicalLabeling labeling;
};

// Canonical augmentation: children of a node are formed by adding one
// representative non-edge per Aut(parent)-orbit; a child is kept iff the added
// edge lies in the Aut(child)-orbit of the child's canonical deletion edge (the
// edge carried to the highest colex slot by the canonical labeling).
class Augmenter {
public:
    Augmenter(int n, const PredicateSpec& pred) : n_(n), pred_(pred), slots_(triple_slots(n)) {}

    EnumRecord record(const Node& node) const {
        EnumRecord r;
        r.form = node.labeling.form;
        r.edge_count = node.system.size();
        r.flags = classify(node.system);
        return r;
    }

    std::vector<Node> children(const Node& node) const {
        std::vector<Node> out;
        std::vector<bool> seen(slots_, false);
        const auto& auts = node.labeling.automorphisms;
        for (std::size_t s = 0; s < slots_; ++s) {
            if (seen[s] || node.system.contains_slot(s)) continue;
            const Triple t = triple_unrank(s);
            for (const auto& alpha : auts) seen[image_rank(alpha, t)] = true;

            TripleSystem child = node.system.with_edge(t);
            if (!pred_.extends(child, t)) continue;
            CanonicalLabeling lab = canonical_labeling(child, true, kHardCanonicalBound);
            const std::size_t last = highest_slot(lab.form.key);
            // Vertex whose canonical position is p, for every p.
            std::vector<Vertex> inverse(static_cast<std::size_t>(n_));
            for (Vertex v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(lab.labeling[static_cast<std::size_t>(v)])] = v;
            const Triple last_t = triple_unrank(last);
            const Triple deletion = Triple::of(inverse[static_cast<std::size_t>(last_t.a)],
                                               inverse[static_cast<std::size_t>(last_t.b)],
                                               inverse[static_cast<std::size_t>(last_t.c)]);
            const std::size_t deletion_rank = triple_rank(deletion);
            bool accept = false;
            for (const auto& alpha : lab.automorphisms) {
                if (image_rank(alpha, t) == deletion_rank) {
                    accept = true;
                    break;
                }
            }
            if (accept) out.push_back(Node{std::move(child), std::move(lab)});
        }
        return out;
    }

    void subtree(const Node& node, std::vector<EnumRecord>& sink) const {
        sink.push_back(record(node));
        for (const Node& c : children(node)) subtree(c, sink);
    }

private:
    int n_;
    const PredicateSpec& pred_;
    std::size_t slots_;
};

bool record_less(const EnumRecord& x, const EnumRecord& y) {
    if (x.edge_count != y.edge_count) return x.edge_count < y.edge_count;
    return std::lexicographical_compare(x.form.key.rbegin(), x.form.key.rend(), y.form.key.rbegin(), y.form.key.rend());
}

} // namespace

std::vector<EnumRecord> generate_isofree(int n, const PredicateSpec& pred, unsigned workers) {
    if (!pred.hereditary) {
        throw ContractViolation("generate_isofree requires a hereditary predicate; '" + pred.name + "' is not");
    }
    if (n < 0 || n > kHardCanonicalBound) {
        throw UnsupportedSize("generate_isofree supports n <= " + std::to_string(kHardCanonicalBound));
    }
    std::vector<EnumRecord> records;
    TripleSystem root(n);
    if (!pred.accepts(root)) return records;

    const Augmenter aug(n, pred);
    // Expand the top of the tree serially, then shard the frontier.
    constexpr std::size_t kFrontierDepth = 3;
    std::vector<Node> frontier;
    frontier.push_back(Node{root, canonical_labeling(root, true, kHardCanonicalBound)});
    for (std::size_t depth = 0; depth < kFrontierDepth; ++depth) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            records.push_back(aug.record(node));
            for (Node& c : aug.children(node)) next.push_back(std::move(c));
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<EnumRecord>> shards(frontier.size());
    parallel_for(frontier.size(), workers, [&](std::size_t i) { aug.subtree(frontier[i], shards[i]); });
    for (auto& s : shards) records.insert(records.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    std::sort(records.begin(), records.end(), record_less);
    return records;
}

std::vector<EnumRecord> generate_isofree(int n, Predicate p, unsigned workers) {
    return generate_isofree(n, predicate_spec(p), workers);
}

BigInt labeled_total(const std::vector<EnumRecord>& records, int n) {
    BigInt total = 0;
    const std::uint64_t nf = factorial(n);
    for (const EnumRecord& r : records) total += nf / r.aut_order();
    return total;
}

CountTable tabulate(int n, const std::string& predicate, const std::vector<EnumRecord>& records) {
    CountTable t;
    t.n = n;
    t.predicate = predicate;
    const std::size_t slots = triple_slots(n);
    t.labeled_by_edges.assign(slots + 1, 0);
    t.unlabeled_by_edges.assign(slots + 1, 0);
    const std::uint64_t nf = factorial(n);
    for (const EnumRecord& r : records) {
        t.labeled_by_edges[r.edge_count] += nf / r.aut_order();
        ++t.unlabeled_by_edges[r.edge_count];
    }
    for (const auto& c : t.labeled_by_edges) t.labeled_total += c;
    t.unlabeled_total = records.size();
    return t;
}

} // namespace tripart
