#include "tripart/randlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tripart/errors.hpp"
#include "tripart/formulas.hpp"
#include "tripart/parallel.hpp"
#include "tripart/rng.hpp"

namespace tripart {
namespace {

constexpr std::uint64_t kStreamConditionOne = 1;
constexpr std::uint64_t kStreamConditionTwo = 2;
constexpr std::uint64_t kStreamConditionThree = 3;
constexpr std::uint64_t kStreamRecoveryProbe = 4;

std::uint64_t substream(std::uint64_t tag, std::uint64_t index) { return (tag << 40) | index; }

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    return s.str();
}

std::uint64_t mask_of(const std::vector<Vertex>& vs) {
    std::uint64_t m = 0;
    for (Vertex v : vs) m |= vertex_bit(v);
    return m;
}

std::vector<Vertex> vertices_of(std::uint64_t m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

std::array<std::vector<Vertex>, 3> parts_of(const Partition3& p) {
    std::array<std::vector<Vertex>, 3> parts;
    for (Vertex v = 0; v < p.order(); ++v) parts[static_cast<std::size_t>(p.part_of(v))].push_back(v);
    return parts;
}

/// Uniform size in [min_size, |from|], then a uniform subset of that size.
std::vector<Vertex> random_subset(Rng& rng, std::vector<Vertex> from, std::size_t min_size) {
    const std::size_t size = min_size + static_cast<std::size_t>(rng.below(from.size() - min_size + 1));
    rng.shuffle(from);
    from.resize(size);
    std::sort(from.begin(), from.end());
    return from;
}

int popcount(std::uint64_t x) { return std::popcount(x); }

// ---- condition (i) ----

std::optional<DensityWitness> condition_one_exact(const PairLinks& links, const std::array<std::vector<Vertex>, 3>& parts,
                                                  std::size_t k, unsigned workers) {
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return parts[static_cast<std::size_t>(x)].size() < parts[static_cast<std::size_t>(y)].size(); });
    const auto& pv = parts[static_cast<std::size_t>(order[0])];
    const auto& qv = parts[static_cast<std::size_t>(order[1])];
    const auto& rv = parts[static_cast<std::size_t>(order[2])];
    const std::size_t np = pv.size();
    const std::size_t nq = qv.size();
    const std::size_t nr = rv.size();

    std::vector<std::optional<DensityWitness>> found(std::size_t{1} << np);
    parallel_for(found.size(), workers, [&](std::size_t pmask) {
        if (static_cast<std::size_t>(std::popcount(pmask)) < k) return;
        std::uint64_t ap = 0;
        for (std::size_t i = 0; i < np; ++i) {
            if ((pmask >> i) & 1U) ap |= vertex_bit(pv[i]);
        }
        const long long ap_size = std::popcount(pmask);
        // wb[c][b]: edges a b c with a in A_P.
        std::vector<long long> wb(nr * nq);
        for (std::size_t c = 0; c < nr; ++c) {
            for (std::size_t b = 0; b < nq; ++b) wb[c * nq + b] = popcount(links(qv[b], rv[c]) & ap);
        }
        std::vector<long long> w(nr, 0);
        std::vector<std::size_t> idx(nr);
        std::size_t gray = 0;
        for (std::size_t step = 1; step < (std::size_t{1} << nq); ++step) {
            const std::size_t bit = static_cast<std::size_t>(std::countr_zero(step));
            gray ^= std::size_t{1} << bit;
            const long long sign = ((gray >> bit) & 1U) ? 1 : -1;
            for (std::size_t c = 0; c < nr; ++c) w[c] += sign * wb[c * nq + bit];
            const long long q_size = std::popcount(gray);
            if (static_cast<std::size_t>(q_size) < k) continue;
            // The smallest average over |A_R| >= k is attained by the k lightest vertices.
            std::iota(idx.begin(), idx.end(), 0);
            std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                              [&](std::size_t x, std::size_t y) { return w[x] != w[y] ? w[x] < w[y] : x < y; });
            long long sum = 0;
            for (std::size_t i = 0; i < k; ++i) sum += w[idx[i]];
            if (8 * sum > ap_size * q_size * static_cast<long long>(k)) continue;

            DensityWitness wit;
            wit.condition = 1;
            wit.sets.assign(3, {});
            std::uint64_t aq = 0;
            for (std::size_t b = 0; b < nq; ++b) {
                if ((gray >> b) & 1U) aq |= vertex_bit(qv[b]);
            }
            std::uint64_t ar = 0;
            for (std::size_t i = 0; i < k; ++i) ar |= vertex_bit(rv[idx[i]]);
            wit.sets[static_cast<std::size_t>(order[0])] = vertices_of(ap);
            wit.sets[static_cast<std::size_t>(order[1])] = vertices_of(aq);
            wit.sets[static_cast<std::size_t>(order[2])] = vertices_of(ar);
            wit.count = static_cast<std::uint64_t>(sum);
            found[pmask] = std::move(wit);
            return;
        }
    });
    for (auto& f : found) {
        if (f) return f;
    }
    return std::nullopt;
}

std::optional<DensityWitness> condition_one_trial(const PairLinks& links, const std::array<std::vector<Vertex>, 3>& parts,
                                                  std::size_t k, std::uint64_t trial, Rng& rng) {
    const int r = static_cast<int>(trial % 3);
    const int p = (r + 1) % 3;
    const int q = (r + 2) % 3;
    const auto ap = random_subset(rng, parts[static_cast<std::size_t>(p)], k);
    const auto aq = random_subset(rng, parts[static_cast<std::size_t>(q)], k);
    const std::uint64_t aq_mask = mask_of(aq);
    const auto& rv = parts[static_cast<std::size_t>(r)];
    std::vector<std::pair<long long, Vertex>> w;
    for (Vertex c : rv) {
        long long s = 0;
        for (Vertex a : ap) s += popcount(links(a, c) & aq_mask);
        w.emplace_back(s, c);
    }
    std::sort(w.begin(), w.end());
    long long sum = 0;
    for (std::size_t i = 0; i < k; ++i) sum += w[i].first;
    if (8 * sum > static_cast<long long>(ap.size() * aq.size() * k)) return std::nullopt;
    DensityWitness wit;
    wit.condition = 1;
    wit.sets.assign(3, {});
    wit.sets[static_cast<std::size_t>(p)] = ap;
    wit.sets[static_cast<std::size_t>(q)] = aq;
    std::vector<Vertex> ar;
    for (std::size_t i = 0; i < k; ++i) ar.push_back(w[i].second);
    std::sort(ar.begin(), ar.end());
    wit.sets[static_cast<std::size_t>(r)] = ar;
    wit.count = static_cast<std::uint64_t>(sum);
    return wit;
}

// ---- condition (ii) ----

std::optional<DensityWitness> condition_two_trial(const PairLinks& links, const std::array<std::vector<Vertex>, 3>& parts,
                                                  std::size_t k, std::size_t g_min, std::uint64_t trial, Rng& rng) {
    const int i = static_cast<int>(trial % 3);
    const int j = (i + 1) % 3;
    const int l = (i + 2) % 3;
    const auto ai = random_subset(rng, parts[static_cast<std::size_t>(i)], k);
    const std::uint64_t ai_mask = mask_of(ai);
    struct Weighted {
        long long w;
        Vertex b, c;
        bool operator<(const Weighted& o) const { return std::tie(w, b, c) < std::tie(o.w, o.b, o.c); }
    };
    std::vector<Weighted> pairs;
    for (Vertex b : parts[static_cast<std::size_t>(j)]) {
        for (Vertex c : parts[static_cast<std::size_t>(l)]) pairs.push_back({popcount(links(b, c) & ai_mask), b, c});
    }
    std::sort(pairs.begin(), pairs.end());
    long long sum = 0;
    for (std::size_t t = 0; t < g_min; ++t) sum += pairs[t].w;
    if (8 * sum > static_cast<long long>(ai.size() * g_min)) return std::nullopt;
    DensityWitness wit;
    wit.condition = 2;
    wit.roles = {i, j, l};
    wit.sets = {ai};
    for (std::size_t t = 0; t < g_min; ++t) wit.pairs.emplace_back(pairs[t].b, pairs[t].c);
    wit.count = static_cast<std::uint64_t>(sum);
    return wit;
}

// ---- condition (iii) ----

std::optional<DensityWitness> condition_three_trial(const PairLinks& links, const std::array<std::vector<Vertex>, 3>& parts,
                                                    std::size_t k, std::uint64_t trial, Rng& rng) {
    const int l = static_cast<int>(trial % 3);
    const int i = std::min((l + 1) % 3, (l + 2) % 3);
    const int j = std::max((l + 1) % 3, (l + 2) % 3);
    const auto ai = random_subset(rng, parts[static_cast<std::size_t>(i)], k);
    const auto aj = random_subset(rng, parts[static_cast<std::size_t>(j)], k);
    const std::uint64_t aj_mask = mask_of(aj);
    const auto& ul = parts[static_cast<std::size_t>(l)];

    const auto weight = [&](Vertex c, Vertex d) {
        long long s = 0;
        for (Vertex a : ai) s += popcount(links(a, c) & links(a, d) & aj_mask);
        return s;
    };
    const auto refutes = [&](const std::vector<Edge2>& g) -> std::optional<DensityWitness> {
        long long sum = 0;
        for (const auto& [c, d] : g) sum += weight(c, d);
        if (128 * sum >= static_cast<long long>(ai.size() * aj.size() * g.size())) return std::nullopt;
        DensityWitness wit;
        wit.condition = 3;
        wit.roles = {i, j, l};
        wit.sets = {ai, aj};
        wit.pairs = g;
        wit.count = static_cast<std::uint64_t>(sum);
        return wit;
    };

    // Greedy cheapest matching of size k.
    struct Weighted {
        long long w;
        Vertex c, d;
        bool operator<(const Weighted& o) const { return std::tie(w, c, d) < std::tie(o.w, o.c, o.d); }
    };
    std::vector<Weighted> all;
    for (std::size_t x = 0; x < ul.size(); ++x) {
        for (std::size_t y = x + 1; y < ul.size(); ++y) all.push_back({weight(ul[x], ul[y]), ul[x], ul[y]});
    }
    std::sort(all.begin(), all.end());
    std::vector<Edge2> greedy;
    std::uint64_t used = 0;
    for (const auto& e : all) {
        if (greedy.size() == k) break;
        if ((used & vertex_bit(e.c)) || (used & vertex_bit(e.d))) continue;
        used |= vertex_bit(e.c) | vertex_bit(e.d);
        greedy.emplace_back(e.c, e.d);
    }

    std::vector<Vertex> shuffled = ul;
    rng.shuffle(shuffled);
    std::vector<Edge2> random_exact;
    std::vector<Edge2> maximal;
    for (std::size_t t = 0; t + 1 < shuffled.size(); t += 2) {
        const Edge2 e{std::min(shuffled[t], shuffled[t + 1]), std::max(shuffled[t], shuffled[t + 1])};
        if (random_exact.size() < k) random_exact.push_back(e);
        maximal.push_back(e);
    }

    if (greedy.size() == k) {
        if (auto w = refutes(greedy)) return w;
    }
    if (auto w = refutes(random_exact)) return w;
    return refutes(maximal);
}

template <class TrialFn>
ConditionResult sampled_condition(std::uint64_t tag, std::uint64_t trials, std::uint64_t seed, unsigned workers, TrialFn&& fn) {
    std::vector<std::optional<DensityWitness>> results(trials);
    parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
        Rng rng(seed, substream(tag, t));
        results[t] = fn(static_cast<std::uint64_t>(t), rng);
    });
    ConditionResult r;
    r.mode = AuditMode::Sampled;
    r.trials = trials;
    for (auto& w : results) {
        if (!w) continue;
        ++r.refutations;
        if (!r.witness) r.witness = std::move(w);
    }
    r.status = r.refutations ? ConditionStatus::Refuted : ConditionStatus::SampledPass;
    return r;
}

bool within_part(const std::vector<Vertex>& set, const Partition3& p, int part) {
    return std::all_of(set.begin(), set.end(), [&](Vertex v) { return v >= 0 && v < p.order() && p.part_of(v) == part; });
}

bool distinct(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

} // namespace

PlantedSample sample_planted(int n, double p, std::uint64_t seed, std::uint64_t stream) {
    if (n < 3 || n > kMaxVertices) throw std::domain_error("planted samples need 3 <= n <= 64");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("crossing probability must lie in [0,1]");
    const auto sizes = balanced_split(n);
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = v < sizes[0] ? 0 : v < sizes[0] + sizes[1] ? 1 : 2;
    Partition3 planted(labels);
    Rng rng(seed, stream);
    std::vector<Triple> edges;
    for (Vertex z = sizes[0] + sizes[1]; z < n; ++z) {
        for (Vertex y = sizes[0]; y < sizes[0] + sizes[1]; ++y) {
            for (Vertex x = 0; x < sizes[0]; ++x) {
                if (rng.bernoulli(p)) edges.push_back({x, y, z});
            }
        }
    }
    PlantedSample s;
    s.system = TripleSystem(n, edges);
    s.planted = std::move(planted);
    s.p = p;
    s.seed = seed;
    s.stream = stream;
    return s;
}

std::string to_string(AuditMode m) { return m == AuditMode::Exact ? "exact" : "sampled"; }

AuditMode parse_audit_mode(const std::string& s) {
    if (s == "exact") return AuditMode::Exact;
    if (s == "sampled") return AuditMode::Sampled;
    throw std::invalid_argument("unknown audit mode '" + s + "' (expected exact|sampled)");
}

std::string to_string(ConditionStatus s) {
    switch (s) {
    case ConditionStatus::Verified: return "verified";
    case ConditionStatus::Refuted: return "refuted";
    case ConditionStatus::SampledPass: return "sampled-pass";
    case ConditionStatus::Vacuous: return "vacuous";
    }
    return "vacuous";
}

bool DensityAudit::refuted() const {
    return std::any_of(conditions.begin(), conditions.end(),
                       [](const ConditionResult& c) { return c.status == ConditionStatus::Refuted; });
}

std::size_t density_min_set(double mu, int n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(mu * n - 1e-9)));
}

std::size_t density_min_pairs(double mu, int n) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(mu * mu * n * n - 1e-9)));
}

DensityAudit density_audit(const TripleSystem& h, const Partition3& p, double mu, AuditMode mode, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
    if (!(mu > 0.0 && mu < 1.0)) throw std::domain_error("density audit needs 0 < mu < 1");
    if (p.order() != h.order()) throw ContractViolation("partition and system differ in order");
    const int n = h.order();
    const auto parts = parts_of(p);
    const PairLinks links(h);
    const std::size_t k = density_min_set(mu, n);
    const std::size_t g_min = density_min_pairs(mu, n);

    DensityAudit audit;
    audit.mu = mu;
    audit.mode = mode;

    // (i)
    auto& one = audit.conditions[0];
    const bool one_vacuous = std::any_of(parts.begin(), parts.end(), [&](const auto& part) { return part.size() < k; });
    if (one_vacuous) {
        one.status = ConditionStatus::Vacuous;
        one.mode = mode;
        one.note = "some part has fewer than " + std::to_string(k) + " vertices";
    } else if (mode == AuditMode::Exact) {
        std::array<std::size_t, 3> sizes{parts[0].size(), parts[1].size(), parts[2].size()};
        std::sort(sizes.begin(), sizes.end());
        if (sizes[0] + sizes[1] > static_cast<std::size_t>(kExactDensityBits)) {
            throw UnsupportedSize("exact density audit needs the two smallest parts to total <= " +
                                  std::to_string(kExactDensityBits) + " vertices");
        }
        one.mode = AuditMode::Exact;
        one.witness = condition_one_exact(links, parts, k, workers);
        one.status = one.witness ? ConditionStatus::Refuted : ConditionStatus::Verified;
        one.refutations = one.witness ? 1 : 0;
        one.note = "all A_1, A_2 over the two smallest parts, lightest A_3 of each admissible size";
    } else {
        one = sampled_condition(kStreamConditionOne, trials, seed, workers, [&](std::uint64_t t, Rng& rng) {
            return condition_one_trial(links, parts, k, t, rng);
        });
        one.note = "random A sets on two parts, lightest A on the third";
    }

    // (ii)
    auto& two = audit.conditions[1];
    bool two_vacuous = false;
    for (int i = 0; i < 3; ++i) {
        const std::size_t pairs_available = parts[static_cast<std::size_t>((i + 1) % 3)].size() *
                                            parts[static_cast<std::size_t>((i + 2) % 3)].size();
        if (parts[static_cast<std::size_t>(i)].size() < k || pairs_available < g_min) two_vacuous = true;
    }
    if (two_vacuous) {
        two.status = ConditionStatus::Vacuous;
        two.note = "no admissible (A_i, G) for some part";
    } else {
        two = sampled_condition(kStreamConditionTwo, trials, seed, workers, [&](std::uint64_t t, Rng& rng) {
            return condition_two_trial(links, parts, k, g_min, t, rng);
        });
        two.note = "random A_i with the " + std::to_string(g_min) + " lightest pairs as G";
    }

    // (iii)
    auto& three = audit.conditions[2];
    bool three_vacuous = false;
    for (const auto& part : parts) {
        if (part.size() < k || part.size() < 2 * k) three_vacuous = true;
    }
    if (three_vacuous) {
        three.status = ConditionStatus::Vacuous;
        three.note = "no matching of size " + std::to_string(k) + " fits in some part";
    } else {
        three = sampled_condition(kStreamConditionThree, trials, seed, workers, [&](std::uint64_t t, Rng& rng) {
            return condition_three_trial(links, parts, k, t, rng);
        });
        three.note = "per trial: greedy lightest matching of size " + std::to_string(k) +
                     ", a random one of that size and a random maximal one";
    }

    // (iv)
    auto& four = audit.conditions[3];
    four.mode = AuditMode::Exact;
    four.status = ConditionStatus::Verified;
    for (int i = 0; i < 3; ++i) {
        const double size = static_cast<double>(parts[static_cast<std::size_t>(i)].size());
        if (std::abs(3.0 * size - n) >= 3.0 * mu * n) {
            DensityWitness wit;
            wit.condition = 4;
            wit.roles = {i, (i + 1) % 3, (i + 2) % 3};
            wit.count = parts[static_cast<std::size_t>(i)].size();
            four.witness = wit;
            four.status = ConditionStatus::Refuted;
            four.refutations = 1;
            break;
        }
    }

    for (const auto& c : audit.conditions) {
        if (c.witness && !witness_refutes(h, p, mu, *c.witness)) {
            throw std::logic_error("density witness for condition " + std::to_string(c.witness->condition) +
                                   " does not re-validate");
        }
    }
    return audit;
}

DensityAudit density_audit(const PlantedSample& sample, double mu, AuditMode mode, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
    return density_audit(sample.system, sample.planted, mu, mode, trials, seed, workers);
}

bool witness_refutes(const TripleSystem& h, const Partition3& p, double mu, const DensityWitness& w) {
    const int n = h.order();
    const std::size_t k = density_min_set(mu, n);
    const auto [ri, rj, rl] = w.roles;
    switch (w.condition) {
    case 1: {
        if (w.sets.size() != 3) return false;
        for (int i = 0; i < 3; ++i) {
            const auto& a = w.sets[static_cast<std::size_t>(i)];
            if (a.size() < k || !within_part(a, p, i) || !distinct(a)) return false;
        }
        const std::array<std::uint64_t, 3> m{mask_of(w.sets[0]), mask_of(w.sets[1]), mask_of(w.sets[2])};
        std::uint64_t count = 0;
        for (const Triple& e : h.edges()) {
            if (popcount(e.mask() & m[0]) == 1 && popcount(e.mask() & m[1]) == 1 && popcount(e.mask() & m[2]) == 1) ++count;
        }
        const std::uint64_t product = w.sets[0].size() * w.sets[1].size() * w.sets[2].size();
        return count == w.count && 8 * count <= product;
    }
    case 2: {
        if (w.sets.size() != 1) return false;
        const auto& ai = w.sets[0];
        if (ai.size() < k || !within_part(ai, p, ri) || !distinct(ai)) return false;
        if (w.pairs.size() < density_min_pairs(mu, n)) return false;
        std::set<std::pair<Vertex, Vertex>> g;
        for (const auto& [b, c] : w.pairs) {
            const bool ok = (p.part_of(b) == rj && p.part_of(c) == rl) || (p.part_of(b) == rl && p.part_of(c) == rj);
            if (!ok || !g.emplace(std::min(b, c), std::max(b, c)).second) return false;
        }
        const std::uint64_t am = mask_of(ai);
        std::uint64_t count = 0;
        for (const Triple& e : h.edges()) {
            if (popcount(e.mask() & am) != 1) continue;
            const auto rest = vertices_of(e.mask() & ~am);
            if (g.count({rest[0], rest[1]})) ++count;
        }
        return count == w.count && 8 * count <= ai.size() * g.size();
    }
    case 3: {
        if (w.sets.size() != 2) return false;
        const auto& ai = w.sets[0];
        const auto& aj = w.sets[1];
        if (ai.size() < k || aj.size() < k || !within_part(ai, p, ri) || !within_part(aj, p, rj) || !distinct(ai) ||
            !distinct(aj)) {
            return false;
        }
        if (w.pairs.size() < k) return false;
        std::set<std::pair<Vertex, Vertex>> g;
        std::uint64_t covered = 0;
        for (const auto& [c, d] : w.pairs) {
            if (c == d || p.part_of(c) != rl || p.part_of(d) != rl) return false;
            if ((covered & vertex_bit(c)) || (covered & vertex_bit(d))) return false;
            covered |= vertex_bit(c) | vertex_bit(d);
            g.emplace(std::min(c, d), std::max(c, d));
        }
        const std::uint64_t ul = p.part_mask(rl);
        const std::uint64_t mi = mask_of(ai);
        const std::uint64_t mj = mask_of(aj);
        // Edges C with |C ∩ A_i| = |C ∩ A_j| = 1 and a single vertex in U_l, grouped by C - U_l.
        std::map<std::uint64_t, std::vector<Vertex>> groups;
        for (const Triple& e : h.edges()) {
            const std::uint64_t m = e.mask();
            if (popcount(m & ul) != 1 || popcount(m & mi) != 1 || popcount(m & mj) != 1) continue;
            groups[m & ~ul].push_back(std::countr_zero(m & ul));
        }
        std::uint64_t count = 0;
        for (const auto& [rest, tips] : groups) {
            for (std::size_t x = 0; x < tips.size(); ++x) {
                for (std::size_t y = x + 1; y < tips.size(); ++y) {
                    if (g.count({std::min(tips[x], tips[y]), std::max(tips[x], tips[y])})) ++count;
                }
            }
        }
        return count == w.count && 128 * count < ai.size() * aj.size() * g.size();
    }
    case 4: {
        const double size = static_cast<double>(p.part_sizes()[static_cast<std::size_t>(ri)]);
        return std::abs(3.0 * size - n) >= 3.0 * mu * n && w.count == static_cast<std::uint64_t>(size);
    }
    default: return false;
    }
}

std::vector<BadVertexViolation> bad_vertex_audit(const TripleSystem& h, const Partition3& p, double mu) {
    if (p.order() != h.order()) throw ContractViolation("partition and system differ in order");
    const int n = h.order();
    const double threshold = 2.0 * mu * n * n;
    std::vector<BadVertexViolation> out;
    for (Vertex x = 0; x < n; ++x) {
        const LinkProfile prof = link_profile(h, p, x);
        const int own = p.part_of(x);
        const int second = (own + 1) % 3;
        const int third = (own + 2) % 3;
        const std::array<std::pair<const char*, std::size_t>, 5> classes{{{"L11", prof.count(own, own)},
                                                                          {"L12", prof.count(own, second)},
                                                                          {"L22", prof.count(second, second)},
                                                                          {"L13", prof.count(own, third)},
                                                                          {"L33", prof.count(third, third)}}};
        for (const auto& [name, count] : classes) {
            if (static_cast<double>(count) >= threshold) out.push_back({x, name, count});
        }
    }
    return out;
}

namespace {

std::string witness_summary(const std::optional<DensityWitness>& w) {
    if (!w) return "-";
    std::ostringstream s;
    s << "roles=(" << w->roles[0] + 1 << "," << w->roles[1] + 1 << "," << w->roles[2] + 1 << ")";
    for (const auto& set : w->sets) {
        s << " A={";
        for (std::size_t i = 0; i < set.size(); ++i) s << (i ? "," : "") << set[i] + 1;
        s << "}";
    }
    if (!w->pairs.empty()) s << " |G|=" << w->pairs.size();
    s << " count=" << w->count;
    return s.str();
}

void rate_verdict(RunReport& r, const std::string& name, std::uint64_t hits, std::uint64_t trials,
                  const std::optional<double>& min_rate) {
    const double rate = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
    const std::string detail = std::to_string(hits) + "/" + std::to_string(trials);
    if (min_rate) {
        r.verdict(name + " rate >= " + fmt(*min_rate), rate >= *min_rate, detail);
    } else {
        r.observe(name + " rate", detail);
    }
}

} // namespace

RunReport density_experiment(const DensityOptions& opt) {
    RunReport r("experiment density");
    r.param("n", std::to_string(opt.n));
    r.param("p", fmt(opt.p));
    r.param("mu", fmt(opt.mu));
    r.param("mode", to_string(opt.mode));
    r.param("trials", std::to_string(opt.trials));
    r.param("seed", std::to_string(opt.seed));
    r.param("substreams", "planted: 0; condition c trial t: (c << 40) | t");
    const PlantedSample s = sample_planted(opt.n, opt.p, opt.seed, 0);
    const DensityAudit audit = density_audit(s, opt.mu, opt.mode, opt.trials, opt.seed, opt.workers);
    auto& t = r.table("conditions", {"condition", "status", "mode", "trials", "refutations", "witness"});
    const std::array<const char*, 4> names{"(i)", "(ii)", "(iii)", "(iv)"};
    bool valid = true;
    for (std::size_t c = 0; c < 4; ++c) {
        const auto& res = audit.conditions[c];
        t.rows.push_back({names[c], to_string(res.status), to_string(res.mode), std::to_string(res.trials),
                          std::to_string(res.refutations), witness_summary(res.witness)});
        if (res.witness) valid = valid && witness_refutes(s.system, s.planted, opt.mu, *res.witness);
        r.observe(std::string("condition ") + names[c], to_string(res.status) + (res.note.empty() ? "" : "; " + res.note));
    }
    r.verdict("refutation witnesses re-validate", valid);
    const std::size_t k = density_min_set(opt.mu, opt.n);
    const double m = static_cast<double>(k * k * k);
    r.observe("edges", std::to_string(s.system.size()) + " of s(n) = " + to_decimal(tripartite_max_edges(opt.n)));
    r.observe("per-trial failure bound for (i) at p = 1/2",
              "chernoff_bound(|A1||A2||A3| >= " + std::to_string(k * k * k) + ", 1/2, 3m/8) = " +
                  fmt(chernoff_bound(static_cast<long long>(m), 0.5, 3.0 * m / 8.0)));
    r.notes.push_back("sampled-pass means no refutation was found; it is not a proof");
    return r;
}

RunReport unique_partition_experiment(const UniquePartitionOptions& opt) {
    if (opt.trials < 1) throw std::domain_error("need at least one trial");
    RunReport r("experiment unique-partition");
    r.param("n", std::to_string(opt.n));
    r.param("p", fmt(opt.p));
    r.param("trials", std::to_string(opt.trials));
    r.param("seed", std::to_string(opt.seed));
    r.param("samples", std::to_string(opt.samples));
    if (opt.min_rate) r.param("min_rate", fmt(*opt.min_rate));
    r.param("substreams", "planted sample of trial t: t; condition (ii) draws: (4 << 40) | t");

    struct TrialResult {
        std::size_t edges = 0;
        bool recovered = false;
        std::size_t failing_pairs = 0;
        std::size_t min_link = 0;
        std::uint64_t refutations = 0;
    };
    const int n = opt.n;
    std::vector<TrialResult> results(opt.trials);
    parallel_for(static_cast<std::size_t>(opt.trials), opt.workers, [&](std::size_t t) {
        const PlantedSample s = sample_planted(n, opt.p, opt.seed, t);
        const auto parts = parts_of(s.planted);
        const PairLinks links(s.system);
        TrialResult& res = results[t];
        res.edges = s.system.size();
        const auto rec = recover_partition(s.system);
        res.recovered = rec && rec->same_up_to_renaming(s.planted);

        // Condition (i): |L_{U_l}(u,v)| > n/10 for every crossing pair.
        res.min_link = static_cast<std::size_t>(n);
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            const std::uint64_t third = s.planted.part_mask((i + 2) % 3);
            for (Vertex u : parts[static_cast<std::size_t>(i)]) {
                for (Vertex v : parts[static_cast<std::size_t>(j)]) {
                    const std::size_t size = static_cast<std::size_t>(popcount(links(u, v) & third));
                    res.min_link = std::min(res.min_link, size);
                    if (10 * size <= static_cast<std::size_t>(n)) ++res.failing_pairs;
                }
            }
        }

        // Condition (ii): random A_i; the lightest A_j for each v.
        const std::size_t lo = static_cast<std::size_t>(n / 10 + 1);
        Rng rng(opt.seed, substream(kStreamRecoveryProbe, t));
        for (std::uint64_t d = 0; d < opt.samples; ++d) {
            const int i = static_cast<int>(d % 3);
            const int j = (i + 1) % 3;
            const int l = (i + 2) % 3;
            const auto& ui = parts[static_cast<std::size_t>(i)];
            const auto& uj = parts[static_cast<std::size_t>(j)];
            if (ui.size() < lo || uj.size() < lo) continue;
            const auto ai = random_subset(rng, ui, lo);
            const std::uint64_t am = mask_of(ai);
            for (Vertex v : parts[static_cast<std::size_t>(l)]) {
                std::vector<long long> w;
                for (Vertex b : uj) w.push_back(popcount(links(v, b) & am));
                std::partial_sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo), w.end());
                const long long sum = std::accumulate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo), 0LL);
                if (10 * sum < static_cast<long long>(ai.size() * lo)) ++res.refutations;
            }
        }
    });

    std::uint64_t recovered = 0;
    std::uint64_t cond_one = 0;
    std::uint64_t cond_two = 0;
    std::size_t min_link = static_cast<std::size_t>(n);
    std::size_t worst_failing = 0;
    auto& table = r.table("trials", {"trial", "edges", "recovered", "pairs failing (i)", "min link", "refutations (ii)"});
    for (std::size_t t = 0; t < results.size(); ++t) {
        const auto& res = results[t];
        recovered += res.recovered;
        cond_one += res.failing_pairs == 0;
        cond_two += res.refutations == 0;
        min_link = std::min(min_link, res.min_link);
        worst_failing = std::max(worst_failing, res.failing_pairs);
        table.rows.push_back({std::to_string(t), std::to_string(res.edges), res.recovered ? "yes" : "no",
                              std::to_string(res.failing_pairs), std::to_string(res.min_link),
                              std::to_string(res.refutations)});
    }
    rate_verdict(r, "planted partition recovered", recovered, opt.trials, opt.min_rate);
    rate_verdict(r, "condition (i) holds for all crossing pairs", cond_one, opt.trials, opt.min_rate);
    rate_verdict(r, "condition (ii) not refuted", cond_two, opt.trials, opt.min_rate);
    r.observe("smallest crossing-pair link", std::to_string(min_link) + " (needs > " + fmt(n / 10.0) + ")");
    r.observe("most crossing pairs failing (i) in one trial", std::to_string(worst_failing));
    r.notes.push_back("condition (ii) threshold uses |A_i||A_j|/10 for the two chosen parts");
    r.notes.push_back("rate thresholds are a reporting convention, not constants of the underlying lemma");
    return r;
}

RunReport triangle_experiment(const TriangleOptions& opt) {
    if (opt.trials < 1) throw std::domain_error("need at least one trial");
    if (!(opt.theta > 0.0)) throw std::domain_error("theta must be positive");
    RunReport r("experiment triangle");
    r.param("l", std::to_string(opt.l));
    r.param("m", std::to_string(opt.m));
    r.param("theta", fmt(opt.theta));
    r.param("trials", std::to_string(opt.trials));
    r.param("seed", std::to_string(opt.seed));
    if (opt.min_rate) r.param("min_rate", fmt(*opt.min_rate));
    r.param("substreams", "cylinder of trial t: t");

    std::vector<std::uint64_t> counts(opt.trials);
    parallel_for(static_cast<std::size_t>(opt.trials), opt.workers, [&](std::size_t t) {
        Rng rng(opt.seed, t);
        counts[t] = count_triangles(sample_cylinder(opt.l, opt.m, rng));
    });
    const double m3 = std::pow(static_cast<double>(opt.m), 3);
    const double expected = m3 / std::pow(static_cast<double>(opt.l), 3);
    std::uint64_t in_band = 0;
    std::uint64_t exact = 0;
    const std::uint64_t cube = static_cast<std::uint64_t>(opt.m) * static_cast<std::uint64_t>(opt.m) *
                               static_cast<std::uint64_t>(opt.m);
    for (std::uint64_t c : counts) {
        in_band += std::abs(static_cast<double>(c) - expected) <= opt.theta * expected;
        exact += c == cube;
    }
    const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    const double mean = std::accumulate(counts.begin(), counts.end(), 0.0) / static_cast<double>(counts.size());
    auto& t = r.table("summary", {"expected m^3/l^3", "mean", "min", "max", "in band"});
    t.rows.push_back({fmt(expected), fmt(mean), std::to_string(*lo), std::to_string(*hi),
                      std::to_string(in_band) + "/" + std::to_string(opt.trials)});
    rate_verdict(r, "triangle count within (1 +- theta) m^3/l^3", in_band, opt.trials, opt.min_rate);
    if (opt.l == 1) {
        r.verdict("l = 1 gives exactly m^3 triangles in every trial", exact == opt.trials,
                  std::to_string(exact) + "/" + std::to_string(opt.trials));
    }
    return r;
}

RunReport chernoff_empirical(const ChernoffOptions& opt) {
    if (opt.trials < 1000) throw std::domain_error("chernoff experiment needs at least 1000 trials");
    const double bound = chernoff_bound(opt.m, opt.p, opt.a);
    RunReport r("experiment chernoff");
    r.param("m", std::to_string(opt.m));
    r.param("p", fmt(opt.p));
    r.param("a", fmt(opt.a));
    r.param("trials", std::to_string(opt.trials));
    r.param("seed", std::to_string(opt.seed));
    constexpr std::uint64_t kBlock = 1000;
    r.param("substreams", "trials in blocks of 1000; block b: b");

    const std::uint64_t blocks = (opt.trials + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> hits(blocks, 0);
    const double cutoff = opt.p * static_cast<double>(opt.m) - opt.a;
    parallel_for(static_cast<std::size_t>(blocks), opt.workers, [&](std::size_t b) {
        Rng rng(opt.seed, b);
        const std::uint64_t end = std::min<std::uint64_t>(opt.trials, (b + 1) * kBlock);
        for (std::uint64_t t = b * kBlock; t < end; ++t) {
            long long x = 0;
            for (long long i = 0; i < opt.m; ++i) x += rng.bernoulli(opt.p);
            if (static_cast<double>(x) < cutoff) ++hits[b];
        }
    });
    const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    const double freq = static_cast<double>(total) / static_cast<double>(opt.trials);
    const double slack = 3.0 * std::sqrt(bound / static_cast<double>(opt.trials));
    auto& t = r.table("tail", {"events", "frequency", "bound exp(-a^2/(2pm))", "slack"});
    t.rows.push_back({std::to_string(total), fmt(freq), fmt(bound), fmt(slack)});
    r.verdict("empirical tail frequency <= bound + 3 sqrt(bound/trials)", freq <= bound + slack,
              fmt(freq) + " <= " + fmt(bound + slack));
    r.notes.push_back("the 3 sqrt(bound/trials) slack is a reporting convention");
    return r;
}

RunReport stability_probe(const std::vector<EnumRecord>& records, int n, double fraction) {
    if (n < 1 || n > kExtremalBound) throw UnsupportedSize("stability probe supports n <= " + std::to_string(kExtremalBound));
    if (!(fraction >= 0.0)) throw std::domain_error("fraction must be >= 0");
    RunReport r("experiment stability");
    r.param("n", std::to_string(n));
    r.param("fraction", fmt(fraction));
    const double n3 = std::pow(static_cast<double>(n), 3);
    const double min_edges = fraction * n3 / 27.0;
    std::map<std::size_t, std::pair<std::uint64_t, BigInt>> by_defect;
    std::size_t selected = 0;
    std::size_t max_defect = 0;
    auto& listing = r.table("systems", {"system", "edges", "aut", "D_H", "D_H/n^3"});
    for (const EnumRecord& rec : records) {
        if (!rec.flags.f5free) continue;
        if (static_cast<double>(rec.edge_count) < min_edges - 1e-9) continue;
        const TripleSystem h = rec.system();
        const std::size_t defect = optimal_partition(h).bad_count;
        ++selected;
        max_defect = std::max(max_defect, defect);
        auto& slot = by_defect[defect];
        ++slot.first;
        slot.second += factorial(n) / rec.aut_order();
        listing.rows.push_back({to_string(h), std::to_string(rec.edge_count), std::to_string(rec.aut_order()),
                                std::to_string(defect), fmt(static_cast<double>(defect) / n3)});
    }
    auto& hist = r.table("distribution", {"D_H", "classes", "labeled"});
    for (const auto& [defect, counts] : by_defect) {
        hist.rows.push_back({std::to_string(defect), std::to_string(counts.first), to_decimal(counts.second)});
    }
    r.observe("classes with at least fraction n^3/27 edges", std::to_string(selected) + " (threshold " + fmt(min_edges) + ")");
    r.observe("max D_H/n^3", fmt(static_cast<double>(max_defect) / n3));
    if (n < 5) r.notes.push_back("F5 has 5 vertices, so F5-freeness is vacuous for n < 5");
    r.notes.push_back("observational only; the stability statement is asymptotic");
    return r;
}

RunReport matching_experiment(int n, double p, std::uint64_t graphs, std::uint64_t seed) {
    RunReport r("experiment matching");
    r.param("n", std::to_string(n));
    r.param("p", fmt(p));
    r.param("graphs", std::to_string(graphs));
    r.param("seed", std::to_string(seed));
    r.param("substreams", "graph g: g");
    std::uint64_t bound_ok = 0;
    std::uint64_t maximal = 0;
    for (std::uint64_t g = 0; g < graphs; ++g) {
        Rng rng(seed, g);
        const SimpleGraph graph = sample_gnp(n, p, rng);
        const auto m = greedy_matching(graph);
        bound_ok += 2 * static_cast<std::size_t>(n) * m.size() >= graph.size();
        maximal += is_maximal_matching(graph, m);
    }
    r.verdict("|M| >= |G|/(2n) on every graph", bound_ok == graphs, std::to_string(bound_ok) + "/" + std::to_string(graphs));
    r.verdict("greedy matching is maximal on every graph", maximal == graphs,
              std::to_string(maximal) + "/" + std::to_string(graphs));
    return r;
}

} // namespace tripart
