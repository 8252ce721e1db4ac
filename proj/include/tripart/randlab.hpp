#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripart/enumerate.hpp"
#include "tripart/partition.hpp"
#include "tripart/report.hpp"
#include "tripart/simple_graph.hpp"
#include "tripart/triple_system.hpp"

namespace tripart {

struct PlantedSample {
    TripleSystem system;
    Partition3 planted;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

/// Parts {0..a-1}, {a..a+b-1}, {a+b..n-1} with sizes (⌊(n+2)/3⌋, ⌊(n+1)/3⌋, ⌊n/3⌋);
/// each crossing triple is kept with probability p, drawn in colex order of
/// (x in part 0, y in part 1, z in part 2) from Rng(seed, stream).
PlantedSample sample_planted(int n, double p, std::uint64_t seed, std::uint64_t stream = 0);

enum class AuditMode { Exact, Sampled };
std::string to_string(AuditMode m);
AuditMode parse_audit_mode(const std::string& s);

enum class ConditionStatus { Verified, Refuted, SampledPass, Vacuous };
std::string to_string(ConditionStatus s);

/// Sets that violate one density condition. `roles` lists the part indices in
/// the order the condition names them: (1,2,3) for (i); (i, j, l) for (ii)
/// and (iii); the offending part first for (iv).
struct DensityWitness {
    int condition = 0;
    std::array<int, 3> roles{0, 1, 2};
    std::vector<std::vector<Vertex>> sets;
    std::vector<Edge2> pairs;
    std::uint64_t count = 0;
};

struct ConditionResult {
    ConditionStatus status = ConditionStatus::Vacuous;
    AuditMode mode = AuditMode::Sampled;
    std::uint64_t trials = 0;
    std::uint64_t refutations = 0;
    std::optional<DensityWitness> witness;
    std::string note;
};

struct DensityAudit {
    double mu = 0.0;
    AuditMode mode = AuditMode::Sampled;
    std::array<ConditionResult, 4> conditions;

    bool refuted() const;
};

/// Minimum |A_i| (= ⌈μn⌉, at least 1) and minimum |G| for (ii) (= ⌈μ²n²⌉).
std::size_t density_min_set(double mu, int n);
std::size_t density_min_pairs(double mu, int n);

/// Largest |P| + |Q| (the two smallest parts) for which exact mode enumerates
/// every A_P, A_Q; A_R is then chosen optimally.
inline constexpr int kExactDensityBits = 24;

/// Audits the four lower-density conditions of partition p of h.
/// (iv) is exact. (i) is exact in Exact mode, otherwise sampled. (ii) and (iii)
/// are refutation-sampled, `trials` draws each: random A sets with the
/// cheapest G for (ii), and random, maximal and greedy-cheap matchings for (iii).
/// Results do not depend on `workers`.
DensityAudit density_audit(const TripleSystem& h, const Partition3& p, double mu, AuditMode mode,
                           std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);
DensityAudit density_audit(const PlantedSample& sample, double mu, AuditMode mode, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers = 1);

/// Recomputes the violated inequality for a witness from scratch.
bool witness_refutes(const TripleSystem& h, const Partition3& p, double mu, const DensityWitness& w);

struct BadVertexViolation {
    Vertex vertex = 0;
    /// "L11", "L12", "L22", "L13" or "L33" with the vertex's own part as 1.
    std::string link_class;
    std::size_t count = 0;
};

/// Flags link classes with |L| >= 2μn². Part 2 is the part after the vertex's own (cyclically).
std::vector<BadVertexViolation> bad_vertex_audit(const TripleSystem& h, const Partition3& p, double mu);

struct UniquePartitionOptions {
    int n = 60;
    double p = 0.5;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    /// Random A_i draws per trial for condition (ii), each tested against every v.
    std::uint64_t samples = 10;
    /// When set, the per-trial rates become pass/fail verdicts.
    std::optional<double> min_rate;
    unsigned workers = 1;
};

RunReport unique_partition_experiment(const UniquePartitionOptions& opt);

struct TriangleOptions {
    int l = 2;
    int m = 200;
    double theta = 0.1;
    std::uint64_t trials = 100;
    std::uint64_t seed = 1;
    std::optional<double> min_rate;
    unsigned workers = 1;
};

RunReport triangle_experiment(const TriangleOptions& opt);

struct ChernoffOptions {
    long long m = 100;
    double p = 0.5;
    double a = 10.0;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

RunReport chernoff_empirical(const ChernoffOptions& opt);

struct DensityOptions {
    int n = 45;
    double p = 0.5;
    double mu = 0.1;
    AuditMode mode = AuditMode::Sampled;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

RunReport density_experiment(const DensityOptions& opt);

/// Observational: D_H over the F5-free classes with at least fraction·n³/27 edges.
RunReport stability_probe(const std::vector<EnumRecord>& f5free_records, int n, double fraction);

/// Trials of greedy_matching on G(n, p) against the |G|/(2n) bound.
RunReport matching_experiment(int n, double p, std::uint64_t graphs, std::uint64_t seed);

} // namespace tripart
