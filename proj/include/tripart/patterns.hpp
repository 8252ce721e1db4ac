#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripart/triple_system.hpp"

namespace tripart {

enum class PatternKind { F5, K4Minus, CancellationViolation, ForcedPair };

std::string to_string(PatternKind kind);

/// A located copy of a forbidden configuration.
///
/// F5 / ForcedPair: edges = {uvx, uvy, xyz}, `pair` = (u,v), `apexes` = (x,y),
/// `extra` = z. K4Minus: three edges on four vertices.
/// CancellationViolation: edges = {A, B, C} with A∪B = A∪C and B ≠ C.
struct PatternHit {
    PatternKind kind = PatternKind::F5;
    std::vector<Triple> edges;
    std::optional<std::pair<Vertex, Vertex>> pair;
    std::optional<std::pair<Vertex, Vertex>> apexes;
    std::optional<Vertex> extra;
};

std::optional<PatternHit> find_f5(const TripleSystem& h);
std::optional<PatternHit> find_k4minus(const TripleSystem& h);

bool is_f5_free(const TripleSystem& h);
bool is_k4minus_free(const TripleSystem& h);

/// Direct check of the definition: no distinct edges A, B, C with A∪B = A∪C.
/// Deliberately does not use the pattern detectors.
bool is_cancellative(const TripleSystem& h);
std::optional<PatternHit> find_cancellation_violation(const TripleSystem& h);

/// Looks for a pair (u,v) disjoint from e = {x,y,z} with both xuv and yuv in h,
/// trying (x,y) over the three pairs of e in order (a,b), (a,c), (b,c).
/// Throws ContractViolation when e is not an edge of h.
std::optional<PatternHit> forced_pair_violation(const TripleSystem& h, const Triple& e);

/// Any F5 copy using e in either role (the apex edge or one of the pair edges).
/// Precondition: e is recorded in `links`.
bool f5_through(const PairLinks& links, const Triple& e);
/// Any K4⁻ copy using e. Precondition: e is recorded in `links`.
bool k4minus_through(const PairLinks& links, const Triple& e);

/// Shape predicates on three edges, independent of any detector.
bool is_f5_shape(const Triple& e1, const Triple& e2, const Triple& e3);
bool is_k4minus_shape(const Triple& e1, const Triple& e2, const Triple& e3);

/// Re-validates a hit against h: witness edges present and the shape holds.
bool witness_is_valid(const TripleSystem& h, const PatternHit& hit);

} // namespace tripart
