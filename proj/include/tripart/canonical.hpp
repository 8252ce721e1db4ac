#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tripart/triple_system.hpp"

namespace tripart {

inline constexpr int kDefaultCanonicalBound = 10;
inline constexpr int kHardCanonicalBound = 12;

/// Relabeling-invariant key of a triple system plus its automorphism group order.
///
/// The key is the slot bit string (colex rank order) of the relabeled system,
/// minimized lexicographically over all relabelings that list vertices in
/// nondecreasing degree order. Degree is isomorphism-invariant, so equal keys
/// still mean isomorphic systems.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> key;
    std::uint64_t aut_order = 1;

    /// The canonical representative itself.
    TripleSystem system() const { return TripleSystem::from_slot_words(n, key); }

    friend bool operator==(const CanonicalForm& x, const CanonicalForm& y) {
        return x.n == y.n && x.key == y.key;
    }
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// vertex -> canonical position; applying it to the input yields form.system().
    std::vector<Vertex> labeling;
    /// Every automorphism as a vertex map (filled only when requested).
    std::vector<std::vector<Vertex>> automorphisms;
};

/// Throws UnsupportedSize if h.order() > max_n.
CanonicalForm canonical_form(const TripleSystem& h, int max_n = kDefaultCanonicalBound);

CanonicalLabeling canonical_labeling(const TripleSystem& h, bool collect_automorphisms,
                                     int max_n = kDefaultCanonicalBound);

bool is_isomorphic(const TripleSystem& a, const TripleSystem& b);

/// n! / |Aut(h)|: the number of distinct labeled copies of h on its vertex set.
std::uint64_t labeled_count(const TripleSystem& h);

std::uint64_t factorial(int n);

/// Stable textual key, e.g. "5:0x...".
std::string key_string(const CanonicalForm& f);

} // namespace tripart
