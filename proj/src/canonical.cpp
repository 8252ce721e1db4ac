#include "tripart/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <limits>

#include "tripart/errors.hpp"

namespace tripart {
namespace {

// Depth-first search over vertex orderings. Position k is filled last among
// the triples whose largest position is k, so the block of key bits with
// ranks [C(k,3), C(k+1,3)) is final as soon as position k is assigned; the
// search compares that block against the incumbent and prunes when worse.
class CanonicalSearch {
public:
    CanonicalSearch(const TripleSystem& h, bool collect)
        : h_(h), links_(h), n_(h.order()), collect_(collect), degree_(h.degrees()),
          order_(static_cast<std::size_t>(n_)), blocks_(static_cast<std::size_t>(n_), 0),
          best_blocks_(static_cast<std::size_t>(n_), 0) {}

    void run() {
        if (n_ == 0) {
            have_best_ = true;
            best_count_ = 1;
            if (collect_) best_orders_.push_back({});
            return;
        }
        descend(0, 0, /*less=*/false);
    }

    CanonicalLabeling result() {
        CanonicalLabeling out;
        out.form.n = n_;
        out.form.key.assign((triple_slots(n_) + 63) / 64, 0);
        std::size_t rank = 0;
        for (int k = 0; k < n_; ++k) {
            const std::size_t len = k < 2 ? 0 : static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1) / 2;
            const std::uint64_t block = best_blocks_[static_cast<std::size_t>(k)];
            for (std::size_t i = 0; i < len; ++i) {
                if ((block >> i) & 1U) out.form.key[(rank + i) >> 6] |= std::uint64_t{1} << ((rank + i) & 63);
            }
            rank += len;
        }
        out.form.aut_order = best_count_;
        out.labeling.assign(static_cast<std::size_t>(n_), 0);
        for (int pos = 0; pos < n_; ++pos) out.labeling[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(pos)])] = pos;
        if (collect_) {
            for (const auto& ord : best_orders_) {
                // alpha = best_order o inverse(ord): maps h onto itself.
                std::vector<Vertex> alpha(static_cast<std::size_t>(n_));
                for (int pos = 0; pos < n_; ++pos) {
                    alpha[static_cast<std::size_t>(ord[static_cast<std::size_t>(pos)])] = best_order_[static_cast<std::size_t>(pos)];
                }
                out.automorphisms.push_back(std::move(alpha));
            }
        }
        return out;
    }

private:
    void descend(int k, std::uint64_t used, bool less) {
        if (k == n_) {
            leaf(less);
            return;
        }
        int min_deg = std::numeric_limits<int>::max();
        for (Vertex v = 0; v < n_; ++v) {
            if (!(used & vertex_bit(v))) min_deg = std::min(min_deg, degree_[static_cast<std::size_t>(v)]);
        }
        for (Vertex v = 0; v < n_; ++v) {
            if ((used & vertex_bit(v)) || degree_[static_cast<std::size_t>(v)] != min_deg) continue;
            order_[static_cast<std::size_t>(k)] = v;
            std::uint64_t block = 0;
            std::size_t idx = 0;
            for (int j = 1; j < k; ++j) {
                for (int i = 0; i < j; ++i, ++idx) {
                    if (links_(order_[static_cast<std::size_t>(i)], order_[static_cast<std::size_t>(j)]) & vertex_bit(v)) {
                        block |= std::uint64_t{1} << idx;
                    }
                }
            }
            blocks_[static_cast<std::size_t>(k)] = block;
            bool child_less = less;
            if (have_best_ && !less) {
                const std::uint64_t diff = block ^ best_blocks_[static_cast<std::size_t>(k)];
                if (diff != 0) {
                    const bool ours_zero = ((block >> std::countr_zero(diff)) & 1U) == 0;
                    if (!ours_zero) continue;
                    child_less = true;
                }
            }
            const std::uint64_t version = best_version_;
            descend(k + 1, used | vertex_bit(v), child_less);
            // A new incumbent found below shares this node's prefix.
            if (best_version_ != version) less = false;
        }
    }

    void leaf(bool less) {
        if (!have_best_ || less) {
            have_best_ = true;
            best_blocks_ = blocks_;
            best_order_ = order_;
            best_count_ = 1;
            ++best_version_;
            best_orders_.clear();
            if (collect_) best_orders_.push_back(order_);
        } else {
            ++best_count_;
            if (collect_) best_orders_.push_back(order_);
        }
    }

    const TripleSystem& h_;
    PairLinks links_;
    int n_;
    bool collect_;
    std::vector<int> degree_;
    std::vector<Vertex> order_;
    std::vector<std::uint64_t> blocks_;
    std::vector<std::uint64_t> best_blocks_;
    std::vector<Vertex> best_order_;
    std::vector<std::vector<Vertex>> best_orders_;
    std::uint64_t best_count_ = 0;
    std::uint64_t best_version_ = 0;
    bool have_best_ = false;
};

void check_bound(const TripleSystem& h, int max_n) {
    const int bound = std::min(max_n, kHardCanonicalBound);
    if (h.order() > bound) {
        throw UnsupportedSize("canonicalization supports n <= " + std::to_string(bound) + ", got n = " +
                              std::to_string(h.order()));
    }
}

} // namespace

CanonicalLabeling canonical_labeling(const TripleSystem& h, bool collect_automorphisms, int max_n) {
    check_bound(h, max_n);
    CanonicalSearch search(h, collect_automorphisms);
    search.run();
    return search.result();
}

CanonicalForm canonical_form(const TripleSystem& h, int max_n) {
    return canonical_labeling(h, false, max_n).form;
}

bool is_isomorphic(const TripleSystem& a, const TripleSystem& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a, kHardCanonicalBound) == canonical_form(b, kHardCanonicalBound);
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t labeled_count(const TripleSystem& h) {
    return factorial(h.order()) / canonical_form(h, kHardCanonicalBound).aut_order;
}

std::string key_string(const CanonicalForm& f) {
    std::string s = std::to_string(f.n) + ":";
    char buf[17];
    for (auto it = f.key.rbegin(); it != f.key.rend(); ++it) {
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(*it));
        s += buf;
    }
    return s;
}

} // namespace tripart
