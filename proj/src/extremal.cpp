#include <bit>

#include "tripart/enumerate.hpp"
#include "tripart/errors.hpp"
#include "tripart/patterns.hpp"

namespace tripart {
namespace {

class ExtremalSearch {
public:
    ExtremalSearch(int n, Predicate p, std::uint64_t budget)
        : n_(n), pred_(p), budget_(budget), slots_(triple_slots(n)), links_(n), chosen_(slots_, false) {}

    ExtremalResult run() {
        if (slots_ > 0) {
            // Every nonempty system has a copy containing the first triple.
            take(0);
            descend(1, 1);
            drop(0);
        }
        ExtremalResult r;
        r.value = static_cast<int>(best_);
        std::vector<Triple> edges;
        for (std::size_t s = 0; s < slots_; ++s) {
            if (best_set_.size() > s && best_set_[s]) edges.push_back(triple_unrank(s));
        }
        r.witness = TripleSystem(n_, edges);
        r.nodes = nodes_;
        return r;
    }

private:
    bool admissible(const Triple& t) const {
        switch (pred_) {
        case Predicate::All: return true;
        case Predicate::F5Free: return !f5_through(links_, t);
        case Predicate::K4MinusFree: return !k4minus_through(links_, t);
        case Predicate::Cancellative: return !k4minus_through(links_, t) && !f5_through(links_, t);
        case Predicate::Tripartite: break;
        }
        return false;
    }

    void take(std::size_t s) {
        links_.add(triple_unrank(s));
        chosen_[s] = true;
    }
    void drop(std::size_t s) {
        links_.remove(triple_unrank(s));
        chosen_[s] = false;
    }

    void descend(std::size_t slot, std::size_t count) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("extremal search node budget exhausted", static_cast<long long>(best_));
        }
        if (count + (slots_ - slot) <= best_) return;
        if (slot == slots_) {
            best_ = count;
            best_set_ = chosen_;
            return;
        }
        const Triple t = triple_unrank(slot);
        take(slot);
        if (admissible(t)) descend(slot + 1, count + 1);
        drop(slot);
        descend(slot + 1, count);
    }

    int n_;
    Predicate pred_;
    std::uint64_t budget_;
    std::size_t slots_;
    PairLinks links_;
    std::vector<bool> chosen_;
    std::vector<bool> best_set_;
    std::size_t best_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

ExtremalResult extremal_search(int n, Predicate p, std::uint64_t node_budget) {
    if (n < 0 || n > kExtremalBound) {
        throw UnsupportedSize("extremal_number supports n <= " + std::to_string(kExtremalBound));
    }
    if (p == Predicate::Tripartite) {
        throw ContractViolation("extremal search has no incremental check for 'tripartite'; use s(n)");
    }
    return ExtremalSearch(n, p, node_budget).run();
}

int extremal_number(int n, Predicate p) { return extremal_search(n, p).value; }

} // namespace tripart
