#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "pqrr/types.hpp"

namespace pqrr {

/// Bounded selector for the k smallest (dist, id) pairs seen in a stream.
/// Backed by a max-heap of size at most k: O(log k) per accepted candidate,
/// O(1) per rejected one.
class TopK {
  public:
    explicit TopK(std::size_t k) : cap_(k) { heap_.reserve(k); }

    void push(std::uint32_t id, float dist) {
        Neighbor cand{id, dist};
        if (heap_.size() < cap_) {
            heap_.push_back(cand);
            std::push_heap(heap_.begin(), heap_.end(), neighbor_less);
            return;
        }
        if (cap_ == 0 || !neighbor_less(cand, heap_.front())) return;
        std::pop_heap(heap_.begin(), heap_.end(), neighbor_less);
        heap_.back() = cand;
        std::push_heap(heap_.begin(), heap_.end(), neighbor_less);
    }

    bool full() const { return heap_.size() == cap_; }

    /// Current worst kept entry; only meaningful when full().
    const Neighbor& worst() const { return heap_.front(); }

    std::size_t size() const { return heap_.size(); }

    /// Consumes the selector, returning entries ascending under (dist, id).
    SearchResult take_sorted() {
        std::sort_heap(heap_.begin(), heap_.end(), neighbor_less);
        SearchResult r;
        r.entries = std::move(heap_);
        return r;
    }

    /// Unordered view of the kept entries (used by the parallel merge).
    const std::vector<Neighbor>& raw() const { return heap_; }

  private:
    std::size_t cap_;
    std::vector<Neighbor> heap_;
};

}  // namespace pqrr
