#ifndef MCST_DSU_HPP
#define MCST_DSU_HPP

#include <cstddef>
#include <numeric>
#include <vector>

namespace mcst {

/// Union-find with union by size and an undo stack (no path compression, so
/// unite() is reversible for backtracking enumerations).
class Dsu {
  public:
    explicit Dsu(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    // Returns false (and records nothing) when both ends are already joined.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        trail_.push_back(b);
        --components_;
        return true;
    }

    void undo() {
        std::size_t b = trail_.back();
        trail_.pop_back();
        std::size_t a = parent_[b];
        parent_[b] = b;
        size_[a] -= size_[b];
        ++components_;
    }

    std::size_t components() const { return components_; }
    std::size_t mark() const { return trail_.size(); }
    void rollback(std::size_t mark) {
        while (trail_.size() > mark) undo();
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> trail_;
    std::size_t components_;
};

}  // namespace mcst

#endif
