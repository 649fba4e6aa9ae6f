#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mop {

/// Multi-index (n_1, ..., n_p) of nonnegative integers.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<unsigned> entries) : n_(std::move(entries)) {}

    std::size_t p() const { return n_.size(); }
    unsigned operator[](std::size_t i) const { return n_[i]; }
    unsigned total() const;
    const std::vector<unsigned>& entries() const { return n_; }

    std::string str() const; // "(1,2,0)"

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.n_ == b.n_; }

    /// All indices with 1 <= |n| <= max_total, ordered by total, then
    /// lexicographically.
    static std::vector<MultiIndex> lattice(std::size_t p, unsigned max_total);

private:
    std::vector<unsigned> n_;
};

} // namespace mop
