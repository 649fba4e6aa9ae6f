#include "mop/multi_index.hpp"

namespace mop {

unsigned MultiIndex::total() const {
    unsigned t = 0;
    for (unsigned v : n_) t += v;
    return t;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < n_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n_[i]);
    }
    return s + ")";
}

namespace {
void compositions(std::size_t p, unsigned remaining, std::vector<unsigned>& cur,
                  std::vector<MultiIndex>& out) {
    if (cur.size() + 1 == p) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
        cur.push_back(v);
        compositions(p, remaining - v, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<MultiIndex> MultiIndex::lattice(std::size_t p, unsigned max_total) {
    std::vector<MultiIndex> out;
    std::vector<unsigned> cur;
    for (unsigned total = 1; total <= max_total; ++total) compositions(p, total, cur, out);
    return out;
}

} // namespace mop
