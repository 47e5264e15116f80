#ifndef PARTLOG_UNION_FIND_HPP
#define PARTLOG_UNION_FIND_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace partlog {

// Disjoint-set forest with path halving and union by size. One engine serves
// both connected components and RST closure.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    bool same(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

    // Restricted-growth labels: classes numbered by first appearance.
    std::vector<std::uint32_t> to_rgs() {
        std::vector<std::uint32_t> label(parent_.size(), UINT32_MAX);
        std::vector<std::uint32_t> rgs(parent_.size());
        std::uint32_t next = 0;
        for (std::uint32_t u = 0; u < parent_.size(); ++u) {
            std::uint32_t root = find(u);
            if (label[root] == UINT32_MAX)
                label[root] = next++;
            rgs[u] = label[root];
        }
        return rgs;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace partlog

#endif
