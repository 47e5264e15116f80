#include "partlog/relation.hpp"

#include <algorithm>

#include "partlog/errors.hpp"
#include "partlog/union_find.hpp"

namespace partlog {

namespace {

void check_same_universe(const BinaryRelation& a, const BinaryRelation& b, const char* what) {
    if (!same_universe(a.universe(), b.universe()))
        throw UniverseMismatchError(std::string(what) + ": relations live on different universes");
}

}  // namespace

BinaryRelation::BinaryRelation(UniversePtr universe)
    : universe_(std::move(universe)), n_(universe_ ? universe_->size() : 0), grid_(n_ * n_, 0) {
    if (!universe_)
        throw Error("relation needs a universe");
}

BinaryRelation BinaryRelation::full(const UniversePtr& u) {
    BinaryRelation r(u);
    std::fill(r.grid_.begin(), r.grid_.end(), 1);
    return r;
}

BinaryRelation BinaryRelation::diagonal(const UniversePtr& u) {
    BinaryRelation r(u);
    for (std::size_t i = 0; i < r.n_; ++i)
        r.grid_[i * r.n_ + i] = 1;
    return r;
}

void BinaryRelation::add(std::uint32_t a, std::uint32_t b) {
    if (a >= n_ || b >= n_)
        throw IndexError("pair coordinate outside universe");
    grid_[a * n_ + b] = 1;
}

void BinaryRelation::add_symmetric(std::uint32_t a, std::uint32_t b) {
    add(a, b);
    add(b, a);
}

std::size_t BinaryRelation::pair_count() const {
    std::size_t c = 0;
    for (std::uint8_t v : grid_)
        c += v;
    return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BinaryRelation::pairs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = 0; b < n_; ++b)
            if (contains(a, b))
                out.emplace_back(a, b);
    return out;
}

bool BinaryRelation::is_reflexive() const {
    for (std::uint32_t a = 0; a < n_; ++a)
        if (!contains(a, a))
            return false;
    return true;
}

bool BinaryRelation::is_symmetric() const {
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = a + 1; b < n_; ++b)
            if (contains(a, b) != contains(b, a))
                return false;
    return true;
}

bool BinaryRelation::is_transitive() const {
    for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = 0; b < n_; ++b) {
            if (!contains(a, b))
                continue;
            for (std::uint32_t c = 0; c < n_; ++c)
                if (contains(b, c) && !contains(a, c))
                    return false;
        }
    return true;
}

BinaryRelation relation_union(const BinaryRelation& a, const BinaryRelation& b) {
    check_same_universe(a, b, "union");
    BinaryRelation out(a.universe_);
    for (std::size_t i = 0; i < out.grid_.size(); ++i)
        out.grid_[i] = a.grid_[i] | b.grid_[i];
    return out;
}

BinaryRelation relation_intersection(const BinaryRelation& a, const BinaryRelation& b) {
    check_same_universe(a, b, "intersection");
    BinaryRelation out(a.universe_);
    for (std::size_t i = 0; i < out.grid_.size(); ++i)
        out.grid_[i] = a.grid_[i] & b.grid_[i];
    return out;
}

BinaryRelation relation_complement(const BinaryRelation& a) {
    BinaryRelation out(a.universe_);
    for (std::size_t i = 0; i < out.grid_.size(); ++i)
        out.grid_[i] = a.grid_[i] ? 0 : 1;
    return out;
}

bool relation_subset(const BinaryRelation& a, const BinaryRelation& b) {
    check_same_universe(a, b, "subset");
    const std::size_t n = a.n();
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (a.contains(x, y) && !b.contains(x, y))
                return false;
    return true;
}

BinaryRelation indit(const Partition& p) {
    BinaryRelation r(p.universe());
    const auto& rgs = p.rgs();
    const std::size_t n = rgs.size();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (rgs[a] == rgs[b])
                r.add(a, b);
    return r;
}

BinaryRelation dit(const Partition& p) {
    BinaryRelation r(p.universe());
    const auto& rgs = p.rgs();
    const std::size_t n = rgs.size();
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (rgs[a] != rgs[b])
                r.add(a, b);
    return r;
}

BinaryRelation rst_closure(const BinaryRelation& r) {
    const std::size_t n = r.n();
    UnionFind uf(n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (r.contains(a, b))
                uf.unite(a, b);
    BinaryRelation out(r.universe());
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (uf.same(a, b))
                out.add(a, b);
    return out;
}

BinaryRelation interior(const BinaryRelation& r) {
    return relation_complement(rst_closure(relation_complement(r)));
}

Partition partition_from_equivalence(const BinaryRelation& r) {
    if (!r.is_equivalence())
        throw Error("relation is not an equivalence relation");
    const std::size_t n = r.n();
    std::vector<std::uint32_t> rgs(n, 0);
    std::uint32_t next = 0;
    for (std::uint32_t u = 0; u < n; ++u) {
        bool found = false;
        for (std::uint32_t v = 0; v < u; ++v) {
            if (r.contains(v, u)) {
                rgs[u] = rgs[v];
                found = true;
                break;
            }
        }
        if (!found)
            rgs[u] = next++;
    }
    return Partition(r.universe(), std::move(rgs));
}

}  // namespace partlog
