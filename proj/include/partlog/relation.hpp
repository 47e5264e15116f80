#ifndef PARTLOG_RELATION_HPP
#define PARTLOG_RELATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "partlog/partition.hpp"
#include "partlog/universe.hpp"

namespace partlog {

// A set of ordered pairs over a universe, stored as a dense n-by-n grid.
// The universes here are small by design; closure and interior are sweeps.
class BinaryRelation {
public:
    explicit BinaryRelation(UniversePtr universe);

    static BinaryRelation full(const UniversePtr& u);
    static BinaryRelation diagonal(const UniversePtr& u);

    const UniversePtr& universe() const { return universe_; }
    std::size_t n() const { return n_; }

    bool contains(std::uint32_t a, std::uint32_t b) const { return grid_[a * n_ + b] != 0; }
    void add(std::uint32_t a, std::uint32_t b);
    void add_symmetric(std::uint32_t a, std::uint32_t b);

    std::size_t pair_count() const;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool is_equivalence() const { return is_reflexive() && is_symmetric() && is_transitive(); }

    friend bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
        return same_universe(a.universe_, b.universe_) && a.grid_ == b.grid_;
    }
    friend bool operator!=(const BinaryRelation& a, const BinaryRelation& b) { return !(a == b); }

private:
    UniversePtr universe_;
    std::size_t n_;
    std::vector<std::uint8_t> grid_;

    friend BinaryRelation relation_union(const BinaryRelation&, const BinaryRelation&);
    friend BinaryRelation relation_intersection(const BinaryRelation&, const BinaryRelation&);
    friend BinaryRelation relation_complement(const BinaryRelation&);
};

BinaryRelation relation_union(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation relation_intersection(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation relation_complement(const BinaryRelation& a);
bool relation_subset(const BinaryRelation& a, const BinaryRelation& b);

// Equivalence relation of a partition: pairs in the same block.
BinaryRelation indit(const Partition& p);
// Complement of indit within UxU: pairs in different blocks.
BinaryRelation dit(const Partition& p);

// Smallest equivalence relation containing r.
BinaryRelation rst_closure(const BinaryRelation& r);
// Complement of the closure of the complement; always an open set (a ditset).
BinaryRelation interior(const BinaryRelation& r);

// Partition whose indit set is r. Throws Error if r is not an equivalence.
Partition partition_from_equivalence(const BinaryRelation& r);

}  // namespace partlog

#endif
