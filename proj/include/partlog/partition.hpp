#ifndef PARTLOG_PARTITION_HPP
#define PARTLOG_PARTITION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "partlog/universe.hpp"

namespace partlog {

// A set partition in restricted-growth form: rgs[0] == 0 and every entry is
// at most 1 + max of the earlier entries. Blocks are numbered by first
// appearance, so block order is order of least element. The form is the
// canonical representative: two partitions are equal iff their rgs agree.
class Partition {
public:
    Partition(UniversePtr universe, std::vector<std::uint32_t> rgs);

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return rgs_.size(); }
    const std::vector<std::uint32_t>& rgs() const { return rgs_; }
    std::uint32_t block_of(std::size_t element) const { return rgs_[element]; }
    std::size_t block_count() const { return block_count_; }
    std::vector<std::vector<std::uint32_t>> blocks() const;

    bool is_discrete() const { return block_count_ == size(); }  // the top 1
    bool is_indiscrete() const { return block_count_ == 1; }     // the bottom 0

    // rgs bytes, usable as a canonical map key on a fixed universe.
    std::string key() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return same_universe(a.universe_, b.universe_) && a.rgs_ == b.rgs_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.rgs_ < b.rgs_;
    }

private:
    UniversePtr universe_;
    std::vector<std::uint32_t> rgs_;
    std::size_t block_count_;
};

Partition discrete_partition(const UniversePtr& u);    // 1: all singletons
Partition indiscrete_partition(const UniversePtr& u);  // 0: a single block

// Canonical partition from explicit blocks of element indices.
// Throws OverlapError / EmptyBlockError / CoverageError / IndexError.
Partition partition_from_blocks(const UniversePtr& u,
                                const std::vector<std::vector<std::uint32_t>>& blocks);

// Connected components of the undirected graph (U, links). Elements with no
// incident link form singleton blocks.
Partition components(const UniversePtr& u,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& links);

// sigma precedes pi in the refinement order: every block of pi lies inside a
// block of sigma, equivalently dit(sigma) is a subset of dit(pi).
bool refines(const Partition& sigma, const Partition& pi);

// When enabled, refines() computes both the block-containment and the
// ditset-inclusion route and throws std::logic_error if they disagree.
void set_debug_order_checks(bool on);
bool debug_order_checks_enabled();

}  // namespace partlog

#endif
