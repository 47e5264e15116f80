#include "partlog/partition.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

#include "partlog/errors.hpp"
#include "partlog/union_find.hpp"

namespace partlog {

namespace {

std::atomic<bool> g_debug_order_checks{false};

void check_rgs(const std::vector<std::uint32_t>& rgs) {
    if (rgs.empty())
        throw Error("partition needs at least one element");
    if (rgs[0] != 0)
        throw Error("restricted-growth sequence must start at 0");
    std::uint32_t max_seen = 0;
    for (std::size_t i = 1; i < rgs.size(); ++i) {
        if (rgs[i] > max_seen + 1)
            throw Error("not a restricted-growth sequence at index " + std::to_string(i));
        if (rgs[i] > max_seen)
            max_seen = rgs[i];
    }
}

bool refines_by_blocks(const Partition& sigma, const Partition& pi) {
    // Every block of pi must sit inside one sigma block: all elements of a
    // pi block share their sigma block.
    std::vector<std::int64_t> first_of_block(pi.block_count(), -1);
    const auto& prgs = pi.rgs();
    const auto& srgs = sigma.rgs();
    for (std::size_t u = 0; u < prgs.size(); ++u) {
        std::uint32_t b = prgs[u];
        if (first_of_block[b] < 0)
            first_of_block[b] = static_cast<std::int64_t>(u);
        else if (srgs[u] != srgs[static_cast<std::size_t>(first_of_block[b])])
            return false;
    }
    return true;
}

bool refines_by_ditsets(const Partition& sigma, const Partition& pi) {
    // dit(sigma) subset of dit(pi), i.e. indit(pi) subset of indit(sigma).
    const auto& prgs = pi.rgs();
    const auto& srgs = sigma.rgs();
    const std::size_t n = prgs.size();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (prgs[u] == prgs[v] && srgs[u] != srgs[v])
                return false;
    return true;
}

}  // namespace

Partition::Partition(UniversePtr universe, std::vector<std::uint32_t> rgs)
    : universe_(std::move(universe)), rgs_(std::move(rgs)) {
    if (!universe_)
        throw Error("partition needs a universe");
    if (rgs_.size() != universe_->size())
        throw Error("restricted-growth sequence length does not match the universe");
    check_rgs(rgs_);
    std::uint32_t max_seen = 0;
    for (std::uint32_t v : rgs_)
        if (v > max_seen)
            max_seen = v;
    block_count_ = max_seen + 1;
}

std::vector<std::vector<std::uint32_t>> Partition::blocks() const {
    std::vector<std::vector<std::uint32_t>> out(block_count_);
    for (std::uint32_t u = 0; u < rgs_.size(); ++u)
        out[rgs_[u]].push_back(u);
    return out;
}

std::string Partition::key() const {
    std::string k;
    k.reserve(rgs_.size());
    for (std::uint32_t v : rgs_)
        k.push_back(static_cast<char>(v));
    return k;
}

Partition discrete_partition(const UniversePtr& u) {
    std::vector<std::uint32_t> rgs(u->size());
    for (std::uint32_t i = 0; i < rgs.size(); ++i)
        rgs[i] = i;
    return Partition(u, std::move(rgs));
}

Partition indiscrete_partition(const UniversePtr& u) {
    return Partition(u, std::vector<std::uint32_t>(u->size(), 0));
}

Partition partition_from_blocks(const UniversePtr& u,
                                const std::vector<std::vector<std::uint32_t>>& blocks) {
    const std::size_t n = u->size();
    std::vector<std::int64_t> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw EmptyBlockError("block " + std::to_string(b) + " is empty");
        for (std::uint32_t e : blocks[b]) {
            if (e >= n)
                throw IndexError("element index " + std::to_string(e) + " outside universe");
            if (owner[e] >= 0)
                throw OverlapError("element '" + u->name(e) + "' appears in two blocks");
            owner[e] = static_cast<std::int64_t>(b);
        }
    }
    for (std::size_t e = 0; e < n; ++e)
        if (owner[e] < 0)
            throw CoverageError("element '" + u->name(e) + "' is covered by no block");

    // Canonical numbering: blocks by first appearance along the element order.
    std::vector<std::int64_t> label(blocks.size(), -1);
    std::vector<std::uint32_t> rgs(n);
    std::uint32_t next = 0;
    for (std::size_t e = 0; e < n; ++e) {
        std::int64_t b = owner[e];
        if (label[static_cast<std::size_t>(b)] < 0)
            label[static_cast<std::size_t>(b)] = next++;
        rgs[e] = static_cast<std::uint32_t>(label[static_cast<std::size_t>(b)]);
    }
    return Partition(u, std::move(rgs));
}

Partition components(const UniversePtr& u,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& links) {
    const std::size_t n = u->size();
    UnionFind uf(n);
    for (const auto& [a, b] : links) {
        if (a >= n || b >= n)
            throw IndexError("link endpoint outside universe");
        uf.unite(a, b);
    }
    return Partition(u, uf.to_rgs());
}

bool refines(const Partition& sigma, const Partition& pi) {
    if (!same_universe(sigma.universe(), pi.universe()))
        throw UniverseMismatchError("refines: partitions live on different universes");
    bool by_blocks = refines_by_blocks(sigma, pi);
    if (g_debug_order_checks.load(std::memory_order_relaxed)) {
        bool by_dits = refines_by_ditsets(sigma, pi);
        if (by_blocks != by_dits)
            throw std::logic_error("refinement routes disagree: block containment vs ditset inclusion");
    }
    return by_blocks;
}

void set_debug_order_checks(bool on) {
    g_debug_order_checks.store(on, std::memory_order_relaxed);
}

bool debug_order_checks_enabled() {
    return g_debug_order_checks.load(std::memory_order_relaxed);
}

}  // namespace partlog
