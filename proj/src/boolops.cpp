#include "partlog/boolops.hpp"

#include "partlog/errors.hpp"
#include "partlog/union_find.hpp"

namespace partlog {

namespace {

const UniversePtr& common_universe(const TruthTable& f, const std::vector<Partition>& parts,
                                   const UniversePtr* explicit_universe) {
    if (parts.size() != f.arity())
        throw ArityMismatchError("operation of arity " + std::to_string(f.arity()) +
                                 " applied to " + std::to_string(parts.size()) + " partitions");
    if (parts.empty()) {
        if (!explicit_universe || !*explicit_universe)
            throw UniverseMismatchError("nullary operation needs an explicit universe");
        return *explicit_universe;
    }
    const UniversePtr& u = parts.front().universe();
    for (const Partition& p : parts)
        if (!same_universe(p.universe(), u))
            throw UniverseMismatchError("argument partitions live on different universes");
    if (explicit_universe && *explicit_universe && !same_universe(*explicit_universe, u))
        throw UniverseMismatchError("argument partitions do not live on the given universe");
    return u;
}

}  // namespace

Partition graph_method(const TruthTable& f, const std::vector<Partition>& parts) {
    return graph_method(f, parts, parts.empty() ? UniversePtr{} : parts.front().universe());
}

Partition graph_method(const TruthTable& f, const std::vector<Partition>& parts,
                       const UniversePtr& universe) {
    const UniversePtr& u = common_universe(f, parts, &universe);
    const std::size_t n = u->size();
    const std::size_t k = f.arity();
    UnionFind uf(n);
    std::vector<bool> labels(k);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            for (std::size_t i = 0; i < k; ++i)
                labels[i] = parts[i].rgs()[a] != parts[i].rgs()[b];  // T on dits
            if (!f.eval(labels))
                uf.unite(a, b);
        }
    }
    return Partition(u, uf.to_rgs());
}

BinaryRelation kept_pairs(const TruthTable& f, const std::vector<Partition>& parts,
                          const UniversePtr& universe, ClosureStyle style) {
    const UniversePtr& u = common_universe(f, parts, &universe);
    if (style == ClosureStyle::NegatedDnfTerms) {
        BinaryRelation r(u);
        for (const BinaryRelation& term : negated_dnf_terms(f, parts, u))
            r = relation_union(r, term);
        return r;
    }
    const std::size_t n = u->size();
    const std::size_t k = f.arity();
    BinaryRelation r(u);
    std::vector<bool> labels(k);
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < k; ++i)
                labels[i] = parts[i].rgs()[a] != parts[i].rgs()[b];
            if (!f.eval(labels))
                r.add(a, b);
        }
    }
    return r;
}

std::vector<BinaryRelation> negated_dnf_terms(const TruthTable& f,
                                              const std::vector<Partition>& parts,
                                              const UniversePtr& universe) {
    const UniversePtr& u = common_universe(f, parts, &universe);
    std::vector<BinaryRelation> terms;
    for (std::size_t row = 0; row < f.row_count(); ++row) {
        if (f.row_output(row))
            continue;
        BinaryRelation term = BinaryRelation::full(u);
        for (std::size_t i = 0; i < f.arity(); ++i)
            term = relation_intersection(term, f.row_input(row, i) ? dit(parts[i])
                                                                   : indit(parts[i]));
        terms.push_back(std::move(term));
    }
    return terms;
}

Partition closure_method(const TruthTable& f, const std::vector<Partition>& parts,
                         ClosureStyle style) {
    return closure_method(f, parts, parts.empty() ? UniversePtr{} : parts.front().universe(),
                          style);
}

Partition closure_method(const TruthTable& f, const std::vector<Partition>& parts,
                         const UniversePtr& universe, ClosureStyle style) {
    BinaryRelation kept = kept_pairs(f, parts, universe, style);
    return partition_from_equivalence(rst_closure(kept));
}

Partition join_blocks(const Partition& pi, const Partition& sigma) {
    if (!same_universe(pi.universe(), sigma.universe()))
        throw UniverseMismatchError("join: partitions live on different universes");
    // Block of u is the pair (pi block, sigma block); number by first
    // appearance for the canonical form.
    const std::size_t n = pi.size();
    std::vector<std::int64_t> label(pi.block_count() * sigma.block_count(), -1);
    std::vector<std::uint32_t> rgs(n);
    std::uint32_t next = 0;
    for (std::size_t u = 0; u < n; ++u) {
        std::size_t cell = pi.rgs()[u] * sigma.block_count() + sigma.rgs()[u];
        if (label[cell] < 0)
            label[cell] = next++;
        rgs[u] = static_cast<std::uint32_t>(label[cell]);
    }
    return Partition(pi.universe(), std::move(rgs));
}

Partition meet_blocks(const Partition& pi, const Partition& sigma) {
    if (!same_universe(pi.universe(), sigma.universe()))
        throw UniverseMismatchError("meet: partitions live on different universes");
    // Overlap graph on the combined block set: a pi block and a sigma block
    // overlap exactly when some element lies in both.
    const std::size_t n = pi.size();
    const std::size_t pi_blocks = pi.block_count();
    UnionFind uf(pi_blocks + sigma.block_count());
    for (std::size_t u = 0; u < n; ++u)
        uf.unite(pi.rgs()[u], static_cast<std::uint32_t>(pi_blocks + sigma.rgs()[u]));
    std::vector<std::int64_t> label(pi_blocks + sigma.block_count(), -1);
    std::vector<std::uint32_t> rgs(n);
    std::uint32_t next = 0;
    for (std::size_t u = 0; u < n; ++u) {
        std::uint32_t root = uf.find(pi.rgs()[u]);
        if (label[root] < 0)
            label[root] = next++;
        rgs[u] = static_cast<std::uint32_t>(label[root]);
    }
    return Partition(pi.universe(), std::move(rgs));
}

Partition implication_blocks(const Partition& sigma, const Partition& pi) {
    if (!same_universe(sigma.universe(), pi.universe()))
        throw UniverseMismatchError("implication: partitions live on different universes");
    const std::size_t n = pi.size();
    // A pi block is contained in a sigma block iff its elements all share
    // their sigma block.
    std::vector<std::int64_t> first_of_block(pi.block_count(), -1);
    std::vector<bool> contained(pi.block_count(), true);
    for (std::size_t u = 0; u < n; ++u) {
        std::uint32_t b = pi.rgs()[u];
        if (first_of_block[b] < 0)
            first_of_block[b] = static_cast<std::int64_t>(u);
        else if (sigma.rgs()[u] != sigma.rgs()[static_cast<std::size_t>(first_of_block[b])])
            contained[b] = false;
    }
    std::vector<std::int64_t> label(pi.block_count(), -1);
    std::vector<std::uint32_t> rgs(n);
    std::uint32_t next = 0;
    for (std::size_t u = 0; u < n; ++u) {
        std::uint32_t b = pi.rgs()[u];
        if (contained[b]) {
            rgs[u] = next++;  // discretized: one fresh singleton per element
        } else {
            if (label[b] < 0)
                label[b] = next++;
            rgs[u] = static_cast<std::uint32_t>(label[b]);
        }
    }
    return Partition(pi.universe(), std::move(rgs));
}

}  // namespace partlog
