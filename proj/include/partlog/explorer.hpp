#ifndef PARTLOG_EXPLORER_HPP
#define PARTLOG_EXPLORER_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "partlog/enumerate.hpp"
#include "partlog/eval.hpp"
#include "partlog/formula.hpp"

namespace partlog {

inline constexpr std::size_t kExplorerUniverseCap = 4;
inline constexpr std::size_t kCompoundUniverseCap = 3;
inline constexpr std::size_t kDefaultDepthCap = 4;
inline constexpr std::size_t kDefaultSizeCap = 100000;

// A binary partition operation tabulated over every ordered pair of
// partitions of one universe. Entries index into the shared enumeration of
// the domain. Tables are equal iff their entries agree; the provenance
// formula is bookkeeping only.
class OpTable {
public:
    using Domain = std::shared_ptr<const std::vector<Partition>>;

    OpTable(UniversePtr universe, Domain domain, std::vector<std::uint32_t> entries,
            FormulaPtr provenance);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<Partition>& domain() const { return *domain_; }
    std::size_t domain_size() const { return domain_->size(); }
    const std::vector<std::uint32_t>& entries() const { return entries_; }
    const FormulaPtr& provenance() const { return provenance_; }

    std::uint32_t entry_index(std::size_t i, std::size_t j) const {
        return entries_[i * domain_->size() + j];
    }
    const Partition& value(std::size_t i, std::size_t j) const {
        return (*domain_)[entry_index(i, j)];
    }
    // Lookup by partition values; both must lie in the domain.
    const Partition& value(const Partition& x, const Partition& y) const;

    // Concatenated entry rgs, the canonical deduplication key.
    std::string key() const;

    bool same_entries(const OpTable& other) const { return entries_ == other.entries_; }

private:
    UniversePtr universe_;
    Domain domain_;
    std::vector<std::uint32_t> entries_;
    FormulaPtr provenance_;
};

// The 16 binary truth tables as partition operations, ordered by table
// string with row 0 as the most significant bit ("FFFF" first, "TTTT" last).
std::vector<OpTable> basic_sixteen(const UniversePtr& u,
                                   std::size_t cap = kExplorerUniverseCap);

struct ClosureResult {
    std::vector<OpTable> tables;      // discovery order; the seeds x, y, 0, 1 first
    std::vector<std::size_t> depths;  // per table
    std::vector<std::size_t> counts_by_depth;  // cumulative distinct tables
    bool saturated = false;
};

// Breadth-first closure of {x, y, 0, 1} under pointwise application of the
// 16 binary connectives, deduplicated by entries. Stops at a fixpoint or at
// the depth/size caps.
ClosureResult compound_closure(const UniversePtr& u, std::size_t depth_cap = kDefaultDepthCap,
                               std::size_t size_cap = kDefaultSizeCap,
                               std::size_t universe_cap = kCompoundUniverseCap);

// Tabulates a formula over variables x, y (either may be absent).
// Throws VariableError on other variables.
OpTable table_of_formula(const FormulaPtr& f, const UniversePtr& u,
                         std::size_t cap = kExplorerUniverseCap);

struct ExploreReport {
    std::size_t universe_size = 0;
    std::size_t depth_cap = 0;
    std::size_t size_cap = 0;
    ClosureResult closure;
    std::size_t beyond_seed_count = 0;   // distinct tables minus the 4 seeds
    std::size_t beyond_basic_count = 0;  // distinct tables not among the 16 basics
    std::string peirce_formula;
    bool peirce_equals_constant_one = true;
    std::string peirce_difference;  // first differing entry, when any
    std::vector<std::pair<std::size_t, std::string>> samples;  // depth, provenance
};

ExploreReport run_exploration(const UniversePtr& u, std::size_t depth_cap = kDefaultDepthCap,
                              std::size_t size_cap = kDefaultSizeCap,
                              std::size_t universe_cap = kCompoundUniverseCap);

}  // namespace partlog

#endif
