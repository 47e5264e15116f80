#ifndef PARTLOG_STRUCTURES_HPP
#define PARTLOG_STRUCTURES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "partlog/enumerate.hpp"
#include "partlog/partition.hpp"

namespace partlog {

// All partitions of the form sigma => pi, deduplicated in first-discovery
// order under the enumeration order of sigma. They form a Boolean algebra
// inside the upper segment [pi, 1], with top 1 and bottom pi.
struct BooleanCore {
    Partition base;
    std::vector<Partition> members;
    Partition top;
    Partition bottom;
};

BooleanCore boolean_core(const Partition& pi, std::size_t cap = kDefaultEnumerationCap);

// Membership in the core is the double-negation fixed point:
// tau == (tau => pi) => pi.
bool is_core_member(const Partition& tau, const Partition& pi);

// (tau => pi), the complement of tau inside the core over pi.
// Throws NotInCoreError when tau is not a member.
Partition core_negation(const Partition& tau, const Partition& pi);

// Partition on the doubled universe pairing each element with its copy
// exactly when the element is outside the subset.
struct Corelation {
    UniversePtr base_universe;
    UniversePtr doubled_universe;
    std::vector<std::uint32_t> subset;  // sorted
    Partition partition;
};

// Names of the copies get a trailing '*'.
UniversePtr make_doubled_universe(const UniversePtr& u);

Corelation corelation_of(const UniversePtr& u, const std::vector<std::uint32_t>& s);

inline constexpr std::size_t kDefaultEmbeddingCap = 3;

struct LawCheck {
    std::string law;
    bool pass;
    std::string counterexample;  // empty when the law holds
};

struct EmbeddingReport {
    UniversePtr universe;
    std::vector<LawCheck> laws;
    std::size_t core_member_count = 0;
    std::size_t expected_member_count = 0;  // 2^|U|
    bool all_pass = false;
};

// Brute-force verification that subsets of U embed into the Boolean core of
// [pi(empty), 1] on the doubled universe: join ~ union, meet ~ intersection,
// implication ~ subset conditional, plus the top/bottom anchors and the
// member-set identity.
EmbeddingReport check_powerset_embedding(const UniversePtr& u,
                                         std::size_t cap = kDefaultEmbeddingCap);

}  // namespace partlog

#endif
