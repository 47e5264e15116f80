#include "partlog/structures.hpp"

#include <algorithm>
#include <unordered_set>

#include "partlog/boolops.hpp"
#include "partlog/errors.hpp"
#include "partlog/text.hpp"

namespace partlog {

BooleanCore boolean_core(const Partition& pi, std::size_t cap) {
    const UniversePtr& u = pi.universe();
    std::vector<Partition> members;
    std::unordered_set<std::string> seen;
    for_each_partition(
        u,
        [&](const Partition& sigma) {
            Partition member = implication_blocks(sigma, pi);
            if (seen.insert(member.key()).second)
                members.push_back(std::move(member));
        },
        cap);
    return BooleanCore{pi, std::move(members), discrete_partition(u), pi};
}

bool is_core_member(const Partition& tau, const Partition& pi) {
    if (!same_universe(tau.universe(), pi.universe()))
        throw UniverseMismatchError("core membership: partitions live on different universes");
    return implication_blocks(implication_blocks(tau, pi), pi) == tau;
}

Partition core_negation(const Partition& tau, const Partition& pi) {
    if (!is_core_member(tau, pi))
        throw NotInCoreError("partition " + format_partition(tau) +
                             " is not in the Boolean core over " + format_partition(pi));
    return implication_blocks(tau, pi);
}

UniversePtr make_doubled_universe(const UniversePtr& u) {
    std::vector<std::string> names;
    names.reserve(2 * u->size());
    for (const std::string& name : u->names())
        names.push_back(name);
    for (const std::string& name : u->names())
        names.push_back(name + "*");
    return make_universe(std::move(names));
}

Corelation corelation_of(const UniversePtr& u, const std::vector<std::uint32_t>& s) {
    const std::uint32_t n = static_cast<std::uint32_t>(u->size());
    std::vector<bool> in_subset(n, false);
    for (std::uint32_t e : s) {
        if (e >= n)
            throw IndexError("subset element " + std::to_string(e) + " outside universe");
        in_subset[e] = true;
    }
    std::vector<std::uint32_t> subset;
    for (std::uint32_t e = 0; e < n; ++e)
        if (in_subset[e])
            subset.push_back(e);

    UniversePtr doubled = make_doubled_universe(u);
    std::vector<std::vector<std::uint32_t>> blocks;
    for (std::uint32_t e = 0; e < n; ++e) {
        if (in_subset[e]) {
            blocks.push_back({e});
            blocks.push_back({n + e});
        } else {
            blocks.push_back({e, n + e});
        }
    }
    Partition p = partition_from_blocks(doubled, blocks);
    return Corelation{u, doubled, std::move(subset), std::move(p)};
}

namespace {

std::string subset_text(const UniversePtr& u, std::uint32_t mask) {
    std::string out = "{";
    bool first = true;
    for (std::uint32_t e = 0; e < u->size(); ++e) {
        if (!(mask & (1u << e)))
            continue;
        if (!first)
            out += ",";
        out += u->name(e);
        first = false;
    }
    return out + "}";
}

std::vector<std::uint32_t> mask_to_indices(std::uint32_t mask, std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t e = 0; e < n; ++e)
        if (mask & (1u << e))
            out.push_back(e);
    return out;
}

}  // namespace

EmbeddingReport check_powerset_embedding(const UniversePtr& u, std::size_t cap) {
    const std::uint32_t n = static_cast<std::uint32_t>(u->size());
    if (n > cap)
        throw CapExceededError("powerset embedding checks up to |U| = " + std::to_string(cap) +
                               ", got " + std::to_string(n));

    EmbeddingReport report;
    report.universe = u;
    report.expected_member_count = std::size_t{1} << n;

    const std::uint32_t full = (1u << n) - 1;
    std::vector<Partition> of_subset;  // indexed by mask
    of_subset.reserve(full + 1);
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        of_subset.push_back(corelation_of(u, mask_to_indices(mask, n)).partition);

    auto check_pairwise = [&](const std::string& law, auto op, auto subset_op) {
        LawCheck check{law, true, ""};
        for (std::uint32_t s = 0; s <= full && check.pass; ++s) {
            for (std::uint32_t t = 0; t <= full; ++t) {
                Partition got = op(of_subset[s], of_subset[t]);
                const Partition& want = of_subset[subset_op(s, t) & full];
                if (got != want) {
                    check.pass = false;
                    check.counterexample = "S=" + subset_text(u, s) + ", T=" + subset_text(u, t) +
                                           ": got " + format_partition(got) + ", want " +
                                           format_partition(want);
                    break;
                }
            }
        }
        report.laws.push_back(std::move(check));
    };

    check_pairwise("join represents union", join_blocks,
                   [](std::uint32_t s, std::uint32_t t) { return s | t; });
    check_pairwise("meet represents intersection", meet_blocks,
                   [](std::uint32_t s, std::uint32_t t) { return s & t; });
    check_pairwise(
        "implication represents the conditional",
        [](const Partition& a, const Partition& b) { return implication_blocks(a, b); },
        [full](std::uint32_t s, std::uint32_t t) { return (~s & full) | t; });

    const Partition& bottom = of_subset[0];  // pi(empty)
    Partition one = discrete_partition(bottom.universe());
    {
        Partition got = implication_blocks(one, bottom);
        bool pass = got == bottom;
        report.laws.push_back({"1 => bottom is the empty-set corelation", pass,
                               pass ? "" : "got " + format_partition(got)});
    }
    {
        Partition got = implication_blocks(bottom, bottom);
        bool pass = got == one;
        report.laws.push_back({"bottom => bottom is the top", pass,
                               pass ? "" : "got " + format_partition(got)});
    }

    // The core members over pi(empty) must be exactly the corelations.
    {
        BooleanCore core = boolean_core(bottom);
        report.core_member_count = core.members.size();
        std::unordered_set<std::string> member_keys;
        for (const Partition& m : core.members)
            member_keys.insert(m.key());
        std::unordered_set<std::string> subset_keys;
        for (const Partition& p : of_subset)
            subset_keys.insert(p.key());
        bool pass = member_keys == subset_keys;
        report.laws.push_back({"core members are exactly the subset corelations", pass,
                               pass ? ""
                                    : "core has " + std::to_string(member_keys.size()) +
                                          " members, subsets give " +
                                          std::to_string(subset_keys.size())});
    }

    report.all_pass =
        std::all_of(report.laws.begin(), report.laws.end(), [](const LawCheck& c) { return c.pass; });
    return report;
}

}  // namespace partlog
