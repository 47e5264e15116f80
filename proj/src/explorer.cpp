#include "partlog/explorer.hpp"

#include <unordered_map>

#include "partlog/boolops.hpp"
#include "partlog/errors.hpp"
#include "partlog/text.hpp"

namespace partlog {

namespace {

OpTable::Domain enumerate_domain(const UniversePtr& u, std::size_t cap) {
    if (u->size() > cap)
        throw CapExceededError("explorer universe cap is " + std::to_string(cap) + ", got " +
                               std::to_string(u->size()));
    return std::make_shared<const std::vector<Partition>>(all_partitions(u));
}

std::unordered_map<std::string, std::uint32_t> domain_index(
    const std::vector<Partition>& domain) {
    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(domain.size());
    for (std::uint32_t i = 0; i < domain.size(); ++i)
        index.emplace(domain[i].key(), i);
    return index;
}

std::string table_string(std::size_t t) {
    // Row 0 is the most significant bit, so "FFFF" is t=0 and "TTTT" t=15.
    std::string s(4, 'F');
    for (std::size_t r = 0; r < 4; ++r)
        if ((t >> (3 - r)) & 1)
            s[r] = 'T';
    return s;
}

}  // namespace

OpTable::OpTable(UniversePtr universe, Domain domain, std::vector<std::uint32_t> entries,
                 FormulaPtr provenance)
    : universe_(std::move(universe)),
      domain_(std::move(domain)),
      entries_(std::move(entries)),
      provenance_(std::move(provenance)) {
    if (entries_.size() != domain_->size() * domain_->size())
        throw Error("op table entries must cover every ordered pair of the domain");
}

const Partition& OpTable::value(const Partition& x, const Partition& y) const {
    std::size_t ix = domain_->size(), iy = domain_->size();
    for (std::size_t i = 0; i < domain_->size(); ++i) {
        if ((*domain_)[i] == x)
            ix = i;
        if ((*domain_)[i] == y)
            iy = i;
    }
    if (ix == domain_->size() || iy == domain_->size())
        throw Error("partition is not in the op-table domain");
    return value(ix, iy);
}

std::string OpTable::key() const {
    const std::vector<Partition>& dom = *domain_;
    std::string k;
    k.reserve(entries_.size() * dom.front().size());
    for (std::uint32_t e : entries_)
        k += dom[e].key();
    return k;
}

std::vector<OpTable> basic_sixteen(const UniversePtr& u, std::size_t cap) {
    OpTable::Domain domain = enumerate_domain(u, cap);
    const std::vector<Partition>& dom = *domain;
    const std::size_t b = dom.size();
    auto index = domain_index(dom);

    std::vector<OpTable> out;
    out.reserve(16);
    for (std::size_t t = 0; t < 16; ++t) {
        TruthTable table = TruthTable::from_string(2, table_string(t));
        std::vector<std::uint32_t> entries(b * b);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j)
                entries[i * b + j] = index.at(graph_method(table, {dom[i], dom[j]}).key());
        FormulaPtr provenance =
            Formula::apply(table, {Formula::var("x"), Formula::var("y")});
        out.emplace_back(u, domain, std::move(entries), std::move(provenance));
    }
    return out;
}

ClosureResult compound_closure(const UniversePtr& u, std::size_t depth_cap,
                               std::size_t size_cap, std::size_t universe_cap) {
    OpTable::Domain domain = enumerate_domain(u, universe_cap);
    const std::vector<Partition>& dom = *domain;
    const std::size_t b = dom.size();
    auto index = domain_index(dom);

    // Pointwise combination tables: op_matrix[t][a*b_count+b] is the domain
    // index of connective t applied to partitions a and b.
    std::vector<TruthTable> connectives;
    std::vector<std::vector<std::uint32_t>> op_matrix(16, std::vector<std::uint32_t>(b * b));
    for (std::size_t t = 0; t < 16; ++t) {
        connectives.push_back(TruthTable::from_string(2, table_string(t)));
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j)
                op_matrix[t][i * b + j] =
                    index.at(graph_method(connectives[t], {dom[i], dom[j]}).key());
    }

    ClosureResult result;
    std::unordered_map<std::string, std::size_t> seen;  // entry key -> table index
    const std::size_t key_bytes = b <= 255 ? 1 : 4;

    auto add_table = [&](std::vector<std::uint32_t> entries, FormulaPtr provenance,
                         std::size_t depth) -> bool {
        std::string k;
        k.reserve(entries.size() * key_bytes);
        for (std::uint32_t e : entries) {
            k.push_back(static_cast<char>(e & 0xff));
            if (key_bytes == 4) {
                k.push_back(static_cast<char>((e >> 8) & 0xff));
                k.push_back(static_cast<char>((e >> 16) & 0xff));
                k.push_back(static_cast<char>((e >> 24) & 0xff));
            }
        }
        if (seen.count(k))
            return false;
        seen.emplace(std::move(k), result.tables.size());
        result.tables.emplace_back(u, domain, std::move(entries), std::move(provenance));
        result.depths.push_back(depth);
        return true;
    };

    // Seeds: the projections and the constants.
    {
        std::vector<std::uint32_t> x(b * b), y(b * b), zero(b * b), one(b * b);
        const std::uint32_t bottom = 0;                              // rgs 0,0,...
        const std::uint32_t top = static_cast<std::uint32_t>(b - 1);  // rgs 0,1,2,...
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) {
                x[i * b + j] = static_cast<std::uint32_t>(i);
                y[i * b + j] = static_cast<std::uint32_t>(j);
                zero[i * b + j] = bottom;
                one[i * b + j] = top;
            }
        add_table(std::move(x), Formula::var("x"), 0);
        add_table(std::move(y), Formula::var("y"), 0);
        add_table(std::move(zero), Formula::bottom(), 0);
        add_table(std::move(one), Formula::top(), 0);
    }
    result.counts_by_depth.push_back(result.tables.size());

    bool capped = result.tables.size() >= size_cap;
    std::size_t frontier_begin = 0;
    for (std::size_t depth = 1; depth <= depth_cap && !capped; ++depth) {
        std::size_t known = result.tables.size();
        std::size_t new_frontier_begin = known;
        bool added = false;
        // Only pairs touching the previous frontier can produce anything new.
        for (std::size_t t = 0; t < 16 && !capped; ++t) {
            const std::vector<std::uint32_t>& m = op_matrix[t];
            for (std::size_t ia = 0; ia < known && !capped; ++ia) {
                for (std::size_t ib = 0; ib < known; ++ib) {
                    if (ia < frontier_begin && ib < frontier_begin)
                        continue;
                    const std::vector<std::uint32_t>& ea = result.tables[ia].entries();
                    const std::vector<std::uint32_t>& eb = result.tables[ib].entries();
                    std::vector<std::uint32_t> entries(b * b);
                    for (std::size_t c = 0; c < entries.size(); ++c)
                        entries[c] = m[ea[c] * b + eb[c]];
                    FormulaPtr provenance =
                        Formula::apply(connectives[t], {result.tables[ia].provenance(),
                                                        result.tables[ib].provenance()});
                    if (add_table(std::move(entries), std::move(provenance), depth))
                        added = true;
                    if (result.tables.size() >= size_cap) {
                        capped = true;
                        break;
                    }
                }
            }
        }
        result.counts_by_depth.push_back(result.tables.size());
        if (!added && !capped) {
            result.saturated = true;  // a whole round added nothing
            break;
        }
        frontier_begin = new_frontier_begin;
    }
    return result;
}

OpTable table_of_formula(const FormulaPtr& f, const UniversePtr& u, std::size_t cap) {
    for (const std::string& var : free_variables(f))
        if (var != "x" && var != "y")
            throw VariableError("op tables use variables x and y only, got '" + var + "'");
    OpTable::Domain domain = enumerate_domain(u, cap);
    const std::vector<Partition>& dom = *domain;
    const std::size_t b = dom.size();
    auto index = domain_index(dom);

    std::vector<std::uint32_t> entries(b * b);
    EvalCache cache(u);
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
            Assignment a(u);
            a.bind("x", dom[i]);
            a.bind("y", dom[j]);
            entries[i * b + j] = index.at(eval_partition(f, a, EvalMethod::Graph, &cache).key());
        }
    }
    return OpTable(u, domain, std::move(entries), f);
}

ExploreReport run_exploration(const UniversePtr& u, std::size_t depth_cap, std::size_t size_cap,
                              std::size_t universe_cap) {
    ExploreReport report;
    report.universe_size = u->size();
    report.depth_cap = depth_cap;
    report.size_cap = size_cap;
    report.closure = compound_closure(u, depth_cap, size_cap, universe_cap);

    const std::size_t seeds = 4;
    report.beyond_seed_count =
        report.closure.tables.size() > seeds ? report.closure.tables.size() - seeds : 0;

    // Count closure tables that coincide with none of the sixteen basics.
    {
        std::vector<OpTable> basics = basic_sixteen(u, universe_cap);
        std::vector<std::string> basic_keys;
        basic_keys.reserve(basics.size());
        for (const OpTable& t : basics)
            basic_keys.push_back(t.key());
        for (const OpTable& t : report.closure.tables) {
            std::string k = t.key();
            bool is_basic = false;
            for (const std::string& bk : basic_keys)
                if (bk == k) {
                    is_basic = true;
                    break;
                }
            if (!is_basic)
                ++report.beyond_basic_count;
        }
    }

    // The Peirce compound against the constant-1 table.
    FormulaPtr peirce = parse_formula("((y -> x) -> y) -> y");
    report.peirce_formula = print_formula(peirce);
    OpTable ptab = table_of_formula(peirce, u, universe_cap);
    const std::vector<Partition>& dom = ptab.domain();
    const std::uint32_t top = static_cast<std::uint32_t>(dom.size() - 1);
    report.peirce_equals_constant_one = true;
    for (std::size_t i = 0; i < dom.size() && report.peirce_equals_constant_one; ++i)
        for (std::size_t j = 0; j < dom.size(); ++j)
            if (ptab.entry_index(i, j) != top) {
                report.peirce_equals_constant_one = false;
                report.peirce_difference = "x=" + format_partition(dom[i]) +
                                           ", y=" + format_partition(dom[j]) + " gives " +
                                           format_partition(ptab.value(i, j));
                break;
            }

    // One provenance sample per depth: the first table discovered there.
    std::size_t last_depth = SIZE_MAX;
    for (std::size_t i = 0; i < report.closure.tables.size(); ++i) {
        if (report.closure.depths[i] != last_depth) {
            last_depth = report.closure.depths[i];
            report.samples.emplace_back(last_depth,
                                        print_formula(report.closure.tables[i].provenance()));
        }
    }
    return report;
}

}  // namespace partlog
