#include "partlog/json_out.hpp"

#include "partlog/text.hpp"

namespace partlog {

using nlohmann::json;

json partition_to_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks()) {
        json b = json::array();
        for (std::uint32_t e : block)
            b.push_back(p.universe()->name(e));
        blocks.push_back(std::move(b));
    }
    return json{{"text", format_partition(p)},
                {"rgs", p.rgs()},
                {"blocks", std::move(blocks)}};
}

json relation_to_json(const BinaryRelation& r) {
    json pairs = json::array();
    for (const auto& [a, b] : r.pairs())
        pairs.push_back(json::array({r.universe()->name(a), r.universe()->name(b)}));
    return json{{"universe", r.universe()->names()}, {"pairs", std::move(pairs)}};
}

json verdict_to_json(const TautologyVerdict& v) {
    json out{{"kind", verdict_kind_name(v.kind)}};
    if (v.kind == VerdictKind::NotRefutedUpTo || v.kind == VerdictKind::PartitionRefuted)
        out["bound"] = v.bound;
    if (v.truth_witness) {
        json w = json::object();
        for (const auto& [name, value] : v.truth_witness->valuation)
            w[name] = value ? "T" : "F";
        out["witness"] = std::move(w);
    }
    if (v.partition_witness) {
        const PartitionWitness& pw = *v.partition_witness;
        json bindings = json::object();
        for (const auto& [name, p] : pw.assignment.bindings())
            bindings[name] = format_partition(p);
        out["witness"] = json{{"universe", pw.assignment.universe()->names()},
                              {"bindings", std::move(bindings)},
                              {"value", format_partition(pw.value)}};
    }
    return out;
}

json corpus_report_to_json(const CorpusReport& report) {
    json rows = json::array();
    for (const CorpusRow& row : report.rows) {
        json r{{"name", row.name}, {"formula", row.text}};
        if (!row.error.empty())
            r["error"] = row.error;
        if (row.subset)
            r["subset"] = verdict_to_json(*row.subset);
        if (row.partition)
            r["partition"] = verdict_to_json(*row.partition);
        rows.push_back(std::move(r));
    }
    return json{{"max_n", report.max_n},
                {"refuted", report.any_refuted()},
                {"rows", std::move(rows)}};
}

json core_to_json(const BooleanCore& core) {
    json members = json::array();
    for (const Partition& m : core.members)
        members.push_back(format_partition(m));
    return json{{"base", format_partition(core.base)},
                {"top", format_partition(core.top)},
                {"bottom", format_partition(core.bottom)},
                {"member_count", core.members.size()},
                {"members", std::move(members)}};
}

json embedding_report_to_json(const EmbeddingReport& report) {
    json laws = json::array();
    for (const LawCheck& law : report.laws) {
        json l{{"law", law.law}, {"pass", law.pass}};
        if (!law.counterexample.empty())
            l["counterexample"] = law.counterexample;
        laws.push_back(std::move(l));
    }
    return json{{"universe", report.universe->names()},
                {"laws", std::move(laws)},
                {"core_member_count", report.core_member_count},
                {"expected_member_count", report.expected_member_count},
                {"all_pass", report.all_pass}};
}

json explore_report_to_json(const ExploreReport& report) {
    json samples = json::array();
    for (const auto& [depth, formula] : report.samples)
        samples.push_back(json{{"depth", depth}, {"formula", formula}});
    json peirce{{"formula", report.peirce_formula},
                {"equals_constant_one", report.peirce_equals_constant_one}};
    if (!report.peirce_difference.empty())
        peirce["first_difference"] = report.peirce_difference;
    return json{{"universe_size", report.universe_size},
                {"depth_cap", report.depth_cap},
                {"size_cap", report.size_cap},
                {"seeded_with", json::array({"x", "y", "0", "1"})},
                {"counts_by_depth", report.closure.counts_by_depth},
                {"total_distinct", report.closure.tables.size()},
                {"beyond_seed_count", report.beyond_seed_count},
                {"beyond_basic_count", report.beyond_basic_count},
                {"saturated", report.closure.saturated},
                {"peirce", std::move(peirce)},
                {"samples", std::move(samples)}};
}

std::string explore_counts_csv(const ExploreReport& report) {
    std::string out = "depth,cumulative_tables\n";
    for (std::size_t d = 0; d < report.closure.counts_by_depth.size(); ++d)
        out += std::to_string(d) + "," + std::to_string(report.closure.counts_by_depth[d]) + "\n";
    return out;
}

}  // namespace partlog
