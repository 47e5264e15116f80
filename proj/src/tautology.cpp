#include "partlog/tautology.hpp"

#include <atomic>
#include <thread>

#include "partlog/errors.hpp"

namespace partlog {

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
    case VerdictKind::SubsetTautology: return "SubsetTautology";
    case VerdictKind::NotSubsetTautology: return "NotSubsetTautology";
    case VerdictKind::PartitionRefuted: return "PartitionRefuted";
    case VerdictKind::NotRefutedUpTo: return "NotRefutedUpTo";
    }
    return "?";
}

TautologyVerdict check_subset_tautology(const FormulaPtr& f, const TautologyOptions& opts) {
    std::vector<std::string> vars = free_variables(f);
    if (vars.size() > opts.variable_cap)
        throw VariableCapError("formula has " + std::to_string(vars.size()) +
                               " variables, cap is " + std::to_string(opts.variable_cap));
    const std::size_t v = vars.size();
    const std::uint64_t total = std::uint64_t{1} << v;
    std::map<std::string, bool> valuation;
    for (std::uint64_t k = 0; k < total; ++k) {
        // All-T first, matching the truth-table row order.
        std::uint64_t bits = total - 1 - k;
        for (std::size_t j = 0; j < v; ++j)
            valuation[vars[j]] = ((bits >> (v - 1 - j)) & 1) != 0;
        if (!eval_truth(f, valuation)) {
            TruthWitness w;
            for (std::size_t j = 0; j < v; ++j)
                w.valuation.emplace_back(vars[j], valuation[vars[j]]);
            return {VerdictKind::NotSubsetTautology, std::move(w), std::nullopt, 0};
        }
    }
    return {VerdictKind::SubsetTautology, std::nullopt, std::nullopt, 0};
}

namespace {

// Assignment index -> bound partitions, mixed radix with the first variable
// as the most significant digit.
Assignment assignment_at(std::uint64_t index, const std::vector<std::string>& vars,
                         const std::vector<Partition>& parts, const UniversePtr& u) {
    Assignment a(u);
    std::uint64_t rest = index;
    const std::uint64_t base = parts.size();
    for (std::size_t j = vars.size(); j-- > 0;) {
        a.bind(vars[j], parts[static_cast<std::size_t>(rest % base)]);
        rest /= base;
    }
    return a;
}

struct SweepResult {
    bool found = false;
    std::uint64_t index = 0;
};

// Scan [0, total) in enumeration order for the least index whose assignment
// evaluates to a non-discrete partition. Workers claim fixed-size chunks and
// reduce to the minimum found index, so the verdict does not depend on
// scheduling.
SweepResult sweep(const FormulaPtr& f, const std::vector<std::string>& vars,
                  const std::vector<Partition>& parts, const UniversePtr& u,
                  std::uint64_t total, unsigned workers) {
    constexpr std::uint64_t kChunk = 1024;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};

    auto work = [&]() {
        EvalCache cache(u);
        for (;;) {
            std::uint64_t start = next_chunk.fetch_add(kChunk);
            if (start >= total)
                return;
            if (start > best.load(std::memory_order_relaxed))
                return;  // a smaller witness already exists
            std::uint64_t end = std::min(total, start + kChunk);
            for (std::uint64_t i = start; i < end; ++i) {
                if (i > best.load(std::memory_order_relaxed))
                    break;
                Assignment a = assignment_at(i, vars, parts, u);
                if (!eval_partition(f, a, EvalMethod::Graph, &cache).is_discrete()) {
                    std::uint64_t seen = best.load(std::memory_order_relaxed);
                    while (i < seen &&
                           !best.compare_exchange_weak(seen, i, std::memory_order_relaxed)) {
                    }
                    break;
                }
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (std::thread& t : pool)
            t.join();
    }

    std::uint64_t found = best.load();
    return {found != UINT64_MAX, found};
}

}  // namespace

TautologyVerdict check_partition_tautology(const FormulaPtr& f, int max_n,
                                           const TautologyOptions& opts) {
    if (max_n < 2 || static_cast<std::size_t>(max_n) > opts.enumeration_cap)
        throw CapExceededError("max_n must lie in [2, " +
                               std::to_string(opts.enumeration_cap) + "], got " +
                               std::to_string(max_n));
    std::vector<std::string> vars = free_variables(f);
    if (vars.size() > opts.variable_cap)
        throw VariableCapError("formula has " + std::to_string(vars.size()) +
                               " variables, cap is " + std::to_string(opts.variable_cap));
    const std::size_t v = vars.size();

    for (int n = 2; n <= max_n; ++n) {
        UniversePtr u = make_letter_universe(static_cast<std::size_t>(n));
        std::vector<Partition> parts = all_partitions(u, opts.enumeration_cap);
        const std::uint64_t base = parts.size();

        // 0/1 prefilter: on {0, 1} every operation is Boolean-faithful, so
        // this instantly refutes anything that is not a subset tautology.
        {
            EvalCache cache(u);
            for (std::uint64_t k = 0; k < (std::uint64_t{1} << v); ++k) {
                Assignment a(u);
                for (std::size_t j = 0; j < v; ++j)
                    a.bind(vars[j], ((k >> (v - 1 - j)) & 1) != 0 ? parts.back() : parts.front());
                Partition value = eval_partition(f, a, EvalMethod::Graph, &cache);
                if (!value.is_discrete())
                    return {VerdictKind::PartitionRefuted, std::nullopt,
                            PartitionWitness{std::move(a), std::move(value)}, n};
            }
        }

        // Full sweep over base^v assignments.
        std::uint64_t total = 1;
        bool overflow = false;
        for (std::size_t j = 0; j < v; ++j) {
            if (total > UINT64_MAX / base) {
                overflow = true;
                break;
            }
            total *= base;
        }
        if (overflow)
            throw CapExceededError("assignment space exceeds 2^64 at n=" + std::to_string(n));

        SweepResult r = sweep(f, vars, parts, u, total, opts.workers);
        if (r.found) {
            Assignment a = assignment_at(r.index, vars, parts, u);
            Partition value = eval_partition(f, a, EvalMethod::Graph);
            return {VerdictKind::PartitionRefuted, std::nullopt,
                    PartitionWitness{std::move(a), std::move(value)}, n};
        }
    }
    return {VerdictKind::NotRefutedUpTo, std::nullopt, std::nullopt, max_n};
}

bool CorpusReport::any_refuted() const {
    for (const CorpusRow& row : rows)
        if (row.partition && row.partition->kind == VerdictKind::PartitionRefuted)
            return true;
    return false;
}

bool CorpusReport::any_error() const {
    for (const CorpusRow& row : rows)
        if (!row.error.empty())
            return true;
    return false;
}

std::vector<CorpusEntry> parse_corpus(const std::string& text) {
    std::vector<CorpusEntry> out;
    std::size_t line_start = 0;
    int line_no = 0;
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t\r");
        std::size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (line_start <= text.size()) {
        std::size_t nl = text.find('\n', line_start);
        std::string line = text.substr(
            line_start, nl == std::string::npos ? std::string::npos : nl - line_start);
        ++line_no;
        line_start = nl == std::string::npos ? text.size() + 1 : nl + 1;
        std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#')
            continue;
        std::size_t colon = trimmed.find(':');
        if (colon == std::string::npos)
            out.push_back({"line" + std::to_string(line_no), trimmed});
        else
            out.push_back({trim(trimmed.substr(0, colon)), trim(trimmed.substr(colon + 1))});
    }
    return out;
}

CorpusReport check_corpus(const std::vector<CorpusEntry>& corpus, int max_n,
                          const TautologyOptions& opts) {
    CorpusReport report;
    report.max_n = max_n;
    for (const CorpusEntry& entry : corpus) {
        CorpusRow row;
        row.name = entry.name;
        row.text = entry.text;
        try {
            FormulaPtr f = parse_formula(entry.text);
            row.subset = check_subset_tautology(f, opts);
            row.partition = check_partition_tautology(f, max_n, opts);
        } catch (const Error& e) {
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace partlog
