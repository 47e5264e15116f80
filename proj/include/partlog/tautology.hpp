#ifndef PARTLOG_TAUTOLOGY_HPP
#define PARTLOG_TAUTOLOGY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partlog/enumerate.hpp"
#include "partlog/eval.hpp"

namespace partlog {

inline constexpr std::size_t kDefaultVariableCap = 6;
inline constexpr int kDefaultMaxN = 4;

enum class VerdictKind {
    SubsetTautology,
    NotSubsetTautology,
    PartitionRefuted,
    NotRefutedUpTo,
};

const char* verdict_kind_name(VerdictKind k);

struct TruthWitness {
    // First-occurrence variable order.
    std::vector<std::pair<std::string, bool>> valuation;
};

struct PartitionWitness {
    Assignment assignment;
    Partition value;  // the non-discrete result the assignment produces
};

struct TautologyVerdict {
    VerdictKind kind;
    std::optional<TruthWitness> truth_witness;          // NotSubsetTautology
    std::optional<PartitionWitness> partition_witness;  // PartitionRefuted
    int bound = 0;                                      // NotRefutedUpTo
};

struct TautologyOptions {
    std::size_t variable_cap = kDefaultVariableCap;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    unsigned workers = 1;
};

// Evaluates all 2^v truth valuations, in lexicographic order with F before T
// and the first variable most significant.
TautologyVerdict check_subset_tautology(const FormulaPtr& f, const TautologyOptions& opts = {});

// Bounded search for a partition counterexample: n = 2..max_n, the 0/1
// prefilter first at each n, then every assignment of enumerated partitions
// in lexicographic rgs order (first variable most significant), evaluating
// via the graph method. The first non-1 result refutes; otherwise the
// formula is NotRefutedUpTo(max_n). Witness selection is by enumeration
// order regardless of worker count.
TautologyVerdict check_partition_tautology(const FormulaPtr& f, int max_n,
                                           const TautologyOptions& opts = {});

struct CorpusEntry {
    std::string name;
    std::string text;
};

struct CorpusRow {
    std::string name;
    std::string text;
    std::optional<TautologyVerdict> subset;
    std::optional<TautologyVerdict> partition;
    std::string error;  // non-empty when this row failed
};

struct CorpusReport {
    int max_n = kDefaultMaxN;
    std::vector<CorpusRow> rows;
    bool any_refuted() const;
    bool any_error() const;
};

// Lines of the form `name: formula`; '#' comments and blank lines ignored.
// A line without a colon is treated as a bare formula.
std::vector<CorpusEntry> parse_corpus(const std::string& text);

// Per-formula errors land in the row instead of aborting the run.
CorpusReport check_corpus(const std::vector<CorpusEntry>& corpus, int max_n,
                          const TautologyOptions& opts = {});

}  // namespace partlog

#endif
