#ifndef PARTLOG_BOOLOPS_HPP
#define PARTLOG_BOOLOPS_HPP

#include <vector>

#include "partlog/partition.hpp"
#include "partlog/relation.hpp"
#include "partlog/truth_table.hpp"

namespace partlog {

// Graph-theoretic construction: label each link u-u' of the complete graph
// with one truth value per argument partition (T on dits, F on indits), keep
// the link when f of the labels is F, and return the connected components of
// the kept-link graph. The graph is never materialized; pairs stream into
// union-find.
Partition graph_method(const TruthTable& f, const std::vector<Partition>& parts);
// Overload for nullary tables, where the universe cannot be inferred.
Partition graph_method(const TruthTable& f, const std::vector<Partition>& parts,
                       const UniversePtr& universe);

enum class ClosureStyle {
    PairwiseLabels,   // evaluate f once per ordered pair
    NegatedDnfTerms,  // materialize one dit/indit intersection per F row
};

// Closure-theoretic construction: union the dit/indit intersection terms of
// the rows where f outputs F, take the RST closure, and read the result off
// as the partition with that indit set. Both styles build the same relation.
Partition closure_method(const TruthTable& f, const std::vector<Partition>& parts,
                         ClosureStyle style = ClosureStyle::PairwiseLabels);
Partition closure_method(const TruthTable& f, const std::vector<Partition>& parts,
                         const UniversePtr& universe,
                         ClosureStyle style = ClosureStyle::PairwiseLabels);

// The relation both constructions share: ordered pairs whose label vector
// makes f output F.
BinaryRelation kept_pairs(const TruthTable& f, const std::vector<Partition>& parts,
                          const UniversePtr& universe,
                          ClosureStyle style = ClosureStyle::PairwiseLabels);

// One relation per F row, in row order: the negated-DNF presentation.
std::vector<BinaryRelation> negated_dnf_terms(const TruthTable& f,
                                              const std::vector<Partition>& parts,
                                              const UniversePtr& universe);

// Set-of-blocks operations.

// Blocks are the non-empty intersections of a block of pi with a block of
// sigma.
Partition join_blocks(const Partition& pi, const Partition& sigma);

// Components of the overlap relation on the combined block set, each
// component's blocks merged into one.
Partition meet_blocks(const Partition& pi, const Partition& sigma);

// Indicator construction: a block of pi is discretized when it sits inside
// some block of sigma and is kept whole otherwise.
Partition implication_blocks(const Partition& sigma, const Partition& pi);

}  // namespace partlog

#endif
