#ifndef PARTLOG_DOT_HPP
#define PARTLOG_DOT_HPP

#include <string>

#include "partlog/eval.hpp"

namespace partlog {

// The labelled complete graph K(U) of a formula evaluation. Every edge
// carries one truth-value letter per argument of the top-level connective
// (T on dits, F on indits, subscripted with the argument's variable name or
// its position); edges the connective keeps are bold. Vertices follow
// universe order and edges lexicographic pair order.
std::string render_eval_dot(const FormulaPtr& f, const Assignment& a,
                            EvalMethod method = EvalMethod::Graph);

}  // namespace partlog

#endif
