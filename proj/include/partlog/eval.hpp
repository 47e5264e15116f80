#ifndef PARTLOG_EVAL_HPP
#define PARTLOG_EVAL_HPP

#include <map>
#include <string>
#include <unordered_map>

#include "partlog/boolops.hpp"
#include "partlog/formula.hpp"
#include "partlog/partition.hpp"

namespace partlog {

// Truth-table semantics. Throws UnboundVariableError on an unbound variable.
bool eval_truth(const FormulaPtr& f, const std::map<std::string, bool>& valuation);

// Partitions bound to variable names, all on one shared universe.
class Assignment {
public:
    explicit Assignment(UniversePtr universe);

    void bind(const std::string& name, Partition p);  // UniverseMismatchError
    const Partition* find(const std::string& name) const;

    const UniversePtr& universe() const { return universe_; }
    const std::map<std::string, Partition>& bindings() const { return bindings_; }

private:
    UniversePtr universe_;
    std::map<std::string, Partition> bindings_;
};

enum class EvalMethod { Graph, Closure, Blocks };

EvalMethod eval_method_from_name(const std::string& name);  // graph|closure|blocks
const char* eval_method_name(EvalMethod m);

// Pure memo for connective applications, keyed by table and canonical
// argument rgs. Bound to one universe; results are method-independent.
class EvalCache {
public:
    explicit EvalCache(UniversePtr universe) : universe_(std::move(universe)) {}

    const UniversePtr& universe() const { return universe_; }
    const Partition* find(const std::string& key) const;
    void insert(const std::string& key, const Partition& value);
    std::size_t size() const { return map_.size(); }

private:
    UniversePtr universe_;
    std::unordered_map<std::string, Partition> map_;
};

// Partition semantics via the chosen construction. The blocks method only
// covers |, & and -> and throws MethodUnsupportedError on anything else.
Partition eval_partition(const FormulaPtr& f, const Assignment& a,
                         EvalMethod method = EvalMethod::Graph, EvalCache* cache = nullptr);

}  // namespace partlog

#endif
