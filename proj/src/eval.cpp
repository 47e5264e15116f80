#include "partlog/eval.hpp"

#include <functional>

#include "partlog/errors.hpp"

namespace partlog {

bool eval_truth(const FormulaPtr& f, const std::map<std::string, bool>& valuation) {
    switch (f->kind()) {
    case Formula::Kind::Top:
        return true;
    case Formula::Kind::Bottom:
        return false;
    case Formula::Kind::Var: {
        auto it = valuation.find(f->name());
        if (it == valuation.end())
            throw UnboundVariableError("variable '" + f->name() + "' is unbound");
        return it->second;
    }
    case Formula::Kind::Apply: {
        std::vector<bool> inputs;
        inputs.reserve(f->args().size());
        for (const FormulaPtr& a : f->args())
            inputs.push_back(eval_truth(a, valuation));
        return f->table().eval(inputs);
    }
    }
    throw Error("unreachable formula kind");
}

Assignment::Assignment(UniversePtr universe) : universe_(std::move(universe)) {
    if (!universe_)
        throw Error("assignment needs a universe");
}

void Assignment::bind(const std::string& name, Partition p) {
    if (!same_universe(p.universe(), universe_))
        throw UniverseMismatchError("binding for '" + name +
                                    "' lives on a different universe");
    bindings_.insert_or_assign(name, std::move(p));
}

const Partition* Assignment::find(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
}

EvalMethod eval_method_from_name(const std::string& name) {
    if (name == "graph")
        return EvalMethod::Graph;
    if (name == "closure")
        return EvalMethod::Closure;
    if (name == "blocks")
        return EvalMethod::Blocks;
    throw Error("unknown method '" + name + "' (known: graph, closure, blocks)");
}

const char* eval_method_name(EvalMethod m) {
    switch (m) {
    case EvalMethod::Graph: return "graph";
    case EvalMethod::Closure: return "closure";
    case EvalMethod::Blocks: return "blocks";
    }
    return "?";
}

const Partition* EvalCache::find(const std::string& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
}

void EvalCache::insert(const std::string& key, const Partition& value) {
    map_.emplace(key, value);
}

namespace {

bool blocks_supported_table(const TruthTable& t) {
    return t == TruthTable::OR() || t == TruthTable::AND() || t == TruthTable::IMP();
}

void check_blocks_method(const FormulaPtr& f) {
    if (f->kind() == Formula::Kind::Apply) {
        if (!blocks_supported_table(f->table()))
            throw MethodUnsupportedError(
                "blocks method covers only |, & and ->; formula uses op\"" +
                f->table().to_string() + "\"");
        for (const FormulaPtr& a : f->args())
            check_blocks_method(a);
    }
}

std::string cache_key(const TruthTable& t, const std::vector<Partition>& args) {
    std::string key = t.to_string();
    for (const Partition& p : args) {
        key.push_back('/');
        key += p.key();
    }
    return key;
}

Partition eval_node(const FormulaPtr& f, const Assignment& a, EvalMethod method,
                    EvalCache* cache) {
    switch (f->kind()) {
    case Formula::Kind::Top:
        return discrete_partition(a.universe());
    case Formula::Kind::Bottom:
        return indiscrete_partition(a.universe());
    case Formula::Kind::Var: {
        const Partition* p = a.find(f->name());
        if (!p)
            throw UnboundVariableError("variable '" + f->name() + "' is unbound");
        return *p;
    }
    case Formula::Kind::Apply: {
        std::vector<Partition> argvals;
        argvals.reserve(f->args().size());
        for (const FormulaPtr& arg : f->args())
            argvals.push_back(eval_node(arg, a, method, cache));
        std::string key;
        if (cache) {
            key = cache_key(f->table(), argvals);
            if (const Partition* hit = cache->find(key))
                return *hit;
        }
        Partition result = [&] {
            switch (method) {
            case EvalMethod::Graph:
                return graph_method(f->table(), argvals, a.universe());
            case EvalMethod::Closure:
                return closure_method(f->table(), argvals, a.universe());
            case EvalMethod::Blocks:
                if (f->table() == TruthTable::OR())
                    return join_blocks(argvals[0], argvals[1]);
                if (f->table() == TruthTable::AND())
                    return meet_blocks(argvals[0], argvals[1]);
                return implication_blocks(argvals[0], argvals[1]);
            }
            throw Error("unreachable evaluation method");
        }();
        if (cache)
            cache->insert(key, result);
        return result;
    }
    }
    throw Error("unreachable formula kind");
}

}  // namespace

Partition eval_partition(const FormulaPtr& f, const Assignment& a, EvalMethod method,
                         EvalCache* cache) {
    if (method == EvalMethod::Blocks)
        check_blocks_method(f);
    if (cache && !same_universe(cache->universe(), a.universe()))
        throw UniverseMismatchError("evaluation cache is bound to a different universe");
    return eval_node(f, a, method, cache);
}

}  // namespace partlog
