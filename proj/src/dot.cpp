#include "partlog/dot.hpp"

#include <sstream>

namespace partlog {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string render_eval_dot(const FormulaPtr& f, const Assignment& a, EvalMethod method) {
    const UniversePtr& u = a.universe();
    const std::size_t n = u->size();

    // The top-level arguments supply the labels; for a leaf formula the leaf
    // itself does, and its indit pairs are the kept links.
    std::vector<Partition> argvals;
    std::vector<std::string> subscripts;
    const bool is_apply = f->kind() == Formula::Kind::Apply;
    if (is_apply) {
        for (std::size_t i = 0; i < f->args().size(); ++i) {
            const FormulaPtr& arg = f->args()[i];
            argvals.push_back(eval_partition(arg, a, method));
            subscripts.push_back(arg->kind() == Formula::Kind::Var ? arg->name()
                                                                   : std::to_string(i + 1));
        }
    } else {
        argvals.push_back(eval_partition(f, a, method));
        subscripts.push_back(f->kind() == Formula::Kind::Var ? f->name() : print_formula(f));
    }

    auto keep = [&](std::uint32_t x, std::uint32_t y) {
        if (!is_apply)
            return argvals[0].rgs()[x] == argvals[0].rgs()[y];
        std::vector<bool> labels(argvals.size());
        for (std::size_t i = 0; i < argvals.size(); ++i)
            labels[i] = argvals[i].rgs()[x] != argvals[i].rgs()[y];
        return !f->table().eval(labels);
    };

    std::ostringstream out;
    out << "graph partition_op {\n";
    out << "  label=\"" << escape(print_formula(f)) << "\";\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < n; ++i)
        out << "  \"" << escape(u->name(i)) << "\";\n";
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = x + 1; y < n; ++y) {
            out << "  \"" << escape(u->name(x)) << "\" -- \"" << escape(u->name(y)) << "\"";
            std::string label;
            for (std::size_t i = 0; i < argvals.size(); ++i) {
                if (i)
                    label += ",";
                label += argvals[i].rgs()[x] != argvals[i].rgs()[y] ? "T_" : "F_";
                label += subscripts[i];
            }
            out << " [label=\"" << escape(label) << "\"";
            if (keep(x, y))
                out << ", style=bold";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace partlog
