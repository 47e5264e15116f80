#ifndef PARTLOG_FORMULA_HPP
#define PARTLOG_FORMULA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partlog/truth_table.hpp"

namespace partlog {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST node: a variable, one of the constants 1/0, or a truth-table
// connective applied to argument formulas.
class Formula {
public:
    enum class Kind { Var, Top, Bottom, Apply };

    static FormulaPtr var(const std::string& name);
    static FormulaPtr top();
    static FormulaPtr bottom();
    // Throws ArityError when args do not match the table arity.
    static FormulaPtr apply(TruthTable table, std::vector<FormulaPtr> args);

    static FormulaPtr make_or(FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_imp(FormulaPtr a, FormulaPtr b);
    static FormulaPtr make_xor(FormulaPtr a, FormulaPtr b);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }              // Var
    const TruthTable& table() const { return *table_; }            // Apply
    const std::vector<FormulaPtr>& args() const { return args_; }  // Apply

    Formula(Kind kind, std::string name, std::optional<TruthTable> table,
            std::vector<FormulaPtr> args);

private:
    Kind kind_;
    std::string name_;
    std::optional<TruthTable> table_;
    std::vector<FormulaPtr> args_;
};

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b);

// Free variables in first-occurrence order (left-to-right, depth-first).
std::vector<std::string> free_variables(const FormulaPtr& f);

bool is_valid_variable_name(const std::string& name);

// Grammar: atoms are variables, 0, 1, parenthesized formulas, and generic
// applications op"<TFstring>"(f1,...,fk). Connectives by decreasing
// precedence: & ; then | and + at one level, left-associative and not
// mixable without parentheses; then -> right-associative. Unicode aliases
// for the four connectives are accepted.
FormulaPtr parse_formula(const std::string& text);

// Fully parenthesized canonical text; parse_formula(print_formula(f))
// is structurally equal to f.
std::string print_formula(const FormulaPtr& f);

}  // namespace partlog

#endif
