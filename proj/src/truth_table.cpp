#include "partlog/truth_table.hpp"

#include <algorithm>
#include <cctype>

#include "partlog/errors.hpp"

namespace partlog {

namespace {
constexpr std::size_t kMaxArity = 16;
}

TruthTable::TruthTable(std::size_t arity, std::vector<bool> rows)
    : arity_(arity), rows_(std::move(rows)) {
    if (arity_ > kMaxArity)
        throw LengthError("truth-table arity " + std::to_string(arity_) + " exceeds " +
                          std::to_string(kMaxArity));
    if (rows_.size() != (std::size_t{1} << arity_))
        throw LengthError("truth table needs exactly 2^arity rows");
}

TruthTable TruthTable::from_string(std::size_t arity, const std::string& s) {
    if (arity > kMaxArity)
        throw LengthError("truth-table arity " + std::to_string(arity) + " exceeds " +
                          std::to_string(kMaxArity));
    if (s.size() != (std::size_t{1} << arity))
        throw LengthError("truth-table string for arity " + std::to_string(arity) +
                          " must have length " + std::to_string(std::size_t{1} << arity) +
                          ", got " + std::to_string(s.size()));
    std::vector<bool> rows(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'T')
            rows[i] = true;
        else if (s[i] == 'F')
            rows[i] = false;
        else
            throw CharacterError(std::string("truth-table strings use only 'T'/'F', got '") +
                                 s[i] + "'");
    }
    return TruthTable(arity, std::move(rows));
}

TruthTable TruthTable::named(const std::string& name) {
    std::string up = name;
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (up == "OR")
        return OR();
    if (up == "AND")
        return AND();
    if (up == "IMP")
        return IMP();
    if (up == "XOR")
        return XOR();
    throw Error("unknown operation name '" + name + "' (known: OR, AND, IMP, XOR)");
}

const TruthTable& TruthTable::OR() {
    static const TruthTable t = from_string(2, "TTTF");
    return t;
}

const TruthTable& TruthTable::AND() {
    static const TruthTable t = from_string(2, "TFFF");
    return t;
}

const TruthTable& TruthTable::IMP() {
    static const TruthTable t = from_string(2, "TFTT");
    return t;
}

const TruthTable& TruthTable::XOR() {
    static const TruthTable t = from_string(2, "FTTF");
    return t;
}

bool TruthTable::row_input(std::size_t row, std::size_t arg) const {
    // Row r encodes input value 2^k - 1 - r with the first argument as the
    // high bit.
    std::size_t value = rows_.size() - 1 - row;
    return ((value >> (arity_ - 1 - arg)) & 1) != 0;
}

bool TruthTable::eval(const std::vector<bool>& inputs) const {
    if (inputs.size() != arity_)
        throw ArityMismatchError("expected " + std::to_string(arity_) + " inputs, got " +
                                 std::to_string(inputs.size()));
    std::size_t value = 0;
    for (std::size_t i = 0; i < arity_; ++i)
        if (inputs[i])
            value |= std::size_t{1} << (arity_ - 1 - i);
    return rows_[rows_.size() - 1 - value];
}

std::string TruthTable::to_string() const {
    std::string s;
    s.reserve(rows_.size());
    for (bool v : rows_)
        s.push_back(v ? 'T' : 'F');
    return s;
}

}  // namespace partlog
