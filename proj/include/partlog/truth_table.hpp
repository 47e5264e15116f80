#ifndef PARTLOG_TRUTH_TABLE_HPP
#define PARTLOG_TRUTH_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace partlog {

// A k-ary Boolean function as an explicit output per input row. Row 0 is
// all-inputs-T and rows descend in binary with T as the high bit and the
// first argument as the most significant position, so the binary row order
// is TT, TF, FT, FF and the last row is all-inputs-F.
class TruthTable {
public:
    TruthTable(std::size_t arity, std::vector<bool> rows);

    // 'T'/'F' string of length 2^arity in row order. Throws LengthError /
    // CharacterError.
    static TruthTable from_string(std::size_t arity, const std::string& s);
    // OR, AND, IMP or XOR (case-insensitive). Throws Error on unknown names.
    static TruthTable named(const std::string& name);

    static const TruthTable& OR();   // TTTF
    static const TruthTable& AND();  // TFFF
    static const TruthTable& IMP();  // TFTT
    static const TruthTable& XOR();  // FTTF

    std::size_t arity() const { return arity_; }
    std::size_t row_count() const { return rows_.size(); }
    bool row_output(std::size_t row) const { return rows_[row]; }
    // Input value of argument `arg` on row `row` (T = true).
    bool row_input(std::size_t row, std::size_t arg) const;

    bool eval(const std::vector<bool>& inputs) const;

    std::string to_string() const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.arity_ == b.arity_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const TruthTable& a, const TruthTable& b) { return !(a == b); }

private:
    std::size_t arity_;
    std::vector<bool> rows_;
};

}  // namespace partlog

#endif
