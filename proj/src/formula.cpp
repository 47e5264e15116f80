#include "partlog/formula.hpp"

#include <cctype>
#include <functional>

#include "partlog/errors.hpp"

namespace partlog {

Formula::Formula(Kind kind, std::string name, std::optional<TruthTable> table,
                 std::vector<FormulaPtr> args)
    : kind_(kind), name_(std::move(name)), table_(std::move(table)), args_(std::move(args)) {}

bool is_valid_variable_name(const std::string& name) {
    if (name.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        return false;
    for (char c : name)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
            return false;
    return name != "0" && name != "1";
}

FormulaPtr Formula::var(const std::string& name) {
    if (!is_valid_variable_name(name))
        throw VariableError("invalid variable name '" + name + "'");
    return std::make_shared<Formula>(Kind::Var, name, std::nullopt, std::vector<FormulaPtr>{});
}

FormulaPtr Formula::top() {
    static const FormulaPtr t =
        std::make_shared<Formula>(Kind::Top, "", std::nullopt, std::vector<FormulaPtr>{});
    return t;
}

FormulaPtr Formula::bottom() {
    static const FormulaPtr b =
        std::make_shared<Formula>(Kind::Bottom, "", std::nullopt, std::vector<FormulaPtr>{});
    return b;
}

FormulaPtr Formula::apply(TruthTable table, std::vector<FormulaPtr> args) {
    if (args.size() != table.arity())
        throw ArityError("connective of arity " + std::to_string(table.arity()) + " applied to " +
                         std::to_string(args.size()) + " arguments");
    for (const FormulaPtr& a : args)
        if (!a)
            throw Error("null argument formula");
    return std::make_shared<Formula>(Kind::Apply, "", std::move(table), std::move(args));
}

FormulaPtr Formula::make_or(FormulaPtr a, FormulaPtr b) {
    return apply(TruthTable::OR(), {std::move(a), std::move(b)});
}
FormulaPtr Formula::make_and(FormulaPtr a, FormulaPtr b) {
    return apply(TruthTable::AND(), {std::move(a), std::move(b)});
}
FormulaPtr Formula::make_imp(FormulaPtr a, FormulaPtr b) {
    return apply(TruthTable::IMP(), {std::move(a), std::move(b)});
}
FormulaPtr Formula::make_xor(FormulaPtr a, FormulaPtr b) {
    return apply(TruthTable::XOR(), {std::move(a), std::move(b)});
}

bool structurally_equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b)
        return true;
    if (!a || !b || a->kind() != b->kind())
        return false;
    switch (a->kind()) {
    case Formula::Kind::Var:
        return a->name() == b->name();
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
        return true;
    case Formula::Kind::Apply: {
        if (a->table() != b->table() || a->args().size() != b->args().size())
            return false;
        for (std::size_t i = 0; i < a->args().size(); ++i)
            if (!structurally_equal(a->args()[i], b->args()[i]))
                return false;
        return true;
    }
    }
    return false;
}

std::vector<std::string> free_variables(const FormulaPtr& f) {
    std::vector<std::string> out;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& node) {
        if (node->kind() == Formula::Kind::Var) {
            for (const std::string& seen : out)
                if (seen == node->name())
                    return;
            out.push_back(node->name());
        } else if (node->kind() == Formula::Kind::Apply) {
            for (const FormulaPtr& a : node->args())
                walk(a);
        }
    };
    walk(f);
    return out;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
    Ident,
    Const0,
    Const1,
    LParen,
    RParen,
    Comma,
    And,
    Or,
    Xor,
    Imp,
    OpTable,  // op"TF..." with the TF string in `text`
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    bool starts_with(const char* s) const {
        std::size_t len = std::char_traits<char>::length(s);
        return src.compare(pos, len, s) == 0;
    }

    Token next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
            ++pos;
        std::size_t start = pos;
        if (pos >= src.size())
            return {Tok::End, "", start};
        char c = src[pos];
        switch (c) {
        case '(': ++pos; return {Tok::LParen, "(", start};
        case ')': ++pos; return {Tok::RParen, ")", start};
        case ',': ++pos; return {Tok::Comma, ",", start};
        case '&': ++pos; return {Tok::And, "&", start};
        case '|': ++pos; return {Tok::Or, "|", start};
        case '+': ++pos; return {Tok::Xor, "+", start};
        case '-':
            if (pos + 1 < src.size() && src[pos + 1] == '>') {
                pos += 2;
                return {Tok::Imp, "->", start};
            }
            throw SyntaxError("unexpected '-' (did you mean '->'?)", start);
        default: break;
        }
        // Unicode aliases for the connectives.
        if (starts_with("\xE2\x88\xA7")) { pos += 3; return {Tok::And, "∧", start}; }
        if (starts_with("\xE2\x88\xA8")) { pos += 3; return {Tok::Or, "∨", start}; }
        if (starts_with("\xE2\x8A\x95")) { pos += 3; return {Tok::Xor, "⊕", start}; }
        if (starts_with("\xE2\x86\x92")) { pos += 3; return {Tok::Imp, "→", start}; }

        if (c == '0' || c == '1') {
            ++pos;
            if (pos < src.size() &&
                (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                throw SyntaxError(std::string("invalid token starting with '") + c + "'", start);
            return {c == '0' ? Tok::Const0 : Tok::Const1, std::string(1, c), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos;
            while (end < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
                ++end;
            std::string ident = src.substr(pos, end - pos);
            // op immediately followed by a quoted TF string is a generic
            // application; anywhere else op is an ordinary variable.
            if (ident == "op" && end < src.size() && src[end] == '"') {
                std::size_t close = src.find('"', end + 1);
                if (close == std::string::npos)
                    throw SyntaxError("unterminated truth-table string", end);
                std::string tf = src.substr(end + 1, close - end - 1);
                pos = close + 1;
                return {Tok::OpTable, tf, start};
            }
            pos = end;
            return {Tok::Ident, ident, start};
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", start);
    }
};

// ---------------------------------------------------------------------------
// Recursive-descent parser

struct Parser {
    Lexer lexer;
    Token tok;

    explicit Parser(const std::string& s) : lexer(s) { tok = lexer.next(); }

    void advance() { tok = lexer.next(); }

    void expect(Tok kind, const char* what) {
        if (tok.kind != kind)
            throw SyntaxError(std::string("expected ") + what + ", got '" +
                                  (tok.kind == Tok::End ? "end of input" : tok.text) + "'",
                              tok.pos);
        advance();
    }

    FormulaPtr parse() {
        FormulaPtr f = parse_imp();
        if (tok.kind != Tok::End)
            throw SyntaxError("unexpected trailing token '" + tok.text + "'", tok.pos);
        return f;
    }

    FormulaPtr parse_imp() {
        FormulaPtr left = parse_or_xor();
        if (tok.kind == Tok::Imp) {
            advance();
            return Formula::make_imp(std::move(left), parse_imp());  // right-associative
        }
        return left;
    }

    FormulaPtr parse_or_xor() {
        FormulaPtr left = parse_and();
        if (tok.kind != Tok::Or && tok.kind != Tok::Xor)
            return left;
        Tok level = tok.kind;  // | and + share the level but may not mix
        while (tok.kind == Tok::Or || tok.kind == Tok::Xor) {
            if (tok.kind != level)
                throw SyntaxError("'|' and '+' cannot be mixed without parentheses", tok.pos);
            advance();
            FormulaPtr right = parse_and();
            left = level == Tok::Or ? Formula::make_or(std::move(left), std::move(right))
                                    : Formula::make_xor(std::move(left), std::move(right));
        }
        return left;
    }

    FormulaPtr parse_and() {
        FormulaPtr left = parse_atom();
        while (tok.kind == Tok::And) {
            advance();
            left = Formula::make_and(std::move(left), parse_atom());
        }
        return left;
    }

    FormulaPtr parse_atom() {
        switch (tok.kind) {
        case Tok::Const0: advance(); return Formula::bottom();
        case Tok::Const1: advance(); return Formula::top();
        case Tok::Ident: {
            std::string name = tok.text;
            advance();
            return Formula::var(name);
        }
        case Tok::LParen: {
            advance();
            FormulaPtr inner = parse_imp();
            expect(Tok::RParen, "')'");
            return inner;
        }
        case Tok::OpTable: return parse_generic();
        default:
            throw SyntaxError("expected a formula, got '" +
                                  (tok.kind == Tok::End ? "end of input" : tok.text) + "'",
                              tok.pos);
        }
    }

    FormulaPtr parse_generic() {
        std::string tf = tok.text;
        std::size_t at = tok.pos;
        advance();
        std::size_t arity = 0;
        while ((std::size_t{1} << arity) < tf.size())
            ++arity;
        if (tf.empty() || (std::size_t{1} << arity) != tf.size())
            throw SyntaxError("truth-table string length must be a power of two, got " +
                                  std::to_string(tf.size()),
                              at);
        for (char c : tf)
            if (c != 'T' && c != 'F')
                throw SyntaxError(std::string("truth-table strings use only 'T'/'F', got '") + c +
                                      "'",
                                  at);
        expect(Tok::LParen, "'(' after op\"...\"");
        std::vector<FormulaPtr> args;
        if (tok.kind != Tok::RParen) {
            args.push_back(parse_imp());
            while (tok.kind == Tok::Comma) {
                advance();
                args.push_back(parse_imp());
            }
        }
        expect(Tok::RParen, "')'");
        if (args.size() != arity)
            throw ArityError("op\"" + tf + "\" has arity " + std::to_string(arity) + " but got " +
                             std::to_string(args.size()) + " arguments");
        return Formula::apply(TruthTable::from_string(arity, tf), std::move(args));
    }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
    Parser p(text);
    return p.parse();
}

std::string print_formula(const FormulaPtr& f) {
    switch (f->kind()) {
    case Formula::Kind::Var:
        return f->name();
    case Formula::Kind::Top:
        return "1";
    case Formula::Kind::Bottom:
        return "0";
    case Formula::Kind::Apply: {
        const TruthTable& t = f->table();
        if (t.arity() == 2) {
            const char* infix = nullptr;
            if (t == TruthTable::AND())
                infix = " & ";
            else if (t == TruthTable::OR())
                infix = " | ";
            else if (t == TruthTable::XOR())
                infix = " + ";
            else if (t == TruthTable::IMP())
                infix = " -> ";
            if (infix)
                return "(" + print_formula(f->args()[0]) + infix + print_formula(f->args()[1]) +
                       ")";
        }
        std::string out = "op\"" + t.to_string() + "\"(";
        for (std::size_t i = 0; i < f->args().size(); ++i) {
            if (i)
                out += ", ";
            out += print_formula(f->args()[i]);
        }
        out += ")";
        return out;
    }
    }
    return "";
}

}  // namespace partlog
