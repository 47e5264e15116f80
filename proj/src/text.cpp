#include "partlog/text.hpp"

#include <cctype>

#include "partlog/errors.hpp"

namespace partlog {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(c);
    return out;
}

Partition parse_block_form(const std::string& s, const UniversePtr& u) {
    // s looks like {a,b|c,d} with the braces still on.
    std::string body = s.substr(1, s.size() - 2);
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<std::uint32_t> block;
    std::string name;
    auto flush_name = [&](std::size_t at) {
        if (name.empty())
            throw SyntaxError("empty element name in partition literal", at);
        std::size_t idx = u->index_of(name);
        if (idx == Universe::npos)
            throw SyntaxError("element '" + name + "' is not in the universe", at);
        block.push_back(static_cast<std::uint32_t>(idx));
        name.clear();
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == ',') {
            flush_name(i);
        } else if (c == '|') {
            flush_name(i);
            blocks.push_back(std::move(block));
            block.clear();
        } else {
            name.push_back(c);
        }
    }
    flush_name(body.size());
    blocks.push_back(std::move(block));
    return partition_from_blocks(u, blocks);
}

Partition parse_rgs_form(const std::string& s, const UniversePtr& u) {
    std::string body = s.substr(1, s.size() - 2);
    std::vector<std::uint32_t> rgs;
    std::string digits;
    auto flush = [&](std::size_t at) {
        if (digits.empty())
            throw SyntaxError("empty entry in rgs literal", at);
        unsigned long value = 0;
        try {
            value = std::stoul(digits);
        } catch (const std::exception&) {
            throw SyntaxError("rgs entry '" + digits + "' is out of range", at);
        }
        if (value > u->size())
            throw SyntaxError("rgs entry '" + digits + "' is out of range", at);
        rgs.push_back(static_cast<std::uint32_t>(value));
        digits.clear();
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == ',') {
            flush(i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "' in rgs literal", i);
        }
    }
    flush(body.size());
    if (rgs.size() != u->size())
        throw SyntaxError("rgs literal has " + std::to_string(rgs.size()) +
                              " entries for a universe of size " + std::to_string(u->size()),
                          0);
    try {
        return Partition(u, std::move(rgs));
    } catch (const Error& e) {
        throw SyntaxError(e.what(), 0);
    }
}

}  // namespace

Partition parse_partition(const std::string& text, const UniversePtr& u) {
    std::string s = strip_spaces(text);
    if (s.empty())
        throw SyntaxError("empty partition literal", 0);
    if (s == "0")
        return indiscrete_partition(u);
    if (s == "1")
        return discrete_partition(u);
    if (s.front() == '{' && s.back() == '}')
        return parse_block_form(s, u);
    if (s.front() == '[' && s.back() == ']')
        return parse_rgs_form(s, u);
    throw SyntaxError("partition literals are {a,b|c}, [0,0,1], 0 or 1; got '" + text + "'", 0);
}

std::string format_partition(const Partition& p) {
    const UniversePtr& u = p.universe();
    std::string out = "{";
    bool first_block = true;
    for (const auto& block : p.blocks()) {
        if (!first_block)
            out += "|";
        first_block = false;
        bool first = true;
        for (std::uint32_t e : block) {
            if (!first)
                out += ",";
            first = false;
            out += u->name(e);
        }
    }
    return out + "}";
}

std::string format_rgs(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.rgs().size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(p.rgs()[i]);
    }
    return out + "]";
}

std::string format_relation(const BinaryRelation& r) {
    const UniversePtr& u = r.universe();
    std::string out = "{";
    bool first = true;
    for (const auto& [a, b] : r.pairs()) {
        if (!first)
            out += ",";
        first = false;
        out += "(" + u->name(a) + "," + u->name(b) + ")";
    }
    return out + "}";
}

}  // namespace partlog
