#include "partlog/universe.hpp"

#include <unordered_set>

#include "partlog/errors.hpp"

namespace partlog {

Universe::Universe(std::size_t n) {
    if (n == 0)
        throw Error("universe size must be at least 1");
    names_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names_.push_back("e" + std::to_string(i));
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw Error("universe size must be at least 1");
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty())
            throw Error("universe element names must be non-empty");
        if (!seen.insert(name).second)
            throw Error("duplicate element name '" + name + "'");
    }
}

std::size_t Universe::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return npos;
}

UniversePtr make_universe(std::size_t n) {
    return std::make_shared<const Universe>(n);
}

UniversePtr make_universe(std::vector<std::string> names) {
    return std::make_shared<const Universe>(std::move(names));
}

UniversePtr make_letter_universe(std::size_t n) {
    if (n == 0 || n > 26)
        return make_universe(n);
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    return make_universe(std::move(names));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

}  // namespace partlog
