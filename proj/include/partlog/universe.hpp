#ifndef PARTLOG_UNIVERSE_HPP
#define PARTLOG_UNIVERSE_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace partlog {

// A finite set of elements 0..n-1. Names are presentation only; all
// computation runs on indices.
class Universe {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit Universe(std::size_t n);                  // names default to e0..e{n-1}
    explicit Universe(std::vector<std::string> names); // names must be distinct

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::size_t index_of(const std::string& name) const;

    friend bool operator==(const Universe& a, const Universe& b) {
        return a.names_ == b.names_;
    }
    friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

private:
    std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::size_t n);
UniversePtr make_universe(std::vector<std::string> names);

// a, b, c, ... for n <= 26, e0-style beyond that.
UniversePtr make_letter_universe(std::size_t n);

// Same universe by value (fast path: same object).
bool same_universe(const UniversePtr& a, const UniversePtr& b);

}  // namespace partlog

#endif
