#include "partlog/enumerate.hpp"

#include <algorithm>

#include "partlog/errors.hpp"

namespace partlog {

std::uint64_t bell_number(std::size_t n) {
    if (n > 25)
        throw CapExceededError("Bell numbers beyond n=25 overflow 64 bits");
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::uint64_t v : row)
            next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

bool next_rgs(std::vector<std::uint32_t>& rgs) {
    const std::size_t n = rgs.size();
    std::vector<std::uint32_t> prefix_max(n, 0);
    for (std::size_t i = 1; i < n; ++i)
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i - 1]);
    for (std::size_t i = n; i-- > 1;) {
        // rgs[i] may grow while it has not passed the prefix maximum.
        if (rgs[i] <= prefix_max[i]) {
            ++rgs[i];
            std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
            return true;
        }
    }
    std::fill(rgs.begin(), rgs.end(), 0);
    return false;
}

void for_each_partition(const UniversePtr& u,
                        const std::function<void(const Partition&)>& fn,
                        std::size_t cap) {
    const std::size_t n = u->size();
    if (n > cap)
        throw CapExceededError("universe size " + std::to_string(n) +
                               " exceeds the enumeration cap " + std::to_string(cap));
    std::vector<std::uint32_t> rgs(n, 0);
    do {
        fn(Partition(u, rgs));
    } while (next_rgs(rgs));
}

std::vector<Partition> all_partitions(const UniversePtr& u, std::size_t cap) {
    std::vector<Partition> out;
    for_each_partition(u, [&](const Partition& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace partlog
