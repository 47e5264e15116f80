#ifndef PARTLOG_ENUMERATE_HPP
#define PARTLOG_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "partlog/partition.hpp"

namespace partlog {

// Bell(10) = 115975 keeps exhaustive sweeps desk-scale.
inline constexpr std::size_t kDefaultEnumerationCap = 10;

// Bell number B(n); throws CapExceededError past n = 25 (64-bit overflow).
std::uint64_t bell_number(std::size_t n);

// Advance a restricted-growth sequence to its lexicographic successor in
// place. Returns false after wrapping back to all zeros.
bool next_rgs(std::vector<std::uint32_t>& rgs);

// Every partition of u exactly once, in lexicographic rgs order (so the
// indiscrete partition 0 comes first and the discrete partition 1 last).
void for_each_partition(const UniversePtr& u,
                        const std::function<void(const Partition&)>& fn,
                        std::size_t cap = kDefaultEnumerationCap);

std::vector<Partition> all_partitions(const UniversePtr& u,
                                      std::size_t cap = kDefaultEnumerationCap);

}  // namespace partlog

#endif
