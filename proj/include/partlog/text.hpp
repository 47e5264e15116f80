#ifndef PARTLOG_TEXT_HPP
#define PARTLOG_TEXT_HPP

#include <string>

#include "partlog/partition.hpp"
#include "partlog/relation.hpp"

namespace partlog {

// Partition literals: block form {a,b|c,d}, rgs form [0,0,1,1], or the
// constants 0 (single block) and 1 (all singletons). Whitespace is ignored.
// Undeclared element names are an error.
Partition parse_partition(const std::string& text, const UniversePtr& u);

std::string format_partition(const Partition& p);  // {a,b|c|d}
std::string format_rgs(const Partition& p);        // [0,0,1,2]
std::string format_relation(const BinaryRelation& r);  // {(a,b),(b,a)}

}  // namespace partlog

#endif
