#pragma once

#include <cstdint>
#include <string>

#include "ordseq/group.hpp"

namespace ordseq {

// Group expressions: atoms C<n>, Ab(k1,...), D<2m>, Dic<k>, Q8, Q16, S<m>, A<m>,
// Heis(p), M16, SD16, F20, F21, Aff(p,d,q), Cat(n,name), PSL34, joined by the
// direct-product operator x, with parentheses. Whitespace is ignored.
// Dic<k> names the dicyclic group of order k when 4 | k and of order 4k otherwise.

// Order of the group an expression denotes, without building it.
// Throws ParseError; saturates at UINT64_MAX.
std::uint64_t expression_order(const std::string& text);

// Builds the group. Throws ParseError, SizeLimitError when the order exceeds
// max_size (checked before construction) and the constructor errors otherwise.
FiniteGroup parse_group(const std::string& text, std::uint64_t max_size = kMaxGroupSize);

}  // namespace ordseq
