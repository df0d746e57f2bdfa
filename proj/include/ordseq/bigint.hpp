#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordseq {

// Exact natural numbers for psi_k and rho values.
using BigCount = boost::multiprecision::cpp_int;

BigCount big_pow(std::uint64_t base, std::uint64_t exp);

std::string to_string(const BigCount& value);

// Exact digits when the value has at most `max_digits` digits, otherwise
// "<leading digits>e<decimal exponent>" with 20 leading digits.
std::string format_compact(const BigCount& value, std::size_t max_digits = 120);

// log10 for human-readable reporting only; never used in a pass/fail test.
double approx_log10(const BigCount& value);

}  // namespace ordseq
