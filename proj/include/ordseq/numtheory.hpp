#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ordseq {

using PrimePower = std::pair<std::uint64_t, unsigned>;  // (p, e)

bool is_prime(std::uint64_t n);
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t smallest_prime_factor(std::uint64_t n);

// p-part of n: the largest power of p dividing n.
std::uint64_t prime_power_part(std::uint64_t n, std::uint64_t p);

// Returns true when n is 1 or a power of p.
bool is_power_of(std::uint64_t n, std::uint64_t p);

// base^exp, throwing SizeLimitError when the result would exceed `limit`.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::uint64_t limit = UINT64_MAX);

// Saturating multiply used for size predictions.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

}  // namespace ordseq
