#include "ordseq/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "ordseq/errors.hpp"

namespace ordseq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

std::uint64_t prime_power_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base)
      throw SizeLimitError("power " + std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds limit " + std::to_string(limit));
    r *= base;
  }
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace ordseq
