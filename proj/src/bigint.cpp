#include "ordseq/bigint.hpp"

#include <cmath>

namespace ordseq {

BigCount big_pow(std::uint64_t base, std::uint64_t exp) {
  BigCount result = 1;
  BigCount b = base;
  while (exp) {
    if (exp & 1) result *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return result;
}

std::string to_string(const BigCount& value) { return value.str(); }

std::string format_compact(const BigCount& value, std::size_t max_digits) {
  std::string digits = value.str();
  if (digits.size() <= max_digits) return digits;
  constexpr std::size_t kLead = 20;
  return digits.substr(0, kLead) + "e" + std::to_string(digits.size() - kLead);
}

double approx_log10(const BigCount& value) {
  std::string digits = value.str();
  if (digits == "0") return -INFINITY;
  std::size_t lead = std::min<std::size_t>(digits.size(), 17);
  double mantissa = std::stod(digits.substr(0, lead));
  return std::log10(mantissa) + static_cast<double>(digits.size() - lead);
}

}  // namespace ordseq
