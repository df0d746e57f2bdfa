#include "ordseq/partition.hpp"

#include <algorithm>
#include <cctype>

#include "ordseq/errors.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {
namespace {

constexpr std::uint64_t kMaxSymbolicOrder = 1'000'000'000;

void require_same_size(const Partition& a, const Partition& c) {
  if (a.n() != c.n())
    throw PreconditionError("SizeMismatch", "partitions of " + std::to_string(a.n()) + " and " +
                                                std::to_string(c.n()));
}

// Prefix sums S_1..S_len of the conjugate partition, with S_0 = 0 in front.
std::vector<unsigned> conjugate_prefix_sums(const Partition& a) {
  const auto s = conjugate(a);
  std::vector<unsigned> prefix{0};
  for (auto x : s.parts()) prefix.push_back(prefix.back() + x);
  return prefix;
}

void require_symbolic_size(std::uint64_t p, const Partition& a) {
  if (!is_prime(p)) throw PreconditionError("NotPrime", std::to_string(p) + " is not prime");
  checked_pow(p, a.n(), kMaxSymbolicOrder);
}

}  // namespace

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw PreconditionError("NotPartition", "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("NotPartition", "parts must be non-increasing");
    n_ += parts_[i];
  }
}

Partition parse_partition(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    const std::size_t start = i;
    unsigned v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned>(text[i] - '0');
      if (v > 100000) throw ParseError("part too large", start, std::string(text.substr(start, i - start + 1)));
      ++i;
    }
    if (i == start)
      throw ParseError("expected a positive part", start, i < text.size() ? std::string(1, text[i]) : std::string{});
    if (v == 0) throw ParseError("parts must be positive", start, "0");
    parts.push_back(v);
    skip();
    if (i == text.size()) break;
    if (text[i] != '+') throw ParseError("expected '+'", i, std::string(1, text[i]));
    ++i;
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& a) {
  if (a.length() == 0) return "0";
  std::string out;
  for (auto x : a.parts()) out += (out.empty() ? "" : "+") + std::to_string(x);
  return out;
}

Partition conjugate(const Partition& a) {
  std::vector<unsigned> s;
  for (unsigned i = 1; i <= a.part(0); ++i) {
    unsigned count = 0;
    for (auto r : a.parts()) count += r >= i;
    s.push_back(count);
  }
  return Partition(std::move(s));
}

bool majorizes(const Partition& a, const Partition& c) {
  require_same_size(a, c);
  unsigned pa = 0, pc = 0;
  for (std::size_t i = 0; i < std::max(a.length(), c.length()); ++i) {
    pa += a.part(i);
    pc += c.part(i);
    if (pa < pc) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(unsigned n) {
  if (n > kMaxPartitionSize)
    throw SizeLimitError("partitions of " + std::to_string(n) + " exceed the limit " +
                         std::to_string(kMaxPartitionSize));
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

OrderSequence abelian_order_sequence(std::uint64_t p, const Partition& a) {
  require_symbolic_size(p, a);
  const auto prefix = conjugate_prefix_sums(a);
  std::vector<OrderSequence::Entry> entries{{1, 1}};
  for (std::size_t j = 1; j < prefix.size(); ++j)
    entries.emplace_back(checked_pow(p, static_cast<unsigned>(j)),
                         checked_pow(p, prefix[j]) - checked_pow(p, prefix[j - 1]));
  return OrderSequence::from_entries(std::move(entries));
}

CyclicSubgroupCounts cyclic_subgroup_counts(std::uint64_t p, const Partition& a) {
  require_symbolic_size(p, a);
  const auto prefix = conjugate_prefix_sums(a);
  CyclicSubgroupCounts out;
  out.total = 1;
  for (std::size_t j = 1; j < prefix.size(); ++j) {
    CyclicSubgroupCounts::Level level;
    level.order = checked_pow(p, static_cast<unsigned>(j));
    level.elements = checked_pow(p, prefix[j]) - checked_pow(p, prefix[j - 1]);
    level.cyclic_subgroups = level.elements / (checked_pow(p, static_cast<unsigned>(j - 1)) * (p - 1));
    out.total += level.cyclic_subgroups;
    out.levels.push_back(level);
  }
  out.divisor_product = 1;
  for (auto r : a.parts()) out.divisor_product *= r + 1;
  return out;
}

std::vector<Partition> box_move_chain(const Partition& a, const Partition& c) {
  if (!majorizes(a, c))
    throw PreconditionError("NotMajorized", format_partition(a) + " does not majorize " + format_partition(c));
  std::vector<Partition> chain;
  if (a == c) return chain;
  chain.push_back(a);
  std::vector<unsigned> b = a.parts();
  const std::size_t width = std::max(a.length(), c.length()) + 1;
  b.resize(width, 0);
  while (Partition(std::vector<unsigned>(b.begin(), std::find(b.begin(), b.end(), 0u))) != c) {
    // First row where b's prefix sum exceeds c's; rows up to i must give up a box.
    std::size_t i = 0;
    unsigned pb = 0, pc = 0;
    for (;; ++i) {
      pb += b[i];
      pc += c.part(i);
      if (pb > pc) break;
    }
    std::size_t j = i + 1;
    while (b[j] >= c.part(j)) ++j;
    // Take from the last row of length b[i] and give to the first row of length b[j].
    std::size_t source = i;
    while (source + 1 < width && b[source + 1] == b[i]) ++source;
    std::size_t dest = j;
    while (dest > 0 && b[dest - 1] == b[j]) --dest;
    --b[source];
    ++b[dest];
    chain.emplace_back(std::vector<unsigned>(b.begin(), std::find(b.begin(), b.end(), 0u)));
  }
  return chain;
}

Partition defining_partition(const OrderSequence& s, std::uint64_t p) {
  auto fail = [&](const std::string& why) {
    return PreconditionError("NotAbelianPGroupSequence", format_sequence(s) + ": " + why);
  };
  if (!is_prime(p)) throw PreconditionError("NotPrime", std::to_string(p) + " is not prime");
  if (s.multiplicity(1) != 1) throw fail("identity must occur once");
  std::vector<unsigned> conj;
  unsigned previous_exponent = 0;
  std::uint64_t cumulative = 1;
  std::uint64_t level = 1;
  for (std::size_t k = 1; k < s.entries().size(); ++k) {
    level *= p;
    if (s.entries()[k].first != level) throw fail("orders must be consecutive powers of " + std::to_string(p));
    cumulative += s.entries()[k].second;
    unsigned e = 0;
    std::uint64_t x = cumulative;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (x != 1) throw fail("cumulative count " + std::to_string(cumulative) + " is not a power of " + std::to_string(p));
    const unsigned part = e - previous_exponent;
    if (!conj.empty() && part > conj.back()) throw fail("cumulative exponents are not concave");
    conj.push_back(part);
    previous_exponent = e;
  }
  Partition result = conjugate(Partition(conj));
  if (abelian_order_sequence(p, result) != s) throw fail("no abelian p-group has this sequence");
  return result;
}

std::vector<std::uint64_t> prime_power_invariants(std::uint64_t p, const Partition& a) {
  std::vector<std::uint64_t> out;
  for (auto r : a.parts()) out.push_back(checked_pow(p, r, 25000));
  return out;
}

}  // namespace ordseq
