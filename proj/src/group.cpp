#include "ordseq/group.hpp"

#include <random>
#include <stdexcept>

#include "ordseq/errors.hpp"

namespace ordseq {

FiniteGroup::FiniteGroup(std::string name, std::shared_ptr<const GroupBackend> backend)
    : name_(std::move(name)) {
  auto impl = std::make_shared<Impl>();
  const std::size_t n = backend->size();
  if (n == 0) throw PreconditionError("EmptyGroup", "a group needs at least one element");
  if (n > kMaxGroupSize)
    throw SizeLimitError("group '" + name_ + "' of order " + std::to_string(n) +
                         " exceeds the size limit " + std::to_string(kMaxGroupSize));
  impl->size = n;
  impl->backend = std::move(backend);

  if (n <= kTableLimit) {
    impl->table.resize(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) impl->table[std::size_t{a} * n + b] = impl->backend->mul(a, b);
  }

  auto mul = [&](Element a, Element b) {
    return impl->table.empty() ? impl->backend->mul(a, b) : impl->table[std::size_t{a} * n + b];
  };

  impl->orders.resize(n);
  impl->inverses.resize(n);
  for (Element g = 0; g < n; ++g) {
    std::uint32_t hint = impl->backend->order_hint(g);
    if (hint != 0) {
      impl->orders[g] = hint;
      continue;
    }
    std::uint32_t k = 1;
    for (Element x = g; x != kIdentity; x = mul(x, g)) {
      if (++k > n)
        throw std::logic_error("group '" + name_ + "': element " + std::to_string(g) +
                               " has no finite order within |G|");
    }
    impl->orders[g] = k;
  }
  for (Element g = 0; g < n; ++g) {
    // g^(o-1) is the inverse.
    Element x = kIdentity;
    Element base = g;
    std::uint64_t e = impl->orders[g] - 1;
    while (e) {
      if (e & 1) x = mul(x, base);
      base = mul(base, base);
      e >>= 1;
    }
    impl->inverses[g] = x;
  }
  impl_ = std::move(impl);

#ifndef NDEBUG
  check_group_axioms(*this);
#endif
}

Element FiniteGroup::power(Element g, std::uint64_t k) const {
  k %= order(g);
  Element x = kIdentity;
  Element base = g;
  while (k) {
    if (k & 1) x = mul(x, base);
    base = mul(base, base);
    k >>= 1;
  }
  return x;
}

FiniteGroup FiniteGroup::renamed(std::string name) const { return FiniteGroup(std::move(name), impl_); }

TableBackend::TableBackend(std::size_t n, std::vector<Element> table) : n_(n), table_(std::move(table)) {
  if (table_.size() != n * n) throw PreconditionError("BadTable", "table size is not n*n");
  for (Element x : table_)
    if (x >= n) throw PreconditionError("BadTable", "table entry out of range");
}

FiniteGroup table_group(std::string name, std::size_t n, std::vector<Element> table) {
  return FiniteGroup(std::move(name), std::make_shared<TableBackend>(n, std::move(table)));
}

void check_group_axioms(const FiniteGroup& g, std::uint64_t seed, std::size_t spot_checks) {
  const std::size_t n = g.size();
  auto fail = [&](const std::string& what) {
    throw std::logic_error("group '" + g.name() + "' violates " + what);
  };
  for (Element a = 0; a < n; ++a) {
    if (g.mul(kIdentity, a) != a || g.mul(a, kIdentity) != a)
      fail("identity law at element " + std::to_string(a));
    if (g.mul(g.inverse(a), a) != kIdentity || g.mul(a, g.inverse(a)) != kIdentity)
      fail("inverse law at element " + std::to_string(a));
    if (n % g.order(a) != 0) fail("Lagrange at element " + std::to_string(a));
  }
  auto assoc = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      fail("associativity at (" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + ")");
  };
  if (n <= 200) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        Element ab = g.mul(a, b);
        if (ab >= n) fail("closure");
        for (Element c = 0; c < n; ++c)
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
            fail("associativity at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")");
      }
    return;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < spot_checks; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(a, b) >= n) fail("closure");
    assoc(a, b, c);
  }
}

}  // namespace ordseq
