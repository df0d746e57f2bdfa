#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/order_sequence.hpp"
#include "ordseq/partition.hpp"

using namespace ordseq;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

std::vector<std::uint64_t> invariants(std::uint64_t p, const std::vector<unsigned>& parts) {
  std::vector<std::uint64_t> out;
  for (auto r : parts) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < r; ++i) v *= p;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("partition values") {
  CHECK_THROWS_AS(P({1, 2}), PreconditionError);
  CHECK_THROWS_AS(P({2, 0}), PreconditionError);
  CHECK(parse_partition("4+2+1") == P({4, 2, 1}));
  CHECK(parse_partition("1+4+2") == P({4, 2, 1}));
  CHECK(format_partition(P({3, 3})) == "3+3");
  CHECK_THROWS_AS(parse_partition("4+x"), ParseError);
  CHECK_THROWS_AS(parse_partition("4++1"), ParseError);
}

TEST_CASE("conjugates") {
  CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
  CHECK(conjugate(P({5})) == P({1, 1, 1, 1, 1}));
  CHECK(conjugate(P({2, 2})) == P({2, 2}));
  for (unsigned n = 1; n <= 12; ++n)
    for (const auto& a : oracle::partitions(n)) {
      CHECK(conjugate(P(a)).parts() == oracle::conjugate(a));
      CHECK(conjugate(conjugate(P(a))) == P(a));
    }
}

TEST_CASE("majorization") {
  CHECK(majorizes(P({5}), P({4, 1})));
  CHECK(majorizes(P({4, 1}), P({3, 2})));
  CHECK_FALSE(majorizes(P({2, 2, 2}), P({3, 1, 1, 1})));
  CHECK_FALSE(majorizes(P({3, 1, 1, 1}), P({2, 2, 2})));
  CHECK(majorizes(P({3, 1}), P({3, 1})));
  CHECK_THROWS_AS(majorizes(P({3}), P({2, 1, 1})), PreconditionError);
  for (unsigned n = 1; n <= 9; ++n) {
    const auto ps = oracle::partitions(n);
    for (const auto& a : ps)
      for (const auto& c : ps) {
        CHECK(majorizes(P(a), P(c)) == oracle::majorizes(a, c));
        if (majorizes(P(a), P(c)) && majorizes(P(c), P(a))) CHECK(a == c);
      }
  }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(1) == std::vector<Partition>{P({1})});
  CHECK(partitions_of(10).size() == 42);
  // Partition numbers by Euler's pentagonal recurrence.
  std::vector<long long> pn(31, 0);
  pn[0] = 1;
  for (int m = 1; m <= 30; ++m)
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long long sign = k % 2 ? 1 : -1;
      pn[m] += sign * pn[m - g1];
      if (g2 <= m) pn[m] += sign * pn[m - g2];
    }
  for (unsigned n = 1; n <= 30; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(pn[n]));
  for (unsigned n = 1; n <= 10; ++n) {
    std::vector<Partition> expect;
    for (const auto& a : oracle::partitions(n)) expect.push_back(P(a));
    CHECK(partitions_of(n) == expect);
  }
  CHECK_THROWS_AS(partitions_of(61), SizeLimitError);
}

TEST_CASE("element counts of abelian p-groups") {
  CHECK(format_sequence(abelian_order_sequence(2, P({2, 1}))) == "1:1,2:3,4:4");
  CHECK(format_sequence(abelian_order_sequence(3, P({1, 1, 1}))) == "1:1,3:26");
  const auto a = abelian_order_sequence(2, P({4, 1, 1})), c = abelian_order_sequence(2, P({3, 3}));
  CHECK_FALSE(dominates(a, c));
  CHECK_FALSE(dominates(c, a));
  for (std::uint64_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 6; ++n)
      for (const auto& parts : oracle::partitions(n)) {
        const auto inv = invariants(p, parts);
        std::uint64_t size = 1;
        for (auto k : inv) size *= k;
        if (size > 3200) continue;
        CHECK(abelian_order_sequence(p, P(parts)).expanded() == oracle::abelian_orders(inv));
      }
  CHECK_THROWS_AS(abelian_order_sequence(2, P({40})), SizeLimitError);
  CHECK_THROWS_AS(abelian_order_sequence(4, P({1})), PreconditionError);
}

TEST_CASE("cyclic subgroup counts") {
  CHECK(cyclic_subgroup_counts(2, P({4, 1, 1})).total == 20);
  CHECK(cyclic_subgroup_counts(2, P({4, 1, 1})).divisor_product == 20);
  CHECK(cyclic_subgroup_counts(2, P({3, 3})).divisor_product == 16);
  CHECK(cyclic_subgroup_counts(3, P({5})).total == 6);
  for (std::uint64_t p : {2u, 3u})
    for (unsigned n = 1; n <= 6; ++n)
      for (const auto& parts : oracle::partitions(n)) {
        const auto counts = cyclic_subgroup_counts(p, P(parts));
        const auto orders = oracle::abelian_orders(invariants(p, parts));
        CHECK(counts.total == oracle::cyclic_subgroups(orders));
        std::uint64_t prod = 1;
        for (auto r : parts) prod *= r + 1;
        CHECK(counts.divisor_product == prod);
        for (const auto& level : counts.levels)
          CHECK(level.elements == static_cast<std::uint64_t>(std::count(orders.begin(), orders.end(), level.order)));
      }
}

TEST_CASE("box-move chains") {
  CHECK(box_move_chain(P({3}), P({1, 1, 1})) == std::vector<Partition>{P({3}), P({2, 1}), P({1, 1, 1})});
  CHECK(box_move_chain(P({2, 1}), P({2, 1})).empty());
  CHECK(box_move_chain(P({4, 2, 1}), P({3, 2, 1, 1})) == std::vector<Partition>{P({4, 2, 1}), P({3, 2, 1, 1})});
  CHECK_THROWS_AS(box_move_chain(P({2, 2, 2}), P({3, 1, 1, 1})), PreconditionError);
  for (unsigned n = 1; n <= 9; ++n) {
    const auto ps = oracle::partitions(n);
    for (const auto& a : ps)
      for (const auto& c : ps) {
        if (!oracle::majorizes(a, c) || a == c) continue;
        const auto chain = box_move_chain(P(a), P(c));
        REQUIRE(chain.size() >= 2);
        CHECK(chain.front() == P(a));
        CHECK(chain.back() == P(c));
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
          auto x = chain[k].parts(), y = chain[k + 1].parts();
          const std::size_t w = std::max(x.size(), y.size());
          x.resize(w, 0);
          y.resize(w, 0);
          int moved_out = -1, moved_in = -1, other = 0;
          for (std::size_t i = 0; i < w; ++i) {
            if (x[i] == y[i] + 1) moved_out = static_cast<int>(i);
            else if (y[i] == x[i] + 1) moved_in = static_cast<int>(i);
            else if (x[i] != y[i]) ++other;
          }
          CHECK(other == 0);
          CHECK(moved_out >= 0);
          CHECK(moved_in > moved_out);
          CHECK(oracle::majorizes(chain[k].parts(), chain[k + 1].parts()));
        }
      }
  }
}

TEST_CASE("defining partitions") {
  CHECK(defining_partition(order_sequence(abelian({4, 2})), 2) == P({2, 1}));
  CHECK(defining_partition(parse_sequence("1:1,7:6"), 7) == P({1}));
  for (std::uint64_t p : {2u, 3u, 5u})
    for (unsigned n = 1; n <= 12; ++n) {
      std::set<std::string> seen;
      for (const auto& a : partitions_of(n)) {
        const auto s = abelian_order_sequence(p, a);
        CHECK(defining_partition(s, p) == a);
        CHECK(seen.insert(format_sequence(s)).second);
      }
    }
  CHECK_THROWS_AS(defining_partition(order_sequence(symmetric(3)), 2), PreconditionError);
  CHECK_THROWS_AS(defining_partition(parse_sequence("1:1,2:1,4:6"), 2), PreconditionError);
}

TEST_CASE("prime power invariants") {
  CHECK(prime_power_invariants(3, P({2, 1})) == std::vector<std::uint64_t>{9, 3});
}
