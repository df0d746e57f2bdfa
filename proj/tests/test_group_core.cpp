#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <numeric>

#include "oracles.hpp"
#include "ordseq/catalog.hpp"
#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/field.hpp"
#include "ordseq/group_props.hpp"
#include "ordseq/isomorphism.hpp"
#include "ordseq/numtheory.hpp"
#include "ordseq/order_sequence.hpp"
#include "ordseq/permutation.hpp"

using namespace ordseq;

namespace {

std::vector<std::uint64_t> orders_of(const FiniteGroup& g) {
  std::vector<std::uint64_t> v(g.orders().begin(), g.orders().end());
  return oracle::sorted(v);
}

}  // namespace

TEST_CASE("number theory helpers agree with brute force") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(is_prime(n) == oracle::prime(n));
    CHECK(euler_phi(n) == oracle::phi(n));
    std::vector<std::uint64_t> ds;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) ds.push_back(d);
    CHECK(divisors(n) == ds);
    std::uint64_t back = 1;
    for (auto [p, e] : factorize(n)) back *= checked_pow(p, e);
    CHECK(back == n);
  }
  CHECK_THROWS_AS(checked_pow(2, 70), SizeLimitError);
  CHECK(smallest_prime_factor(91) == 7);
  CHECK(prime_power_part(360, 2) == 8);
}

TEST_CASE("cyclic groups") {
  CHECK(orders_of(cyclic(6)) == std::vector<std::uint64_t>{1, 2, 3, 3, 6, 6});
  CHECK(cyclic(1).size() == 1);
  CHECK(orders_of(cyclic(1)) == std::vector<std::uint64_t>{1});
  auto c12 = orders_of(cyclic(12));
  CHECK(std::count(c12.begin(), c12.end(), 12u) == 4);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    auto g = cyclic(n);
    CHECK(orders_of(g) == oracle::element_orders(g));
    for (auto d : divisors(n)) {
      auto v = orders_of(g);
      CHECK(static_cast<std::uint64_t>(std::count(v.begin(), v.end(), d)) == oracle::phi(d));
    }
  }
}

TEST_CASE("abelian groups match tuple enumeration") {
  CHECK(orders_of(abelian({4, 2})) == std::vector<std::uint64_t>{1, 2, 2, 2, 4, 4, 4, 4});
  CHECK(orders_of(abelian({2, 2})) == std::vector<std::uint64_t>{1, 2, 2, 2});
  CHECK(abelian({}).size() == 1);
  CHECK(orders_of(abelian({4, 4})) == orders_of(direct_product(cyclic(2), dicyclic(8))));
  for (auto ms : std::vector<std::vector<std::uint64_t>>{{2, 3}, {6, 4}, {2, 2, 2}, {9, 3}, {5, 10}, {4, 6, 2}}) {
    auto g = abelian(ms);
    CHECK(orders_of(g) == oracle::abelian_orders(ms));
    CHECK(is_abelian(g));
  }
}

TEST_CASE("direct product order law") {
  std::vector<FiniteGroup> gs{cyclic(4), dihedral(6), dicyclic(8), alternating(4), abelian({2, 2}), cyclic(5)};
  for (const auto& g : gs)
    for (const auto& h : gs) {
      auto gh = direct_product(g, h);
      REQUIRE(gh.size() == g.size() * h.size());
      for (Element a = 0; a < g.size(); ++a)
        for (Element b = 0; b < h.size(); ++b)
          CHECK(gh.order(static_cast<Element>(a * h.size() + b)) == std::lcm(g.order(a), h.order(b)));
    }
  CHECK(is_isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)));
  CHECK(is_isomorphic(direct_product(dihedral(8), trivial_group()), dihedral(8)));
  auto a4c5 = direct_product(alternating(4), cyclic(5));
  CHECK(a4c5.size() == 60);
  CHECK_FALSE(is_nilpotent(a4c5));
}

TEST_CASE("semidirect products") {
  auto c3 = cyclic(3), c4 = cyclic(4);
  auto inv = power_map(c3, 2);
  auto dic = semidirect_product(c3, c4, cyclic_action(c3, c4, 1, inv));
  CHECK(orders_of(dic) == std::vector<std::uint64_t>{1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6});
  auto triv = semidirect_product(c3, c4, trivial_action(c3, c4));
  CHECK(is_isomorphic(triv, direct_product(c3, c4)));
  auto c5 = cyclic(5);
  auto f20 = semidirect_product(c5, c4, cyclic_action(c5, c4, 1, power_map(c5, 2)));
  auto v = orders_of(f20);
  CHECK(std::count(v.begin(), v.end(), 4u) == 10);
  check_group_axioms(f20);
  // x -> x^2 on C3 has order 2, so it cannot be the image of a generator of C3.
  CHECK_THROWS_AS(cyclic_action(c3, c3, 1, power_map(c3, 2)), PreconditionError);
  GroupAction bad{{power_map(c4, 1), power_map(c4, 2)}};
  CHECK_THROWS_AS(validate_action(c4, cyclic(2), bad), PreconditionError);
}

TEST_CASE("quotients") {
  auto q8 = dicyclic(8);
  auto z = center(q8);
  CHECK(z.size() == 2);
  CHECK(is_isomorphic(quotient(q8, z), abelian({2, 2})));
  std::vector<Element> trivial{kIdentity};
  CHECK(is_isomorphic(quotient(dihedral(8), trivial), dihedral(8)));
  auto s3 = symmetric(3);
  std::vector<Element> not_normal;
  for (Element x = 0; x < s3.size(); ++x)
    if (s3.order(x) == 2) {
      not_normal = {kIdentity, x};
      break;
    }
  CHECK_THROWS_AS(quotient(s3, not_normal), PreconditionError);
  std::vector<Element> not_subgroup{kIdentity, 1, 2};
  CHECK_THROWS_AS(quotient(cyclic(8), not_subgroup), PreconditionError);
}

TEST_CASE("permutation groups against an independent closure") {
  auto a5 = permutation_group({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), Permutation::from_cycles(5, {{0, 1, 2}})});
  CHECK(a5.size() == 60);
  CHECK(is_isomorphic(a5, alternating(5)));
  auto closure_a5 = oracle::perm_closure({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  std::vector<std::uint64_t> expect;
  for (const auto& p : closure_a5) expect.push_back(oracle::perm_order(p));
  CHECK(orders_of(a5) == oracle::sorted(expect));
  CHECK(permutation_group(std::vector<Permutation>{}).size() == 1);
  auto s4 = symmetric(4);
  CHECK(s4.size() == 24);
  CHECK(exponent(s4) == 12);
  CHECK(orders_of(s4) == oracle::element_orders(s4));
  auto p = Permutation::from_cycles(6, {{0, 1}, {2, 3, 4}});
  CHECK(p.order() == 6);
  CHECK(p * p.inverse() == Permutation::identity(6));
}

TEST_CASE("standard families") {
  CHECK(orders_of(dicyclic(8)) == std::vector<std::uint64_t>{1, 2, 4, 4, 4, 4, 4, 4});
  auto h3 = heisenberg(3);
  CHECK(h3.size() == 27);
  CHECK(exponent(h3) == 3);
  CHECK(orders_of(dihedral(12)) == std::vector<std::uint64_t>{1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6});
  CHECK(orders_of(standard_family("F21")) == oracle::element_orders(standard_family(Family::kFrobenius21)));
  CHECK_THROWS(standard_family("nonsense"));
  CHECK(alternating(8).size() == 20160);
  for (auto fam : {Family::kModular16, Family::kSemidihedral16, Family::kFrobenius20, Family::kFrobenius21})
    check_group_axioms(standard_family(fam));
  for (std::uint64_t n : {4u, 6u, 10u, 16u}) CHECK(orders_of(dihedral(n)) == oracle::element_orders(dihedral(n)));
}

TEST_CASE("element orders, exponent, Sylow subgroups") {
  auto c12 = cyclic(12);
  CHECK(element_order(c12, kIdentity) == 1);
  CHECK(element_order(c12, 1) == 12);
  CHECK(exponent(symmetric(3)) == 6);
  CHECK(exponent(abelian({2, 2})) == 2);
  auto s4 = symmetric(4);
  auto p2 = sylow_subgroup(s4, 2);
  CHECK(p2.size() == 8);
  CHECK(is_isomorphic(p2, dihedral(8)));
  CHECK(is_isomorphic(sylow_subgroup(c12, 3), cyclic(3)));
  auto a4 = alternating(4);
  auto v4 = sylow_subgroup_elements(a4, 2);
  CHECK(v4.size() == 4);
  CHECK(is_normal(a4, v4));
  CHECK_THROWS_AS(sylow_subgroup(c12, 5), PreconditionError);
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(dicyclic(8)));
  CHECK_FALSE(is_nilpotent(alternating(4)));
  CHECK(is_nilpotent(cyclic(6)));
  for (auto n : supported_orders())
    for (const auto& g : catalog(n)) CHECK(is_nilpotent(g.group) == nilpotent_by_element_counts(g.group));
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(is_isomorphic(cyclic(4), abelian({2, 2})));
  CHECK(is_isomorphic(affine_frobenius_group(2, 2, 3), alternating(4)));
  CHECK(orders_of(heisenberg(3)) == orders_of(abelian({3, 3, 3})));
  CHECK_FALSE(is_isomorphic(heisenberg(3), abelian({3, 3, 3})));
  auto iso = find_isomorphism(dihedral(6), symmetric(3));
  REQUIRE(iso);
  auto d6 = dihedral(6), s3 = symmetric(3);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) CHECK((*iso)[d6.mul(a, b)] == s3.mul((*iso)[a], (*iso)[b]));
}

TEST_CASE("catalogs are complete and duplicate-free") {
  const std::map<std::uint64_t, std::size_t> counts{{1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},
                                                    {8, 5},  {9, 2},  {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2},
                                                    {15, 1}, {16, 14}, {20, 5}, {21, 2}, {60, 13}};
  for (auto [n, count] : counts) {
    const auto& cat = catalog(n);
    CHECK(cat.size() == count);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      CHECK(cat[i].group.size() == n);
      check_group_axioms(cat[i].group);
      for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(is_isomorphic(cat[i].group, cat[j].group));
    }
  }
  CHECK(catalog(15).front().name == "C15");
  CHECK_THROWS_AS(catalog(18), UnsupportedOrderError);
  CHECK_THROWS_AS(catalog_group(8, "Nope"), PreconditionError);
}

TEST_CASE("order-60 SmallGroup ids") {
  std::set<int> ids;
  for (const auto& g : catalog(60)) {
    auto id = small_group_id(60, g.name);
    REQUIRE(id);
    ids.insert(*id);
  }
  CHECK(ids.size() == 13);
  CHECK(small_group_id(60, "C60") == 4);
  CHECK(small_group_id(60, "A5") == 5);
  CHECK(small_group_id(60, "C2xC30") == 13);
  CHECK(small_group_id(60, "C5xA4") == 9);
}

TEST_CASE("nilpotent groups of a given order") {
  CHECK(nilpotent_groups_of_order(60).size() == 2);
  CHECK(nilpotent_groups_of_order(13).size() == 1);
  CHECK(nilpotent_groups_of_order(12).size() == 2);
  CHECK(nilpotent_groups_of_order(24).size() == 5);
  for (const auto& g : nilpotent_groups_of_order(40)) CHECK(is_nilpotent(g.group));
  CHECK_THROWS_AS(nilpotent_groups_of_order(32), UnsupportedOrderError);
}

TEST_CASE("catalog serialization round-trips") {
  auto dir = std::filesystem::temp_directory_path() / "ordseq-test-cache";
  std::filesystem::create_directories(dir);
  auto path = dir / "catalog-12.txt";
  save_catalog(path, 12, catalog(12));
  auto loaded = load_catalog(path, 12);
  REQUIRE(loaded);
  REQUIRE(loaded->size() == catalog(12).size());
  for (std::size_t i = 0; i < loaded->size(); ++i) {
    CHECK((*loaded)[i].name == catalog(12)[i].name);
    CHECK(orders_of((*loaded)[i].group) == orders_of(catalog(12)[i].group));
    CHECK(is_isomorphic((*loaded)[i].group, catalog(12)[i].group));
  }
  CHECK_FALSE(load_catalog(path, 13));
  CHECK_FALSE(load_catalog(dir / "missing.txt", 12));
  std::filesystem::remove_all(dir);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(cyclic(30000), SizeLimitError);
  CHECK_THROWS_AS(direct_product(cyclic(200), cyclic(200)), SizeLimitError);
}
