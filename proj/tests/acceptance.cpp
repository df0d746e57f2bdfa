// Acceptance checks, one line per criterion. Usage: acceptance [criterion...]

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "ordseq/bench.hpp"
#include "ordseq/catalog.hpp"
#include "ordseq/constructors.hpp"
#include "ordseq/group_props.hpp"
#include "ordseq/isomorphism.hpp"
#include "ordseq/numtheory.hpp"
#include "ordseq/order_sequence.hpp"
#include "ordseq/partition.hpp"
#include "ordseq/poset.hpp"

using namespace ordseq;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("FAILED " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
  void absorb(const SuiteReport& r) {
    require(r.passed(), r.name + " (" + std::to_string(r.failures.size()) + " failures)");
    for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) details.push_back("  " + r.failures[i]);
  }
};

OrderSequence os(const FiniteGroup& g) { return order_sequence(g); }

std::string expanded_text(const OrderSequence& s) {
  std::string out = "(";
  for (auto o : s.expanded()) out += (out.size() > 1 ? "," : "") + std::to_string(o);
  return out + ")";
}

Outcome paper_sequences() {
  Outcome r;
  const auto dic = catalog_group(12, "Dic12").group;
  const std::vector<std::pair<std::string, std::pair<OrderSequence, std::vector<std::uint64_t>>>> cases{
      {"Z6", {os(cyclic(6)), {1, 2, 3, 3, 6, 6}}},
      {"S3", {os(symmetric(3)), {1, 2, 2, 2, 3, 3}}},
      {"Z3:Z4", {os(dic), {1, 2, 3, 3, 4, 4, 4, 4, 4, 4, 6, 6}}},
      {"A4", {os(alternating(4)), {1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3}}},
  };
  for (const auto& [name, c] : cases) {
    r.require(c.first.expanded() == c.second, "os(" + name + ") = " + expanded_text(c.first));
    r.require(c.first.expanded() == oracle::element_orders(name == "Z3:Z4" ? dic : name == "A4" ? alternating(4)
                                                                              : name == "S3" ? symmetric(3)
                                                                                             : cyclic(6)),
              "os(" + name + ") agrees with brute-force powering");
  }
  r.note("os(Z3:Z4) = " + expanded_text(os(dic)));
  return r;
}

Outcome strong_example() {
  Outcome r;
  const auto dic = os(catalog_group(12, "Dic12").group), a4 = os(alternating(4)), c12 = os(cyclic(12));
  r.require(dominates(dic, a4), "Dic3 dominates A4");
  const auto s = strong_domination(dic, a4);
  r.require(!s.strong, "Dic3 does not strongly dominate A4");
  r.require(!oracle::strongly_dominates(dic.expanded(), a4.expanded()), "matching oracle agrees");
  r.require(strongly_dominates(c12, a4) && strongly_dominates(c12, dic), "Z12 strongly dominates both");
  if (s.certificate) r.note("certificate: " + s.certificate->describe());
  return r;
}

Outcome order16() {
  Outcome r;
  r.absorb(suite_order16());
  const auto& cat = catalog(16);
  r.require(cat.size() == 14, "14 groups");
  std::set<std::string> seqs;
  for (const auto& g : cat) seqs.insert(format_sequence(os(g.group)));
  r.require(seqs.size() == 9, "9 sequence classes (got " + std::to_string(seqs.size()) + ")");
  r.require(os(catalog_group(16, "C4xC4").group) == os(catalog_group(16, "C2xQ8").group), "Z4xZ4 and Z2xQ8 share a sequence");
  return r;
}

Outcome order60() {
  Outcome r;
  r.absorb(suite_order60());
  const auto& cat = catalog(60);
  r.require(cat.size() == 13, "13 groups");
  std::vector<std::string> names;
  std::vector<OrderSequence> seqs;
  for (const auto& g : cat) {
    names.push_back(g.name);
    seqs.push_back(os(g.group));
  }
  const auto p = build_poset(names, [&](std::size_t i, std::size_t j) { return dominates(seqs[j], seqs[i]); });
  const auto ex = extremes(p);
  r.require(ex.unique_max && p.item(ex.maximal.front()).name == "C60", "unique maximum C60");
  std::size_t nilpotent = 0;
  for (const auto& g : cat) nilpotent += is_nilpotent(g.group);
  r.require(nilpotent == 2, "exactly 2 nilpotent groups");
  const auto a5 = p.index_of_member("A5");
  r.require(std::count(ex.minimal.begin(), ex.minimal.end(), a5) == 1 && ex.minimal.size() > 1, "A5 minimal, not uniquely");
  r.require(ex.minimal.size() == 4, "4 minimal classes");
  std::string minimal;
  for (auto i : ex.minimal) minimal += (minimal.empty() ? "" : ",") + p.item(i).name;
  r.note("minimal: " + minimal);
  return r;
}

Outcome partitions() {
  Outcome r;
  for (std::uint64_t p : {2u, 3u})
    for (unsigned n = 1; n <= 10; ++n) r.absorb(suite_partition(n, p));
  const auto a = cyclic_subgroup_counts(2, Partition({4, 1, 1})), c = cyclic_subgroup_counts(2, Partition({3, 3}));
  r.require(a.divisor_product == 20 && c.divisor_product == 16, "product of (r_i+1) is 20 and 16");
  const auto sa = abelian_order_sequence(2, Partition({4, 1, 1})), sc = abelian_order_sequence(2, Partition({3, 3}));
  r.require(!dominates(sa, sc) && !dominates(sc, sa), "sequences incomparable");
  r.note("cyc by element counts: Z16xZ2xZ2 = " + std::to_string(a.total) + ", Z8xZ8 = " + std::to_string(c.total));
  return r;
}

Outcome gap_bounds() {
  Outcome r;
  std::set<std::string> equality;
  for (auto n : supported_orders()) {
    if (n < 2) continue;
    const auto rep = suite_gap_bounds(n);
    r.absorb(rep);
    for (const auto& note : rep.notes)
      if (note.rfind("equality: ", 0) == 0) equality.insert(note.substr(10, note.find(' ', 10) - 10) + "@" + std::to_string(n));
  }
  r.require(equality == std::set<std::string>{"C2xC2@4", "C3xC3@9", "Q8@8"}, "equality set is {Z2xZ2, Z3xZ3, Q8}");
  r.require(psi(os(cyclic(4))) == 11 && psi(os(abelian({2, 2}))) == 7, "psi(Z4)=11, psi(Z2^2)=7");
  r.require(rho(os(cyclic(8))) == big_pow(2, 17) && rho(os(dicyclic(8))) == big_pow(2, 13), "rho(Z8)=2^17, rho(Q8)=2^13");
  return r;
}

Outcome improved_bound() {
  Outcome r;
  struct Case {
    std::string name;
    std::uint64_t m;
    FiniteGroup p_group;
    std::uint64_t p;
    bool equality;
  };
  const std::vector<Case> cases{{"Z2xZ2", 1, abelian({2, 2}), 2, true},
                                {"C3x(Z2xZ2)", 3, abelian({2, 2}), 2, true},
                                {"C5xQ8", 5, dicyclic(8), 2, false}};
  for (const auto& c : cases) {
    const auto g = direct_product(cyclic(c.m), c.p_group);
    const std::uint64_t n = g.size();
    const BigCount lhs = rho(os(g)) * big_pow(c.p, n / c.p * (c.p - 1));
    const BigCount rhs = rho(os(cyclic(n)));
    r.require(lhs <= rhs, c.name + " satisfies the bound");
    if (c.equality) r.require(lhs == rhs, c.name + " attains equality");
    else r.require(lhs < rhs, c.name + " is strict (lhs " + to_string(lhs) + (lhs == rhs ? " equals" : " vs") + " rhs " + to_string(rhs) + ")");
  }
  r.absorb(suite_improved_nilpotent_bound(default_nilpotent_bound_cases()));
  return r;
}

Outcome nonnilpotent_minimal() {
  Outcome r;
  for (std::uint64_t n : {12u, 24u, 60u}) {
    const auto h = minimal_nonnilpotent_group(n);
    const auto hs = os(h);
    r.require(!is_nilpotent(h), "minimal_nonnilpotent_group(" + std::to_string(n) + ") is non-nilpotent");
    for (const auto& g : nilpotent_groups_of_order(n))
      r.require(properly_dominates(os(g.group), hs), g.name + " properly dominates " + h.name());
  }
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto brute = oracle::witnesses(n);
    const auto w = nonnilpotent_order_witness(n);
    const bool agree = brute.empty() ? !w : w && std::tie(w->p, w->d, w->q) == std::tie(std::get<0>(brute.front()), std::get<1>(brute.front()), std::get<2>(brute.front()));
    r.require(agree, "witness search agrees at n=" + std::to_string(n));
  }
  return r;
}

Outcome nilpotency() {
  Outcome r;
  r.absorb(suite_nilpotency());
  return r;
}

Outcome products() {
  Outcome r;
  const auto rep = suite_products(1, 50, 20);
  r.absorb(rep);
  r.require(rep.cases == 70, "50 random and 20 coprime pairs checked");
  return r;
}

Outcome extension() {
  Outcome r;
  const auto rep = suite_extension(default_extension_cases());
  r.absorb(rep);
  r.require(rep.cases == 4, "four extension triples");
  return r;
}

Outcome antichain() {
  Outcome r;
  const auto rep = suite_antichain();
  r.absorb(rep);
  for (const auto& n : rep.notes) r.note(n);
  return r;
}

Outcome simple_pair() {
  Outcome r;
  const auto rep = suite_simple_pair();
  r.absorb(rep);
  for (const auto& n : rep.notes)
    if (n.rfind("domination", 0) == 0) r.note(n);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"paper sequences of Z6, S3, Z3:Z4, A4", paper_sequences},
      {"Dic3 dominates A4 but not strongly; Z12 strongly dominates both", strong_example},
      {"order 16: 14 groups, 9 sequence classes, 12 power graphs, shared pair", order16},
      {"order 60: 13 groups, top C60, 2 nilpotent, 4 minimal classes incl. A5", order60},
      {"partition lattice equivalence, cyc monotonicity, 20 vs 16", partitions},
      {"gap bounds and their equality cases", gap_bounds},
      {"improved nilpotent bound on Z2xZ2, C3xZ2xZ2, C5xQ8", improved_bound},
      {"minimal non-nilpotent groups and witness search", nonnilpotent_minimal},
      {"nilpotency from the order sequence", nilpotency},
      {"direct-product sequence algebra", products},
      {"extensions strongly dominated by the product sequence", extension},
      {"antichain minima at orders 12 and 36", antichain},
      {"A8 dominates PSL(3,4)", simple_pair},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));
  bool all_pass = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!selected.empty() && !selected.count(k + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass &= out.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << (k + 1) << ": " << (out.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << " [" << secs << "s]";
    std::cout << line.str() << "\n";
    for (const auto& d : out.details) std::cout << "    " << d << "\n";
  }
  return all_pass ? 0 : 1;
}
