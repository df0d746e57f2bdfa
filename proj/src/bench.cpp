#include "ordseq/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/field.hpp"
#include "ordseq/graphs.hpp"
#include "ordseq/group_props.hpp"
#include "ordseq/isomorphism.hpp"
#include "ordseq/numtheory.hpp"
#include "ordseq/order_sequence.hpp"
#include "ordseq/partition.hpp"
#include "ordseq/poset.hpp"

namespace ordseq {

std::string SuiteReport::to_text() const {
  std::ostringstream out;
  out << (passed() ? "[PASS] " : "[FAIL] ") << name << ": " << cases << " cases, " << failures.size()
      << " failures\n";
  for (const auto& f : failures) out << "  failure: " << f << "\n";
  for (const auto& n : notes) out << "  note: " << n << "\n";
  return out.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = name;
  j["passed"] = passed();
  j["cases"] = cases;
  j["failures"] = failures;
  j["notes"] = notes;
  return j.dump();
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

OrderSequence cyclic_sequence(std::uint64_t n) {
  std::vector<OrderSequence::Entry> e;
  for (auto d : divisors(n)) e.emplace_back(d, euler_phi(d));
  return OrderSequence::from_entries(std::move(e));
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string witness_text(const Witness& w) {
  return "(" + std::to_string(w.p) + "," + std::to_string(w.d) + "," + std::to_string(w.q) + ")";
}

// Elements of K whose order divides m.
std::vector<Element> elements_of_order_dividing(const FiniteGroup& g, std::uint64_t m) {
  std::vector<Element> out;
  for (Element x = 0; x < g.size(); ++x)
    if (m % g.order(x) == 0) out.push_back(x);
  return out;
}

// Abelian groups of order n as (name, sequence), computed from partitions without building groups.
std::vector<std::pair<std::string, OrderSequence>> abelian_sequences(std::uint64_t n) {
  std::vector<std::pair<std::string, OrderSequence>> out{{"", OrderSequence::from_entries({{1, 1}})}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::pair<std::string, OrderSequence>> next;
    for (const auto& [name, seq] : out)
      for (const auto& part : partitions_of(e)) {
        std::string piece;
        for (auto r : part.parts()) piece += (piece.empty() ? "C" : "xC") + std::to_string(checked_pow(p, r));
        next.emplace_back(name.empty() ? piece : name + "x" + piece, seq_join(seq, abelian_order_sequence(p, part)));
      }
    out = std::move(next);
  }
  if (n == 1) out.front().first = "C1";
  return out;
}

bool comparable(const OrderSequence& a, const OrderSequence& b) { return dominates(a, b) || dominates(b, a); }

}  // namespace

std::vector<Witness> nonnilpotent_order_witnesses(std::uint64_t n) {
  std::vector<Witness> out;
  if (n == 0) return out;
  for (auto [p, e] : factorize(n))
    for (unsigned d = 1; d <= e; ++d) {
      const std::uint64_t pd = checked_pow(p, d);
      for (auto q : prime_divisors(n / pd))
        if ((pd - 1) % q == 0) out.push_back({p, d, q});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Witness> nonnilpotent_order_witness(std::uint64_t n) {
  auto all = nonnilpotent_order_witnesses(n);
  if (all.empty()) return std::nullopt;
  return all.front();
}

FiniteGroup prime_exponent_abelian(std::uint64_t n) {
  std::vector<std::uint64_t> invariants;
  for (auto [p, e] : factorize(n)) invariants.insert(invariants.end(), e, p);
  return abelian(invariants);
}

FiniteGroup nonnilpotent_group_from_witness(std::uint64_t n, const Witness& w) {
  const std::uint64_t core = checked_pow(w.p, w.d) * w.q;
  if (n % core != 0 || (checked_pow(w.p, w.d) - 1) % w.q != 0 || !is_prime(w.p) || !is_prime(w.q))
    throw PreconditionError("NoWitness", witness_text(w) + " is not a witness for " + std::to_string(n));
  auto b = affine_frobenius_group(static_cast<std::uint32_t>(w.p), w.d, w.q);
  if (core == n) return b;
  auto k = prime_exponent_abelian(n / core);
  return direct_product(b, k);
}

FiniteGroup minimal_nonnilpotent_group(std::uint64_t n) {
  auto w = nonnilpotent_order_witness(n);
  if (!w) throw PreconditionError("NoWitness", "every group of order " + std::to_string(n) + " is nilpotent");
  return nonnilpotent_group_from_witness(n, *w);
}

SuiteReport suite_unique_max(std::uint64_t n) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "unique-max n=" + std::to_string(n);
  const auto zn = cyclic_sequence(n);
  std::size_t with_cyclic_sequence = 0;
  for (const auto& g : catalog(n)) {
    ++r.cases;
    const auto s = order_sequence(g.group);
    if (!strongly_dominates(zn, s)) {
      r.failures.push_back("C" + std::to_string(n) + " does not strongly dominate " + g.name + ": " +
                           strong_domination(zn, s).certificate->describe());
      continue;
    }
    if (s == zn) {
      ++with_cyclic_sequence;
      if (!is_cyclic(g.group)) r.failures.push_back(g.name + " is not cyclic but has the cyclic sequence");
      continue;
    }
    for (unsigned k : {1u, 2u, 3u})
      if (!(psi_k(s, k) < psi_k(zn, k)))
        r.failures.push_back("psi_" + std::to_string(k) + "(" + g.name + ") is not below the cyclic value");
    if (!(rho(s) < rho(zn))) r.failures.push_back("rho(" + g.name + ") is not below the cyclic value");
  }
  if (with_cyclic_sequence != 1)
    r.failures.push_back(std::to_string(with_cyclic_sequence) + " catalog groups have the cyclic sequence");
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_gap_bounds(std::uint64_t n) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "gap-bounds n=" + std::to_string(n);
  if (n < 2) throw PreconditionError("BadParameter", "gap bounds need n > 1");
  const auto zn = cyclic_sequence(n);
  const std::uint64_t q = smallest_prime_factor(n);
  const std::uint64_t phi = euler_phi(n);
  const BigCount rho_bound_scale = big_pow(q, phi);
  const BigCount psi_bound = psi(zn) - BigCount(n / q) * phi * (q - 1);
  const auto q8 = order_sequence(dicyclic(8));
  for (const auto& g : catalog(n)) {
    if (is_cyclic(g.group)) continue;
    ++r.cases;
    const auto s = order_sequence(g.group);
    const bool expect_equality = n == q * q || (n == 8 && s == q8);
    const BigCount lhs = rho(s) * rho_bound_scale;
    const BigCount rhs = rho(zn);
    if (lhs > rhs) r.failures.push_back("rho bound fails for " + g.name);
    if ((lhs == rhs) != expect_equality)
      r.failures.push_back("rho equality " + std::string(lhs == rhs ? "holds" : "fails") + " for " + g.name);
    const BigCount ps = psi(s);
    if (ps > psi_bound) r.failures.push_back("psi bound fails for " + g.name);
    if ((ps == psi_bound) != expect_equality)
      r.failures.push_back("psi equality " + std::string(ps == psi_bound ? "holds" : "fails") + " for " + g.name);
    if (lhs == rhs || ps == psi_bound)
      r.notes.push_back("equality: " + g.name + " (psi=" + to_string(ps) + ", bound " + to_string(psi_bound) +
                        "; rho=" + to_string(rho(s)) + ")");
  }
  r.seconds = clock.seconds();
  return r;
}

std::vector<ExtensionCase> default_extension_cases() {
  auto nm = [](std::string name, const FiniteGroup& g) { return NamedGroup{name, g.renamed(name)}; };
  return {
      {nm("C2xC2", abelian({2, 2})), nm("C3", cyclic(3)), nm("A4", alternating(4))},
      {nm("C3", cyclic(3)), nm("C4", cyclic(4)), nm("Dic12", dicyclic(12))},
      {nm("C5", cyclic(5)), nm("C4", cyclic(4)), nm("F20", standard_family(Family::kFrobenius20))},
      {nm("C7", cyclic(7)), nm("C3", cyclic(3)), nm("F21", standard_family(Family::kFrobenius21))},
  };
}

SuiteReport suite_extension(const std::vector<ExtensionCase>& cases) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "extension";
  for (const auto& c : cases) {
    ++r.cases;
    const auto label = "(" + c.normal.name + ", " + c.quotient.name + ", " + c.extension.name + ")";
    const auto m = c.normal.group.size(), h = c.quotient.group.size(), k = c.extension.group.size();
    if (!is_abelian(c.normal.group) || std::gcd(m, h) != 1 || k != m * h) {
      r.failures.push_back(label + ": precondition violated");
      continue;
    }
    // The normal subgroup of coprime index is the set of elements of order dividing |N|.
    auto n_elems = elements_of_order_dividing(c.extension.group, m);
    if (n_elems.size() != m || !is_subgroup(c.extension.group, n_elems) || !is_normal(c.extension.group, n_elems) ||
        !is_isomorphic(subgroup(c.extension.group, n_elems), c.normal.group) ||
        !is_isomorphic(quotient(c.extension.group, n_elems), c.quotient.group)) {
      r.failures.push_back(label + ": " + c.extension.name + " is not an extension of " + c.normal.name + " by " +
                           c.quotient.name);
      continue;
    }
    const auto prod = seq_product(order_sequence(c.normal.group), order_sequence(c.quotient.group));
    auto res = strong_domination(prod, order_sequence(c.extension.group));
    if (!res.strong) r.failures.push_back(label + ": " + res.certificate->describe());
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_nilpotent_minimality(std::uint64_t n) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "nilpotent-minimality n=" + std::to_string(n);
  const auto nil = nilpotent_groups_of_order(n);
  std::vector<OrderSequence> seqs;
  for (const auto& g : nil) seqs.push_back(order_sequence(g.group));
  for (std::size_t i = 0; i < nil.size(); ++i) {
    ++r.cases;
    if (!is_nilpotent(nil[i].group)) r.failures.push_back(nil[i].name + " is not nilpotent");
    bool minimal = true;
    for (std::size_t j = 0; j < nil.size(); ++j)
      if (properly_dominates(seqs[i], seqs[j])) minimal = false;
    if (!minimal) continue;
    for (auto [p, e] : factorize(n))
      for (auto o : nil[i].group.orders())
        if (is_power_of(o, p) && o > p) {
          r.failures.push_back("minimal " + nil[i].name + " has an element of order " + std::to_string(o));
          break;
        }
    r.notes.push_back("minimal nilpotent: " + nil[i].name);
  }
  if (auto w = nonnilpotent_order_witness(n)) {
    auto h = minimal_nonnilpotent_group(n);
    const auto hs = order_sequence(h);
    ++r.cases;
    if (is_nilpotent(h)) r.failures.push_back(h.name() + " is nilpotent");
    if (!strongly_dominates(order_sequence(prime_exponent_abelian(n)), hs))
      r.failures.push_back("prime-exponent abelian group does not strongly dominate " + h.name());
    std::vector<std::string> strong, plain;
    for (std::size_t i = 0; i < nil.size(); ++i) {
      ++r.cases;
      if (!properly_dominates(seqs[i], hs)) {
        r.failures.push_back(nil[i].name + " does not properly dominate " + h.name());
        continue;
      }
      (strongly_dominates(seqs[i], hs) ? strong : plain).push_back(nil[i].name);
    }
    r.notes.push_back("witness " + witness_text(*w) + " gives " + h.name());
    r.notes.push_back("strongly dominating " + h.name() + ": " + (strong.empty() ? "none" : join(strong)));
    if (!plain.empty()) r.notes.push_back("dominating but not strongly: " + join(plain));
  }
  r.seconds = clock.seconds();
  return r;
}

std::vector<NilpotentBoundCase> default_nilpotent_bound_cases() {
  NamedGroup v4{"C2xC2", abelian({2, 2})};
  NamedGroup q8{"Q8", dicyclic(8)};
  NamedGroup e9{"C3xC3", abelian({3, 3})};
  return {{1, {v4}}, {3, {v4}}, {5, {q8}}, {1, {v4, e9}}, {5, {v4, e9}}, {1, {q8, e9}}};
}

SuiteReport suite_improved_nilpotent_bound(const std::vector<NilpotentBoundCase>& cases) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "improved-nilpotent-bound";
  for (const auto& c : cases) {
    ++r.cases;
    std::string label = "C" + std::to_string(c.m);
    OrderSequence s = cyclic_sequence(c.m);
    std::uint64_t order = c.m;
    std::set<std::uint64_t> primes;
    bool ok = !c.p_groups.empty();
    bool elementary_rank_two = true;
    for (const auto& pg : c.p_groups) {
      label += "x" + pg.name;
      const auto f = factorize(pg.group.size());
      if (f.size() != 1 || is_cyclic(pg.group) || !primes.insert(f[0].first).second ||
          std::gcd(c.m, pg.group.size()) != 1) {
        ok = false;
        break;
      }
      const auto ps = order_sequence(pg.group);
      elementary_rank_two &= pg.group.size() == f[0].first * f[0].first;
      s = seq_join(s, ps);
      order *= pg.group.size();
    }
    if (!ok) {
      r.failures.push_back(label + ": malformed case");
      continue;
    }
    BigCount lhs = rho(s);
    for (auto p : primes) lhs *= big_pow(p, order / p * (p - 1));
    const BigCount rhs = rho(cyclic_sequence(order));
    if (lhs > rhs) r.failures.push_back(label + ": bound fails");
    if (elementary_rank_two && lhs != rhs) r.failures.push_back(label + ": expected equality");
    r.notes.push_back(label + ": " + (lhs == rhs ? "equality " : "strict ") + to_string(lhs) +
                      (lhs == rhs ? " = " : " < ") + format_compact(rhs));
  }
  r.seconds = clock.seconds();
  return r;
}

namespace {

std::vector<unsigned> padded(const Partition& a, std::size_t width) {
  std::vector<unsigned> v = a.parts();
  v.resize(width, 0);
  return v;
}

// Empty when `next` is `cur` with one box moved from a row to a later row.
std::string single_move_problem(const Partition& cur, const Partition& next) {
  const std::size_t width = std::max(cur.length(), next.length());
  auto a = padded(cur, width), b = padded(next, width);
  std::vector<std::size_t> down, up;
  for (std::size_t i = 0; i < width; ++i) {
    if (b[i] + 1 == a[i]) down.push_back(i);
    else if (a[i] + 1 == b[i]) up.push_back(i);
    else if (a[i] != b[i]) return "row " + std::to_string(i) + " changes by more than one box";
  }
  if (down.size() != 1 || up.size() != 1) return "not a single box move";
  if (up[0] <= down[0]) return "box moves to a higher row";
  if (!majorizes(cur, next)) return "step is not majorized";
  return {};
}

}  // namespace

SuiteReport suite_partition(unsigned n, std::uint64_t p) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "partition n=" + std::to_string(n) + " p=" + std::to_string(p);
  const auto parts = partitions_of(n);
  std::vector<OrderSequence> seqs;
  std::vector<Partition> conj;
  std::vector<CyclicSubgroupCounts> cyc;
  for (const auto& a : parts) {
    seqs.push_back(abelian_order_sequence(p, a));
    conj.push_back(conjugate(a));
    cyc.push_back(cyclic_subgroup_counts(p, a));
    if (conjugate(conj.back()) != a) r.failures.push_back("conjugation is not involutive on " + format_partition(a));
    if (defining_partition(seqs.back(), p) != a)
      r.failures.push_back("defining partition does not round-trip on " + format_partition(a));
  }
  const bool build_groups = checked_pow(p, n) <= 2048;
  for (std::size_t i = 0; i < parts.size() && build_groups; ++i) {
    auto g = abelian(prime_power_invariants(p, parts[i]));
    if (order_sequence(g) != seqs[i])
      r.failures.push_back("element counts disagree with enumeration for " + format_partition(parts[i]));
  }
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      ++r.cases;
      const auto& a = parts[i];
      const auto& c = parts[j];
      const std::string pair = format_partition(a) + " vs " + format_partition(c);
      if (i != j && seqs[i] == seqs[j]) r.failures.push_back("equal sequences for " + pair);
      const bool d = dominates(seqs[i], seqs[j]);
      const bool by_conjugates = majorizes(conj[j], conj[i]);
      const bool m = majorizes(a, c);
      if (d != by_conjugates || by_conjugates != m)
        r.failures.push_back("equivalence fails for " + pair + " (dominates=" + std::to_string(d) +
                             ", c'>=a'=" + std::to_string(by_conjugates) + ", a>=c=" + std::to_string(m) + ")");
      if (!m) continue;
      if (cyc[i].divisor_product > cyc[j].divisor_product)
        r.failures.push_back("product of (r_i+1) not monotone for " + pair);
      if (cyc[i].total > cyc[j].total) r.failures.push_back("cyclic subgroup count not monotone for " + pair);
      if (i == j) continue;
      const auto chain = box_move_chain(a, c);
      if (chain.empty() || chain.front() != a || chain.back() != c) {
        r.failures.push_back("box-move chain has wrong endpoints for " + pair);
        continue;
      }
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const auto problem = single_move_problem(chain[k], chain[k + 1]);
        if (!problem.empty()) {
          r.failures.push_back("chain step " + format_partition(chain[k]) + " -> " + format_partition(chain[k + 1]) +
                               ": " + problem);
          break;
        }
        const auto before = cyclic_subgroup_counts(p, chain[k]).divisor_product;
        const auto after = cyclic_subgroup_counts(p, chain[k + 1]).divisor_product;
        if (!(before < after)) {
          r.failures.push_back("product of (r_i+1) does not increase at " + format_partition(chain[k]));
          break;
        }
      }
    }
  if (n == 6 && p == 2) {
    ++r.cases;
    const Partition a({4, 1, 1}), c({3, 3});
    const auto ca = cyclic_subgroup_counts(2, a), cc = cyclic_subgroup_counts(2, c);
    const auto sa = abelian_order_sequence(2, a), sc = abelian_order_sequence(2, c);
    if (ca.divisor_product != 20 || cc.divisor_product != 16)
      r.failures.push_back("counterexample products are " + std::to_string(ca.divisor_product) + " and " +
                           std::to_string(cc.divisor_product));
    if (comparable(sa, sc)) r.failures.push_back("counterexample sequences are comparable");
    r.notes.push_back("C16xC2xC2 vs C8xC8: product of (r_i+1) " + std::to_string(ca.divisor_product) + " vs " +
                      std::to_string(cc.divisor_product) + "; cyclic subgroups " + std::to_string(ca.total) +
                      " vs " + std::to_string(cc.total) + "; sequences incomparable");
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_order16() {
  Stopwatch clock;
  SuiteReport r;
  r.name = "order16";
  const auto& cat = catalog(16);
  if (cat.size() != 14) r.failures.push_back("catalog has " + std::to_string(cat.size()) + " groups");
  std::vector<OrderSequence> seqs;
  std::vector<CanonicalForm> forms;
  std::vector<LabeledGraph> gk;
  std::vector<std::string> names;
  for (const auto& g : cat) {
    seqs.push_back(order_sequence(g.group));
    forms.push_back(canonical_form(power_graph(g.group), false));
    gk.push_back(gk_graph(g.group));
    names.push_back(g.name);
  }
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      ++r.cases;
      if (is_isomorphic(cat[i].group, cat[j].group))
        r.failures.push_back(cat[i].name + " and " + cat[j].name + " are isomorphic");
      if (forms[i] == forms[j] && seqs[i] != seqs[j])
        r.failures.push_back(cat[i].name + " and " + cat[j].name + " have isomorphic power graphs but different sequences");
      if (seqs[i] == seqs[j] && (gk[i].labels() != gk[j].labels() || gk[i].edges() != gk[j].edges()))
        r.failures.push_back(cat[i].name + " and " + cat[j].name + " share a sequence but not a GK graph");
    }
  auto poset = build_poset(names, [&](std::size_t i, std::size_t j) { return dominates(seqs[j], seqs[i]); });
  if (poset.size() != 9) r.failures.push_back(std::to_string(poset.size()) + " sequence classes, expected 9");
  const std::size_t graph_classes = std::set<CanonicalForm>(forms.begin(), forms.end()).size();
  if (graph_classes != 12) r.failures.push_back(std::to_string(graph_classes) + " power-graph classes, expected 12");
  const auto& a = catalog_group(16, "C4xC4");
  const auto& b = catalog_group(16, "C2xQ8");
  if (order_sequence(a.group) != order_sequence(b.group)) r.failures.push_back("C4xC4 and C2xQ8 differ in sequence");
  r.notes.push_back(std::to_string(poset.size()) + " sequence classes, " + std::to_string(graph_classes) +
                    " power-graph classes");
  for (const auto& item : poset.items())
    if (item.members.size() > 1) r.notes.push_back("shared sequence: " + item.name);
  r.notes.push_back(std::string("C4xC4 and C2xQ8 power graphs are ") +
                    (graphs_isomorphic(power_graph(a.group), power_graph(b.group), false) ? "" : "not ") + "isomorphic");
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_order60() {
  Stopwatch clock;
  SuiteReport r;
  r.name = "order60";
  const auto& cat = catalog(60);
  if (cat.size() != 13) r.failures.push_back("catalog has " + std::to_string(cat.size()) + " groups");
  std::vector<OrderSequence> seqs;
  std::vector<std::string> names;
  for (const auto& g : cat) {
    seqs.push_back(order_sequence(g.group));
    names.push_back(g.name);
  }
  r.cases = cat.size();
  std::set<std::string> distinct;
  for (const auto& s : seqs) distinct.insert(format_sequence(s));
  if (distinct.size() != 13) r.failures.push_back(std::to_string(distinct.size()) + " distinct sequences");
  auto poset = build_poset(names, [&](std::size_t i, std::size_t j) { return dominates(seqs[j], seqs[i]); });
  auto ex = extremes(poset);
  if (!ex.unique_max || poset.item(ex.maximal.front()).name != "C60")
    r.failures.push_back("domination maximum is not uniquely C60");
  std::vector<std::size_t> nilpotent;
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (is_nilpotent(cat[i].group)) nilpotent.push_back(i);
  if (nilpotent.size() != 2) r.failures.push_back(std::to_string(nilpotent.size()) + " nilpotent groups, expected 2");
  const std::size_t a5 = poset.index_of_member("A5");
  const bool a5_minimal = std::find(ex.minimal.begin(), ex.minimal.end(), a5) != ex.minimal.end();
  if (!a5_minimal) r.failures.push_back("A5 is not minimal");
  if (ex.minimal.size() != 4) r.failures.push_back(std::to_string(ex.minimal.size()) + " minimal classes, expected 4");
  std::set<int> minimal_ids;
  std::vector<std::string> minimal_names;
  for (auto i : ex.minimal) {
    minimal_names.push_back(poset.item(i).name);
    if (auto id = small_group_id(60, poset.item(i).name)) minimal_ids.insert(*id);
  }
  if (minimal_ids != std::set<int>{5, 7, 8, 12})
    r.failures.push_back("minimal classes are not SmallGroup ids 5, 7, 8, 12: " + join(minimal_names));
  r.notes.push_back("minimal: " + join(minimal_names));
  // One non-nilpotent group per witness; each must be dominated by both nilpotent groups.
  std::set<int> witness_ids;
  for (const auto& w : nonnilpotent_order_witnesses(60)) {
    ++r.cases;
    auto h = nonnilpotent_group_from_witness(60, w);
    const auto hs = order_sequence(h);
    std::string match;
    for (const auto& g : cat)
      if (order_sequence(g.group) == hs && is_isomorphic(g.group, h)) match = g.name;
    if (match.empty()) {
      r.failures.push_back("witness " + witness_text(w) + " group is not in the catalog");
      continue;
    }
    if (is_nilpotent(h)) r.failures.push_back(match + " is nilpotent");
    for (auto i : nilpotent)
      if (!properly_dominates(seqs[i], hs)) r.failures.push_back(cat[i].name + " does not dominate " + match);
    witness_ids.insert(small_group_id(60, match).value_or(0));
    r.notes.push_back("witness " + witness_text(w) + ": " + match + " (SmallGroup id " +
                      std::to_string(small_group_id(60, match).value_or(0)) + ")");
  }
  if (witness_ids != std::set<int>{9, 10, 11}) r.failures.push_back("witness groups are not SmallGroup ids 9, 10, 11");
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_simple_pair() {
  Stopwatch clock;
  SuiteReport r;
  r.name = "simple-pair";
  auto a8 = alternating(8);
  auto psl = psl_3_4();
  const auto sa = order_sequence(a8), sp = order_sequence(psl);
  r.cases = 3;
  if (a8.size() != 20160 || psl.size() != 20160)
    r.failures.push_back("orders are " + std::to_string(a8.size()) + " and " + std::to_string(psl.size()));
  if (sa.multiplicity(1) != 1 || sp.multiplicity(1) != 1) r.failures.push_back("identity count is not 1");
  if (!dominates(sa, sp)) r.failures.push_back("A8 does not dominate PSL(3,4)");
  r.notes.push_back("A8: " + format_sequence(sa));
  r.notes.push_back("PSL(3,4): " + format_sequence(sp));
  auto strong = strong_domination(sa, sp);
  r.notes.push_back(std::string("domination is ") + (strong.strong ? "strong" : "not strong: " + strong.certificate->describe()));
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_antichain() {
  Stopwatch clock;
  SuiteReport r;
  r.name = "antichain";
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const auto& cat = catalog(n);
    std::vector<std::string> incomparable;
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        ++r.cases;
        if (!comparable(order_sequence(cat[i].group), order_sequence(cat[j].group)))
          incomparable.push_back(cat[i].name + "|" + cat[j].name);
      }
    if (n < 12 && !incomparable.empty()) r.failures.push_back("incomparable groups at order " + std::to_string(n) + ": " + incomparable.front());
    if (n == 12) {
      if (incomparable.empty()) r.failures.push_back("no incomparable pair at order 12");
      else r.notes.push_back("order 12 incomparable: " + join(incomparable));
    }
  }
  for (std::uint64_t n = 1; n <= 36; ++n) {
    const auto ab = abelian_sequences(n);
    std::vector<std::string> incomparable;
    for (std::size_t i = 0; i < ab.size(); ++i)
      for (std::size_t j = i + 1; j < ab.size(); ++j) {
        ++r.cases;
        if (!comparable(ab[i].second, ab[j].second)) incomparable.push_back(ab[i].first + "|" + ab[j].first);
      }
    if (n < 36 && !incomparable.empty())
      r.failures.push_back("incomparable abelian groups at order " + std::to_string(n) + ": " + incomparable.front());
    if (n == 36) {
      if (incomparable.empty()) r.failures.push_back("no incomparable abelian pair at order 36");
      else r.notes.push_back("abelian order 36 incomparable: " + join(incomparable));
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_nilpotency() {
  Stopwatch clock;
  SuiteReport r;
  r.name = "nilpotency";
  for (auto n : supported_orders()) {
    const auto& cat = catalog(n);
    std::vector<std::pair<OrderSequence, bool>> seen;
    for (const auto& g : cat) {
      ++r.cases;
      const auto s = order_sequence(g.group);
      const bool by_sylow = is_nilpotent(g.group);
      if (nilpotent_from_sequence(s, n) != by_sylow || nilpotent_by_element_counts(g.group) != by_sylow)
        r.failures.push_back("nilpotency tests disagree on " + g.name);
      for (const auto& [other, flag] : seen)
        if (other == s && flag != by_sylow) r.failures.push_back(g.name + " shares a sequence with a group of other nilpotency");
      seen.emplace_back(s, by_sylow);
    }
  }
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_products(std::uint64_t seed, std::size_t pairs, std::size_t coprime_pairs) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "products seed=" + std::to_string(seed);
  std::vector<const NamedGroup*> pool;
  for (auto n : supported_orders())
    for (const auto& g : catalog(n)) pool.push_back(&g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  auto check_pair = [&](const NamedGroup& g, const NamedGroup& h, bool check_rho) {
    ++r.cases;
    const std::string label = g.name + " x " + h.name;
    const auto sg = order_sequence(g.group), sh = order_sequence(h.group);
    const auto prod = order_sequence(direct_product(g.group, h.group));
    const auto join_seq = seq_join(sg, sh);
    const auto product_seq = seq_product(sg, sh);
    const bool coprime = std::gcd(g.group.size(), h.group.size()) == 1;
    if (prod != join_seq) r.failures.push_back(label + ": sequence differs from the join");
    if ((prod == product_seq) != coprime)
      r.failures.push_back(label + ": product-sequence equality does not match coprimality");
    if (coprime) {
      if (coprime_part(product_seq, h.group.size()) != sg || coprime_part(product_seq, g.group.size()) != sh)
        r.failures.push_back(label + ": factors are not recovered from the product sequence");
      if (check_rho && rho(prod) != pow(rho(sg), static_cast<unsigned>(h.group.size())) *
                                        pow(rho(sh), static_cast<unsigned>(g.group.size())))
        r.failures.push_back(label + ": rho is not multiplicative");
    } else {
      auto verdict = plausible(product_seq, g.group.size() * h.group.size());
      if (verdict.ok || verdict.rule != "mod-p")
        r.failures.push_back(label + ": product sequence not rejected by the mod-p rule");
    }
  };
  for (std::size_t k = 0; k < pairs; ++k) check_pair(*pool[pick(rng)], *pool[pick(rng)], false);
  std::size_t found = 0;
  for (std::size_t attempts = 0; found < coprime_pairs && attempts < 100000; ++attempts) {
    const auto& g = *pool[pick(rng)];
    const auto& h = *pool[pick(rng)];
    if (std::gcd(g.group.size(), h.group.size()) != 1) continue;
    ++found;
    check_pair(g, h, true);
  }
  if (found < coprime_pairs) r.failures.push_back("only " + std::to_string(found) + " coprime pairs sampled");
  r.seconds = clock.seconds();
  return r;
}

SuiteReport suite_realizability(std::uint64_t max_order) {
  Stopwatch clock;
  SuiteReport r;
  r.name = "realizability";
  for (auto n : supported_orders()) {
    if (n > max_order) continue;
    std::set<std::string> realized;
    for (const auto& g : catalog(n)) {
      const auto s = order_sequence(g.group);
      auto verdict = plausible(s, n);
      if (!verdict.ok) r.failures.push_back(g.name + " fails rule " + verdict.rule + ": " + verdict.reason);
      realized.insert(format_sequence(s));
    }
    std::vector<std::uint64_t> ds;
    for (auto d : divisors(n))
      if (d > 1) ds.push_back(d);
    std::vector<OrderSequence::Entry> current{{1, 1}};
    std::size_t plausible_count = 0;
    std::vector<std::string> unrealized;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
      if (i == ds.size()) {
        if (left != 0) return;
        auto s = OrderSequence::from_entries(current);
        if (!plausible(s, n).ok) return;
        ++plausible_count;
        ++r.cases;
        if (!realized.contains(format_sequence(s))) unrealized.push_back(format_sequence(s));
        return;
      }
      const auto step = euler_phi(ds[i]);
      rec(i + 1, left);
      for (std::uint64_t m = step; m <= left; m += step) {
        current.emplace_back(ds[i], m);
        rec(i + 1, left - m);
        current.pop_back();
      }
    };
    rec(0, n - 1);
    std::string line = "n=" + std::to_string(n) + ": " + std::to_string(plausible_count) + " plausible, " +
                       std::to_string(realized.size()) + " realized, " + std::to_string(unrealized.size()) + " unrealized";
    if (!unrealized.empty()) {
      std::vector<std::string> sample(unrealized.begin(), unrealized.begin() + std::min<std::size_t>(3, unrealized.size()));
      line += " (e.g. " + join(sample, "; ") + ")";
    }
    r.notes.push_back(line);
  }
  r.seconds = clock.seconds();
  return r;
}

namespace {

SuiteReport merge(std::string name, const std::vector<SuiteReport>& parts) {
  SuiteReport r;
  r.name = std::move(name);
  for (const auto& p : parts) {
    r.cases += p.cases;
    r.seconds += p.seconds;
    for (const auto& f : p.failures) r.failures.push_back(p.name + ": " + f);
    for (const auto& n : p.notes) r.notes.push_back(p.name + ": " + n);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& standard_suite_names() {
  static const std::vector<std::string> names{"unique-max",   "gap-bounds", "extension", "nilpotent-minimality",
                                              "improved-bound", "partition", "order16",   "order60",
                                              "antichain",    "nilpotency", "products",  "realizability"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, std::optional<std::uint64_t> order, std::uint64_t seed) {
  auto orders_or = [&](std::vector<std::uint64_t> defaults) {
    return order ? std::vector<std::uint64_t>{*order} : defaults;
  };
  std::vector<SuiteReport> out;
  if (name == "unique-max") {
    for (auto n : orders_or(supported_orders())) out.push_back(suite_unique_max(n));
  } else if (name == "gap-bounds") {
    std::vector<std::uint64_t> defaults;
    for (auto n : supported_orders())
      if (n > 1) defaults.push_back(n);
    for (auto n : orders_or(defaults)) out.push_back(suite_gap_bounds(n));
  } else if (name == "extension") {
    out.push_back(suite_extension(default_extension_cases()));
  } else if (name == "nilpotent-minimality") {
    for (auto n : orders_or({12, 16, 24, 60})) out.push_back(suite_nilpotent_minimality(n));
  } else if (name == "improved-bound") {
    out.push_back(suite_improved_nilpotent_bound(default_nilpotent_bound_cases()));
  } else if (name == "partition") {
    for (std::uint64_t p : {2u, 3u}) {
      std::vector<SuiteReport> parts;
      if (order) {
        parts.push_back(suite_partition(static_cast<unsigned>(*order), p));
      } else {
        for (unsigned n = 1; n <= 10; ++n) parts.push_back(suite_partition(n, p));
      }
      out.push_back(merge("partition p=" + std::to_string(p), parts));
    }
  } else if (name == "order16") {
    out.push_back(suite_order16());
  } else if (name == "order60") {
    out.push_back(suite_order60());
  } else if (name == "antichain") {
    out.push_back(suite_antichain());
  } else if (name == "nilpotency") {
    out.push_back(suite_nilpotency());
  } else if (name == "products") {
    out.push_back(suite_products(seed));
  } else if (name == "realizability") {
    out.push_back(suite_realizability(order.value_or(21)));
  } else if (name == "simple-pair") {
    out.push_back(suite_simple_pair());
  } else {
    throw PreconditionError("UnknownSuite", "unknown suite '" + name + "'");
  }
  return out;
}

}  // namespace ordseq
