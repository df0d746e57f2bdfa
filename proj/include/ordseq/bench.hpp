#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordseq/catalog.hpp"
#include "ordseq/group.hpp"

namespace ordseq {

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // each names a minimal counterexample
  std::vector<std::string> notes;     // recorded facts that are not pass/fail conditions
  double seconds = 0;

  bool passed() const { return failures.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

// (p, d, q): primes p, q with p^d q | n and q | p^d - 1.
struct Witness {
  std::uint64_t p = 0;
  unsigned d = 0;
  std::uint64_t q = 0;
  bool operator==(const Witness&) const = default;
  auto operator<=>(const Witness&) const = default;
};

// Lexicographically least witness.
std::optional<Witness> nonnilpotent_order_witness(std::uint64_t n);
// Every witness, in lexicographic order.
std::vector<Witness> nonnilpotent_order_witnesses(std::uint64_t n);

// Aff(p,d,q) x K with K elementary abelian in each Sylow, |K| = n / (p^d q).
FiniteGroup nonnilpotent_group_from_witness(std::uint64_t n, const Witness& w);
// Built from the least witness; throws PreconditionError("NoWitness").
FiniteGroup minimal_nonnilpotent_group(std::uint64_t n);

// Abelian group of order n whose Sylow subgroups have prime exponent.
FiniteGroup prime_exponent_abelian(std::uint64_t n);

SuiteReport suite_unique_max(std::uint64_t n);
SuiteReport suite_gap_bounds(std::uint64_t n);

struct ExtensionCase {
  NamedGroup normal;    // abelian
  NamedGroup quotient;  // coprime order
  NamedGroup extension;
};
std::vector<ExtensionCase> default_extension_cases();
SuiteReport suite_extension(const std::vector<ExtensionCase>& cases);

SuiteReport suite_nilpotent_minimality(std::uint64_t n);

// G = C_m x P_1 x ... x P_r with non-cyclic p-groups for distinct primes coprime to m.
struct NilpotentBoundCase {
  std::uint64_t m = 1;
  std::vector<NamedGroup> p_groups;
};
std::vector<NilpotentBoundCase> default_nilpotent_bound_cases();
SuiteReport suite_improved_nilpotent_bound(const std::vector<NilpotentBoundCase>& cases);

SuiteReport suite_partition(unsigned n, std::uint64_t p);
SuiteReport suite_order16();
SuiteReport suite_order60();
SuiteReport suite_simple_pair();
SuiteReport suite_antichain();
// Sequence-based nilpotency test against Sylow normality on every catalog group.
SuiteReport suite_nilpotency();
// Direct-product sequence algebra on random catalog pairs.
SuiteReport suite_products(std::uint64_t seed, std::size_t pairs = 50, std::size_t coprime_pairs = 20);
// Plausible sequences of each catalog order with no realizing group (recorded, not asserted).
SuiteReport suite_realizability(std::uint64_t max_order = 21);

// Names accepted by run_suite, excluding the gated "simple-pair".
const std::vector<std::string>& standard_suite_names();
// Runs a suite over its default inputs; `order` restricts order-indexed suites.
// Throws PreconditionError("UnknownSuite").
std::vector<SuiteReport> run_suite(const std::string& name, std::optional<std::uint64_t> order = std::nullopt,
                                   std::uint64_t seed = 1);

}  // namespace ordseq
