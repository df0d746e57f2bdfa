#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordseq/bigint.hpp"
#include "ordseq/group.hpp"

namespace ordseq {

// Collected multiset of element orders: (order, multiplicity) pairs with
// strictly increasing orders and positive multiplicities.
class OrderSequence {
 public:
  using Entry = std::pair<std::uint64_t, std::uint64_t>;

  OrderSequence() = default;
  // Sorts and merges; rejects zero orders and zero multiplicities.
  static OrderSequence from_entries(std::vector<Entry> entries);
  static OrderSequence from_orders(std::span<const std::uint64_t> orders);

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t length() const { return length_; }
  std::uint64_t multiplicity(std::uint64_t order) const;
  std::uint64_t max_order() const { return entries_.empty() ? 0 : entries_.back().first; }
  // Number of entries ≤ t.
  std::uint64_t count_at_most(std::uint64_t t) const;
  // Materialized non-decreasing list; only sensible for small lengths.
  std::vector<std::uint64_t> expanded() const;

  bool operator==(const OrderSequence&) const = default;

 private:
  std::vector<Entry> entries_;
  std::uint64_t length_ = 0;
};

OrderSequence order_sequence(const FiniteGroup& g);

// Accepts "1:1,2:3,4:4" or a JSON array [[1,1],[2,3],[4,4]].
OrderSequence parse_sequence(std::string_view text);
std::string format_sequence(const OrderSequence& s);
std::string format_sequence_json(const OrderSequence& s);

BigCount psi_k(const OrderSequence& s, unsigned k);
inline BigCount psi(const OrderSequence& s) { return psi_k(s, 1); }
BigCount rho(const OrderSequence& s);

// a dominates b: the i-th smallest entry of a is ≥ the i-th of b for every i.
// Throws PreconditionError("LengthMismatch").
bool dominates(const OrderSequence& a, const OrderSequence& b);
bool properly_dominates(const OrderSequence& a, const OrderSequence& b);

// Witness that no divisibility-respecting bijection exists: the entries of b
// with orders in `b_orders` (total `demand`) can only be matched to entries of
// a with orders in `a_orders` (total `supply` < demand).
struct HallCertificate {
  std::vector<std::uint64_t> b_orders;
  std::uint64_t demand = 0;
  std::vector<std::uint64_t> a_orders;
  std::uint64_t supply = 0;
  std::string describe() const;
};

struct StrongDominationResult {
  bool strong = false;
  std::optional<HallCertificate> certificate;
};

// Bijection f from a's entries to b's with b-order dividing a-order, decided
// by max-flow over distinct orders.
StrongDominationResult strong_domination(const OrderSequence& a, const OrderSequence& b);
bool strongly_dominates(const OrderSequence& a, const OrderSequence& b);

OrderSequence seq_product(const OrderSequence& x, const OrderSequence& y);
OrderSequence seq_join(const OrderSequence& x, const OrderSequence& y);
// Entries whose order is coprime to m.
OrderSequence coprime_part(const OrderSequence& s, std::uint64_t m);

struct Plausibility {
  bool ok = true;
  std::string rule;    // "length", "identity", "lagrange", "mod-p" or "phi"
  std::string reason;  // human-readable description of the first failure
};

// Necessary conditions for s to be the order sequence of a group of order n.
Plausibility plausible(const OrderSequence& s, std::uint64_t n);

// For every prime p | n, exactly p^a entries (p^a the p-part of n) are powers of p.
bool nilpotent_from_sequence(const OrderSequence& s, std::uint64_t n);

// Catalog groups of order n whose sequence is s; throws UnsupportedOrderError.
std::vector<std::string> realize(const OrderSequence& s, std::uint64_t n);

}  // namespace ordseq
