#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ordseq {

// Index of an element inside its parent group. Index 0 is always the identity.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

inline constexpr std::size_t kMaxGroupSize = 25000;
// Groups up to this size get a materialized Cayley table.
inline constexpr std::size_t kTableLimit = 1024;

// Multiplication law behind a FiniteGroup. Implementations must put the
// identity at index 0.
class GroupBackend {
 public:
  virtual ~GroupBackend() = default;
  virtual std::size_t size() const = 0;
  virtual Element mul(Element a, Element b) const = 0;
  // Element order when the backend knows it cheaply; 0 means "compute by powering".
  virtual std::uint32_t order_hint(Element) const { return 0; }
};

// A finite group with enumerable elements. Immutable and cheap to copy;
// element orders and inverses are computed once at construction.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::shared_ptr<const GroupBackend> backend);

  std::size_t size() const { return impl_->size; }
  const std::string& name() const { return name_; }

  Element mul(Element a, Element b) const {
    if (!impl_->table.empty()) return impl_->table[static_cast<std::size_t>(a) * impl_->size + b];
    return impl_->backend->mul(a, b);
  }
  Element inverse(Element g) const { return impl_->inverses[g]; }
  std::uint32_t order(Element g) const { return impl_->orders[g]; }
  std::span<const std::uint32_t> orders() const { return impl_->orders; }
  Element power(Element g, std::uint64_t k) const;
  Element conjugate(Element x, Element by) const { return mul(mul(by, x), inverse(by)); }
  Element commutator(Element a, Element b) const {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }

  bool has_table() const { return !impl_->table.empty(); }
  const GroupBackend& backend() const { return *impl_->backend; }

  // Same group, different display name.
  FiniteGroup renamed(std::string name) const;

 private:
  struct Impl {
    std::size_t size = 0;
    std::shared_ptr<const GroupBackend> backend;
    std::vector<Element> table;
    std::vector<std::uint32_t> orders;
    std::vector<Element> inverses;
  };
  FiniteGroup(std::string name, std::shared_ptr<const Impl> impl)
      : name_(std::move(name)), impl_(std::move(impl)) {}

  std::string name_;
  std::shared_ptr<const Impl> impl_;
};

// Backend over an explicit row-major Cayley table.
class TableBackend final : public GroupBackend {
 public:
  TableBackend(std::size_t n, std::vector<Element> table);
  std::size_t size() const override { return n_; }
  Element mul(Element a, Element b) const override { return table_[std::size_t{a} * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<Element> table_;
};

FiniteGroup table_group(std::string name, std::size_t n, std::vector<Element> table);

// Throws std::logic_error naming the first failing triple or element.
// Associativity is checked exhaustively for n <= 200 and on `spot_checks`
// random triples otherwise.
void check_group_axioms(const FiniteGroup& g, std::uint64_t seed = 1, std::size_t spot_checks = 1000);

}  // namespace ordseq
