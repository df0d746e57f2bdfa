#pragma once

#include <cstdint>
#include <vector>

#include "ordseq/group.hpp"

namespace ordseq {

inline constexpr std::uint64_t kMaxFieldSize = 4096;

// Element of GF(p^d) encoded as sum c_i p^i over its coefficient vector.
struct FieldElement {
  std::uint32_t value = 0;
  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;
};

class FiniteField {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t size() const { return q_; }
  // Monic modulus, coefficients from x^0 up to x^d.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t value) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement pow(FieldElement a, std::uint64_t k) const;
  // a^(q-2); throws PreconditionError("DivisionByZero") for a = 0.
  FieldElement inv(FieldElement a) const;
  std::uint64_t multiplicative_order(FieldElement a) const;

 private:
  friend FiniteField make_field(std::uint32_t p, std::uint32_t d);
  std::uint32_t p_ = 0, d_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
};

// Field with the least monic irreducible modulus, scanning the low
// coefficients as a base-p integer.
FiniteField make_field(std::uint32_t p, std::uint32_t d);

// True when the monic polynomial (coefficients x^0..x^d) has no monic
// factor of degree 1..d-1 over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

// First element (in encoding order) of exact multiplicative order q.
FieldElement element_of_order(const FiniteField& f, std::uint64_t q);

// Maps x -> a x + b over GF(p^d) with a^q = 1. Order p^d q.
FiniteGroup affine_frobenius_group(std::uint32_t p, std::uint32_t d, std::uint64_t q);

// SL(3,4) modulo its scalar centre, on canonical coset representatives.
FiniteGroup psl_3_4();

}  // namespace ordseq
