#include "ordseq/field.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
  const std::uint32_t d = static_cast<std::uint32_t>(monic.size()) - 1;
  for (std::uint32_t k = 1; k < d; ++k) {
    std::uint64_t count = checked_pow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f(k + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (poly_mod(monic, f, p).empty()) return false;
    }
  }
  return true;
}

FiniteField make_field(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw PreconditionError("NotPrime", std::to_string(p) + " is not prime");
  if (d < 1) throw PreconditionError("BadParameter", "field degree must be at least 1");
  const std::uint64_t q = checked_pow(p, d, kMaxFieldSize);
  FiniteField f;
  f.p_ = p;
  f.d_ = d;
  f.q_ = static_cast<std::uint32_t>(q);
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly m(d + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[d] = 1;
    if (is_irreducible(p, m)) {
      f.modulus_ = std::move(m);
      return f;
    }
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldElement FiniteField::element(std::uint32_t value) const {
  if (value >= q_) throw PreconditionError("BadElement", "field element out of range");
  return {value};
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElement a) const {
  std::vector<std::uint32_t> c(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a.value % p_;
    a.value /= p_;
  }
  return c;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out += ((a.value % p_ + b.value % p_) % p_) * scale;
    a.value /= p_;
    b.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FiniteField::neg(FieldElement a) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    out += ((p_ - a.value % p_) % p_) * scale;
    a.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  auto ca = coefficients(a), cb = coefficients(b);
  Poly prod(2 * d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i)
    for (std::uint32_t j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly r = poly_mod(std::move(prod), modulus_, p_);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t x : r) {
    out += x * scale;
    scale *= p_;
  }
  return {out};
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t k) const {
  FieldElement r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a.value == 0) throw PreconditionError("DivisionByZero", "zero has no inverse");
  return pow(a, q_ - 2);
}

std::uint64_t FiniteField::multiplicative_order(FieldElement a) const {
  if (a.value == 0) throw PreconditionError("DivisionByZero", "zero has no multiplicative order");
  std::uint64_t k = 1;
  for (FieldElement x = a; x != one(); x = mul(x, a)) ++k;
  return k;
}

FieldElement element_of_order(const FiniteField& f, std::uint64_t q) {
  if (q == 0 || (f.size() - 1) % q != 0)
    throw PreconditionError("NoSuchOrder", std::to_string(q) + " does not divide " + std::to_string(f.size() - 1));
  for (std::uint32_t v = 1; v < f.size(); ++v)
    if (f.multiplicative_order({v}) == q) return {v};
  throw std::logic_error("multiplicative group is not cyclic");
}

FiniteGroup affine_frobenius_group(std::uint32_t p, std::uint32_t d, std::uint64_t q) {
  FiniteField f = make_field(p, d);
  FieldElement w = element_of_order(f, q);
  const std::uint32_t n = f.size();
  if (saturating_mul(n, q) > kMaxGroupSize) throw SizeLimitError("affine group exceeds the size limit");
  // Map x -> w^k x + b stored at k*n + b; (a1,b1) o (a2,b2) = (a1 a2, a1 b2 + b1).
  std::vector<FieldElement> roots(q);
  roots[0] = f.one();
  for (std::uint64_t k = 1; k < q; ++k) roots[k] = f.mul(roots[k - 1], w);
  const auto qq = static_cast<std::uint32_t>(q);
  std::vector<std::uint32_t> mul_table(std::size_t{qq} * n);
  std::vector<std::uint32_t> add_table(std::size_t{n} * n);
  for (std::uint32_t k = 0; k < qq; ++k)
    for (std::uint32_t b = 0; b < n; ++b) mul_table[std::size_t{k} * n + b] = f.mul(roots[k], {b}).value;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) add_table[std::size_t{a} * n + b] = f.add({a}, {b}).value;
  auto mul = [n, qq, mul_table = std::move(mul_table), add_table = std::move(add_table)](Element u, Element v) {
    std::uint32_t k1 = u / n, b1 = u % n, k2 = v / n, b2 = v % n;
    std::uint32_t scaled = mul_table[std::size_t{k1} * n + b2];
    return ((k1 + k2) % qq) * n + add_table[std::size_t{scaled} * n + b1];
  };
  return formula_group("Aff(" + std::to_string(p) + "," + std::to_string(d) + "," + std::to_string(q) + ")",
                       std::size_t{n} * q, mul);
}

namespace {

// 3x3 matrices over GF(4), 2 bits per entry, row-major from the low bits.
using Matrix = std::array<std::uint8_t, 9>;

constexpr std::uint8_t kGf4Mul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};

std::uint32_t encode(const Matrix& m) {
  std::uint32_t c = 0;
  for (int i = 8; i >= 0; --i) c = (c << 2) | m[i];
  return c;
}

Matrix decode(std::uint32_t c) {
  Matrix m;
  for (int i = 0; i < 9; ++i) {
    m[i] = c & 3;
    c >>= 2;
  }
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  Matrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint8_t s = 0;
      for (int k = 0; k < 3; ++k) s ^= kGf4Mul[a[i * 3 + k]][b[k * 3 + j]];
      r[i * 3 + j] = s;
    }
  return r;
}

std::uint8_t det(const Matrix& m) {
  auto mu = [](std::uint8_t x, std::uint8_t y) { return kGf4Mul[x][y]; };
  // Characteristic 2: all signs are +.
  std::uint8_t t1 = mu(m[0], mu(m[4], m[8]) ^ mu(m[5], m[7]));
  std::uint8_t t2 = mu(m[1], mu(m[3], m[8]) ^ mu(m[5], m[6]));
  std::uint8_t t3 = mu(m[2], mu(m[3], m[7]) ^ mu(m[4], m[6]));
  return t1 ^ t2 ^ t3;
}

std::uint32_t canonical(const Matrix& m) {
  std::uint32_t best = UINT32_MAX;
  for (std::uint8_t s = 1; s < 4; ++s) {
    Matrix t;
    for (int i = 0; i < 9; ++i) t[i] = kGf4Mul[s][m[i]];
    best = std::min(best, encode(t));
  }
  return best;
}

class Psl34Backend final : public GroupBackend {
 public:
  Psl34Backend() : index_(1u << 18, UINT32_MAX) {
    Matrix id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    reps_.push_back(canonical(id));
    for (std::uint32_t c = 0; c < (1u << 18); ++c) {
      Matrix m = decode(c);
      if (det(m) != 1) continue;
      std::uint32_t rep = canonical(m);
      if (rep == c && rep != reps_.front()) reps_.push_back(rep);
    }
    for (std::uint32_t i = 0; i < reps_.size(); ++i) index_[reps_[i]] = i;
  }
  std::size_t size() const override { return reps_.size(); }
  Element mul(Element a, Element b) const override {
    return index_[canonical(matmul(decode(reps_[a]), decode(reps_[b])))];
  }

 private:
  std::vector<std::uint32_t> reps_;
  std::vector<std::uint32_t> index_;
};

}  // namespace

FiniteGroup psl_3_4() {
  // GF(4) tables above use modulus x^2 + x + 1 with x encoded as 2.
  return FiniteGroup("PSL(3,4)", std::make_shared<Psl34Backend>());
}

}  // namespace ordseq
