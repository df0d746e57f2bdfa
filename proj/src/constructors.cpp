#include "ordseq/constructors.hpp"

#include <numeric>
#include <string_view>
#include <unordered_map>

#include "ordseq/errors.hpp"
#include "ordseq/group_props.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {
namespace {

void require_size(std::uint64_t n, const std::string& what) {
  if (n == 0 || n > kMaxGroupSize)
    throw SizeLimitError(what + " would have order " + std::to_string(n) +
                         ", outside [1, " + std::to_string(kMaxGroupSize) + "]");
}

class CyclicBackend final : public GroupBackend {
 public:
  explicit CyclicBackend(std::uint32_t n) : n_(n) {}
  std::size_t size() const override { return n_; }
  Element mul(Element a, Element b) const override {
    std::uint32_t s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  std::uint32_t order_hint(Element a) const override { return n_ / std::gcd(n_, a == 0 ? n_ : a); }

 private:
  std::uint32_t n_;
};

class AbelianBackend final : public GroupBackend {
 public:
  explicit AbelianBackend(std::vector<std::uint32_t> moduli) : moduli_(std::move(moduli)) {
    size_ = 1;
    for (auto m : moduli_) size_ *= m;
  }
  std::size_t size() const override { return size_; }
  Element mul(Element a, Element b) const override {
    // Mixed radix, last factor least significant.
    Element out = 0;
    Element scale = 1;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
      std::uint32_t m = moduli_[i];
      std::uint32_t s = a % m + b % m;
      if (s >= m) s -= m;
      out += s * scale;
      scale *= m;
      a /= m;
      b /= m;
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> moduli_;
  std::size_t size_;
};

class ProductBackend final : public GroupBackend {
 public:
  ProductBackend(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {}
  std::size_t size() const override { return g_.size() * h_.size(); }
  Element mul(Element a, Element b) const override {
    const auto m = static_cast<Element>(h_.size());
    return g_.mul(a / m, b / m) * m + h_.mul(a % m, b % m);
  }

 private:
  FiniteGroup g_, h_;
};

class SemidirectBackend final : public GroupBackend {
 public:
  SemidirectBackend(FiniteGroup n, FiniteGroup h, GroupAction act)
      : n_(std::move(n)), h_(std::move(h)), act_(std::move(act)) {}
  std::size_t size() const override { return n_.size() * h_.size(); }
  Element mul(Element a, Element b) const override {
    const auto m = static_cast<Element>(h_.size());
    Element n1 = a / m, h1 = a % m, n2 = b / m, h2 = b % m;
    return n_.mul(n1, act_.maps[h1][n2]) * m + h_.mul(h1, h2);
  }

 private:
  FiniteGroup n_, h_;
  GroupAction act_;
};

class QuotientBackend final : public GroupBackend {
 public:
  QuotientBackend(FiniteGroup g, std::vector<Element> reps, std::vector<Element> coset_of)
      : g_(std::move(g)), reps_(std::move(reps)), coset_of_(std::move(coset_of)) {}
  std::size_t size() const override { return reps_.size(); }
  Element mul(Element a, Element b) const override { return coset_of_[g_.mul(reps_[a], reps_[b])]; }

 private:
  FiniteGroup g_;
  std::vector<Element> reps_;
  std::vector<Element> coset_of_;
};

class SubgroupBackend final : public GroupBackend {
 public:
  SubgroupBackend(FiniteGroup g, std::vector<Element> elems) : g_(std::move(g)), elems_(std::move(elems)) {
    index_.assign(g_.size(), UINT32_MAX);
    for (std::size_t i = 0; i < elems_.size(); ++i) index_[elems_[i]] = static_cast<Element>(i);
  }
  std::size_t size() const override { return elems_.size(); }
  Element mul(Element a, Element b) const override { return index_[g_.mul(elems_[a], elems_[b])]; }
  std::uint32_t order_hint(Element a) const override { return g_.order(elems_[a]); }

 private:
  FiniteGroup g_;
  std::vector<Element> elems_;
  std::vector<Element> index_;
};

class PermutationBackend final : public GroupBackend {
 public:
  PermutationBackend(std::uint32_t degree, std::vector<std::uint32_t> points,
                     std::unordered_map<std::string, Element> index)
      : degree_(degree), points_(std::move(points)), index_(std::move(index)) {}
  std::size_t size() const override { return degree_ == 0 ? 1 : points_.size() / degree_; }
  Element mul(Element a, Element b) const override {
    if (degree_ == 0) return 0;
    std::string key(degree_ * sizeof(std::uint32_t), '\0');
    auto* out = reinterpret_cast<std::uint32_t*>(key.data());
    const std::uint32_t* pa = &points_[std::size_t{a} * degree_];
    const std::uint32_t* pb = &points_[std::size_t{b} * degree_];
    for (std::uint32_t x = 0; x < degree_; ++x) out[x] = pa[pb[x]];
    return index_.at(key);
  }
  std::uint32_t order_hint(Element a) const override {
    if (degree_ == 0) return 1;
    std::vector<std::uint32_t> img(points_.begin() + std::size_t{a} * degree_,
                                   points_.begin() + std::size_t{a + 1} * degree_);
    return static_cast<std::uint32_t>(Permutation(std::move(img)).order());
  }

 private:
  std::uint32_t degree_;
  std::vector<std::uint32_t> points_;
  std::unordered_map<std::string, Element> index_;
};

class FormulaBackend final : public GroupBackend {
 public:
  FormulaBackend(std::size_t n, std::function<Element(Element, Element)> f) : n_(n), f_(std::move(f)) {}
  std::size_t size() const override { return n_; }
  Element mul(Element a, Element b) const override { return f_(a, b); }

 private:
  std::size_t n_;
  std::function<Element(Element, Element)> f_;
};

std::string join_name(const FiniteGroup& a, const FiniteGroup& b, std::string_view op) {
  auto wrap = [](const std::string& s) {
    return s.find_first_of(":o/") != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(a.name()) + std::string(op) + wrap(b.name());
}

}  // namespace

FiniteGroup trivial_group() { return cyclic(1); }

FiniteGroup cyclic(std::uint64_t n) {
  require_size(n, "C" + std::to_string(n));
  return FiniteGroup("C" + std::to_string(n),
                     std::make_shared<CyclicBackend>(static_cast<std::uint32_t>(n)));
}

FiniteGroup abelian(std::span<const std::uint64_t> invariants) {
  std::uint64_t n = 1;
  std::vector<std::uint32_t> moduli;
  std::string name;
  for (std::uint64_t k : invariants) {
    if (k < 1) throw PreconditionError("BadInvariant", "invariants must be positive");
    n = saturating_mul(n, k);
    if (k == 1) continue;
    moduli.push_back(static_cast<std::uint32_t>(k));
    name += (name.empty() ? "C" : "xC") + std::to_string(k);
  }
  require_size(n, "abelian group");
  if (moduli.empty()) return trivial_group();
  if (moduli.size() == 1) return cyclic(moduli[0]);
  return FiniteGroup(name, std::make_shared<AbelianBackend>(std::move(moduli)));
}

FiniteGroup abelian(std::initializer_list<std::uint64_t> invariants) {
  return abelian(std::span<const std::uint64_t>(invariants.begin(), invariants.size()));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  require_size(saturating_mul(g.size(), h.size()), "direct product");
  return FiniteGroup(join_name(g, h, "x"), std::make_shared<ProductBackend>(g, h));
}

void validate_action(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& act) {
  if (act.maps.size() != h.size())
    throw PreconditionError("ActionNotHomomorphism", "action must assign a map to every element of H");
  const auto ngens = generating_set(n);
  for (Element x = 0; x < h.size(); ++x) {
    const auto& m = act.maps[x];
    if (m.size() != n.size())
      throw PreconditionError("ActionNotAutomorphism", "map for h=" + std::to_string(x) + " has wrong size");
    std::vector<char> hit(n.size(), 0);
    for (Element y : m) {
      if (y >= n.size() || hit[y])
        throw PreconditionError("ActionNotAutomorphism", "map for h=" + std::to_string(x) + " is not a bijection");
      hit[y] = 1;
    }
    if (m[kIdentity] != kIdentity)
      throw PreconditionError("ActionNotAutomorphism", "map for h=" + std::to_string(x) + " moves the identity");
    for (Element a = 0; a < n.size(); ++a)
      for (Element s : ngens)
        if (m[n.mul(a, s)] != n.mul(m[a], m[s]))
          throw PreconditionError("ActionNotAutomorphism", "map for h=" + std::to_string(x) +
                                                               " does not preserve the product of " +
                                                               std::to_string(a) + " and " + std::to_string(s));
  }
  for (Element y = 0; y < n.size(); ++y)
    if (act.maps[kIdentity][y] != y)
      throw PreconditionError("ActionNotHomomorphism", "identity of H does not act trivially");
  for (Element x = 0; x < h.size(); ++x)
    for (Element s : generating_set(h)) {
      const auto& composite = act.maps[h.mul(x, s)];
      for (Element y = 0; y < n.size(); ++y)
        if (composite[y] != act.maps[x][act.maps[s][y]])
          throw PreconditionError("ActionNotHomomorphism",
                                  "act(" + std::to_string(x) + "*" + std::to_string(s) +
                                      ") differs from act(" + std::to_string(x) + ") o act(" +
                                      std::to_string(s) + ") at " + std::to_string(y));
    }
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const GroupAction& act,
                               std::string name) {
  require_size(saturating_mul(n.size(), h.size()), "semidirect product");
  validate_action(n, h, act);
  if (name.empty()) name = join_name(n, h, ":");
  return FiniteGroup(std::move(name), std::make_shared<SemidirectBackend>(n, h, act));
}

FiniteGroup quotient(const FiniteGroup& g, std::span<const Element> normal_subgroup, std::string name) {
  if (!is_subgroup(g, normal_subgroup))
    throw PreconditionError("NotSubgroup", "quotient by a subset of '" + g.name() + "' that is not a subgroup");
  if (!is_normal(g, normal_subgroup))
    throw PreconditionError("NotNormal", "subgroup of '" + g.name() + "' is not normal");
  std::vector<Element> coset_of(g.size(), UINT32_MAX);
  std::vector<Element> reps;
  for (Element x = 0; x < g.size(); ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element k : normal_subgroup) coset_of[g.mul(x, k)] = id;
  }
  if (name.empty()) name = g.name() + "/N" + std::to_string(normal_subgroup.size());
  return FiniteGroup(std::move(name), std::make_shared<QuotientBackend>(g, std::move(reps), std::move(coset_of)));
}

FiniteGroup permutation_group(std::span<const Permutation> gens, std::string name) {
  std::uint32_t degree = gens.empty() ? 0 : gens.front().degree();
  for (const auto& p : gens)
    if (p.degree() != degree)
      throw PreconditionError("DegreeMismatch", "generators act on different point sets");
  if (name.empty()) name = "Perm";
  if (degree == 0)
    return FiniteGroup(std::move(name), std::make_shared<PermutationBackend>(0, std::vector<std::uint32_t>{},
                                                                           std::unordered_map<std::string, Element>{}));

  auto key_of = [degree](const std::uint32_t* pts) {
    return std::string(reinterpret_cast<const char*>(pts), degree * sizeof(std::uint32_t));
  };
  std::vector<std::uint32_t> points(degree);
  std::iota(points.begin(), points.end(), 0u);
  std::unordered_map<std::string, Element> index{{key_of(points.data()), 0}};
  std::vector<std::uint32_t> scratch(degree);
  for (std::size_t i = 0; i * degree < points.size(); ++i) {
    for (const auto& s : gens) {
      for (std::uint32_t x = 0; x < degree; ++x) scratch[x] = points[i * degree + s(x)];
      auto key = key_of(scratch.data());
      if (index.count(key)) continue;
      if (index.size() >= kMaxGroupSize)
        throw SizeLimitError("permutation group '" + name + "' exceeds the size limit " +
                             std::to_string(kMaxGroupSize));
      index.emplace(std::move(key), static_cast<Element>(index.size()));
      points.insert(points.end(), scratch.begin(), scratch.end());
    }
  }
  return FiniteGroup(std::move(name),
                     std::make_shared<PermutationBackend>(degree, std::move(points), std::move(index)));
}

FiniteGroup permutation_group(std::initializer_list<Permutation> gens, std::string name) {
  return permutation_group(std::span<const Permutation>(gens.begin(), gens.size()), std::move(name));
}

FiniteGroup subgroup(const FiniteGroup& g, std::span<const Element> elements, std::string name) {
  if (!is_subgroup(g, elements))
    throw PreconditionError("NotSubgroup", "elements of '" + g.name() + "' do not form a subgroup");
  std::vector<Element> elems{kIdentity};
  for (Element x : elements)
    if (x != kIdentity) elems.push_back(x);
  if (name.empty()) name = "Sub(" + g.name() + ")";
  return FiniteGroup(std::move(name), std::make_shared<SubgroupBackend>(g, std::move(elems)));
}

FiniteGroup formula_group(std::string name, std::size_t n, std::function<Element(Element, Element)> mul) {
  require_size(n, name);
  return FiniteGroup(std::move(name), std::make_shared<FormulaBackend>(n, std::move(mul)));
}

std::vector<Element> power_map(const FiniteGroup& g, std::uint64_t k) {
  std::vector<Element> m(g.size());
  for (Element x = 0; x < g.size(); ++x) m[x] = g.power(x, k);
  return m;
}

GroupAction cyclic_action(const FiniteGroup& n, const FiniteGroup& h, Element generator,
                          std::span<const Element> automorphism) {
  if (h.order(generator) != h.size())
    throw PreconditionError("ActionNotHomomorphism", "element " + std::to_string(generator) +
                                                         " does not generate '" + h.name() + "'");
  GroupAction act;
  act.maps.resize(h.size());
  std::vector<Element> current(n.size());
  std::iota(current.begin(), current.end(), 0u);
  Element hk = kIdentity;
  for (std::size_t k = 0; k < h.size(); ++k) {
    act.maps[hk] = current;
    for (auto& y : current) y = automorphism[y];
    hk = h.mul(hk, generator);
  }
  for (Element y = 0; y < n.size(); ++y)
    if (current[y] != y)
      throw PreconditionError("ActionNotHomomorphism", "automorphism order does not divide |" + h.name() + "|");
  return act;
}

GroupAction trivial_action(const FiniteGroup& n, const FiniteGroup& h) {
  std::vector<Element> id(n.size());
  std::iota(id.begin(), id.end(), 0u);
  return GroupAction{std::vector<std::vector<Element>>(h.size(), id)};
}

FiniteGroup dihedral(std::uint64_t order) {
  if (order < 2 || order % 2 != 0)
    throw PreconditionError("BadParameter", "dihedral order must be even and at least 2");
  require_size(order, "D" + std::to_string(order));
  auto rot = cyclic(order / 2);
  auto flip = cyclic(2);
  auto act = cyclic_action(rot, flip, 1, power_map(rot, order / 2 - 1));
  return semidirect_product(rot, flip, act, "D" + std::to_string(order));
}

FiniteGroup dicyclic(std::uint64_t order) {
  if (order < 4 || order % 4 != 0)
    throw PreconditionError("BadParameter", "dicyclic order must be a multiple of 4");
  require_size(order, "Dic" + std::to_string(order));
  const auto m = static_cast<std::uint32_t>(order / 4);
  const std::uint32_t two_m = 2 * m;
  // a^k x^e stored at 2k + e, with x^2 = a^m and x a x^-1 = a^-1.
  auto mul = [m, two_m](Element u, Element v) -> Element {
    std::uint32_t k1 = u / 2, e1 = u % 2, k2 = v / 2, e2 = v % 2;
    if (e1 == 0) return ((k1 + k2) % two_m) * 2 + e2;
    std::uint32_t k = (k1 + two_m - k2) % two_m;
    if (e2 == 0) return k * 2 + 1;
    return ((k + m) % two_m) * 2;
  };
  std::string name = order == 8 ? "Q8" : order == 16 ? "Q16" : "Dic" + std::to_string(order);
  return formula_group(std::move(name), order, mul);
}

FiniteGroup symmetric(std::uint32_t degree) {
  std::string name = "S" + std::to_string(degree);
  if (degree <= 1) return trivial_group().renamed(name);
  std::vector<std::uint32_t> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), 0u);
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1}}),
                                Permutation::from_cycles(degree, std::vector<std::vector<std::uint32_t>>{cycle})};
  return permutation_group(gens, name);
}

FiniteGroup alternating(std::uint32_t degree) {
  std::string name = "A" + std::to_string(degree);
  if (degree <= 2) return trivial_group().renamed(name);
  // A_m = <(0 1 2), (0 1 ... m-1)> for odd m and <(0 1 2), (1 2 ... m-1)> for even m.
  std::vector<std::uint32_t> cycle;
  for (std::uint32_t x = degree % 2 == 1 ? 0 : 1; x < degree; ++x) cycle.push_back(x);
  std::vector<Permutation> gens{Permutation::from_cycles(degree, {{0, 1, 2}}),
                                Permutation::from_cycles(degree, std::vector<std::vector<std::uint32_t>>{cycle})};
  return permutation_group(gens, name);
}

FiniteGroup heisenberg(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("BadParameter", "Heisenberg group needs a prime");
  const auto q = static_cast<std::uint32_t>(p);
  require_size(saturating_mul(p, p * p), "Heis(" + std::to_string(p) + ")");
  // Upper unitriangular (a, b, c) at a*p^2 + b*p + c; (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  auto mul = [q](Element u, Element v) -> Element {
    std::uint32_t a1 = u / (q * q), b1 = u / q % q, c1 = u % q;
    std::uint32_t a2 = v / (q * q), b2 = v / q % q, c2 = v % q;
    return ((a1 + a2) % q) * q * q + ((b1 + b2) % q) * q + (c1 + c2 + a1 * b2) % q;
  };
  return formula_group("Heis(" + std::to_string(p) + ")", p * p * p, mul);
}

namespace {

FiniteGroup cyclic_extension(std::uint64_t n, std::uint64_t h, std::uint64_t k, std::string name) {
  auto base = cyclic(n);
  auto top = cyclic(h);
  return semidirect_product(base, top, cyclic_action(base, top, 1, power_map(base, k)), std::move(name));
}

}  // namespace

FiniteGroup standard_family(Family family, std::span<const std::uint64_t> params) {
  auto param = [&](std::size_t i) -> std::uint64_t {
    if (params.size() <= i) throw PreconditionError("BadParameter", "missing family parameter");
    return params[i];
  };
  switch (family) {
    case Family::kDihedral: return dihedral(param(0));
    case Family::kDicyclic: return dicyclic(param(0));
    case Family::kSymmetric: return symmetric(static_cast<std::uint32_t>(param(0)));
    case Family::kAlternating: return alternating(static_cast<std::uint32_t>(param(0)));
    case Family::kHeisenberg: return heisenberg(param(0));
    case Family::kModular16: return cyclic_extension(8, 2, 5, "M16");
    case Family::kSemidihedral16: return cyclic_extension(8, 2, 3, "SD16");
    case Family::kFrobenius20: return cyclic_extension(5, 4, 2, "F20");
    case Family::kFrobenius21: return cyclic_extension(7, 3, 2, "F21");
  }
  throw PreconditionError("UnknownFamily", "unknown family");
}

FiniteGroup standard_family(const std::string& family, std::span<const std::uint64_t> params) {
  static const std::unordered_map<std::string, Family> kNames{
      {"dihedral", Family::kDihedral},         {"dicyclic", Family::kDicyclic},
      {"symmetric", Family::kSymmetric},       {"alternating", Family::kAlternating},
      {"heisenberg", Family::kHeisenberg},     {"modular16", Family::kModular16},
      {"semidihedral16", Family::kSemidihedral16}, {"F20", Family::kFrobenius20},
      {"F21", Family::kFrobenius21}};
  auto it = kNames.find(family);
  if (it == kNames.end()) throw PreconditionError("UnknownFamily", "unknown family '" + family + "'");
  return standard_family(it->second, params);
}

}  // namespace ordseq
