#include "ordseq/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/group_props.hpp"
#include "ordseq/isomorphism.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {
namespace {

constexpr const char* kCacheHeader = "ordseq-catalog v1";

const std::map<std::uint64_t, std::size_t>& known_counts() {
  static const std::map<std::uint64_t, std::size_t> counts{
      {1, 1},  {2, 1},  {3, 1},  {4, 2},   {5, 1},   {6, 2},   {7, 1},  {8, 5},  {9, 2},
      {10, 2}, {11, 1}, {12, 5}, {13, 1},  {14, 2},  {15, 1},  {16, 14}, {20, 5}, {21, 2},
      {60, 13}};
  return counts;
}

void partitions_into(unsigned n, unsigned max_part, std::vector<unsigned>& prefix,
                     std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (unsigned k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_into(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<unsigned>> int_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> prefix;
  partitions_into(n, n, prefix, out);
  return out;
}

NamedGroup named(std::string name, const FiniteGroup& g) { return {name, g.renamed(name)}; }

FiniteGroup cyclic_ext(std::uint64_t n, std::uint64_t h, std::uint64_t k) {
  auto base = cyclic(n);
  auto top = cyclic(h);
  return semidirect_product(base, top, cyclic_action(base, top, 1, power_map(base, k)));
}

// Central product C4 o D8: identify the central involutions of D8 and C4.
FiniteGroup central_product_c4_d8() {
  auto d8 = dihedral(8);
  auto c4 = cyclic(4);
  Element rotation = 0;
  for (Element x = 0; x < d8.size(); ++x)
    if (d8.order(x) == 4) rotation = x;
  const Element z = d8.power(rotation, 2);
  auto prod = direct_product(d8, c4);
  // Product elements are indexed g*|H| + h.
  const Element zc = static_cast<Element>(z * c4.size() + c4.power(1, 2));
  std::vector<Element> n{kIdentity, zc};
  return quotient(prod, n);
}

// (C2 x C2) : C4 with the generator swapping the two factors.
FiniteGroup swap_extension() {
  auto v4 = abelian({2, 2});
  auto c4 = cyclic(4);
  std::vector<Element> swap(4);
  // Mixed radix, last factor least significant: (a, b) at 2a + b.
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b) swap[2 * a + b] = 2 * b + a;
  return semidirect_product(v4, c4, cyclic_action(v4, c4, 1, swap));
}

std::vector<NamedGroup> nonabelian_candidates(std::uint64_t n) {
  std::vector<NamedGroup> out;
  switch (n) {
    case 6: out.push_back(named("S3", dihedral(6))); break;
    case 8:
      out.push_back(named("D8", dihedral(8)));
      out.push_back(named("Q8", dicyclic(8)));
      break;
    case 10: out.push_back(named("D10", dihedral(10))); break;
    case 12:
      out.push_back(named("A4", alternating(4)));
      out.push_back(named("D12", dihedral(12)));
      out.push_back(named("Dic12", dicyclic(12)));
      break;
    case 14: out.push_back(named("D14", dihedral(14))); break;
    case 16:
      out.push_back(named("D16", cyclic_ext(8, 2, 7)));
      out.push_back(named("SD16", cyclic_ext(8, 2, 3)));
      out.push_back(named("M16", cyclic_ext(8, 2, 5)));
      out.push_back(named("Q16", dicyclic(16)));
      out.push_back(named("C2xD8", direct_product(cyclic(2), dihedral(8))));
      out.push_back(named("C2xQ8", direct_product(cyclic(2), dicyclic(8))));
      out.push_back(named("C4:C4", cyclic_ext(4, 4, 3)));
      out.push_back(named("C2^2:C4", swap_extension()));
      out.push_back(named("C4oD8", central_product_c4_d8()));
      break;
    case 20:
      out.push_back(named("D20", dihedral(20)));
      out.push_back(named("Dic20", dicyclic(20)));
      out.push_back(named("F20", standard_family(Family::kFrobenius20)));
      break;
    case 21: out.push_back(named("F21", standard_family(Family::kFrobenius21))); break;
    case 60: {
      auto s3 = dihedral(6);
      out.push_back(named("A5", alternating(5)));
      out.push_back(named("D60", dihedral(60)));
      out.push_back(named("Dic60", dicyclic(60)));
      out.push_back(named("C6xD10", direct_product(cyclic(6), dihedral(10))));
      out.push_back(named("C10xS3", direct_product(cyclic(10), s3)));
      out.push_back(named("C3xDic20", direct_product(cyclic(3), dicyclic(20))));
      out.push_back(named("C5xDic12", direct_product(cyclic(5), dicyclic(12))));
      out.push_back(named("C3xF20", direct_product(cyclic(3), standard_family(Family::kFrobenius20))));
      out.push_back(named("C15:C4", cyclic_ext(15, 4, 2)));
      out.push_back(named("S3xD10", direct_product(s3, dihedral(10))));
      out.push_back(named("C5xA4", direct_product(cyclic(5), alternating(4))));
      // Redundant recipes: isomorphic to C6xD10 and C10xS3.
      out.push_back(named("C3xD20", direct_product(cyclic(3), dihedral(20))));
      out.push_back(named("C5xD12", direct_product(cyclic(5), dihedral(12))));
      break;
    }
    default: break;
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, std::vector<NamedGroup>>& memo() {
  static std::map<std::uint64_t, std::vector<NamedGroup>> m;
  return m;
}

void require_supported(std::uint64_t n) {
  if (!is_supported_order(n))
    throw UnsupportedOrderError("no group catalog for order " + std::to_string(n) +
                                " (supported: 1-16, 20, 21, 60)");
}

}  // namespace

const std::vector<std::uint64_t>& supported_orders() {
  static const std::vector<std::uint64_t> orders = [] {
    std::vector<std::uint64_t> v;
    for (const auto& [n, count] : known_counts()) v.push_back(n);
    return v;
  }();
  return orders;
}

bool is_supported_order(std::uint64_t n) { return known_counts().contains(n); }

std::size_t known_group_count(std::uint64_t n) {
  require_supported(n);
  return known_counts().at(n);
}

std::vector<NamedGroup> abelian_groups_of_order(std::uint64_t n) {
  if (n == 0) throw PreconditionError("BadParameter", "order must be positive");
  if (n == 1) return {named("C1", trivial_group())};
  // Invariant factors d_1 | d_2 | ...: combine one partition per prime, largest parts first.
  std::vector<std::vector<std::uint64_t>> factor_lists{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& partial : factor_lists)
      for (const auto& part : int_partitions(e)) {
        auto f = partial;
        if (f.size() < part.size()) f.resize(part.size(), 1);
        for (std::size_t i = 0; i < part.size(); ++i) f[i] *= checked_pow(p, part[i]);
        next.push_back(std::move(f));
      }
    factor_lists = std::move(next);
  }
  std::vector<NamedGroup> out;
  for (auto f : factor_lists) {
    std::sort(f.begin(), f.end());
    auto g = abelian(f);
    std::string name;
    for (auto d : f) name += (name.empty() ? "C" : "xC") + std::to_string(d);
    out.push_back(named(name, g));
  }
  return out;
}

std::vector<NamedGroup> candidate_groups(std::uint64_t n) {
  require_supported(n);
  auto out = abelian_groups_of_order(n);
  for (auto& g : nonabelian_candidates(n)) out.push_back(std::move(g));
  return out;
}

std::vector<NamedGroup> build_catalog(std::uint64_t n) {
  std::vector<NamedGroup> kept;
  for (auto& candidate : candidate_groups(n)) {
    if (candidate.group.size() != n)
      throw std::logic_error("catalog recipe " + candidate.name + " has the wrong order");
    bool duplicate = std::any_of(kept.begin(), kept.end(),
                                 [&](const NamedGroup& k) { return is_isomorphic(k.group, candidate.group); });
    if (!duplicate) kept.push_back(std::move(candidate));
  }
  if (kept.size() != known_group_count(n))
    throw std::logic_error("catalog of order " + std::to_string(n) + " has " + std::to_string(kept.size()) +
                           " groups, expected " + std::to_string(known_group_count(n)));
  return kept;
}

const std::vector<NamedGroup>& catalog(std::uint64_t n) {
  require_supported(n);
  std::lock_guard lock(cache_mutex());
  auto& m = memo();
  if (auto it = m.find(n); it != m.end()) return it->second;
  std::optional<std::filesystem::path> file;
  if (const char* dir = std::getenv("ORDSEQ_CACHE_DIR"); dir && *dir)
    file = std::filesystem::path(dir) / ("catalog-" + std::to_string(n) + ".txt");
  if (file) {
    if (auto loaded = load_catalog(*file, n)) return m.emplace(n, std::move(*loaded)).first->second;
  }
  auto built = build_catalog(n);
  if (file) {
    try {
      std::filesystem::create_directories(file->parent_path());
      save_catalog(*file, n, built);
    } catch (const std::exception&) {
      // An unwritable cache directory only costs a rebuild next time.
    }
  }
  return m.emplace(n, std::move(built)).first->second;
}

const NamedGroup& catalog_group(std::uint64_t n, const std::string& name) {
  for (const auto& g : catalog(n))
    if (g.name == name) return g;
  throw PreconditionError("UnknownGroup", "no group named '" + name + "' in the order-" + std::to_string(n) +
                                              " catalog");
}

std::vector<NamedGroup> nilpotent_groups_of_order(std::uint64_t n) {
  if (n == 0) throw PreconditionError("BadParameter", "order must be positive");
  std::vector<NamedGroup> out{named("C1", trivial_group())};
  for (auto [p, e] : factorize(n)) {
    const std::uint64_t q = checked_pow(p, e);
    std::vector<NamedGroup> sylows;
    if (e <= 2) {
      sylows = abelian_groups_of_order(q);
    } else if (q == 8 || q == 16) {
      sylows = catalog(q);
    } else {
      throw UnsupportedOrderError("no complete catalog of groups of order " + std::to_string(q));
    }
    std::vector<NamedGroup> next;
    for (const auto& partial : out)
      for (const auto& s : sylows) {
        if (partial.group.size() == 1) {
          next.push_back(s);
          continue;
        }
        std::string name = partial.name + "x" + s.name;
        next.push_back(named(name, direct_product(partial.group, s.group)));
      }
    out = std::move(next);
  }
  return out;
}

std::optional<int> small_group_id(std::uint64_t n, const std::string& name) {
  if (n != 60) return std::nullopt;
  static const std::map<std::string, int> ids{
      {"C5xDic12", 1}, {"C3xDic20", 2}, {"Dic60", 3},   {"C60", 4},     {"A5", 5},
      {"C3xF20", 6},   {"C15:C4", 7},   {"S3xD10", 8},  {"C5xA4", 9},   {"C6xD10", 10},
      {"C10xS3", 11},  {"D60", 12},     {"C2xC30", 13}};
  if (auto it = ids.find(name); it != ids.end()) return it->second;
  return std::nullopt;
}

void save_catalog(const std::filesystem::path& path, std::uint64_t n, const std::vector<NamedGroup>& groups) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write catalog cache " + tmp.string());
    out << kCacheHeader << "\norder " << n << " groups " << groups.size() << "\n";
    for (const auto& g : groups) {
      out << "group " << g.name << "\n";
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g.group.mul(a, b);
        out << "\n";
      }
    }
    if (!out) throw Error("failed writing catalog cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<std::vector<NamedGroup>> load_catalog(const std::filesystem::path& path, std::uint64_t n) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string header;
  std::getline(in, header);
  if (header != kCacheHeader) return std::nullopt;
  std::string word1, word2;
  std::uint64_t order = 0;
  std::size_t count = 0;
  if (!(in >> word1 >> order >> word2 >> count) || word1 != "order" || word2 != "groups" || order != n)
    return std::nullopt;
  if (is_supported_order(n) && count != known_group_count(n)) return std::nullopt;
  std::vector<NamedGroup> groups;
  for (std::size_t i = 0; i < count; ++i) {
    std::string tag, name;
    if (!(in >> tag >> name) || tag != "group") return std::nullopt;
    std::vector<Element> table(n * n);
    for (auto& x : table)
      if (!(in >> x) || x >= n) return std::nullopt;
    try {
      auto g = table_group(name, n, std::move(table));
      check_group_axioms(g);
      groups.push_back({name, g});
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return groups;
}

}  // namespace ordseq
