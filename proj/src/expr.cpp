#include "ordseq/expr.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <vector>

#include "ordseq/catalog.hpp"
#include "ordseq/constructors.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/field.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {
namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

struct Node {
  std::string atom;  // empty for a product node
  std::optional<std::uint64_t> suffix;
  std::vector<std::uint64_t> args;
  std::string name_arg;  // Cat only
  std::size_t position = 0;
  std::vector<std::unique_ptr<Node>> factors;
  std::uint64_t order = 1;
};

std::uint64_t factorial_saturating(std::uint64_t m) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= m; ++i) f = saturating_mul(f, i);
  return f;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  std::unique_ptr<Node> parse() {
    auto node = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return node;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_, current_token()); }

  std::string current_token() const {
    if (pos_ >= text_.size()) return "<end>";
    std::size_t end = pos_ + 1;
    if (std::isalnum(static_cast<unsigned char>(text_[pos_])))
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = text_[pos_] - '0';
      if (v > (kSaturated - digit) / 10) {
        pos_ = start;
        fail("number too large");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  std::unique_ptr<Node> parse_product() {
    auto first = parse_factor();
    if (!peek_operator()) return first;
    auto node = std::make_unique<Node>();
    node->position = first->position;
    node->order = first->order;
    node->factors.push_back(std::move(first));
    while (peek_operator()) {
      ++pos_;
      auto next = parse_factor();
      node->order = saturating_mul(node->order, next->order);
      node->factors.push_back(std::move(next));
    }
    return node;
  }

  bool peek_operator() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == 'x';
  }

  std::unique_ptr<Node> parse_factor() {
    skip_space();
    if (accept('(')) {
      auto inner = parse_product();
      expect(')');
      return inner;
    }
    return parse_atom();
  }

  std::vector<std::uint64_t> number_list() {
    std::vector<std::uint64_t> out;
    expect('(');
    do out.push_back(number());
    while (accept(','));
    expect(')');
    return out;
  }

  std::unique_ptr<Node> parse_atom() {
    auto node = std::make_unique<Node>();
    node->position = pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != 'x') ++pos_;
    node->atom = text_.substr(start, pos_ - start);
    if (node->atom.empty()) fail("expected a group");
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) node->suffix = number();
    const std::string& a = node->atom;
    const auto at_atom = [&](const std::string& message) {
      throw ParseError(message, node->position, a + (node->suffix ? std::to_string(*node->suffix) : ""));
    };
    const auto need_suffix = [&]() -> std::uint64_t {
      if (!node->suffix) at_atom("'" + a + "' needs a number");
      return *node->suffix;
    };
    const auto fixed = [&](std::uint64_t value) {
      if (node->suffix != value) at_atom("unknown group");
      node->order = value;
    };
    if (a == "C") {
      node->order = need_suffix();
      if (node->order == 0) at_atom("cyclic order must be positive");
    } else if (a == "D") {
      node->order = need_suffix();
      if (node->order < 2 || node->order % 2 != 0) at_atom("dihedral order must be even");
    } else if (a == "Dic") {
      const auto k = need_suffix();
      if (k == 0) at_atom("dicyclic parameter must be positive");
      node->order = k % 4 == 0 ? k : saturating_mul(4, k);
    } else if (a == "S" || a == "A") {
      const auto m = need_suffix();
      node->order = m <= 1 ? 1 : (a == "A" && m == 2 ? 1 : factorial_saturating(m) / (a == "A" ? 2 : 1));
      if (m > 20) node->order = kSaturated;
    } else if (a == "Q") {
      if (node->suffix != 8 && node->suffix != 16) at_atom("unknown group");
      node->order = *node->suffix;
    } else if (a == "M" || a == "SD") {
      fixed(16);
    } else if (a == "F") {
      if (node->suffix != 20 && node->suffix != 21) at_atom("unknown group");
      node->order = *node->suffix;
    } else if (a == "PSL") {
      fixed(34);
      node->order = 20160;
    } else if (a == "Ab") {
      if (node->suffix) at_atom("unexpected number");
      node->args = number_list();
      for (auto k : node->args) {
        if (k == 0) at_atom("invariants must be positive");
        node->order = saturating_mul(node->order, k);
      }
    } else if (a == "Heis") {
      if (node->suffix) at_atom("unexpected number");
      node->args = number_list();
      if (node->args.size() != 1 || !is_prime(node->args[0])) at_atom("Heis needs one prime");
      node->order = saturating_mul(node->args[0], saturating_mul(node->args[0], node->args[0]));
    } else if (a == "Aff") {
      if (node->suffix) at_atom("unexpected number");
      node->args = number_list();
      if (node->args.size() != 3) at_atom("Aff needs (p,d,q)");
      const auto [p, d, q] = std::tuple{node->args[0], node->args[1], node->args[2]};
      if (!is_prime(p) || !is_prime(q) || d == 0 || d > 64) at_atom("Aff needs primes p, q and d >= 1");
      std::uint64_t pd = 1;
      for (std::uint64_t i = 0; i < d; ++i) pd = saturating_mul(pd, p);
      if (pd != kSaturated && (pd - 1) % q != 0) at_atom("Aff needs q to divide p^d - 1");
      node->order = saturating_mul(pd, q);
    } else if (a == "Cat") {
      if (node->suffix) at_atom("unexpected number");
      expect('(');
      node->args.push_back(number());
      expect(',');
      skip_space();
      const std::size_t name_start = pos_;
      int depth = 0;
      while (pos_ < text_.size() && !(depth == 0 && text_[pos_] == ')')) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      std::string name = text_.substr(name_start, pos_ - name_start);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      if (name.empty()) fail("expected a catalog name");
      expect(')');
      node->name_arg = name;
      node->order = node->args[0];
    } else {
      at_atom("unknown group");
    }
    return node;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

FiniteGroup build(const Node& n) {
  if (n.atom.empty()) {
    FiniteGroup g = build(*n.factors.front());
    for (std::size_t i = 1; i < n.factors.size(); ++i) g = direct_product(g, build(*n.factors[i]));
    return g;
  }
  const std::string& a = n.atom;
  if (a == "C") return cyclic(n.order);
  if (a == "D") return dihedral(n.order);
  if (a == "Dic") return dicyclic(n.order);
  if (a == "Q") return dicyclic(n.order);
  if (a == "S") return symmetric(static_cast<std::uint32_t>(*n.suffix));
  if (a == "A") return alternating(static_cast<std::uint32_t>(*n.suffix));
  if (a == "M") return standard_family(Family::kModular16);
  if (a == "SD") return standard_family(Family::kSemidihedral16);
  if (a == "F") return standard_family(n.order == 20 ? Family::kFrobenius20 : Family::kFrobenius21);
  if (a == "PSL") return psl_3_4();
  if (a == "Ab") return abelian(n.args);
  if (a == "Heis") return heisenberg(n.args[0]);
  if (a == "Aff")
    return affine_frobenius_group(static_cast<std::uint32_t>(n.args[0]), static_cast<std::uint32_t>(n.args[1]),
                                  n.args[2]);
  if (a == "Cat") return catalog_group(n.args[0], n.name_arg).group.renamed(n.name_arg);
  throw ParseError("unknown group", n.position, a);
}

}  // namespace

std::uint64_t expression_order(const std::string& text) { return Parser(text).parse()->order; }

FiniteGroup parse_group(const std::string& text, std::uint64_t max_size) {
  auto tree = Parser(text).parse();
  const std::uint64_t cap = std::min<std::uint64_t>(max_size, kMaxGroupSize);
  if (tree->order > cap)
    throw SizeLimitError("group of order " + (tree->order == kSaturated ? std::string("> 2^64") : std::to_string(tree->order)) +
                         " exceeds the size limit " + std::to_string(cap));
  return build(*tree);
}

}  // namespace ordseq
