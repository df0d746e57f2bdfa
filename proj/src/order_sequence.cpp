#include "ordseq/order_sequence.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "ordseq/catalog.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/numtheory.hpp"

namespace ordseq {

OrderSequence OrderSequence::from_entries(std::vector<Entry> entries) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (auto [order, mult] : entries) {
    if (order == 0) throw PreconditionError("BadSequence", "orders must be positive");
    if (mult == 0) throw PreconditionError("BadSequence", "multiplicities must be positive");
    merged[order] += mult;
  }
  OrderSequence s;
  for (auto [order, mult] : merged) {
    s.entries_.emplace_back(order, mult);
    s.length_ += mult;
  }
  return s;
}

OrderSequence OrderSequence::from_orders(std::span<const std::uint64_t> orders) {
  std::vector<Entry> e;
  e.reserve(orders.size());
  for (auto o : orders) e.emplace_back(o, 1);
  return from_entries(std::move(e));
}

std::uint64_t OrderSequence::multiplicity(std::uint64_t order) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{order, 0});
  return it != entries_.end() && it->first == order ? it->second : 0;
}

std::uint64_t OrderSequence::count_at_most(std::uint64_t t) const {
  std::uint64_t c = 0;
  for (auto [order, mult] : entries_) {
    if (order > t) break;
    c += mult;
  }
  return c;
}

std::vector<std::uint64_t> OrderSequence::expanded() const {
  std::vector<std::uint64_t> out;
  out.reserve(length_);
  for (auto [order, mult] : entries_) out.insert(out.end(), mult, order);
  return out;
}

OrderSequence order_sequence(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto o : g.orders()) ++counts[o];
  return OrderSequence::from_entries({counts.begin(), counts.end()});
}

namespace {

void skip_space(std::string_view t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

std::uint64_t parse_number(std::string_view t, std::size_t& i) {
  skip_space(t, i);
  const std::size_t start = i;
  std::uint64_t v = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
    const unsigned digit = static_cast<unsigned>(t[i] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
      throw ParseError("number too large", start, std::string(t.substr(start, i - start + 1)));
    v = v * 10 + digit;
    ++i;
  }
  if (i == start)
    throw ParseError("expected a number", start, i < t.size() ? std::string(1, t[i]) : std::string{});
  return v;
}

OrderSequence parse_json_sequence(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON sequence", e.byte > 0 ? e.byte - 1 : 0, {});
  }
  if (!j.is_array()) throw ParseError("JSON sequence must be an array", 0, {});
  std::vector<OrderSequence::Entry> entries;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError("JSON entry " + std::to_string(k) + " must be [order, multiplicity]", 0, e.dump());
    entries.emplace_back(e[0].get<std::uint64_t>(), e[1].get<std::uint64_t>());
  }
  if (entries.empty()) throw ParseError("empty sequence", 0, {});
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k].first == 0 || entries[k].second == 0 || (k > 0 && entries[k].first <= entries[k - 1].first))
      throw ParseError("orders must be positive and strictly increasing", 0, j[k].dump());
  return OrderSequence::from_entries(std::move(entries));
}

}  // namespace

OrderSequence parse_sequence(std::string_view text) {
  std::size_t i = 0;
  skip_space(text, i);
  if (i < text.size() && text[i] == '[') return parse_json_sequence(text);
  std::vector<OrderSequence::Entry> entries;
  while (true) {
    const std::size_t entry_start = i;
    std::uint64_t order = parse_number(text, i);
    skip_space(text, i);
    if (i >= text.size() || text[i] != ':')
      throw ParseError("expected ':'", i, i < text.size() ? std::string(1, text[i]) : std::string{});
    ++i;
    std::uint64_t mult = parse_number(text, i);
    if (order == 0 || mult == 0)
      throw ParseError("orders and multiplicities must be positive", entry_start,
                       std::string(text.substr(entry_start, i - entry_start)));
    if (!entries.empty() && order <= entries.back().first)
      throw ParseError("orders must be strictly increasing", entry_start,
                       std::string(text.substr(entry_start, i - entry_start)));
    entries.emplace_back(order, mult);
    skip_space(text, i);
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i, std::string(1, text[i]));
    ++i;
  }
  return OrderSequence::from_entries(std::move(entries));
}

std::string format_sequence(const OrderSequence& s) {
  std::string out;
  for (auto [order, mult] : s.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(order) + ':' + std::to_string(mult);
  }
  return out;
}

std::string format_sequence_json(const OrderSequence& s) {
  nlohmann::json j = nlohmann::json::array();
  for (auto [order, mult] : s.entries()) j.push_back({order, mult});
  return j.dump();
}

BigCount psi_k(const OrderSequence& s, unsigned k) {
  BigCount total = 0;
  for (auto [order, mult] : s.entries()) total += big_pow(order, k) * mult;
  return total;
}

BigCount rho(const OrderSequence& s) {
  BigCount total = 1;
  for (auto [order, mult] : s.entries()) total *= big_pow(order, mult);
  return total;
}

namespace {

void require_same_length(const OrderSequence& a, const OrderSequence& b) {
  if (a.length() != b.length())
    throw PreconditionError("LengthMismatch", "sequences have lengths " + std::to_string(a.length()) + " and " +
                                                  std::to_string(b.length()));
}

// Edmonds-Karp on a small dense network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : cap_(n, std::vector<std::uint64_t>(n, 0)) {}
  void add(std::size_t u, std::size_t v, std::uint64_t c) { cap_[u][v] += c; }

  std::uint64_t max_flow(std::size_t s, std::size_t t) {
    std::uint64_t total = 0;
    const std::size_t n = cap_.size();
    while (true) {
      std::vector<std::size_t> parent(n, n);
      parent[s] = s;
      std::queue<std::size_t> q;
      q.push(s);
      while (!q.empty() && parent[t] == n) {
        auto u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n; ++v)
          if (parent[v] == n && cap_[u][v] > 0) {
            parent[v] = u;
            q.push(v);
          }
      }
      if (parent[t] == n) return total;
      std::uint64_t push = std::numeric_limits<std::uint64_t>::max();
      for (auto v = t; v != s; v = parent[v]) push = std::min(push, cap_[parent[v]][v]);
      for (auto v = t; v != s; v = parent[v]) {
        cap_[parent[v]][v] -= push;
        cap_[v][parent[v]] += push;
      }
      total += push;
    }
  }

  std::vector<bool> reachable(std::size_t s) const {
    std::vector<bool> seen(cap_.size(), false);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t v = 0; v < cap_.size(); ++v)
        if (!seen[v] && cap_[u][v] > 0) {
          seen[v] = true;
          q.push(v);
        }
    }
    return seen;
  }

 private:
  std::vector<std::vector<std::uint64_t>> cap_;
};

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

bool dominates(const OrderSequence& a, const OrderSequence& b) {
  require_same_length(a, b);
  std::vector<std::uint64_t> thresholds;
  for (auto [o, m] : a.entries()) thresholds.push_back(o);
  for (auto [o, m] : b.entries()) thresholds.push_back(o);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::size_t ia = 0, ib = 0;
  std::uint64_t ca = 0, cb = 0;
  for (auto t : thresholds) {
    while (ia < a.entries().size() && a.entries()[ia].first <= t) ca += a.entries()[ia++].second;
    while (ib < b.entries().size() && b.entries()[ib].first <= t) cb += b.entries()[ib++].second;
    if (ca > cb) return false;
  }
  return true;
}

bool properly_dominates(const OrderSequence& a, const OrderSequence& b) { return dominates(a, b) && a != b; }

std::string HallCertificate::describe() const {
  auto list = [](const std::vector<std::uint64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return "orders " + list(b_orders) + " need " + std::to_string(demand) + " elements of order divisible by one of them; " +
         "only " + std::to_string(supply) + " available at orders " + list(a_orders);
}

StrongDominationResult strong_domination(const OrderSequence& a, const OrderSequence& b) {
  require_same_length(a, b);
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  // Nodes: source, b-orders, a-orders, sink.
  const std::size_t nb = eb.size(), na = ea.size();
  const std::size_t source = 0, sink = 1 + nb + na;
  FlowNetwork net(sink + 1);
  const std::uint64_t unbounded = a.length() + 1;
  for (std::size_t i = 0; i < nb; ++i) net.add(source, 1 + i, eb[i].second);
  for (std::size_t j = 0; j < na; ++j) net.add(1 + nb + j, sink, ea[j].second);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < na; ++j)
      if (ea[j].first % eb[i].first == 0) net.add(1 + i, 1 + nb + j, unbounded);
  StrongDominationResult result;
  result.strong = net.max_flow(source, sink) == b.length();
  if (result.strong) return result;
  auto seen = net.reachable(source);
  HallCertificate cert;
  for (std::size_t i = 0; i < nb; ++i)
    if (seen[1 + i]) {
      cert.b_orders.push_back(eb[i].first);
      cert.demand += eb[i].second;
    }
  for (std::size_t j = 0; j < na; ++j) {
    bool neighbour = std::any_of(cert.b_orders.begin(), cert.b_orders.end(),
                                 [&](std::uint64_t d) { return ea[j].first % d == 0; });
    if (neighbour) {
      cert.a_orders.push_back(ea[j].first);
      cert.supply += ea[j].second;
    }
  }
  result.certificate = std::move(cert);
  return result;
}

bool strongly_dominates(const OrderSequence& a, const OrderSequence& b) { return strong_domination(a, b).strong; }

OrderSequence seq_product(const OrderSequence& x, const OrderSequence& y) {
  std::vector<OrderSequence::Entry> out;
  for (auto [ox, mx] : x.entries())
    for (auto [oy, my] : y.entries()) out.emplace_back(ox * oy, mx * my);
  return OrderSequence::from_entries(std::move(out));
}

OrderSequence seq_join(const OrderSequence& x, const OrderSequence& y) {
  std::vector<OrderSequence::Entry> out;
  for (auto [ox, mx] : x.entries())
    for (auto [oy, my] : y.entries()) out.emplace_back(std::lcm(ox, oy), mx * my);
  return OrderSequence::from_entries(std::move(out));
}

OrderSequence coprime_part(const OrderSequence& s, std::uint64_t m) {
  std::vector<OrderSequence::Entry> out;
  for (auto [o, mult] : s.entries())
    if (gcd64(o, m) == 1) out.emplace_back(o, mult);
  return OrderSequence::from_entries(std::move(out));
}

Plausibility plausible(const OrderSequence& s, std::uint64_t n) {
  auto fail = [](std::string rule, std::string reason) { return Plausibility{false, std::move(rule), std::move(reason)}; };
  if (s.length() != n)
    return fail("length", "sequence has " + std::to_string(s.length()) + " entries, expected " + std::to_string(n));
  if (s.multiplicity(1) != 1)
    return fail("identity", "multiplicity(1)=" + std::to_string(s.multiplicity(1)) + " is not 1");
  for (auto [o, m] : s.entries())
    if (n % o != 0) return fail("lagrange", "order " + std::to_string(o) + " does not divide " + std::to_string(n));
  // The mod-p rule runs before the phi rule so that the first violated rule
  // names the congruence when both fail.
  for (auto p : prime_divisors(n)) {
    const auto m = s.multiplicity(p);
    if (m % p != p - 1)
      return fail("mod-p", "multiplicity(" + std::to_string(p) + ")=" + std::to_string(m) + " is not -1 (mod " +
                               std::to_string(p) + ")");
  }
  for (auto [o, m] : s.entries())
    if (m % euler_phi(o) != 0)
      return fail("phi", "phi(" + std::to_string(o) + ")=" + std::to_string(euler_phi(o)) +
                             " does not divide multiplicity " + std::to_string(m));
  return {};
}

bool nilpotent_from_sequence(const OrderSequence& s, std::uint64_t n) {
  for (auto [p, e] : factorize(n)) {
    std::uint64_t count = 0;
    for (auto [o, m] : s.entries())
      if (is_power_of(o, p)) count += m;
    if (count != checked_pow(p, e)) return false;
  }
  return true;
}

std::vector<std::string> realize(const OrderSequence& s, std::uint64_t n) {
  const auto& groups = catalog(n);
  std::vector<std::string> names;
  if (!plausible(s, n).ok) return names;
  for (const auto& g : groups)
    if (order_sequence(g.group) == s) names.push_back(g.name);
  return names;
}

}  // namespace ordseq
