#include "ordseq/poset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ordseq/errors.hpp"

namespace ordseq {

Poset::Poset(std::vector<PosetItem> items, std::vector<std::vector<bool>> leq)
    : items_(std::move(items)), leq_(std::move(leq)) {
  const std::size_t n = items_.size();
  if (leq_.size() != n) throw PreconditionError("BadPoset", "relation size does not match the items");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq_[i].size() != n) throw PreconditionError("BadPoset", "relation matrix is not square");
    if (!leq_[i][i]) throw PreconditionError("NotReflexive", items_[i].name + " is not related to itself");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw PreconditionError("AntisymmetryViolation", items_[i].name + " and " + items_[j].name);
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[j][k] && !leq_[i][k])
          throw PreconditionError("NotTransitive",
                                  items_[i].name + " <= " + items_[j].name + " <= " + items_[k].name);
    }
}

std::size_t Poset::index_of_member(const std::string& member) const {
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (std::find(items_[i].members.begin(), items_[i].members.end(), member) != items_[i].members.end()) return i;
  throw PreconditionError("UnknownItem", "no poset item contains '" + member + "'");
}

Poset build_poset(const std::vector<std::string>& names, const std::function<bool(std::size_t, std::size_t)>& leq,
                  bool collapse) {
  const std::size_t n = names.size();
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> representative;
  std::vector<PosetItem> items;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t found = representative.size();
    if (collapse)
      for (std::size_t c = 0; c < representative.size(); ++c) {
        const auto r = representative[c];
        if (leq(i, r) && leq(r, i)) {
          found = c;
          break;
        }
      }
    if (found == representative.size()) {
      representative.push_back(i);
      items.push_back({names[i], {names[i]}});
    } else {
      items[found].members.push_back(names[i]);
      items[found].name += "," + names[i];
    }
    class_of[i] = found;
  }
  // The relation must not depend on the chosen representative.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq(i, j) != leq(representative[class_of[i]], representative[class_of[j]]))
        throw PreconditionError("NotTransitive", "relation is not constant on the class of " + names[i]);
  const std::size_t m = items.size();
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) rel[a][b] = leq(representative[a], representative[b]);
  return Poset(std::move(items), std::move(rel));
}

HasseDiagram hasse(const Poset& p) {
  HasseDiagram d;
  d.items = p.items();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k)
        if (p.less(i, k) && p.less(k, j)) covered = false;
      if (covered) d.covers.emplace_back(i, j);
    }
  return d;
}

std::vector<std::vector<bool>> cover_closure(const HasseDiagram& d) {
  const std::size_t n = d.items.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : d.covers) r[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

Extremes extremes(const Poset& p) {
  Extremes e;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool is_max = true, is_min = true;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.less(i, j)) is_max = false;
      if (p.less(j, i)) is_min = false;
    }
    if (is_max) e.maximal.push_back(i);
    if (is_min) e.minimal.push_back(i);
  }
  e.unique_max = e.maximal.size() == 1;
  return e;
}

HasseDiagram sorted_by_name(const HasseDiagram& d) {
  std::vector<std::size_t> order(d.items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d.items[a].name < d.items[b].name; });
  std::vector<std::size_t> position(order.size());
  HasseDiagram out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    position[order[k]] = k;
    out.items.push_back(d.items[order[k]]);
  }
  for (auto [a, b] : d.covers) out.covers.emplace_back(position[a], position[b]);
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

namespace {

std::vector<std::string> dot_ids(const std::vector<PosetItem>& items) {
  std::vector<std::string> ids;
  std::set<std::string> used;
  for (const auto& item : items) {
    std::string id = "n_";
    for (char ch : item.name) id += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
    std::string unique = id;
    for (int k = 2; used.contains(unique); ++k) unique = id + "_" + std::to_string(k);
    used.insert(unique);
    ids.push_back(unique);
  }
  return ids;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render(const HasseDiagram& input, const std::string& format) {
  const HasseDiagram d = sorted_by_name(input);
  if (format == "dot") {
    const auto ids = dot_ids(d.items);
    std::ostringstream out;
    out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < d.items.size(); ++i)
      out << "  " << ids[i] << " [label=\"" << dot_escape(d.items[i].name) << "\"];\n";
    for (auto [a, b] : d.covers) out << "  " << ids[a] << " -> " << ids[b] << ";\n";
    out << "}\n";
    return out.str();
  }
  if (format == "json") {
    nlohmann::json j;
    j["items"] = nlohmann::json::array();
    for (const auto& item : d.items) j["items"].push_back({{"name", item.name}, {"members", item.members}});
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : d.covers) j["covers"].push_back({a, b});
    return j.dump(2) + "\n";
  }
  throw PreconditionError("UnknownFormat", "unknown diagram format '" + format + "'");
}

HasseDiagram parse_hasse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed diagram JSON", e.byte > 0 ? e.byte - 1 : 0, {});
  }
  HasseDiagram d;
  try {
    for (const auto& item : j.at("items"))
      d.items.push_back({item.at("name").get<std::string>(), item.at("members").get<std::vector<std::string>>()});
    for (const auto& c : j.at("covers")) {
      auto a = c.at(0).get<std::size_t>(), b = c.at(1).get<std::size_t>();
      if (a >= d.items.size() || b >= d.items.size()) throw ParseError("cover index out of range", 0, c.dump());
      d.covers.emplace_back(a, b);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what(), 0, {});
  }
  return d;
}

}  // namespace ordseq
