#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordseq {

struct PosetItem {
  std::string name;                  // member names joined by ","
  std::vector<std::string> members;
  bool operator==(const PosetItem&) const = default;
};

class Poset {
 public:
  Poset(std::vector<PosetItem> items, std::vector<std::vector<bool>> leq);
  std::size_t size() const { return items_.size(); }
  const std::vector<PosetItem>& items() const { return items_; }
  const PosetItem& item(std::size_t i) const { return items_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  std::size_t index_of_member(const std::string& member) const;

 private:
  std::vector<PosetItem> items_;
  std::vector<std::vector<bool>> leq_;
};

// Builds the partial order induced by `leq` on the named inputs. With
// `collapse`, mutually related inputs become one class (in first-occurrence
// order); otherwise such pairs throw PreconditionError("AntisymmetryViolation").
// Reflexivity and transitivity are checked either way.
Poset build_poset(const std::vector<std::string>& names,
                  const std::function<bool(std::size_t, std::size_t)>& leq, bool collapse = true);

// Cover pairs (lower, upper) indexing items.
struct HasseDiagram {
  std::vector<PosetItem> items;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  bool operator==(const HasseDiagram&) const = default;
};

HasseDiagram hasse(const Poset& p);
// Reflexive-transitive closure of the covers, as a leq matrix.
std::vector<std::vector<bool>> cover_closure(const HasseDiagram& d);

struct Extremes {
  std::vector<std::size_t> maximal;
  std::vector<std::size_t> minimal;
  bool unique_max = false;
};

Extremes extremes(const Poset& p);

// "dot" or "json"; items are sorted by name. Throws PreconditionError("UnknownFormat").
std::string render(const HasseDiagram& d, const std::string& format);
// Sorts items by name and remaps covers; render() output is unchanged by it.
HasseDiagram sorted_by_name(const HasseDiagram& d);
// Parses the JSON rendering; throws ParseError.
HasseDiagram parse_hasse_json(std::string_view text);

}  // namespace ordseq
