#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ordseq/bench.hpp"
#include "ordseq/bigint.hpp"
#include "ordseq/catalog.hpp"
#include "ordseq/errors.hpp"
#include "ordseq/expr.hpp"
#include "ordseq/graphs.hpp"
#include "ordseq/group_props.hpp"
#include "ordseq/order_sequence.hpp"
#include "ordseq/partition.hpp"
#include "ordseq/poset.hpp"

using namespace ordseq;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kSize = 3, kPrecondition = 4, kUnsupported = 5 };

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t max_size = kMaxGroupSize;
};

json sequence_json(const OrderSequence& s) { return json::parse(format_sequence_json(s)); }

int cmd_os(const Globals& gl, const std::string& expr) {
  const auto g = parse_group(expr, gl.max_size);
  const auto s = order_sequence(g);
  const auto r = rho(s);
  const bool nilpotent = nilpotent_by_element_counts(g);
  if (gl.json) {
    json j{{"group", g.name()},
           {"order", g.size()},
           {"sequence", sequence_json(s)},
           {"psi", to_string(psi(s))},
           {"psi2", to_string(psi_k(s, 2))},
           {"rho", to_string(r)},
           {"exponent", exponent(g)},
           {"nilpotent", nilpotent}};
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << format_sequence(s) << "  psi=" << to_string(psi(s)) << " rho=" << format_compact(r) << "\n"
            << "psi2=" << to_string(psi_k(s, 2)) << "\n"
            << "exponent=" << exponent(g) << "\n"
            << "nilpotent=" << (nilpotent ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_compare(const Globals& gl, const std::string& ea, const std::string& eb) {
  const auto sa = order_sequence(parse_group(ea, gl.max_size));
  const auto sb = order_sequence(parse_group(eb, gl.max_size));
  std::string relation = "incomparable";
  std::optional<StrongDominationResult> strong;
  if (sa == sb) {
    relation = "A=B";
  } else if (dominates(sa, sb)) {
    relation = "A>B";
    strong = strong_domination(sa, sb);
  } else if (dominates(sb, sa)) {
    relation = "B>A";
    strong = strong_domination(sb, sa);
  }
  if (gl.json) {
    json j{{"relation", relation}};
    if (strong) {
      j["strong"] = strong->strong;
      if (strong->certificate) {
        const auto& c = *strong->certificate;
        j["certificate"] = {{"dominated_orders", c.b_orders},
                            {"demand", c.demand},
                            {"dominating_orders", c.a_orders},
                            {"supply", c.supply}};
      }
    }
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << relation;
  if (strong) std::cout << (strong->strong ? " strong" : " not-strong");
  std::cout << "\n";
  if (strong && strong->certificate) std::cout << strong->certificate->describe() << "\n";
  return kOk;
}

int cmd_poset(const Globals& gl, std::uint64_t order, bool dot) {
  if (!is_supported_order(order)) throw UnsupportedOrderError("order " + std::to_string(order) + " is not in the catalog");
  const auto& cat = catalog(order);
  std::vector<std::string> names;
  std::vector<OrderSequence> seqs;
  for (const auto& g : cat) {
    names.push_back(g.name);
    seqs.push_back(order_sequence(g.group));
  }
  const auto p = build_poset(names, [&](std::size_t i, std::size_t j) { return dominates(seqs[j], seqs[i]); });
  std::cout << render(hasse(p), gl.json && !dot ? "json" : "dot");
  return kOk;
}

int cmd_verify(const Globals& gl, bool all, bool stretch, std::vector<std::string> suites, std::optional<std::uint64_t> order) {
  const auto& known = standard_suite_names();
  for (const auto& s : suites)
    if (s != "simple-pair" && std::find(known.begin(), known.end(), s) == known.end()) {
      std::cerr << "error: unknown suite '" << s << "'\n";
      return kUsage;
    }
  if (all) suites.insert(suites.begin(), known.begin(), known.end());
  if (stretch && std::find(suites.begin(), suites.end(), "simple-pair") == suites.end()) suites.push_back("simple-pair");
  if (suites.empty()) {
    std::cerr << "error: choose --all, --stretch or at least one --suite\n";
    return kUsage;
  }
  bool ok = true;
  json reports = json::array();
  for (const auto& name : suites)
    for (const auto& r : run_suite(name, order, gl.seed)) {
      ok &= r.passed();
      if (gl.json) reports.push_back(json::parse(r.to_json()));
      else std::cout << r.to_text();
    }
  if (gl.json) std::cout << json{{"passed", ok}, {"reports", reports}}.dump() << "\n";
  else std::cout << (ok ? "all suites passed" : "some suites failed") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_realize(const Globals& gl, const std::string& text, std::uint64_t order) {
  const auto s = parse_sequence(text);
  const auto verdict = plausible(s, order);
  std::vector<std::string> groups;
  if (verdict.ok) {
    if (!is_supported_order(order)) throw UnsupportedOrderError("order " + std::to_string(order) + " is not in the catalog");
    groups = realize(s, order);
  }
  if (gl.json) {
    json j{{"plausible", verdict.ok}, {"groups", groups}};
    if (!verdict.ok) j["rule"] = verdict.rule, j["reason"] = verdict.reason;
    std::cout << j.dump() << "\n";
    return kOk;
  }
  if (!verdict.ok) {
    std::cout << "implausible: rule " << verdict.rule << " (" << verdict.reason << ")\n";
    return kOk;
  }
  if (groups.empty()) std::cout << "plausible, no catalog group of order " << order << " has this sequence\n";
  for (const auto& g : groups) std::cout << g << "\n";
  return kOk;
}

int cmd_graph(const Globals& gl, const std::string& kind, const std::string& expr, bool dot) {
  const auto g = parse_group(expr, gl.max_size);
  std::optional<LabeledGraph> graph;
  if (kind == "power") graph = power_graph(g);
  else if (kind == "dpower") graph = directed_power_graph(g);
  else if (kind == "gk") graph = gk_graph(g);
  else throw ParseError("graph kind must be power, dpower or gk", 0, kind);
  std::cout << (gl.json && !dot ? graph_to_json(*graph) + "\n" : graph_to_dot(*graph, kind));
  return kOk;
}

int cmd_partition(const Globals& gl, const std::string& op, const std::vector<std::string>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw ParseError("'" + op + "' takes " + std::to_string(k) + " arguments", 0, std::to_string(args.size()));
  };
  auto prime_arg = [](const std::string& t) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw ParseError("expected a number", 0, t);
    }
    return p;
  };
  auto emit = [&](const json& j, const std::string& text) { std::cout << (gl.json ? j.dump() : text) << "\n"; };
  if (op == "conjugate") {
    need(1);
    const auto c = conjugate(parse_partition(args[0]));
    emit(c.parts(), format_partition(c));
  } else if (op == "compare") {
    need(2);
    const auto a = parse_partition(args[0]), c = parse_partition(args[1]);
    const bool ac = majorizes(a, c), ca = majorizes(c, a);
    const std::string rel = ac && ca ? "A=C" : ac ? "A>C" : ca ? "C>A" : "incomparable";
    emit(json{{"relation", rel}}, rel);
  } else if (op == "chain") {
    need(2);
    const auto chain = box_move_chain(parse_partition(args[0]), parse_partition(args[1]));
    json j = json::array();
    std::string text;
    for (const auto& b : chain) {
      j.push_back(b.parts());
      text += (text.empty() ? "" : "\n") + format_partition(b);
    }
    emit(j, text);
  } else if (op == "sequence") {
    need(2);
    const auto s = abelian_order_sequence(prime_arg(args[0]), parse_partition(args[1]));
    emit(sequence_json(s), format_sequence(s));
  } else if (op == "counts") {
    need(2);
    const auto c = cyclic_subgroup_counts(prime_arg(args[0]), parse_partition(args[1]));
    json rows = json::array();
    std::string text = "order\telements\tcyclic_subgroups";
    for (const auto& l : c.levels) {
      rows.push_back({{"order", l.order}, {"elements", l.elements}, {"cyclic_subgroups", l.cyclic_subgroups}});
      text += "\n" + std::to_string(l.order) + "\t" + std::to_string(l.elements) + "\t" + std::to_string(l.cyclic_subgroups);
    }
    text += "\ntotal\t\t" + std::to_string(c.total) + "\nproduct(r_i+1)\t\t" + std::to_string(c.divisor_product);
    emit(json{{"levels", rows}, {"total", c.total}, {"divisor_product", c.divisor_product}}, text);
  } else if (op == "list") {
    need(1);
    const auto n = prime_arg(args[0]);
    if (n > kMaxPartitionSize) throw SizeLimitError("partitions are limited to n <= " + std::to_string(kMaxPartitionSize));
    json j = json::array();
    std::string text;
    for (const auto& a : partitions_of(static_cast<unsigned>(n))) {
      j.push_back(a.parts());
      text += (text.empty() ? "" : "\n") + format_partition(a);
    }
    emit(j, text);
  } else if (op == "defining") {
    need(2);
    const auto a = defining_partition(parse_sequence(args[1]), prime_arg(args[0]));
    emit(a.parts(), format_partition(a));
  } else {
    throw ParseError("unknown partition operation", 0, op);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Order sequences of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "JSON output");
  app.add_option("--seed", gl.seed, "Seed for randomized checks");
  app.add_option("--max-size", gl.max_size, "Largest group to construct");

  std::string expr_a, expr_b, text, kind, op;
  std::uint64_t order = 0;
  bool dot = false, all = false, stretch = false;
  std::vector<std::string> suites, args;
  std::optional<std::uint64_t> verify_order;

  auto* os = app.add_subcommand("os", "Order sequence and derived statistics of a group expression");
  os->add_option("expr", expr_a, "Group expression")->required();

  auto* compare = app.add_subcommand("compare", "Compare two groups by domination");
  compare->add_option("A", expr_a)->required();
  compare->add_option("B", expr_b)->required();

  auto* poset = app.add_subcommand("poset", "Hasse diagram of the domination order on a catalog");
  poset->add_option("order", order)->required();
  poset->add_flag("--dot", dot, "DOT output (default)");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_flag("--all", all, "Run every standard suite");
  verify->add_flag("--stretch", stretch, "Also run the A8 / PSL(3,4) comparison");
  verify->add_option("--suite", suites, "Suite name (repeatable)");
  verify->add_option("--order", verify_order, "Restrict order-indexed suites");

  auto* realize_cmd = app.add_subcommand("realize", "Check a sequence and list the catalog groups realizing it");
  realize_cmd->add_option("sequence", text)->required();
  realize_cmd->add_option("order", order)->required();

  auto* graph = app.add_subcommand("graph", "Power, directed power or Gruenberg-Kegel graph");
  graph->add_option("kind", kind, "power, dpower or gk")->required();
  graph->add_option("expr", expr_a)->required();
  graph->add_flag("--dot", dot, "DOT output (default)");

  auto* partition = app.add_subcommand("partition", "Partition operations: conjugate, compare, chain, sequence, counts, list, defining");
  partition->add_option("op", op)->required();
  partition->add_option("args", args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*os) return cmd_os(gl, expr_a);
    if (*compare) return cmd_compare(gl, expr_a, expr_b);
    if (*poset) return cmd_poset(gl, order, dot);
    if (*verify) return cmd_verify(gl, all, stretch, suites, verify_order);
    if (*realize_cmd) return cmd_realize(gl, text, order);
    if (*graph) return cmd_graph(gl, kind, expr_a, dot);
    if (*partition) return cmd_partition(gl, op, args);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kSize;
  } catch (const UnsupportedOrderError& e) {
    std::cerr << "unsupported order: " << e.what() << "\n";
    return kUnsupported;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
