#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "chorcheck/checker.hpp"
#include "chorcheck/parse.hpp"
#include "chorcheck/pcp.hpp"
#include "chorcheck/print.hpp"
#include "chorcheck/trace_json.hpp"

namespace {

using namespace chorcheck;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

bool use_color() {
  const char* env = std::getenv("CHORCHECK_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return isatty(fileno(stdout));
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string green(const std::string& t) { return paint(t, "32"); }
std::string red(const std::string& t) { return paint(t, "31"); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Deadline deadline_from(double timeout_seconds) {
  if (timeout_seconds <= 0) return Deadline::never();
  return Deadline::after(
      std::chrono::milliseconds(static_cast<long>(timeout_seconds * 1000)));
}

struct CommonArgs {
  std::string chor_name;
  std::string state_inline;
  std::string state_file;
  bool json = false;
  double timeout = 0;
};

const Choreography& pick_choreography(const Document& doc, const std::string& name,
                                      const std::string& file) {
  if (!name.empty()) {
    const Choreography* c = doc.find_choreography(name);
    if (!c) throw Error(file + ": no choreography named '" + name + "'");
    return *c;
  }
  if (doc.choreographies.empty())
    throw Error(file + ": no choreography declarations");
  return doc.choreographies.front().second;
}

State pick_state(const Document& doc, const CommonArgs& args) {
  if (!args.state_inline.empty()) return parse_state(args.state_inline, "<--state>");
  if (!args.state_file.empty())
    return parse_state(read_file(args.state_file), args.state_file);
  if (doc.initial_state) return *doc.initial_state;
  return State{};
}

void print_proof(const ProofStep& p, int indent) {
  std::cout << std::string(static_cast<std::size_t>(indent), ' ') << p.rule;
  if (!p.note.empty()) std::cout << "  " << p.note;
  std::cout << "\n";
  for (const ProofStep& c : p.children) print_proof(c, indent + 2);
}

int cmd_check(const std::string& chor_file, const std::string& formula_file,
              const std::string& formula_name, bool witness, const CommonArgs& args) {
  Document doc = parse_document(read_file(chor_file), chor_file);
  Document fdoc = parse_document(read_file(formula_file), formula_file);

  const Formula* formula = nullptr;
  std::string fname = formula_name;
  if (!fname.empty()) {
    formula = fdoc.find_formula(fname);
    if (!formula) throw Error(formula_file + ": no formula named '" + fname + "'");
  } else {
    if (fdoc.formulae.empty()) throw Error(formula_file + ": no formula declarations");
    fname = fdoc.formulae.front().first;
    formula = &fdoc.formulae.front().second;
  }

  Configuration cfg{pick_state(doc, args), pick_choreography(doc, args.chor_name, chor_file)};

  CheckOptions opts;
  opts.record_witness = witness;
  opts.deadline = deadline_from(args.timeout);
  Verdict v = entails(cfg, *formula, opts);

  if (args.json) {
    nlohmann::json out = verdict_json(v);
    out["formula"] = fname;
    out["chor"] = print_choreography(cfg.chor);
    out["state"] = state_json(cfg.state);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << fname << ": "
              << (v.holds ? green("holds") : red("does not hold")) << "\n";
    if (v.witness) {
      std::cout << "proof:\n";
      print_proof(*v.witness, 2);
    }
  }
  return v.holds ? kExitHolds : kExitFails;
}

std::optional<Transition> pick_transition(std::vector<Transition> ts,
                                          std::mt19937* rng) {
  if (ts.empty()) return std::nullopt;
  std::sort(ts.begin(), ts.end(), [](const Transition& a, const Transition& b) {
    if (print_label(a.label) != print_label(b.label))
      return print_label(a.label) < print_label(b.label);
    return configuration_key(a.target) < configuration_key(b.target);
  });
  if (!rng) return ts.front();
  std::uniform_int_distribution<std::size_t> dist(0, ts.size() - 1);
  return ts[dist(*rng)];
}

int cmd_simulate(const std::string& chor_file, int budget, bool all, bool has_seed,
                 unsigned seed, const CommonArgs& args) {
  Document doc = parse_document(read_file(chor_file), chor_file);
  Configuration cfg{pick_state(doc, args), pick_choreography(doc, args.chor_name, chor_file)};
  Deadline deadline = deadline_from(args.timeout);

  if (budget <= 0 && !is_recursion_free(cfg.chor))
    throw RecursionError("recursive choreography needs --budget (rec " +
                         first_rec_binder(cfg.chor) + ")");

  if (all) {
    // Full reachable graph within the budget.
    std::optional<int> bound;
    if (budget > 0) bound = budget;
    std::vector<Configuration> configs = reachable(cfg, bound, deadline);
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < configs.size(); ++i)
      ids[configuration_key(configs[i])] = i;
    nlohmann::json nodes = nlohmann::json::array();
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < configs.size(); ++i) {
      if (args.json)
        nodes.push_back({{"id", i},
                         {"chor", print_choreography(configs[i].chor)},
                         {"state", state_json(configs[i].state)}});
      else
        std::cout << "node " << i << ": "
                  << print_state(configs[i].state) << "\n";
      for (const Transition& t : step(configs[i])) {
        auto it = ids.find(configuration_key(t.target));
        if (it == ids.end()) continue; // beyond the budget
        if (args.json)
          edges.push_back({{"from", i}, {"to", it->second}, {"label", label_json(t.label)}});
        else
          std::cout << "  " << print_label(t.label) << " -> node " << it->second
                    << "\n";
      }
    }
    if (args.json)
      std::cout << nlohmann::json{{"schema", "chorcheck-graph-v1"},
                                  {"nodes", nodes},
                                  {"edges", edges}}
                       .dump(2)
                << "\n";
    return kExitHolds;
  }

  std::mt19937 rng(seed);
  Configuration current = cfg;
  int steps = 0;
  std::string outcome;
  nlohmann::json jsteps = nlohmann::json::array();
  if (!args.json) std::cout << "initial: " << print_state(current.state) << "\n";
  for (;;) {
    deadline.check("simulation");
    if (budget > 0 && steps >= budget) {
      outcome = "budget exhausted";
      break;
    }
    std::vector<DisabledRule> diags;
    std::vector<Transition> ts = step(current, diags);
    auto chosen = pick_transition(std::move(ts), has_seed ? &rng : nullptr);
    if (!chosen) {
      if (is_recursion_free(current.chor) && norm(current.chor).empty())
        outcome = "terminated";
      else if (!diags.empty())
        outcome = "stuck (" + diags.front().rule + " disabled: " +
                  diags.front().error.detail + ")";
      else
        outcome = "stuck";
      break;
    }
    ++steps;
    if (args.json) {
      jsteps.push_back(step_json(current, *chosen));
    } else {
      std::cout << steps << ". " << print_label(chosen->label);
      nlohmann::json delta = step_json(current, *chosen)["state_delta"]["set"];
      if (!delta.empty()) std::cout << "  " << delta.dump();
      std::cout << "\n";
    }
    current = chosen->target;
  }
  if (args.json) {
    std::cout << nlohmann::json{{"schema", "chorcheck-trace-v1"},
                                {"initial",
                                 {{"chor", print_choreography(cfg.chor)},
                                  {"state", state_json(cfg.state)}}},
                                {"steps", jsteps},
                                {"outcome", outcome}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << outcome << "\n";
  }
  return kExitHolds;
}

PcpInstance parse_pairs(const std::string& spec) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error("malformed pair '" + item + "' (expected s:t)");
    pairs.emplace_back(item.substr(0, colon), item.substr(colon + 1));
  }
  try {
    return PcpInstance(std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw Error(e.what());
  }
}

int cmd_pcp(const std::string& pairs_spec, int depth, bool print_chor,
            const CommonArgs& args) {
  PcpInstance inst = parse_pairs(pairs_spec);
  Deadline deadline = deadline_from(args.timeout);

  if (print_chor && !args.json) {
    Configuration cfg = encode_pcp(inst);
    std::cout << "chor Pcp =\n  " << print_choreography(cfg.chor) << "\n\n"
              << "state { " << print_state(cfg.state) << " }\n\n"
              << "formula phi = " << print_formula(pcp_formula()) << "\n\n";
  }

  PcpSearchResult result = bounded_search(inst, depth, deadline);

  if (args.json) {
    nlohmann::json out = pcp_result_json(result);
    out["schema"] = "chorcheck-pcp-v1";
    out["depth"] = depth;
    if (print_chor) {
      Configuration cfg = encode_pcp(inst);
      out["chor"] = print_choreography(cfg.chor);
      out["state"] = state_json(cfg.state);
    }
    std::cout << out.dump(2) << "\n";
  } else if (result.solution) {
    const PcpSolution& sol = *result.solution;
    std::cout << green("SOLUTION") << " at depth " << sol.depth << "\n";
    std::cout << "  indices:";
    for (int i : sol.indices) std::cout << " " << i;
    std::cout << "\n  word: \"" << sol.word << "\"\n  trace:\n";
    for (const ActionLabel& l : sol.trace) std::cout << "    " << print_label(l) << "\n";
  } else {
    std::cout << red("NO SOLUTION FOUND") << " (bound " << depth << ")\n";
  }
  return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for global-calculus choreographies"};
  app.require_subcommand(1);

  CommonArgs check_args, sim_args, pcp_args;

  auto add_common = [](CLI::App* cmd, CommonArgs& args, bool with_chor = true) {
    if (with_chor)
      cmd->add_option("--chor", args.chor_name, "choreography declaration to use");
    cmd->add_option("--state", args.state_inline, "inline initial state bindings");
    cmd->add_option("--state-file", args.state_file, "file with initial state bindings");
    cmd->add_flag("--json", args.json, "machine-readable output");
    cmd->add_option("--timeout", args.timeout, "seconds before giving up (exit 3)");
  };

  std::string check_file, check_formula_file, check_formula_name;
  bool check_witness = false;
  CLI::App* check = app.add_subcommand("check", "decide whether a formula holds");
  check->add_option("file", check_file, "choreography document (.gc)")->required();
  check->add_option("--formula", check_formula_file, "formula document (.gl)")->required();
  check->add_option("--formula-name", check_formula_name, "formula declaration to use");
  check->add_flag("--witness", check_witness, "record and print a proof");
  add_common(check, check_args);

  std::string sim_file;
  int sim_budget = 0;
  bool sim_all = false;
  unsigned sim_seed = 0;
  bool sim_has_seed = false;
  CLI::App* simulate = app.add_subcommand("simulate", "run the transition system");
  simulate->add_option("file", sim_file, "choreography document (.gc)")->required();
  simulate->add_option("--budget", sim_budget, "maximum number of steps");
  simulate->add_flag("--all", sim_all, "print the whole reachable graph");
  simulate->add_option("--seed", sim_seed, "randomise the scheduling")
      ->each([&](const std::string&) { sim_has_seed = true; });
  add_common(simulate, sim_args);

  std::string pcp_pairs;
  int pcp_depth = 30;
  bool pcp_print = false;
  CLI::App* pcp = app.add_subcommand("pcp", "bounded search over a correspondence instance");
  pcp->add_option("--pairs", pcp_pairs, "comma-separated word pairs, e.g. 0:0,01:1")
      ->required();
  pcp->add_option("--depth", pcp_depth, "search depth bound");
  pcp->add_flag("--print-chor", pcp_print, "print the generated choreography");
  add_common(pcp, pcp_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed())
      return cmd_check(check_file, check_formula_file, check_formula_name,
                       check_witness, check_args);
    if (simulate->parsed())
      return cmd_simulate(sim_file, sim_budget, sim_all, sim_has_seed, sim_seed,
                          sim_args);
    if (pcp->parsed()) return cmd_pcp(pcp_pairs, pcp_depth, pcp_print, pcp_args);
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << " (partial progress discarded)\n";
    return kExitTimeout;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
