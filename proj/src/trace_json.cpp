#include "chorcheck/trace_json.hpp"

#include "chorcheck/print.hpp"

namespace chorcheck {

namespace {
template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;
} // namespace

nlohmann::json value_json(const Value& v) {
  if (v.is_int()) return v.as_int();
  if (v.is_bool()) return v.as_bool();
  return v.as_string();
}

nlohmann::json state_json(const State& s) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : s.bindings())
    out[key.second + "@" + key.first] = value_json(value);
  return out;
}

nlohmann::json label_json(const ActionLabel& l) {
  return std::visit(
      overloaded{
          [](const InitLabel& i) {
            return nlohmann::json{{"kind", "init"},
                                  {"from", i.from.name()},
                                  {"to", i.to.name()},
                                  {"service", i.service.id()},
                                  {"channel", i.channel.id()}};
          },
          [](const ComLabel& c) {
            return nlohmann::json{{"kind", "com"},
                                  {"from", c.from.name()},
                                  {"to", c.to.name()},
                                  {"channel", c.channel.id()}};
          },
          [](const BranchLabel& b) {
            return nlohmann::json{{"kind", "branch"},
                                  {"from", b.from.name()},
                                  {"to", b.to.name()},
                                  {"channel", b.channel.id()},
                                  {"label", b.label.id()}};
          },
      },
      l);
}

nlohmann::json step_json(const Configuration& before, const Transition& t) {
  nlohmann::json delta = nlohmann::json::object();
  for (const auto& [key, value] : t.target.state.bindings()) {
    auto prev = before.state.lookup(key.second, Participant(key.first));
    if (!prev || !(*prev == value))
      delta[key.second + "@" + key.first] = value_json(value);
  }
  return nlohmann::json{{"label", label_json(t.label)},
                        {"state_delta", {{"set", delta}}},
                        {"chor", print_choreography(t.target.chor)}};
}

nlohmann::json proof_json(const ProofStep& p) {
  nlohmann::json children = nlohmann::json::array();
  for (const ProofStep& c : p.children) children.push_back(proof_json(c));
  return nlohmann::json{{"rule", p.rule}, {"note", p.note}, {"children", children}};
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json out{{"holds", v.holds}};
  out["witness"] = v.witness ? proof_json(*v.witness) : nlohmann::json();
  return out;
}

nlohmann::json pcp_result_json(const PcpSearchResult& r) {
  nlohmann::json out;
  out["depth_explored"] = r.depth_explored;
  out["configurations_seen"] = r.configurations_seen;
  if (r.solution) {
    nlohmann::json trace = nlohmann::json::array();
    for (const ActionLabel& l : r.solution->trace) trace.push_back(label_json(l));
    out["solution"] = {{"depth", r.solution->depth},
                       {"indices", r.solution->indices},
                       {"word", r.solution->word},
                       {"trace", trace},
                       {"state", state_json(r.solution->final_config.state)}};
  } else {
    out["solution"] = nlohmann::json();
  }
  return out;
}

} // namespace chorcheck
