#include "chorcheck/pcp.hpp"

#include <algorithm>
#include <deque>

#include "chorcheck/core_ops.hpp"
#include "chorcheck/print.hpp"

namespace chorcheck {

PcpInstance::PcpInstance(std::vector<std::pair<std::string, std::string>> pairs)
    : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("a PCP instance needs at least one pair");
  for (const auto& [s, t] : pairs_)
    for (char c : s + t)
      if (c != '0' && c != '1')
        throw std::invalid_argument("PCP words range over {0, 1}");
}

namespace {

const Participant kAppender{"A"};
const Participant kStore{"B"};

// One writer: forever open a session with B and write the pair index
// into r@B.
Choreography writer_thread(int index) {
  Name x = process_variable("X");
  Name k = session_channel("k");
  Participant who("A" + std::to_string(index));
  Choreography body = Choreography::init(
      who, kStore, shared_channel("a"), k,
      Choreography::com(who, kStore, k, Expression::lit_int(index), variable("r"),
                        Choreography::rec_var(x)));
  return Choreography::rec(x, body);
}

Choreography appender_thread(const PcpInstance& inst) {
  Name x = process_variable("X");
  Name k = session_channel("k");
  int n = inst.size();

  // Innermost alternative: an unrecognised index just loops.
  Choreography chain = Choreography::rec_var(x);
  for (int i = n; i >= 1; --i) {
    const auto& [s, t] = inst.pairs()[static_cast<std::size_t>(i - 1)];
    Choreography append_pair = Choreography::com(
        kStore, kAppender, k,
        Expression::binary(BinOp::Concat, Expression::var("tmp1"),
                           Expression::lit_string(s)),
        variable("str1"),
        Choreography::com(kStore, kAppender, k,
                          Expression::binary(BinOp::Concat, Expression::var("tmp2"),
                                             Expression::lit_string(t)),
                          variable("str2"), Choreography::rec_var(x)));
    Expression guard = Expression::binary(
        BinOp::Eq, Expression::var("r", kStore), Expression::lit_int(i));
    chain = Choreography::cond(guard, kStore, std::move(append_pair), std::move(chain));
  }

  Choreography body = Choreography::init(
      kAppender, kStore, shared_channel("b"), k,
      Choreography::com(kAppender, kStore, k, Expression::var("str1"), variable("tmp1"),
                        Choreography::com(kAppender, kStore, k, Expression::var("str2"),
                                          variable("tmp2"), std::move(chain))));
  return Choreography::rec(x, std::move(body));
}

} // namespace

Configuration encode_pcp(const PcpInstance& inst) {
  Choreography random = writer_thread(1);
  for (int i = 2; i <= inst.size(); ++i)
    random = Choreography::par(std::move(random), writer_thread(i));

  Choreography chor = Choreography::par(std::move(random), appender_thread(inst));

  State sigma;
  sigma = sigma.with("str1", kAppender, Value(std::string()));
  sigma = sigma.with("str2", kAppender, Value(std::string()));
  sigma = sigma.with("tmp1", kStore, Value(std::string()));
  sigma = sigma.with("tmp2", kStore, Value(std::string()));
  sigma = sigma.with("r", kStore, Value(std::int64_t{1}));
  return Configuration{std::move(sigma), std::move(chor)};
}

Formula pcp_formula() {
  Expression str1 = Expression::var("str1", kAppender);
  Expression str2 = Expression::var("str2", kAppender);
  Expression eps = Expression::lit_string("");
  Formula equal = Formula::eq(str1, str2);
  Formula nonempty1 = Formula::neg(Formula::eq(str1, eps));
  Formula nonempty2 = Formula::neg(Formula::eq(str2, eps));
  return Formula::may(
      Formula::conj(Formula::conj(equal, nonempty1), nonempty2));
}

namespace {

bool solution_state(const State& s) {
  auto v1 = s.lookup("str1", kAppender);
  auto v2 = s.lookup("str2", kAppender);
  return v1 && v2 && v1->is_string() && v2->is_string() &&
         v1->as_string() == v2->as_string() && !v1->as_string().empty();
}

struct SearchNode {
  Configuration cfg;
  int depth = 0;
  std::size_t parent = SIZE_MAX;
  std::optional<ActionLabel> via;
};

PcpSolution build_solution(const std::vector<SearchNode>& nodes, std::size_t leaf) {
  // Recover the path root -> leaf.
  std::vector<std::size_t> path;
  for (std::size_t i = leaf; i != SIZE_MAX; i = nodes[i].parent) path.push_back(i);
  std::reverse(path.begin(), path.end());

  PcpSolution sol;
  sol.depth = nodes[leaf].depth;
  sol.final_config = nodes[leaf].cfg;
  if (auto word = nodes[leaf].cfg.state.lookup("str1", kAppender))
    sol.word = word->as_string();
  for (std::size_t i = 1; i < path.size(); ++i) {
    const SearchNode& node = nodes[path[i]];
    sol.trace.push_back(*node.via);
    // Each time the accumulating word changes, the pair picked is the
    // index stored in r@B at the source of the step.
    const State& before = nodes[path[i - 1]].cfg.state;
    const State& after = node.cfg.state;
    if (before.lookup("str1", kAppender) != after.lookup("str1", kAppender)) {
      auto r = before.lookup("r", kStore);
      if (r && r->is_int()) sol.indices.push_back(static_cast<int>(r->as_int()));
    }
  }
  return sol;
}

} // namespace

PcpSearchResult bounded_search(const PcpInstance& inst, int depth,
                               const Deadline& deadline) {
  PcpSearchResult result;
  std::vector<SearchNode> nodes;
  std::set<std::string> seen;
  std::deque<std::size_t> queue;

  Configuration initial = encode_pcp(inst);
  nodes.push_back(SearchNode{initial, 0, SIZE_MAX, std::nullopt});
  seen.insert(configuration_key(initial));
  queue.push_back(0);

  if (solution_state(initial.state)) {
    result.solution = build_solution(nodes, 0);
    result.configurations_seen = 1;
    return result;
  }

  while (!queue.empty()) {
    deadline.check("bounded correspondence search");
    std::size_t index = queue.front();
    queue.pop_front();
    int d = nodes[index].depth;
    result.depth_explored = std::max(result.depth_explored, d);
    if (d >= depth) continue;

    std::vector<Transition> transitions = step(nodes[index].cfg);
    std::sort(transitions.begin(), transitions.end(),
              [](const Transition& a, const Transition& b) {
                return print_label(a.label) < print_label(b.label);
              });
    for (const Transition& t : transitions) {
      std::string key = configuration_key(t.target);
      if (!seen.insert(key).second) continue;
      nodes.push_back(SearchNode{t.target, d + 1, index, t.label});
      if (solution_state(t.target.state)) {
        result.solution = build_solution(nodes, nodes.size() - 1);
        result.configurations_seen = nodes.size();
        result.depth_explored = d + 1;
        return result;
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  result.configurations_seen = nodes.size();
  result.depth_explored = depth;
  return result;
}

} // namespace chorcheck
