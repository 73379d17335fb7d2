#include "chorcheck/semantics.hpp"

#include <algorithm>
#include <deque>

#include "chorcheck/core_ops.hpp"
#include "chorcheck/print.hpp"

namespace chorcheck {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

EvalError unbound(const std::string& var, const std::string& at) {
  return {EvalError::Kind::UnboundVariable, var + "@" + at + " is unbound"};
}

EvalError mismatch(const std::string& detail) {
  return {EvalError::Kind::TypeMismatch, detail};
}

} // namespace

EvalResult eval_expr(const State& s, const Expression& e,
                     const std::optional<Participant>& at) {
  return std::visit(
      overloaded{
          [](const LitExpr& l) -> EvalResult { return l.value; },
          [&](const VarExpr& v) -> EvalResult {
            std::optional<Participant> where = v.at ? v.at : at;
            if (!where)
              return EvalError{EvalError::Kind::NoLocation,
                               "read of " + v.var.id() + " has no participant"};
            auto val = s.lookup(v.var.id(), *where);
            if (!val) return unbound(v.var.id(), where->name());
            return *val;
          },
          [&](const BinaryExpr& b) -> EvalResult {
            EvalResult lhs = eval_expr(s, b.lhs, at);
            if (!eval_ok(lhs)) return lhs;
            EvalResult rhs = eval_expr(s, b.rhs, at);
            if (!eval_ok(rhs)) return rhs;
            const Value& l = std::get<Value>(lhs);
            const Value& r = std::get<Value>(rhs);
            switch (b.op) {
              case BinOp::Add:
              case BinOp::Sub:
                if (!l.is_int() || !r.is_int())
                  return mismatch("arithmetic on non-integers");
                return Value(b.op == BinOp::Add ? l.as_int() + r.as_int()
                                                : l.as_int() - r.as_int());
              case BinOp::Lt:
                if (!l.is_int() || !r.is_int())
                  return mismatch("comparison on non-integers");
                return Value(l.as_int() < r.as_int());
              case BinOp::Eq:
                return Value(l == r);
              case BinOp::Ne:
                return Value(!(l == r));
              case BinOp::Concat:
                if (!l.is_string() || !r.is_string())
                  return mismatch("concatenation on non-strings");
                return Value(l.as_string() + r.as_string());
            }
            return mismatch("unknown operator");
          },
          [&](const NotExpr& n) -> EvalResult {
            EvalResult arg = eval_expr(s, n.arg, at);
            if (!eval_ok(arg)) return arg;
            const Value& v = std::get<Value>(arg);
            if (!v.is_bool()) return mismatch("not on a non-boolean");
            return Value(!v.as_bool());
          },
      },
      e.node());
}

namespace {

void step_rec(const State& state, const Choreography& chor,
              const std::set<std::string>& avoid, std::vector<Transition>& out,
              std::vector<DisabledRule>* diags) {
  std::visit(
      overloaded{
          [](const InactionNode&) {},
          [&](const InitNode& i) {
            Name fresh = session_channel(fresh_ident(i.channel.id(), avoid));
            Choreography cont = substitute_channel(i.cont, i.channel, fresh);
            out.push_back(Transition{InitLabel{i.from, i.to, i.service, fresh},
                                     Configuration{state, std::move(cont)}});
          },
          [&](const ComNode& m) {
            EvalResult r = eval_expr(state, m.payload, m.from);
            if (!eval_ok(r)) {
              if (diags) diags->push_back({"com", std::get<EvalError>(r)});
              return;
            }
            State next = state.with(m.target.id(), m.to, std::get<Value>(r));
            out.push_back(Transition{ComLabel{m.from, m.to, m.channel},
                                     Configuration{std::move(next), m.cont}});
          },
          [&](const ChoiceNode& ch) {
            for (const auto& br : ch.branches)
              out.push_back(
                  Transition{BranchLabel{ch.from, ch.to, ch.channel, br.label},
                             Configuration{state, br.body}});
          },
          [&](const ParNode& p) {
            std::vector<Transition> left;
            step_rec(state, p.left, avoid, left, diags);
            for (Transition& t : left) {
              t.target.chor = Choreography::par(t.target.chor, p.right);
              out.push_back(std::move(t));
            }
            std::vector<Transition> right;
            step_rec(state, p.right, avoid, right, diags);
            for (Transition& t : right) {
              t.target.chor = Choreography::par(p.left, t.target.chor);
              out.push_back(std::move(t));
            }
          },
          [&](const CondNode& i) {
            EvalResult g = eval_expr(state, i.guard, i.at);
            if (!eval_ok(g)) {
              if (diags) diags->push_back({"cond", std::get<EvalError>(g)});
              return;
            }
            const Value& v = std::get<Value>(g);
            if (!v.is_bool()) {
              if (diags)
                diags->push_back(
                    {"cond", mismatch("guard evaluated to a non-boolean")});
              return;
            }
            step_rec(state, v.as_bool() ? i.then_branch : i.else_branch, avoid, out,
                     diags);
          },
          [](const RecVarNode&) {},
          [&](const RecNode&) {
            step_rec(state, unfold(chor), avoid, out, diags);
          },
      },
      chor.node());
}

std::set<std::string> configuration_idents(const Configuration& cfg) {
  std::set<std::string> avoid = all_idents(cfg.chor);
  for (const auto& [key, value] : cfg.state.bindings()) {
    avoid.insert(key.first);
    avoid.insert(key.second);
  }
  return avoid;
}

} // namespace

std::vector<Transition> step(const Configuration& cfg) {
  std::vector<Transition> out;
  step_rec(cfg.state, cfg.chor, configuration_idents(cfg), out, nullptr);
  return out;
}

std::vector<Transition> step(const Configuration& cfg,
                             std::vector<DisabledRule>& diagnostics) {
  std::vector<Transition> out;
  step_rec(cfg.state, cfg.chor, configuration_idents(cfg), out, &diagnostics);
  return out;
}

std::string configuration_key(const Configuration& cfg) {
  return print_choreography(alpha_canonical(cfg.chor)) + "\n# " +
         print_state(cfg.state);
}

std::vector<Configuration> next(const Configuration& cfg, const ActionLabel& query) {
  std::vector<Configuration> out;
  std::set<std::string> seen;
  auto push = [&](Configuration c) {
    if (seen.insert(configuration_key(c)).second) out.push_back(std::move(c));
  };
  std::optional<std::set<std::string>> free_chans; // computed lazily
  for (const Transition& t : step(cfg)) {
    if (t.label == query) {
      push(t.target);
      continue;
    }
    const auto* want = std::get_if<InitLabel>(&query);
    const auto* got = std::get_if<InitLabel>(&t.label);
    if (!want || !got) continue;
    if (!(want->from == got->from && want->to == got->to &&
          want->service == got->service))
      continue;
    // The rule may pick any channel fresh for the source configuration,
    // so rename the representative to the queried one when legal.
    if (!free_chans) free_chans = free_session_channels(cfg.chor);
    if (free_chans->count(want->channel.id())) continue;
    push(Configuration{t.target.state, substitute_channel(t.target.chor, got->channel,
                                                          want->channel)});
  }
  return out;
}

std::vector<Configuration> reachable(const Configuration& cfg, std::optional<int> budget,
                                     const Deadline& deadline) {
  if (!budget && !is_recursion_free(cfg.chor))
    throw RecursionError(
        "reachability of a recursive term requires a step budget (rec " +
        first_rec_binder(cfg.chor) + ")");
  std::vector<Configuration> out;
  std::set<std::string> seen;
  std::deque<std::pair<Configuration, int>> queue;
  seen.insert(configuration_key(cfg));
  out.push_back(cfg);
  queue.emplace_back(cfg, 0);
  while (!queue.empty()) {
    deadline.check("reachability search");
    auto [current, depth] = std::move(queue.front());
    queue.pop_front();
    if (budget && depth >= *budget) continue;
    for (const Transition& t : step(current)) {
      std::string key = configuration_key(t.target);
      if (!seen.insert(key).second) continue;
      out.push_back(t.target);
      queue.emplace_back(t.target, depth + 1);
    }
  }
  return out;
}

std::vector<Choreography> norm(const Choreography& c) {
  return std::visit(
      overloaded{
          [](const InactionNode&) { return std::vector<Choreography>{}; },
          [&](const ParNode& p) {
            std::vector<Choreography> out = norm(p.left);
            std::vector<Choreography> right = norm(p.right);
            out.insert(out.end(), right.begin(), right.end());
            return out;
          },
          [&](const RecVarNode&) -> std::vector<Choreography> {
            throw RecursionError("norm requires a recursion-free term");
          },
          [&](const RecNode&) -> std::vector<Choreography> {
            throw RecursionError("norm requires a recursion-free term");
          },
          [&](const auto&) { return std::vector<Choreography>{c}; },
      },
      c.node());
}

Choreography parallel_product(const std::vector<Choreography>& components) {
  if (components.empty()) return Choreography::inaction();
  Choreography out = components.front();
  for (std::size_t i = 1; i < components.size(); ++i)
    out = Choreography::par(out, components[i]);
  return out;
}

namespace {

// Scoped bijection between bound session channels of the two sides.
using ChannelEnv = std::vector<std::pair<std::string, std::string>>;

bool channel_eq(const Name& a, const Name& b, const ChannelEnv& env) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    if (it->first == a.id()) return it->second == b.id();
    if (it->second == b.id()) return false;
  }
  return a.id() == b.id();
}

bool equiv_rec(const Choreography& a, const Choreography& b, const ChannelEnv& env);

bool component_eq(const Choreography& a, const Choreography& b, const ChannelEnv& env) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&](const InitNode& x) {
            const auto& y = std::get<InitNode>(b.node());
            if (!(x.from == y.from && x.to == y.to && x.service == y.service))
              return false;
            ChannelEnv inner = env;
            inner.emplace_back(x.channel.id(), y.channel.id());
            return equiv_rec(x.cont, y.cont, inner);
          },
          [&](const ComNode& x) {
            const auto& y = std::get<ComNode>(b.node());
            return x.from == y.from && x.to == y.to &&
                   channel_eq(x.channel, y.channel, env) && x.payload == y.payload &&
                   x.target == y.target && equiv_rec(x.cont, y.cont, env);
          },
          [&](const ChoiceNode& x) {
            const auto& y = std::get<ChoiceNode>(b.node());
            if (!(x.from == y.from && x.to == y.to &&
                  channel_eq(x.channel, y.channel, env)))
              return false;
            if (x.branches.size() != y.branches.size()) return false;
            for (const auto& bx : x.branches) {
              const ChoiceBranch* match = nullptr;
              for (const auto& by : y.branches)
                if (by.label == bx.label) {
                  match = &by;
                  break;
                }
              if (!match || !equiv_rec(bx.body, match->body, env)) return false;
            }
            return true;
          },
          [&](const CondNode& x) {
            const auto& y = std::get<CondNode>(b.node());
            return x.guard == y.guard && x.at == y.at &&
                   equiv_rec(x.then_branch, y.then_branch, env) &&
                   equiv_rec(x.else_branch, y.else_branch, env);
          },
          [&](const auto&) { return false; },
      },
      a.node());
}

bool match_components(const std::vector<Choreography>& as,
                      const std::vector<Choreography>& bs, std::vector<bool>& used,
                      std::size_t i, const ChannelEnv& env) {
  if (i == as.size()) return true;
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (used[j] || !component_eq(as[i], bs[j], env)) continue;
    used[j] = true;
    if (match_components(as, bs, used, i + 1, env)) return true;
    used[j] = false;
  }
  return false;
}

bool equiv_rec(const Choreography& a, const Choreography& b, const ChannelEnv& env) {
  std::vector<Choreography> as = norm(a);
  std::vector<Choreography> bs = norm(b);
  if (as.size() != bs.size()) return false;
  std::vector<bool> used(bs.size(), false);
  return match_components(as, bs, used, 0, env);
}

} // namespace

bool struct_equiv(const Choreography& a, const Choreography& b) {
  return equiv_rec(a, b, {});
}

std::set<std::string> free_session_channels(const Choreography& c) {
  std::set<std::string> out;
  for (const Name& n : free_names(c))
    if (n.sort() == NameSort::SessionChannel) out.insert(n.id());
  return out;
}

} // namespace chorcheck
