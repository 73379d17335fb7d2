#include <map>
#include <stdexcept>

#include "chorcheck/checker.hpp"
#include "chorcheck/print.hpp"

// Direct evaluation of the satisfaction relation, clause by clause.
// Deliberately kept apart from the proof search in checker_entails.cpp
// so the two can cross-check each other; they share only the semantic
// primitives (step/next/reachable/norm) and the quantifier domain.

namespace chorcheck {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

using Memo = std::map<std::string, bool>;

bool sat(const Configuration& cfg, const Formula& f, Memo& memo);

bool sat_clauses(const Configuration& cfg, const Formula& f, Memo& memo) {
  return std::visit(
      overloaded{
          // C == 0 up to structural congruence
          [&](const EndF&) {
            return struct_equiv(cfg.chor, Choreography::inaction());
          },
          // both sides evaluate to one common value
          [&](const EqF& e) {
            EvalResult l = eval_expr(cfg.state, e.lhs);
            EvalResult r = eval_expr(cfg.state, e.rhs);
            return eval_ok(l) && eval_ok(r) &&
                   std::get<Value>(l) == std::get<Value>(r);
          },
          // some l-labelled transition leads to a satisfying configuration
          [&](const ActionF& a) {
            for (const Configuration& target : next(cfg, a.label))
              if (sat(target, a.cont, memo)) return true;
            return false;
          },
          [&](const AndF& a) {
            return sat(cfg, a.lhs, memo) && sat(cfg, a.rhs, memo);
          },
          [&](const NegF& n) { return !sat(cfg, n.body, memo); },
          // some appropriate witness, drawn from the free names (plus
          // values / one fresh channel symbol)
          [&](const ExistsF& e) {
            for (const Witness& w : quantifier_domain(cfg, e.body, e.sort))
              if (sat(cfg, substitute_witness(e.body, e.var, e.sort, w), memo))
                return true;
            return false;
          },
          // some reachable configuration satisfies the body
          [&](const MayF& m) {
            for (const Configuration& target : may_candidates(cfg, m.body))
              if (sat(target, m.body, memo)) return true;
            return false;
          },
          // C == C1 | C2 with each part satisfying its side
          [&](const SpatialF& s) {
            std::vector<Choreography> components = norm(cfg.chor);
            std::size_t n = components.size();
            if (n >= 64)
              throw Error("parallel composition too wide for split search");
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
              std::vector<Choreography> ls, rs;
              for (std::size_t i = 0; i < n; ++i)
                (mask & (std::size_t{1} << i) ? ls : rs).push_back(components[i]);
              if (sat({cfg.state, parallel_product(ls)}, s.lhs, memo) &&
                  sat({cfg.state, parallel_product(rs)}, s.rhs, memo))
                return true;
            }
            return false;
          },
          [&](const auto&) -> bool {
            throw std::invalid_argument(
                "satisfies_naive requires a core-only formula");
          },
      },
      f.node());
}

bool sat(const Configuration& cfg, const Formula& f, Memo& memo) {
  std::string key = configuration_key(cfg) + "\n@@\n" + print_formula(f);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = sat_clauses(cfg, f, memo);
  memo[key] = ok;
  return ok;
}

} // namespace

bool satisfies_naive(const Configuration& cfg, const Formula& f) {
  if (!is_recursion_free(cfg.chor))
    throw RecursionError("RecursionNotSupported: term contains rec " +
                         first_rec_binder(cfg.chor));
  if (!f.is_core())
    throw std::invalid_argument(
        "satisfies_naive requires a core-only formula; expand it first");
  Memo memo;
  return sat(cfg, f, memo);
}

} // namespace chorcheck
