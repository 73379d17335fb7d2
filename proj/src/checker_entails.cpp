#include <map>
#include <stdexcept>

#include "chorcheck/checker.hpp"
#include "chorcheck/print.hpp"

namespace chorcheck {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string witness_str(const Witness& w) {
  return w.is_ident() ? w.as_ident() : print_value(w.as_value());
}

constexpr std::size_t kMaxParComponents = 24;

struct ProveCtx {
  bool record = false;
  Deadline deadline;
  std::map<std::string, bool> memo;
};

std::string memo_key(const Configuration& cfg, const Formula& f) {
  return configuration_key(cfg) + "\n@@\n" + print_formula(f);
}

bool prove(const Configuration& cfg, const Formula& f, ProveCtx& ctx, ProofStep* out);

bool prove_rules(const Configuration& cfg, const Formula& f, ProveCtx& ctx,
                 ProofStep* out) {
  return std::visit(
      overloaded{
          [&](const EndF&) {
            if (!norm(cfg.chor).empty()) return false;
            if (out) *out = ProofStep{"P_end", "Norm = []", {}};
            return true;
          },
          [&](const EqF& e) {
            EvalResult l = eval_expr(cfg.state, e.lhs);
            EvalResult r = eval_expr(cfg.state, e.rhs);
            if (!eval_ok(l) || !eval_ok(r)) return false;
            if (!(std::get<Value>(l) == std::get<Value>(r))) return false;
            if (out)
              *out = ProofStep{"P_exp", print_value(std::get<Value>(l)), {}};
            return true;
          },
          [&](const AndF& a) {
            ProofStep lw, rw;
            if (!prove(cfg, a.lhs, ctx, out ? &lw : nullptr)) return false;
            if (!prove(cfg, a.rhs, ctx, out ? &rw : nullptr)) return false;
            if (out) *out = ProofStep{"P_and", "", {std::move(lw), std::move(rw)}};
            return true;
          },
          [&](const NegF& n) {
            if (prove(cfg, n.body, ctx, nullptr)) return false;
            if (out) *out = ProofStep{"P_neg", "subproof fails", {}};
            return true;
          },
          [&](const ActionF& a) {
            for (const Configuration& cand : next(cfg, a.label)) {
              ProofStep sub;
              if (prove(cand, a.cont, ctx, out ? &sub : nullptr)) {
                if (out)
                  *out = ProofStep{"P_action", print_label(a.label), {std::move(sub)}};
                return true;
              }
            }
            return false;
          },
          [&](const MayF& m) {
            for (const Configuration& cand :
                 may_candidates(cfg, m.body, ctx.deadline)) {
              ProofStep sub;
              if (prove(cand, m.body, ctx, out ? &sub : nullptr)) {
                if (out) *out = ProofStep{"P_may", "", {std::move(sub)}};
                return true;
              }
            }
            return false;
          },
          [&](const ExistsF& e) {
            for (const Witness& w : quantifier_domain(cfg, e.body, e.sort)) {
              Formula sub = substitute_witness(e.body, e.var, e.sort, w);
              ProofStep subw;
              if (prove(cfg, sub, ctx, out ? &subw : nullptr)) {
                if (out)
                  *out = ProofStep{"P_exists",
                                   e.var + " := " + witness_str(w),
                                   {std::move(subw)}};
                return true;
              }
            }
            return false;
          },
          [&](const SpatialF& s) {
            std::vector<Choreography> components = norm(cfg.chor);
            if (components.size() > kMaxParComponents)
              throw Error("parallel composition too wide for partition search");
            std::size_t n = components.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
              std::vector<Choreography> left, right;
              for (std::size_t i = 0; i < n; ++i)
                (mask & (std::size_t{1} << i) ? left : right).push_back(components[i]);
              Configuration lc{cfg.state, parallel_product(left)};
              Configuration rc{cfg.state, parallel_product(right)};
              ProofStep lw, rw;
              if (prove(lc, s.lhs, ctx, out ? &lw : nullptr) &&
                  prove(rc, s.rhs, ctx, out ? &rw : nullptr)) {
                if (out)
                  *out = ProofStep{"P_par", std::to_string(mask),
                                   {std::move(lw), std::move(rw)}};
                return true;
              }
            }
            return false;
          },
          [&](const auto&) -> bool {
            throw std::logic_error("derived operator reached the proof search");
          },
      },
      f.node());
}

bool prove(const Configuration& cfg, const Formula& f, ProveCtx& ctx, ProofStep* out) {
  ctx.deadline.check("proof search");
  if (!ctx.record) {
    std::string key = memo_key(cfg, f);
    auto it = ctx.memo.find(key);
    if (it != ctx.memo.end()) return it->second;
    bool ok = prove_rules(cfg, f, ctx, nullptr);
    ctx.memo[key] = ok;
    return ok;
  }
  return prove_rules(cfg, f, ctx, out);
}

} // namespace

Verdict entails(const Configuration& cfg, const Formula& f, const CheckOptions& opts) {
  if (!is_recursion_free(cfg.chor))
    throw RecursionError("RecursionNotSupported: term contains rec " +
                         first_rec_binder(cfg.chor));
  Formula core = expand_derived(f);
  ProveCtx ctx;
  ctx.record = opts.record_witness;
  ctx.deadline = opts.deadline;
  Verdict v;
  if (opts.record_witness) {
    ProofStep w;
    v.holds = prove(cfg, core, ctx, &w);
    if (v.holds) v.witness = std::move(w);
  } else {
    v.holds = prove(cfg, core, ctx, nullptr);
  }
  return v;
}

namespace {

bool replay(const Configuration& cfg, const Formula& f, const ProofStep& w);

bool replay_children_pair(const Configuration& lc, const Formula& lf,
                          const Configuration& rc, const Formula& rf,
                          const ProofStep& w) {
  return w.children.size() == 2 && replay(lc, lf, w.children[0]) &&
         replay(rc, rf, w.children[1]);
}

bool replay(const Configuration& cfg, const Formula& f, const ProofStep& w) {
  if (w.rule == "P_end") {
    return std::holds_alternative<EndF>(f.node()) && norm(cfg.chor).empty();
  }
  if (w.rule == "P_exp") {
    const auto* e = std::get_if<EqF>(&f.node());
    if (!e) return false;
    EvalResult l = eval_expr(cfg.state, e->lhs);
    EvalResult r = eval_expr(cfg.state, e->rhs);
    return eval_ok(l) && eval_ok(r) && std::get<Value>(l) == std::get<Value>(r);
  }
  if (w.rule == "P_and") {
    const auto* a = std::get_if<AndF>(&f.node());
    return a && replay_children_pair(cfg, a->lhs, cfg, a->rhs, w);
  }
  if (w.rule == "P_neg") {
    const auto* n = std::get_if<NegF>(&f.node());
    return n && !entails(cfg, n->body).holds;
  }
  if (w.rule == "P_action") {
    const auto* a = std::get_if<ActionF>(&f.node());
    if (!a || w.children.size() != 1) return false;
    for (const Configuration& cand : next(cfg, a->label))
      if (replay(cand, a->cont, w.children[0])) return true;
    return false;
  }
  if (w.rule == "P_may") {
    const auto* m = std::get_if<MayF>(&f.node());
    if (!m || w.children.size() != 1) return false;
    for (const Configuration& cand : may_candidates(cfg, m->body))
      if (replay(cand, m->body, w.children[0])) return true;
    return false;
  }
  if (w.rule == "P_exists") {
    const auto* e = std::get_if<ExistsF>(&f.node());
    if (!e || w.children.size() != 1) return false;
    std::string expect = e->var + " := ";
    if (w.note.rfind(expect, 0) != 0) return false;
    std::string chosen = w.note.substr(expect.size());
    for (const Witness& cand : quantifier_domain(cfg, e->body, e->sort)) {
      if (witness_str(cand) != chosen) continue;
      Formula sub = substitute_witness(e->body, e->var, e->sort, cand);
      return replay(cfg, sub, w.children[0]);
    }
    return false;
  }
  if (w.rule == "P_par") {
    const auto* s = std::get_if<SpatialF>(&f.node());
    if (!s) return false;
    std::vector<Choreography> components = norm(cfg.chor);
    std::size_t mask = 0;
    try {
      mask = std::stoull(w.note);
    } catch (const std::exception&) {
      return false;
    }
    if (components.size() >= 64) return false;
    std::vector<Choreography> left, right;
    for (std::size_t i = 0; i < components.size(); ++i)
      (mask & (std::size_t{1} << i) ? left : right).push_back(components[i]);
    return replay_children_pair({cfg.state, parallel_product(left)}, s->lhs,
                                {cfg.state, parallel_product(right)}, s->rhs, w);
  }
  return false;
}

} // namespace

bool replay_witness(const Configuration& cfg, const Formula& f, const ProofStep& w) {
  return replay(cfg, expand_derived(f), w);
}

} // namespace chorcheck
