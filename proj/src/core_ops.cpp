#include "chorcheck/core_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chorcheck {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void collect_expr_names(const Expression& e, NameSet& out) {
  std::visit(overloaded{
                 [](const LitExpr&) {},
                 [&](const VarExpr& v) {
                   out.insert(v.var);
                   if (v.at) out.insert(Name(v.at->name(), NameSort::ParticipantName));
                 },
                 [&](const BinaryExpr& b) {
                   collect_expr_names(b.lhs, out);
                   collect_expr_names(b.rhs, out);
                 },
                 [&](const NotExpr& n) { collect_expr_names(n.arg, out); },
             },
             e.node());
}

void collect_label_names(const ActionLabel& l, NameSet& out) {
  std::visit(overloaded{
                 [&](const InitLabel& i) {
                   out.insert(Name(i.from.name(), NameSort::ParticipantName));
                   out.insert(Name(i.to.name(), NameSort::ParticipantName));
                   out.insert(i.service);
                   out.insert(i.channel);
                 },
                 [&](const ComLabel& c) {
                   out.insert(Name(c.from.name(), NameSort::ParticipantName));
                   out.insert(Name(c.to.name(), NameSort::ParticipantName));
                   out.insert(c.channel);
                 },
                 [&](const BranchLabel& b) {
                   out.insert(Name(b.from.name(), NameSort::ParticipantName));
                   out.insert(Name(b.to.name(), NameSort::ParticipantName));
                   out.insert(b.channel);
                   out.insert(b.label);
                 },
             },
             l);
}

void free_names_into(const Choreography& c, NameSet& out) {
  std::visit(
      overloaded{
          [](const InactionNode&) {},
          [&](const InitNode& i) {
            out.insert(Name(i.from.name(), NameSort::ParticipantName));
            out.insert(Name(i.to.name(), NameSort::ParticipantName));
            out.insert(i.service);
            NameSet inner;
            free_names_into(i.cont, inner);
            inner.erase(i.channel);
            out.insert(inner.begin(), inner.end());
          },
          [&](const ComNode& m) {
            out.insert(Name(m.from.name(), NameSort::ParticipantName));
            out.insert(Name(m.to.name(), NameSort::ParticipantName));
            out.insert(m.channel);
            out.insert(m.target);
            collect_expr_names(m.payload, out);
            free_names_into(m.cont, out);
          },
          [&](const ChoiceNode& ch) {
            out.insert(Name(ch.from.name(), NameSort::ParticipantName));
            out.insert(Name(ch.to.name(), NameSort::ParticipantName));
            out.insert(ch.channel);
            for (const auto& br : ch.branches) {
              out.insert(br.label);
              free_names_into(br.body, out);
            }
          },
          [&](const ParNode& p) {
            free_names_into(p.left, out);
            free_names_into(p.right, out);
          },
          [&](const CondNode& i) {
            collect_expr_names(i.guard, out);
            if (i.at) out.insert(Name(i.at->name(), NameSort::ParticipantName));
            free_names_into(i.then_branch, out);
            free_names_into(i.else_branch, out);
          },
          [&](const RecVarNode& r) { out.insert(r.var); },
          [&](const RecNode& r) {
            NameSet inner;
            free_names_into(r.body, inner);
            inner.erase(r.var);
            out.insert(inner.begin(), inner.end());
          },
      },
      c.node());
}

void all_idents_into(const Choreography& c, std::set<std::string>& out);

void all_idents_expr(const Expression& e, std::set<std::string>& out) {
  std::visit(overloaded{
                 [](const LitExpr&) {},
                 [&](const VarExpr& v) {
                   out.insert(v.var.id());
                   if (v.at) out.insert(v.at->name());
                 },
                 [&](const BinaryExpr& b) {
                   all_idents_expr(b.lhs, out);
                   all_idents_expr(b.rhs, out);
                 },
                 [&](const NotExpr& n) { all_idents_expr(n.arg, out); },
             },
             e.node());
}

void all_idents_into(const Choreography& c, std::set<std::string>& out) {
  std::visit(overloaded{
                 [](const InactionNode&) {},
                 [&](const InitNode& i) {
                   out.insert(i.from.name());
                   out.insert(i.to.name());
                   out.insert(i.service.id());
                   out.insert(i.channel.id());
                   all_idents_into(i.cont, out);
                 },
                 [&](const ComNode& m) {
                   out.insert(m.from.name());
                   out.insert(m.to.name());
                   out.insert(m.channel.id());
                   out.insert(m.target.id());
                   all_idents_expr(m.payload, out);
                   all_idents_into(m.cont, out);
                 },
                 [&](const ChoiceNode& ch) {
                   out.insert(ch.from.name());
                   out.insert(ch.to.name());
                   out.insert(ch.channel.id());
                   for (const auto& br : ch.branches) {
                     out.insert(br.label.id());
                     all_idents_into(br.body, out);
                   }
                 },
                 [&](const ParNode& p) {
                   all_idents_into(p.left, out);
                   all_idents_into(p.right, out);
                 },
                 [&](const CondNode& i) {
                   all_idents_expr(i.guard, out);
                   if (i.at) out.insert(i.at->name());
                   all_idents_into(i.then_branch, out);
                   all_idents_into(i.else_branch, out);
                 },
                 [&](const RecVarNode& r) { out.insert(r.var.id()); },
                 [&](const RecNode& r) {
                   out.insert(r.var.id());
                   all_idents_into(r.body, out);
                 },
             },
             c.node());
}

void literals_expr(const Expression& e, std::set<Value>& out) {
  std::visit(overloaded{
                 [&](const LitExpr& l) { out.insert(l.value); },
                 [](const VarExpr&) {},
                 [&](const BinaryExpr& b) {
                   literals_expr(b.lhs, out);
                   literals_expr(b.rhs, out);
                 },
                 [&](const NotExpr& n) { literals_expr(n.arg, out); },
             },
             e.node());
}

void literals_into(const Choreography& c, std::set<Value>& out) {
  std::visit(overloaded{
                 [](const InactionNode&) {},
                 [&](const InitNode& i) { literals_into(i.cont, out); },
                 [&](const ComNode& m) {
                   literals_expr(m.payload, out);
                   literals_into(m.cont, out);
                 },
                 [&](const ChoiceNode& ch) {
                   for (const auto& br : ch.branches) literals_into(br.body, out);
                 },
                 [&](const ParNode& p) {
                   literals_into(p.left, out);
                   literals_into(p.right, out);
                 },
                 [&](const CondNode& i) {
                   literals_expr(i.guard, out);
                   literals_into(i.then_branch, out);
                   literals_into(i.else_branch, out);
                 },
                 [](const RecVarNode&) {},
                 [&](const RecNode& r) { literals_into(r.body, out); },
             },
             c.node());
}

// Substitution of a whole term for a free process variable, renaming
// rec binders that would capture free process variables of the
// replacement.
Choreography subst_proc_var(const Choreography& c, const Name& var,
                            const Choreography& replacement);

Choreography rename_rec_binder(const RecNode& r, const std::set<std::string>& avoid) {
  std::string id = fresh_ident(r.var.id(), avoid);
  Name renamed = process_variable(id);
  Choreography body =
      subst_proc_var(r.body, r.var, Choreography::rec_var(renamed));
  return Choreography::rec(renamed, body);
}

Choreography subst_proc_var(const Choreography& c, const Name& var,
                            const Choreography& replacement) {
  return std::visit(
      overloaded{
          [&](const InactionNode&) { return c; },
          [&](const InitNode& i) {
            return Choreography::init(i.from, i.to, i.service, i.channel,
                                      subst_proc_var(i.cont, var, replacement));
          },
          [&](const ComNode& m) {
            return Choreography::com(m.from, m.to, m.channel, m.payload, m.target,
                                     subst_proc_var(m.cont, var, replacement));
          },
          [&](const ChoiceNode& ch) {
            std::vector<std::pair<Name, Choreography>> branches;
            for (const auto& br : ch.branches)
              branches.emplace_back(br.label, subst_proc_var(br.body, var, replacement));
            return Choreography::choice(ch.from, ch.to, ch.channel, std::move(branches));
          },
          [&](const ParNode& p) {
            return Choreography::par(subst_proc_var(p.left, var, replacement),
                                     subst_proc_var(p.right, var, replacement));
          },
          [&](const CondNode& i) {
            return Choreography::cond(i.guard, i.at,
                                      subst_proc_var(i.then_branch, var, replacement),
                                      subst_proc_var(i.else_branch, var, replacement));
          },
          [&](const RecVarNode& r) {
            return r.var == var ? replacement : c;
          },
          [&](const RecNode& r) {
            if (r.var == var) return c; // shadowed
            NameSet repl_free = free_names(replacement);
            if (repl_free.count(r.var)) {
              std::set<std::string> avoid = all_idents(c);
              std::set<std::string> repl_ids = all_idents(replacement);
              avoid.insert(repl_ids.begin(), repl_ids.end());
              Choreography renamed = rename_rec_binder(r, avoid);
              return subst_proc_var(renamed, var, replacement);
            }
            return Choreography::rec(r.var, subst_proc_var(r.body, var, replacement));
          },
      },
      c.node());
}

} // namespace

Choreography substitute_channel(const Choreography& c, const Name& current,
                                const Name& replacement) {
  return std::visit(
      overloaded{
          [&](const InactionNode&) { return c; },
          [&](const InitNode& i) {
            if (i.channel == current) return c; // binder shadows
            if (i.channel == replacement) {
              // Rename the binder out of the way before substituting.
              std::set<std::string> avoid = all_idents(c);
              avoid.insert(current.id());
              avoid.insert(replacement.id());
              Name renamed = session_channel(fresh_ident(i.channel.id(), avoid));
              Choreography cont = substitute_channel(i.cont, i.channel, renamed);
              return Choreography::init(
                  i.from, i.to, i.service, renamed,
                  substitute_channel(cont, current, replacement));
            }
            return Choreography::init(i.from, i.to, i.service, i.channel,
                                      substitute_channel(i.cont, current, replacement));
          },
          [&](const ComNode& m) {
            return Choreography::com(m.from, m.to,
                                     m.channel == current ? replacement : m.channel,
                                     m.payload, m.target,
                                     substitute_channel(m.cont, current, replacement));
          },
          [&](const ChoiceNode& ch) {
            std::vector<std::pair<Name, Choreography>> branches;
            for (const auto& br : ch.branches)
              branches.emplace_back(br.label,
                                    substitute_channel(br.body, current, replacement));
            return Choreography::choice(ch.from, ch.to,
                                        ch.channel == current ? replacement : ch.channel,
                                        std::move(branches));
          },
          [&](const ParNode& p) {
            return Choreography::par(substitute_channel(p.left, current, replacement),
                                     substitute_channel(p.right, current, replacement));
          },
          [&](const CondNode& i) {
            return Choreography::cond(i.guard, i.at,
                                      substitute_channel(i.then_branch, current, replacement),
                                      substitute_channel(i.else_branch, current, replacement));
          },
          [&](const RecVarNode&) { return c; },
          [&](const RecNode& r) {
            return Choreography::rec(r.var,
                                     substitute_channel(r.body, current, replacement));
          },
      },
      c.node());
}

NameSet free_names(const Choreography& c) {
  NameSet out;
  free_names_into(c, out);
  return out;
}

NameSet free_names_formula(const Formula& f) {
  NameSet out;
  std::visit(
      overloaded{
          [&](const ExistsF& e) {
            NameSet inner = free_names_formula(e.body);
            switch (e.sort) {
              case QuantSort::Participant:
                inner.erase(Name(e.var, NameSort::ParticipantName));
                break;
              case QuantSort::SharedChannel: inner.erase(shared_channel(e.var)); break;
              case QuantSort::SessionChannel: inner.erase(session_channel(e.var)); break;
              case QuantSort::BranchLabel: inner.erase(branch_label(e.var)); break;
              case QuantSort::Expr: inner.erase(variable(e.var)); break;
            }
            out.insert(inner.begin(), inner.end());
          },
          [&](const ForallF& e) {
            out = free_names_formula(
                Formula::exists(e.var, e.sort, e.body));
          },
          [&](const AndF& a) {
            out = free_names_formula(a.lhs);
            NameSet r = free_names_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const OrF& a) {
            out = free_names_formula(a.lhs);
            NameSet r = free_names_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const ImpliesF& a) {
            out = free_names_formula(a.lhs);
            NameSet r = free_names_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const SpatialF& a) {
            out = free_names_formula(a.lhs);
            NameSet r = free_names_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const NegF& n) { out = free_names_formula(n.body); },
          [&](const MayF& n) { out = free_names_formula(n.body); },
          [&](const BoxF& n) { out = free_names_formula(n.body); },
          [&](const NextF& n) { out = free_names_formula(n.body); },
          [&](const ExistsLabelF& n) { out = free_names_formula(n.body); },
          [&](const ActionF& a) {
            collect_label_names(a.label, out);
            NameSet r = free_names_formula(a.cont);
            out.insert(r.begin(), r.end());
          },
          [&](const BoxActionF& a) {
            collect_label_names(a.label, out);
            NameSet r = free_names_formula(a.cont);
            out.insert(r.begin(), r.end());
          },
          [&](const EqF& e) {
            collect_expr_names(e.lhs, out);
            collect_expr_names(e.rhs, out);
          },
          [&](const InteractF& i) {
            out.insert(Name(i.from.name(), NameSort::ParticipantName));
            out.insert(Name(i.to.name(), NameSort::ParticipantName));
            NameSet r = free_names_formula(i.cont);
            out.insert(r.begin(), r.end());
          },
          [](const EndF&) {},
          [](const TrueF&) {},
          [](const FalseF&) {},
      },
      f.node());
  return out;
}

Choreography unfold(const Choreography& c) {
  const auto* r = std::get_if<RecNode>(&c.node());
  if (!r) throw std::invalid_argument("unfold requires a rec term");
  return subst_proc_var(r->body, r->var, c);
}

bool is_recursion_free(const Choreography& c) {
  return std::visit(
      overloaded{
          [](const InactionNode&) { return true; },
          [](const InitNode& i) { return is_recursion_free(i.cont); },
          [](const ComNode& m) { return is_recursion_free(m.cont); },
          [](const ChoiceNode& ch) {
            return std::all_of(ch.branches.begin(), ch.branches.end(),
                               [](const ChoiceBranch& b) {
                                 return is_recursion_free(b.body);
                               });
          },
          [](const ParNode& p) {
            return is_recursion_free(p.left) && is_recursion_free(p.right);
          },
          [](const CondNode& i) {
            return is_recursion_free(i.then_branch) && is_recursion_free(i.else_branch);
          },
          [](const RecVarNode&) { return false; },
          [](const RecNode&) { return false; },
      },
      c.node());
}

std::string first_rec_binder(const Choreography& c) {
  return std::visit(
      overloaded{
          [](const InactionNode&) { return std::string(); },
          [](const InitNode& i) { return first_rec_binder(i.cont); },
          [](const ComNode& m) { return first_rec_binder(m.cont); },
          [](const ChoiceNode& ch) {
            for (const auto& br : ch.branches) {
              std::string s = first_rec_binder(br.body);
              if (!s.empty()) return s;
            }
            return std::string();
          },
          [](const ParNode& p) {
            std::string s = first_rec_binder(p.left);
            return s.empty() ? first_rec_binder(p.right) : s;
          },
          [](const CondNode& i) {
            std::string s = first_rec_binder(i.then_branch);
            return s.empty() ? first_rec_binder(i.else_branch) : s;
          },
          [](const RecVarNode& r) { return r.var.id(); },
          [](const RecNode& r) { return r.var.id(); },
      },
      c.node());
}

namespace {

using RenameEnv = std::map<Name, Name>;

Choreography canon(const Choreography& c, RenameEnv env, int& counter) {
  return std::visit(
      overloaded{
          [&](const InactionNode&) { return c; },
          [&](const InitNode& i) {
            Name fresh = session_channel("k$" + std::to_string(counter++));
            RenameEnv inner = env;
            inner[i.channel] = fresh;
            return Choreography::init(i.from, i.to, i.service, fresh,
                                      canon(i.cont, std::move(inner), counter));
          },
          [&](const ComNode& m) {
            auto it = env.find(m.channel);
            return Choreography::com(m.from, m.to,
                                     it != env.end() ? it->second : m.channel,
                                     m.payload, m.target, canon(m.cont, env, counter));
          },
          [&](const ChoiceNode& ch) {
            auto it = env.find(ch.channel);
            std::vector<ChoiceBranch> sorted = ch.branches;
            std::sort(sorted.begin(), sorted.end(),
                      [](const ChoiceBranch& a, const ChoiceBranch& b) {
                        return a.label < b.label;
                      });
            std::vector<std::pair<Name, Choreography>> branches;
            for (const auto& br : sorted)
              branches.emplace_back(br.label, canon(br.body, env, counter));
            return Choreography::choice(ch.from, ch.to,
                                        it != env.end() ? it->second : ch.channel,
                                        std::move(branches));
          },
          [&](const ParNode& p) {
            Choreography left = canon(p.left, env, counter);
            return Choreography::par(std::move(left), canon(p.right, env, counter));
          },
          [&](const CondNode& i) {
            Choreography t = canon(i.then_branch, env, counter);
            return Choreography::cond(i.guard, i.at, std::move(t),
                                      canon(i.else_branch, env, counter));
          },
          [&](const RecVarNode& r) {
            auto it = env.find(r.var);
            return it != env.end() ? Choreography::rec_var(it->second) : c;
          },
          [&](const RecNode& r) {
            Name fresh = process_variable("X$" + std::to_string(counter++));
            RenameEnv inner = env;
            inner[r.var] = fresh;
            return Choreography::rec(fresh, canon(r.body, std::move(inner), counter));
          },
      },
      c.node());
}

} // namespace

Choreography alpha_canonical(const Choreography& c) {
  int counter = 0;
  return canon(c, {}, counter);
}

bool alpha_equal(const Choreography& a, const Choreography& b) {
  return alpha_canonical(a) == alpha_canonical(b);
}

std::set<std::string> all_idents(const Choreography& c) {
  std::set<std::string> out;
  all_idents_into(c, out);
  return out;
}

std::set<std::string> all_idents_formula(const Formula& f) {
  std::set<std::string> out;
  for (const Name& n : free_names_formula(f)) out.insert(n.id());
  // Bound quantifier variables count too: fresh names must avoid them.
  std::visit(
      overloaded{
          [&](const ExistsF& e) {
            out.insert(e.var);
            auto inner = all_idents_formula(e.body);
            out.insert(inner.begin(), inner.end());
          },
          [&](const ForallF& e) {
            out.insert(e.var);
            auto inner = all_idents_formula(e.body);
            out.insert(inner.begin(), inner.end());
          },
          [&](const AndF& a) {
            auto l = all_idents_formula(a.lhs), r = all_idents_formula(a.rhs);
            out.insert(l.begin(), l.end());
            out.insert(r.begin(), r.end());
          },
          [&](const OrF& a) {
            auto l = all_idents_formula(a.lhs), r = all_idents_formula(a.rhs);
            out.insert(l.begin(), l.end());
            out.insert(r.begin(), r.end());
          },
          [&](const ImpliesF& a) {
            auto l = all_idents_formula(a.lhs), r = all_idents_formula(a.rhs);
            out.insert(l.begin(), l.end());
            out.insert(r.begin(), r.end());
          },
          [&](const SpatialF& a) {
            auto l = all_idents_formula(a.lhs), r = all_idents_formula(a.rhs);
            out.insert(l.begin(), l.end());
            out.insert(r.begin(), r.end());
          },
          [&](const NegF& n) {
            auto i = all_idents_formula(n.body);
            out.insert(i.begin(), i.end());
          },
          [&](const MayF& n) {
            auto i = all_idents_formula(n.body);
            out.insert(i.begin(), i.end());
          },
          [&](const BoxF& n) {
            auto i = all_idents_formula(n.body);
            out.insert(i.begin(), i.end());
          },
          [&](const NextF& n) {
            auto i = all_idents_formula(n.body);
            out.insert(i.begin(), i.end());
          },
          [&](const ExistsLabelF& n) {
            auto i = all_idents_formula(n.body);
            out.insert(i.begin(), i.end());
          },
          [&](const ActionF& a) {
            auto i = all_idents_formula(a.cont);
            out.insert(i.begin(), i.end());
          },
          [&](const BoxActionF& a) {
            auto i = all_idents_formula(a.cont);
            out.insert(i.begin(), i.end());
          },
          [&](const InteractF& i) {
            auto inner = all_idents_formula(i.cont);
            out.insert(inner.begin(), inner.end());
          },
          [](const EqF&) {},
          [](const EndF&) {},
          [](const TrueF&) {},
          [](const FalseF&) {},
      },
      f.node());
  return out;
}

std::set<Value> literals(const Choreography& c) {
  std::set<Value> out;
  literals_into(c, out);
  return out;
}

std::set<Value> literals_formula(const Formula& f) {
  std::set<Value> out;
  std::visit(
      overloaded{
          [&](const ExistsF& e) { out = literals_formula(e.body); },
          [&](const ForallF& e) { out = literals_formula(e.body); },
          [&](const AndF& a) {
            out = literals_formula(a.lhs);
            auto r = literals_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const OrF& a) {
            out = literals_formula(a.lhs);
            auto r = literals_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const ImpliesF& a) {
            out = literals_formula(a.lhs);
            auto r = literals_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const SpatialF& a) {
            out = literals_formula(a.lhs);
            auto r = literals_formula(a.rhs);
            out.insert(r.begin(), r.end());
          },
          [&](const NegF& n) { out = literals_formula(n.body); },
          [&](const MayF& n) { out = literals_formula(n.body); },
          [&](const BoxF& n) { out = literals_formula(n.body); },
          [&](const NextF& n) { out = literals_formula(n.body); },
          [&](const ExistsLabelF& n) { out = literals_formula(n.body); },
          [&](const ActionF& a) { out = literals_formula(a.cont); },
          [&](const BoxActionF& a) { out = literals_formula(a.cont); },
          [&](const InteractF& i) { out = literals_formula(i.cont); },
          [&](const EqF& e) {
            literals_expr(e.lhs, out);
            literals_expr(e.rhs, out);
          },
          [](const EndF&) {},
          [](const TrueF&) {},
          [](const FalseF&) {},
      },
      f.node());
  return out;
}

namespace {

Expression subst_expr(const Expression& e, const std::string& var, QuantSort sort,
                      const Witness& w) {
  return std::visit(
      overloaded{
          [&](const LitExpr&) { return e; },
          [&](const VarExpr& v) {
            if (sort == QuantSort::Expr && v.var.id() == var)
              return Expression::lit(w.as_value());
            if (sort == QuantSort::Participant && v.at && v.at->name() == var)
              return Expression::var(v.var.id(), Participant(w.as_ident()));
            return e;
          },
          [&](const BinaryExpr& b) {
            return Expression::binary(b.op, subst_expr(b.lhs, var, sort, w),
                                      subst_expr(b.rhs, var, sort, w));
          },
          [&](const NotExpr& n) {
            return Expression::negation(subst_expr(n.arg, var, sort, w));
          },
      },
      e.node());
}

Participant subst_participant(const Participant& p, const std::string& var,
                              QuantSort sort, const Witness& w) {
  if (sort == QuantSort::Participant && p.name() == var)
    return Participant(w.as_ident());
  return p;
}

ActionLabel subst_label(const ActionLabel& l, const std::string& var, QuantSort sort,
                        const Witness& w) {
  return std::visit(
      overloaded{
          [&](const InitLabel& i) -> ActionLabel {
            InitLabel out = i;
            out.from = subst_participant(i.from, var, sort, w);
            out.to = subst_participant(i.to, var, sort, w);
            if (sort == QuantSort::SharedChannel && i.service.id() == var)
              out.service = shared_channel(w.as_ident());
            if (sort == QuantSort::SessionChannel && i.channel.id() == var)
              out.channel = session_channel(w.as_ident());
            return out;
          },
          [&](const ComLabel& c) -> ActionLabel {
            ComLabel out = c;
            out.from = subst_participant(c.from, var, sort, w);
            out.to = subst_participant(c.to, var, sort, w);
            if (sort == QuantSort::SessionChannel && c.channel.id() == var)
              out.channel = session_channel(w.as_ident());
            return out;
          },
          [&](const BranchLabel& b) -> ActionLabel {
            BranchLabel out = b;
            out.from = subst_participant(b.from, var, sort, w);
            out.to = subst_participant(b.to, var, sort, w);
            if (sort == QuantSort::SessionChannel && b.channel.id() == var)
              out.channel = session_channel(w.as_ident());
            if (sort == QuantSort::BranchLabel && b.label.id() == var)
              out.label = branch_label(w.as_ident());
            return out;
          },
      },
      l);
}

} // namespace

Formula substitute_witness(const Formula& f, const std::string& var, QuantSort sort,
                           const Witness& w) {
  return std::visit(
      overloaded{
          [&](const ExistsF& e) {
            if (e.var == var && e.sort == sort) return f; // shadowed
            return Formula::exists(e.var, e.sort,
                                   substitute_witness(e.body, var, sort, w));
          },
          [&](const ForallF& e) {
            if (e.var == var && e.sort == sort) return f;
            return Formula::forall(e.var, e.sort,
                                   substitute_witness(e.body, var, sort, w));
          },
          [&](const AndF& a) {
            return Formula::conj(substitute_witness(a.lhs, var, sort, w),
                                 substitute_witness(a.rhs, var, sort, w));
          },
          [&](const OrF& a) {
            return Formula::disj(substitute_witness(a.lhs, var, sort, w),
                                 substitute_witness(a.rhs, var, sort, w));
          },
          [&](const ImpliesF& a) {
            return Formula::implies(substitute_witness(a.lhs, var, sort, w),
                                    substitute_witness(a.rhs, var, sort, w));
          },
          [&](const SpatialF& a) {
            return Formula::spatial(substitute_witness(a.lhs, var, sort, w),
                                    substitute_witness(a.rhs, var, sort, w));
          },
          [&](const NegF& n) {
            return Formula::neg(substitute_witness(n.body, var, sort, w));
          },
          [&](const MayF& n) {
            return Formula::may(substitute_witness(n.body, var, sort, w));
          },
          [&](const BoxF& n) {
            return Formula::box(substitute_witness(n.body, var, sort, w));
          },
          [&](const NextF& n) {
            return Formula::next(substitute_witness(n.body, var, sort, w));
          },
          [&](const ExistsLabelF& n) {
            return Formula::exists_label(substitute_witness(n.body, var, sort, w));
          },
          [&](const ActionF& a) {
            return Formula::action(subst_label(a.label, var, sort, w),
                                   substitute_witness(a.cont, var, sort, w));
          },
          [&](const BoxActionF& a) {
            return Formula::box_action(subst_label(a.label, var, sort, w),
                                       substitute_witness(a.cont, var, sort, w));
          },
          [&](const EqF& e) {
            return Formula::eq(subst_expr(e.lhs, var, sort, w),
                               subst_expr(e.rhs, var, sort, w));
          },
          [&](const InteractF& i) {
            return Formula::interact(subst_participant(i.from, var, sort, w),
                                     subst_participant(i.to, var, sort, w),
                                     substitute_witness(i.cont, var, sort, w));
          },
          [&](const EndF&) { return f; },
          [&](const TrueF&) { return f; },
          [&](const FalseF&) { return f; },
      },
      f.node());
}

} // namespace chorcheck
