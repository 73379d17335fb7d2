#include <algorithm>
#include <set>
#include <stdexcept>

#include "chorcheck/choreography.hpp"
#include "chorcheck/expr.hpp"
#include "chorcheck/formula.hpp"
#include "chorcheck/names.hpp"
#include "chorcheck/session_type.hpp"
#include "chorcheck/state.hpp"

namespace chorcheck {

const char* to_string(NameSort sort) {
  switch (sort) {
    case NameSort::SharedChannel: return "schan";
    case NameSort::SessionChannel: return "kchan";
    case NameSort::BranchLabel: return "label";
    case NameSort::Variable: return "var";
    case NameSort::ProcessVariable: return "procvar";
    case NameSort::ParticipantName: return "participant";
  }
  return "?";
}

const char* to_string(QuantSort sort) {
  switch (sort) {
    case QuantSort::Participant: return "participant";
    case QuantSort::SharedChannel: return "schan";
    case QuantSort::SessionChannel: return "kchan";
    case QuantSort::BranchLabel: return "label";
    case QuantSort::Expr: return "expr";
  }
  return "?";
}

const char* to_string(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Lt: return "<";
    case BinOp::Eq: return "=";
    case BinOp::Ne: return "!=";
    case BinOp::Concat: return ".";
  }
  return "?";
}

const char* to_string(ValueType t) {
  switch (t) {
    case ValueType::Bool: return "bool";
    case ValueType::Int: return "int";
    case ValueType::String: return "string";
  }
  return "?";
}

std::string fresh_ident(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base.substr(0, base.find('#'));
  if (stem.empty()) stem = "x";
  for (int n = 1;; ++n) {
    std::string candidate = stem + "#" + std::to_string(n);
    if (!avoid.count(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------- Expression

Expression::Expression() : node_(std::make_shared<const ExprNode>(LitExpr{Value(std::int64_t{0})})) {}
Expression::Expression(ExprNode n) : node_(std::make_shared<const ExprNode>(std::move(n))) {}

Expression Expression::lit(Value v) { return Expression(LitExpr{std::move(v)}); }
Expression Expression::var(std::string name, std::optional<Participant> at) {
  return Expression(VarExpr{variable(std::move(name)), std::move(at)});
}
Expression Expression::binary(BinOp op, Expression lhs, Expression rhs) {
  return Expression(BinaryExpr{op, std::move(lhs), std::move(rhs)});
}
Expression Expression::negation(Expression arg) {
  return Expression(NotExpr{std::move(arg)});
}

bool Expression::operator==(const Expression& other) const {
  if (node_ == other.node_) return true;
  const ExprNode& a = *node_;
  const ExprNode& b = *other.node_;
  if (a.index() != b.index()) return false;
  if (const auto* l = std::get_if<LitExpr>(&a))
    return l->value == std::get<LitExpr>(b).value;
  if (const auto* v = std::get_if<VarExpr>(&a)) {
    const auto& w = std::get<VarExpr>(b);
    return v->var == w.var && v->at == w.at;
  }
  if (const auto* x = std::get_if<BinaryExpr>(&a)) {
    const auto& y = std::get<BinaryExpr>(b);
    return x->op == y.op && x->lhs == y.lhs && x->rhs == y.rhs;
  }
  return std::get<NotExpr>(a).arg == std::get<NotExpr>(b).arg;
}

// -------------------------------------------------------------- Choreography

Choreography::Choreography() : node_(std::make_shared<const ChorNode>(InactionNode{})) {}
Choreography::Choreography(ChorNode n) : node_(std::make_shared<const ChorNode>(std::move(n))) {}

Choreography Choreography::inaction() { return Choreography(); }

Choreography Choreography::init(Participant from, Participant to, Name service,
                                Name channel, Choreography cont) {
  return Choreography(InitNode{std::move(from), std::move(to), std::move(service),
                               std::move(channel), std::move(cont)});
}

Choreography Choreography::com(Participant from, Participant to, Name channel,
                               Expression payload, Name target, Choreography cont) {
  return Choreography(ComNode{std::move(from), std::move(to), std::move(channel),
                              std::move(payload), std::move(target), std::move(cont)});
}

Choreography Choreography::choice(Participant from, Participant to, Name channel,
                                  std::vector<std::pair<Name, Choreography>> branches) {
  if (branches.empty())
    throw std::invalid_argument("choice requires at least one branch");
  std::set<std::string> seen;
  std::vector<ChoiceBranch> out;
  out.reserve(branches.size());
  for (auto& [label, body] : branches) {
    if (!seen.insert(label.id()).second)
      throw std::invalid_argument("duplicate choice label: " + label.id());
    out.push_back(ChoiceBranch{std::move(label), std::move(body)});
  }
  return Choreography(ChoiceNode{std::move(from), std::move(to), std::move(channel),
                                 std::move(out)});
}

Choreography Choreography::par(Choreography left, Choreography right) {
  return Choreography(ParNode{std::move(left), std::move(right)});
}

Choreography Choreography::cond(Expression guard, std::optional<Participant> at,
                                Choreography then_branch, Choreography else_branch) {
  return Choreography(CondNode{std::move(guard), std::move(at),
                               std::move(then_branch), std::move(else_branch)});
}

Choreography Choreography::rec_var(Name var) {
  return Choreography(RecVarNode{std::move(var)});
}

Choreography Choreography::rec(Name var, Choreography body) {
  return Choreography(RecNode{std::move(var), std::move(body)});
}

bool Choreography::operator==(const Choreography& other) const {
  if (node_ == other.node_) return true;
  const ChorNode& a = *node_;
  const ChorNode& b = *other.node_;
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<InactionNode>(a)) return true;
  if (const auto* i = std::get_if<InitNode>(&a)) {
    const auto& j = std::get<InitNode>(b);
    return i->from == j.from && i->to == j.to && i->service == j.service &&
           i->channel == j.channel && i->cont == j.cont;
  }
  if (const auto* c = std::get_if<ComNode>(&a)) {
    const auto& d = std::get<ComNode>(b);
    return c->from == d.from && c->to == d.to && c->channel == d.channel &&
           c->payload == d.payload && c->target == d.target && c->cont == d.cont;
  }
  if (const auto* c = std::get_if<ChoiceNode>(&a)) {
    const auto& d = std::get<ChoiceNode>(b);
    if (!(c->from == d.from && c->to == d.to && c->channel == d.channel) ||
        c->branches.size() != d.branches.size())
      return false;
    for (std::size_t i = 0; i < c->branches.size(); ++i)
      if (!(c->branches[i].label == d.branches[i].label &&
            c->branches[i].body == d.branches[i].body))
        return false;
    return true;
  }
  if (const auto* p = std::get_if<ParNode>(&a)) {
    const auto& q = std::get<ParNode>(b);
    return p->left == q.left && p->right == q.right;
  }
  if (const auto* c = std::get_if<CondNode>(&a)) {
    const auto& d = std::get<CondNode>(b);
    return c->guard == d.guard && c->at == d.at &&
           c->then_branch == d.then_branch && c->else_branch == d.else_branch;
  }
  if (const auto* r = std::get_if<RecVarNode>(&a))
    return r->var == std::get<RecVarNode>(b).var;
  const auto& r = std::get<RecNode>(a);
  const auto& s = std::get<RecNode>(b);
  return r.var == s.var && r.body == s.body;
}

// ------------------------------------------------------------------- Formula

Formula::Formula() : node_(std::make_shared<const FormulaNode>(EndF{})) {}
Formula::Formula(FormulaNode n) : node_(std::make_shared<const FormulaNode>(std::move(n))) {}

Formula Formula::exists(std::string var, QuantSort sort, Formula body) {
  return Formula(ExistsF{std::move(var), sort, std::move(body)});
}
Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(AndF{std::move(lhs), std::move(rhs)});
}
Formula Formula::neg(Formula f) { return Formula(NegF{std::move(f)}); }
Formula Formula::action(ActionLabel label, Formula cont) {
  return Formula(ActionF{std::move(label), std::move(cont)});
}
Formula Formula::end() { return Formula(EndF{}); }
Formula Formula::eq(Expression lhs, Expression rhs) {
  return Formula(EqF{std::move(lhs), std::move(rhs)});
}
Formula Formula::spatial(Formula lhs, Formula rhs) {
  return Formula(SpatialF{std::move(lhs), std::move(rhs)});
}
Formula Formula::may(Formula f) { return Formula(MayF{std::move(f)}); }

Formula Formula::truth() { return Formula(TrueF{}); }
Formula Formula::falsity() { return Formula(FalseF{}); }
Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(OrF{std::move(lhs), std::move(rhs)});
}
Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(ImpliesF{std::move(lhs), std::move(rhs)});
}
Formula Formula::forall(std::string var, QuantSort sort, Formula body) {
  return Formula(ForallF{std::move(var), sort, std::move(body)});
}
Formula Formula::box(Formula f) { return Formula(BoxF{std::move(f)}); }
Formula Formula::box_action(ActionLabel label, Formula cont) {
  return Formula(BoxActionF{std::move(label), std::move(cont)});
}
Formula Formula::next(Formula f) { return Formula(NextF{std::move(f)}); }
Formula Formula::exists_label(Formula f) { return Formula(ExistsLabelF{std::move(f)}); }
Formula Formula::interact(Participant from, Participant to, Formula cont) {
  return Formula(InteractF{std::move(from), std::move(to), std::move(cont)});
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const FormulaNode& a = *node_;
  const FormulaNode& b = *other.node_;
  if (a.index() != b.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, ExistsF> || std::is_same_v<T, ForallF>)
          return x.var == y.var && x.sort == y.sort && x.body == y.body;
        else if constexpr (std::is_same_v<T, AndF> || std::is_same_v<T, SpatialF> ||
                           std::is_same_v<T, OrF> || std::is_same_v<T, ImpliesF>)
          return x.lhs == y.lhs && x.rhs == y.rhs;
        else if constexpr (std::is_same_v<T, NegF> || std::is_same_v<T, MayF> ||
                           std::is_same_v<T, BoxF> || std::is_same_v<T, NextF> ||
                           std::is_same_v<T, ExistsLabelF>)
          return x.body == y.body;
        else if constexpr (std::is_same_v<T, ActionF> || std::is_same_v<T, BoxActionF>)
          return x.label == y.label && x.cont == y.cont;
        else if constexpr (std::is_same_v<T, EqF>)
          return x.lhs == y.lhs && x.rhs == y.rhs;
        else if constexpr (std::is_same_v<T, InteractF>)
          return x.from == y.from && x.to == y.to && x.cont == y.cont;
        else
          return true; // EndF, TrueF, FalseF
      },
      a);
}

bool Formula::is_core() const {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ExistsF>)
          return x.body.is_core();
        else if constexpr (std::is_same_v<T, AndF> || std::is_same_v<T, SpatialF>)
          return x.lhs.is_core() && x.rhs.is_core();
        else if constexpr (std::is_same_v<T, NegF> || std::is_same_v<T, MayF>)
          return x.body.is_core();
        else if constexpr (std::is_same_v<T, ActionF>)
          return x.cont.is_core();
        else if constexpr (std::is_same_v<T, EndF> || std::is_same_v<T, EqF>)
          return true;
        else
          return false;
      },
      *node_);
}

// -------------------------------------------------------------------- State

std::optional<Value> State::lookup(const std::string& var, const Participant& at) const {
  auto it = bindings_.find({at.name(), var});
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

State State::with(const std::string& var, const Participant& at, Value v) const {
  State out = *this;
  out.bindings_[{at.name(), var}] = std::move(v);
  return out;
}

std::vector<Value> State::values() const {
  std::set<Value> seen;
  for (const auto& [k, v] : bindings_) seen.insert(v);
  return {seen.begin(), seen.end()};
}

// -------------------------------------------------------------- SessionType

SessionType::SessionType() : node_(std::make_shared<const SessionTypeNode>(EndT{})) {}
SessionType::SessionType(SessionTypeNode n)
    : node_(std::make_shared<const SessionTypeNode>(std::move(n))) {}

SessionType SessionType::send(ValueType t, SessionType cont) {
  return SessionType(SendT{t, std::move(cont)});
}
SessionType SessionType::recv(ValueType t, SessionType cont) {
  return SessionType(RecvT{t, std::move(cont)});
}
SessionType SessionType::branch(std::vector<std::pair<std::string, SessionType>> alts) {
  return SessionType(BranchT{std::move(alts)});
}
SessionType SessionType::select(std::vector<std::pair<std::string, SessionType>> alts) {
  return SessionType(SelectT{std::move(alts)});
}
SessionType SessionType::end() { return SessionType(EndT{}); }
SessionType SessionType::rec(std::string var, SessionType body) {
  return SessionType(RecT{std::move(var), std::move(body)});
}
SessionType SessionType::type_var(std::string var) {
  return SessionType(TypeVarT{std::move(var)});
}

bool SessionType::operator==(const SessionType& other) const {
  if (node_ == other.node_) return true;
  const SessionTypeNode& a = *node_;
  const SessionTypeNode& b = *other.node_;
  if (a.index() != b.index()) return false;
  return std::visit(
      [&b](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, SendT> || std::is_same_v<T, RecvT>)
          return x.payload == y.payload && x.cont == y.cont;
        else if constexpr (std::is_same_v<T, BranchT> || std::is_same_v<T, SelectT>)
          return x.alts == y.alts;
        else if constexpr (std::is_same_v<T, RecT>)
          return x.var == y.var && x.body == y.body;
        else if constexpr (std::is_same_v<T, TypeVarT>)
          return x.var == y.var;
        else
          return true;
      },
      a);
}

namespace {
bool closed_under(const SessionType& t, std::set<std::string>& bound) {
  return std::visit(
      [&bound](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SendT> || std::is_same_v<T, RecvT>)
          return closed_under(x.cont, bound);
        else if constexpr (std::is_same_v<T, BranchT> || std::is_same_v<T, SelectT>) {
          for (const auto& [l, a] : x.alts)
            if (!closed_under(a, bound)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, RecT>) {
          bool fresh = bound.insert(x.var).second;
          bool ok = closed_under(x.body, bound);
          if (fresh) bound.erase(x.var);
          return ok;
        } else if constexpr (std::is_same_v<T, TypeVarT>)
          return bound.count(x.var) > 0;
        else
          return true;
      },
      t.node());
}
} // namespace

bool SessionType::closed() const {
  std::set<std::string> bound;
  return closed_under(*this, bound);
}

} // namespace chorcheck
