#include "chorcheck/print.hpp"

#include <sstream>

namespace chorcheck {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

// Expression precedence: 0 comparison, 1 additive, 2 unary, 3 primary.
int expr_level(const Expression& e) {
  return std::visit(overloaded{
                        [](const LitExpr&) { return 3; },
                        [](const VarExpr&) { return 3; },
                        [](const BinaryExpr& b) {
                          switch (b.op) {
                            case BinOp::Eq:
                            case BinOp::Ne:
                            case BinOp::Lt: return 0;
                            default: return 1;
                          }
                        },
                        [](const NotExpr&) { return 2; },
                    },
                    e.node());
}

std::string print_expr(const Expression& e, int min_level) {
  std::string body = std::visit(
      overloaded{
          [](const LitExpr& l) { return print_value(l.value); },
          [](const VarExpr& v) {
            return v.at ? v.var.id() + "@" + v.at->name() : v.var.id();
          },
          [](const BinaryExpr& b) {
            bool cmp = b.op == BinOp::Eq || b.op == BinOp::Ne || b.op == BinOp::Lt;
            std::string op = std::string(" ") + to_string(b.op) + " ";
            return print_expr(b.lhs, 1) + op + print_expr(b.rhs, cmp ? 1 : 2);
          },
          [](const NotExpr& n) { return "not " + print_expr(n.arg, 2); },
      },
      e.node());
  if (expr_level(e) < min_level) return "(" + body + ")";
  return body;
}

std::string indent_str(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

std::string print_chor(const Choreography& c, int indent);

std::string print_par_operand(const Choreography& c, int indent, bool right) {
  bool is_par = std::holds_alternative<ParNode>(c.node());
  if (is_par && right) return "(" + print_chor(c, indent) + ")";
  return print_chor(c, indent);
}

std::string print_arm(const Choreography& c, int indent) {
  if (std::holds_alternative<ParNode>(c.node()))
    return "(" + print_chor(c, indent) + ")";
  return print_chor(c, indent);
}

std::string print_chor(const Choreography& c, int indent) {
  return std::visit(
      overloaded{
          [&](const InactionNode&) { return std::string("0"); },
          [&](const InitNode& i) {
            return i.from.name() + " -> " + i.to.name() + " : " + i.service.id() +
                   "(" + i.channel.id() + ").\n" + indent_str(indent) +
                   print_arm(i.cont, indent);
          },
          [&](const ComNode& m) {
            return m.from.name() + " -> " + m.to.name() + " : " + m.channel.id() +
                   "<" + print_expr(m.payload, 0) + ", " + m.target.id() + ">.\n" +
                   indent_str(indent) + print_arm(m.cont, indent);
          },
          [&](const ChoiceNode& ch) {
            std::string out = ch.from.name() + " -> " + ch.to.name() + " : " +
                              ch.channel.id() + " [+] {\n";
            for (std::size_t i = 0; i < ch.branches.size(); ++i) {
              out += indent_str(indent + 2) + ch.branches[i].label.id() + ": " +
                     print_chor(ch.branches[i].body, indent + 4);
              out += (i + 1 < ch.branches.size()) ? ",\n" : "\n";
            }
            out += indent_str(indent) + "}";
            return out;
          },
          [&](const ParNode& p) {
            return print_par_operand(p.left, indent, false) + "\n" +
                   indent_str(indent) + "| " + print_par_operand(p.right, indent, true);
          },
          [&](const CondNode& i) {
            std::string out = "if " + print_expr(i.guard, 0) + " then\n" +
                              indent_str(indent + 2) +
                              print_arm(i.then_branch, indent + 2) + "\n" +
                              indent_str(indent) + "else";
            if (std::holds_alternative<CondNode>(i.else_branch.node()))
              return out + " " + print_chor(i.else_branch, indent);
            return out + "\n" + indent_str(indent + 2) +
                   print_arm(i.else_branch, indent + 2);
          },
          [&](const RecVarNode& r) { return r.var.id(); },
          [&](const RecNode& r) {
            return "rec " + r.var.id() + " {\n" + indent_str(indent + 2) +
                   print_chor(r.body, indent + 2) + "\n" + indent_str(indent) + "}";
          },
      },
      c.node());
}

// Formula precedence: 0 spatial, 1 implies, 2 or, 3 and, 4 unary/eq,
// 5 atoms. Quantifiers extend maximally to the right, hence level 0.
int formula_level(const Formula& f) {
  return std::visit(
      overloaded{
          [](const SpatialF&) { return 0; },
          [](const ExistsF&) { return 0; },
          [](const ForallF&) { return 0; },
          [](const ImpliesF&) { return 1; },
          [](const OrF&) { return 2; },
          [](const AndF&) { return 3; },
          [](const EqF&) { return 4; },
          [](const auto&) { return 4; },
          [](const EndF&) { return 5; },
          [](const TrueF&) { return 5; },
          [](const FalseF&) { return 5; },
      },
      f.node());
}

std::string print_f(const Formula& f, int min_level) {
  std::string body = std::visit(
      overloaded{
          [](const ExistsF& e) {
            return "exists " + e.var + ":" + std::string(to_string(e.sort)) + " . " +
                   print_f(e.body, 0);
          },
          [](const ForallF& e) {
            return "forall " + e.var + ":" + std::string(to_string(e.sort)) + " . " +
                   print_f(e.body, 0);
          },
          [](const AndF& a) { return print_f(a.lhs, 3) + " & " + print_f(a.rhs, 4); },
          [](const OrF& a) { return print_f(a.lhs, 2) + " or " + print_f(a.rhs, 3); },
          [](const ImpliesF& a) {
            return print_f(a.lhs, 2) + " => " + print_f(a.rhs, 1);
          },
          [](const SpatialF& a) {
            std::string rhs = std::holds_alternative<SpatialF>(a.rhs.node())
                                  ? "(" + print_f(a.rhs, 0) + ")"
                                  : print_f(a.rhs, 1);
            return print_f(a.lhs, 0) + " | " + rhs;
          },
          [](const NegF& n) { return "~" + print_f(n.body, 4); },
          [](const MayF& n) { return "may " + print_f(n.body, 4); },
          [](const BoxF& n) { return "box " + print_f(n.body, 4); },
          [](const NextF& n) { return "next " + print_f(n.body, 4); },
          [](const ExistsLabelF& n) { return "<*> " + print_f(n.body, 4); },
          [](const ActionF& a) {
            return "<" + print_label(a.label) + "> " + print_f(a.cont, 4);
          },
          [](const BoxActionF& a) {
            return "[" + print_label(a.label) + "] " + print_f(a.cont, 4);
          },
          [](const InteractF& i) {
            return "interact(" + i.from.name() + ", " + i.to.name() + ") " +
                   print_f(i.cont, 4);
          },
          [](const EqF& e) {
            return print_expr(e.lhs, 1) + " = " + print_expr(e.rhs, 1);
          },
          [](const EndF&) { return std::string("end"); },
          [](const TrueF&) { return std::string("true"); },
          [](const FalseF&) { return std::string("false"); },
      },
      f.node());
  if (formula_level(f) < min_level) return "(" + body + ")";
  return body;
}

} // namespace

std::string print_value(const Value& v) {
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.as_string().empty()) return "eps";
  return quote(v.as_string());
}

std::string print_expression(const Expression& e) { return print_expr(e, 0); }

std::string print_choreography(const Choreography& c) { return print_chor(c, 0); }

std::string print_formula(const Formula& f) { return print_f(f, 0); }

std::string print_state(const State& s) {
  std::string out;
  bool first = true;
  for (const auto& [key, value] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += key.second + "@" + key.first + " = " + print_value(value);
  }
  return out;
}

std::string print_label(const ActionLabel& l) {
  return std::visit(
      overloaded{
          [](const InitLabel& i) {
            return "init " + i.from.name() + "->" + i.to.name() + " " +
                   i.service.id() + "(" + i.channel.id() + ")";
          },
          [](const ComLabel& c) {
            return "com " + c.from.name() + "->" + c.to.name() + " " + c.channel.id();
          },
          [](const BranchLabel& b) {
            return "branch " + b.from.name() + "->" + b.to.name() + " " +
                   b.channel.id() + " [" + b.label.id() + "]";
          },
      },
      l);
}

std::string print_session_type(const SessionType& t) {
  return std::visit(
      overloaded{
          [](const SendT& s) {
            return "!(" + std::string(to_string(s.payload)) + "). " +
                   print_session_type(s.cont);
          },
          [](const RecvT& r) {
            return "?(" + std::string(to_string(r.payload)) + "). " +
                   print_session_type(r.cont);
          },
          [](const BranchT& b) {
            std::string out = "&{ ";
            for (std::size_t i = 0; i < b.alts.size(); ++i) {
              if (i) out += ", ";
              out += b.alts[i].first + ": " + print_session_type(b.alts[i].second);
            }
            return out + " }";
          },
          [](const SelectT& s) {
            std::string out = "+{ ";
            for (std::size_t i = 0; i < s.alts.size(); ++i) {
              if (i) out += ", ";
              out += s.alts[i].first + ": " + print_session_type(s.alts[i].second);
            }
            return out + " }";
          },
          [](const EndT&) { return std::string("end"); },
          [](const RecT& r) {
            return "rec " + r.var + " . " + print_session_type(r.body);
          },
          [](const TypeVarT& v) { return v.var; },
      },
      t.node());
}

} // namespace chorcheck
