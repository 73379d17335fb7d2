#ifndef CHORCHECK_FORMULA_HPP
#define CHORCHECK_FORMULA_HPP

#include <memory>
#include <string>
#include <variant>

#include "chorcheck/expr.hpp"
#include "chorcheck/label.hpp"
#include "chorcheck/names.hpp"

namespace chorcheck {

struct ExistsF;
struct AndF;
struct NegF;
struct ActionF;
struct EndF;
struct EqF;
struct SpatialF;
struct MayF;
// Derived sugar; eliminated by expand_derived before checking.
struct TrueF;
struct FalseF;
struct OrF;
struct ImpliesF;
struct ForallF;
struct BoxF;
struct BoxActionF;
struct NextF;
struct ExistsLabelF;
struct InteractF;

using FormulaNode =
    std::variant<ExistsF, AndF, NegF, ActionF, EndF, EqF, SpatialF, MayF,
                 TrueF, FalseF, OrF, ImpliesF, ForallF, BoxF, BoxActionF,
                 NextF, ExistsLabelF, InteractF>;

/// Immutable formula tree. The first eight constructors are the core
/// language; the rest are sugar that expands before checking.
class Formula {
public:
  Formula(); // end

  static Formula exists(std::string var, QuantSort sort, Formula body);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula neg(Formula f);
  static Formula action(ActionLabel label, Formula cont);
  static Formula end();
  static Formula eq(Expression lhs, Expression rhs);
  static Formula spatial(Formula lhs, Formula rhs);
  static Formula may(Formula f);

  static Formula truth();
  static Formula falsity();
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string var, QuantSort sort, Formula body);
  static Formula box(Formula f);
  static Formula box_action(ActionLabel label, Formula cont);
  static Formula next(Formula f);
  static Formula exists_label(Formula f);
  static Formula interact(Participant from, Participant to, Formula cont);

  const FormulaNode& node() const;

  bool operator==(const Formula& other) const;

  /// True when no sugar node occurs anywhere in the tree.
  bool is_core() const;

private:
  explicit Formula(FormulaNode n);
  std::shared_ptr<const FormulaNode> node_;
};

struct ExistsF {
  std::string var;
  QuantSort sort;
  Formula body;
};
struct AndF {
  Formula lhs, rhs;
};
struct NegF {
  Formula body;
};
struct ActionF {
  ActionLabel label;
  Formula cont;
};
struct EndF {};
/// e1 = e2 with each side carrying its own read locations.
struct EqF {
  Expression lhs, rhs;
};
struct SpatialF {
  Formula lhs, rhs;
};
struct MayF {
  Formula body;
};

struct TrueF {};
struct FalseF {};
struct OrF {
  Formula lhs, rhs;
};
struct ImpliesF {
  Formula lhs, rhs;
};
struct ForallF {
  std::string var;
  QuantSort sort;
  Formula body;
};
struct BoxF {
  Formula body;
};
struct BoxActionF {
  ActionLabel label;
  Formula cont;
};
struct NextF {
  Formula body;
};
struct ExistsLabelF {
  Formula body;
};
struct InteractF {
  Participant from, to;
  Formula cont;
};

inline const FormulaNode& Formula::node() const { return *node_; }

} // namespace chorcheck

#endif
