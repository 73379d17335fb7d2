#ifndef CHORCHECK_EXPR_HPP
#define CHORCHECK_EXPR_HPP

#include <memory>
#include <optional>
#include <variant>

#include "chorcheck/names.hpp"
#include "chorcheck/value.hpp"

namespace chorcheck {

struct LitExpr;
struct VarExpr;
struct BinaryExpr;
struct NotExpr;
using ExprNode = std::variant<LitExpr, VarExpr, BinaryExpr, NotExpr>;

enum class BinOp { Add, Sub, Lt, Eq, Ne, Concat };

const char* to_string(BinOp op);

/// Immutable expression tree; cheap to copy and share.
class Expression {
public:
  Expression(); // literal 0

  static Expression lit(Value v);
  static Expression lit_int(std::int64_t i) { return lit(Value(i)); }
  static Expression lit_bool(bool b) { return lit(Value(b)); }
  static Expression lit_string(std::string s) { return lit(Value(std::move(s))); }
  static Expression var(std::string name, std::optional<Participant> at = std::nullopt);
  static Expression binary(BinOp op, Expression lhs, Expression rhs);
  static Expression negation(Expression arg);

  const ExprNode& node() const { return *node_; }

  bool operator==(const Expression& other) const;

private:
  explicit Expression(ExprNode n);
  std::shared_ptr<const ExprNode> node_;
};

struct LitExpr {
  Value value;
};

/// Variable read. When `at` is absent the read resolves to the
/// participant performing the evaluation.
struct VarExpr {
  Name var; // NameSort::Variable
  std::optional<Participant> at;
};

struct BinaryExpr {
  BinOp op;
  Expression lhs, rhs;
};

struct NotExpr {
  Expression arg;
};

} // namespace chorcheck

#endif
