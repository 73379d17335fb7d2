#ifndef CHORCHECK_SESSION_TYPE_HPP
#define CHORCHECK_SESSION_TYPE_HPP

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace chorcheck {

enum class ValueType { Bool, Int, String };

const char* to_string(ValueType t);

struct SendT;
struct RecvT;
struct BranchT;
struct SelectT;
struct EndT;
struct RecT;
struct TypeVarT;
using SessionTypeNode =
    std::variant<SendT, RecvT, BranchT, SelectT, EndT, RecT, TypeVarT>;

/// Session type syntax. Parse/print only; no typing judgment.
class SessionType {
public:
  SessionType(); // end

  static SessionType send(ValueType t, SessionType cont);
  static SessionType recv(ValueType t, SessionType cont);
  static SessionType branch(std::vector<std::pair<std::string, SessionType>> alts);
  static SessionType select(std::vector<std::pair<std::string, SessionType>> alts);
  static SessionType end();
  static SessionType rec(std::string var, SessionType body);
  static SessionType type_var(std::string var);

  const SessionTypeNode& node() const;

  bool operator==(const SessionType& other) const;

  /// True iff every type variable is bound by an enclosing rec.
  bool closed() const;

private:
  explicit SessionType(SessionTypeNode n);
  std::shared_ptr<const SessionTypeNode> node_;
};

struct SendT {
  ValueType payload;
  SessionType cont;
};
struct RecvT {
  ValueType payload;
  SessionType cont;
};
struct BranchT {
  std::vector<std::pair<std::string, SessionType>> alts;
};
struct SelectT {
  std::vector<std::pair<std::string, SessionType>> alts;
};
struct EndT {};
struct RecT {
  std::string var;
  SessionType body;
};
struct TypeVarT {
  std::string var;
};

inline const SessionTypeNode& SessionType::node() const { return *node_; }

} // namespace chorcheck

#endif
