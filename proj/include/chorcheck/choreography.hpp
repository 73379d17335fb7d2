#ifndef CHORCHECK_CHOREOGRAPHY_HPP
#define CHORCHECK_CHOREOGRAPHY_HPP

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "chorcheck/expr.hpp"
#include "chorcheck/names.hpp"

namespace chorcheck {

struct InactionNode;
struct InitNode;
struct ComNode;
struct ChoiceNode;
struct ParNode;
struct CondNode;
struct RecVarNode;
struct RecNode;
using ChorNode = std::variant<InactionNode, InitNode, ComNode, ChoiceNode,
                              ParNode, CondNode, RecVarNode, RecNode>;

/// Immutable choreography term. Construction goes through the factory
/// functions, which enforce the structural invariants.
class Choreography {
public:
  Choreography(); // Inaction

  static Choreography inaction();
  static Choreography init(Participant from, Participant to, Name service,
                           Name channel, Choreography cont);
  static Choreography com(Participant from, Participant to, Name channel,
                          Expression payload, Name target, Choreography cont);
  /// Throws std::invalid_argument on duplicate branch labels or an
  /// empty branch list.
  static Choreography choice(Participant from, Participant to, Name channel,
                             std::vector<std::pair<Name, Choreography>> branches);
  static Choreography par(Choreography left, Choreography right);
  static Choreography cond(Expression guard, std::optional<Participant> at,
                           Choreography then_branch, Choreography else_branch);
  static Choreography rec_var(Name var);
  static Choreography rec(Name var, Choreography body);

  const ChorNode& node() const;

  /// Strict structural equality (branch order significant). Semantic
  /// comparisons go through alpha_equal / struct_equiv.
  bool operator==(const Choreography& other) const;

private:
  explicit Choreography(ChorNode n);
  std::shared_ptr<const ChorNode> node_;
};

struct InactionNode {};

/// Session initiation A -> B : a(k). The session channel k is bound in
/// the continuation.
struct InitNode {
  Participant from, to;
  Name service; // shared channel
  Name channel; // session channel, binds in cont
  Choreography cont;
};

/// In-session communication A -> B : k<e, y>. The payload e is
/// evaluated at A; y names a store slot of B and does not bind.
struct ComNode {
  Participant from, to;
  Name channel;
  Expression payload;
  Name target; // variable written at `to`
  Choreography cont;
};

struct ChoiceBranch {
  Name label;
  Choreography body;
};

/// Labelled choice A -> B : k [+] { l_i: C_i }. Labels are pairwise
/// distinct; branch order is kept for printing but carries no meaning.
struct ChoiceNode {
  Participant from, to;
  Name channel;
  std::vector<ChoiceBranch> branches;
};

struct ParNode {
  Choreography left, right;
};

/// Conditional on e evaluated at a participant. `at` is the home for
/// unlocated reads in the guard; absent when the guard itself locates
/// every read (or reads nothing).
struct CondNode {
  Expression guard;
  std::optional<Participant> at;
  Choreography then_branch, else_branch;
};

struct RecVarNode {
  Name var; // process variable
};

struct RecNode {
  Name var; // binds in body
  Choreography body;
};

inline const ChorNode& Choreography::node() const { return *node_; }

} // namespace chorcheck

#endif
