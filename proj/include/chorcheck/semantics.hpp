#ifndef CHORCHECK_SEMANTICS_HPP
#define CHORCHECK_SEMANTICS_HPP

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "chorcheck/choreography.hpp"
#include "chorcheck/errors.hpp"
#include "chorcheck/label.hpp"
#include "chorcheck/state.hpp"

namespace chorcheck {

struct Configuration {
  State state;
  Choreography chor;

  bool operator==(const Configuration& other) const = default;
};

/// Stable identity of a configuration up to alpha equivalence of the
/// term and equality of the state.
std::string configuration_key(const Configuration& cfg);

struct Transition {
  ActionLabel label;
  Configuration target;
};

struct EvalError {
  enum class Kind { UnboundVariable, TypeMismatch, NoLocation };
  Kind kind;
  std::string detail;
};

using EvalResult = std::variant<Value, EvalError>;

inline bool eval_ok(const EvalResult& r) { return std::holds_alternative<Value>(r); }

/// Big-step expression evaluation. Located reads x@P consult the state
/// at (x, P); unlocated reads resolve to `at` when present.
EvalResult eval_expr(const State& s, const Expression& e,
                     const std::optional<Participant>& at = std::nullopt);

/// All transitions enabled by the operational rules: initiation with a
/// canonically fresh session channel, communication when the payload
/// evaluates, one transition per choice branch, both sides of a
/// parallel, the selected branch of a conditional, and recursion
/// unfolded on demand. A failed premise silently disables its rule.
std::vector<Transition> step(const Configuration& cfg);

/// Rules disabled by evaluation failures in the last step() call over
/// this configuration, for diagnostics (e.g. a non-boolean guard).
struct DisabledRule {
  std::string rule; // "com" or "cond"
  EvalError error;
};
std::vector<Transition> step(const Configuration& cfg,
                             std::vector<DisabledRule>& diagnostics);

/// Transitions matching a query label. Com/branch labels must match
/// exactly; an init label matches any initiation with the same
/// endpoints and service, renaming the fresh channel to the query's
/// channel (which must not occur free in cfg). The returned
/// configurations have the query's channel substituted in.
std::vector<Configuration> next(const Configuration& cfg, const ActionLabel& query);

/// Breadth-first closure of step, including cfg itself, deduplicated
/// up to alpha equivalence and state equality. Without a budget the
/// term must be recursion-free (throws RecursionError otherwise); with
/// one, exploration stops at that depth.
std::vector<Configuration> reachable(const Configuration& cfg,
                                     std::optional<int> budget = std::nullopt,
                                     const Deadline& deadline = {});

/// Flattening of a recursion-free term into its non-parallel,
/// non-inaction components. Throws RecursionError on rec terms.
std::vector<Choreography> norm(const Choreography& c);

/// Parallel product of a component list; empty product is inaction.
Choreography parallel_product(const std::vector<Choreography>& components);

/// Structural congruence on recursion-free terms: commutative monoid
/// laws for parallel/inaction, alpha equivalence, applied recursively
/// through continuations. Throws RecursionError on rec terms.
bool struct_equiv(const Choreography& a, const Choreography& b);

/// Free session-channel identifiers of a term.
std::set<std::string> free_session_channels(const Choreography& c);

} // namespace chorcheck

#endif
