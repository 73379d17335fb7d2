#ifndef CHORCHECK_CORE_OPS_HPP
#define CHORCHECK_CORE_OPS_HPP

#include <set>
#include <string>

#include "chorcheck/choreography.hpp"
#include "chorcheck/formula.hpp"
#include "chorcheck/names.hpp"
#include "chorcheck/value.hpp"

namespace chorcheck {

/// Capture-avoiding substitution of session channel `current` by
/// `replacement` in free positions. Total; binders shadowing `current`
/// cut the substitution off, and binders that would capture
/// `replacement` are alpha-renamed first.
Choreography substitute_channel(const Choreography& c, const Name& current,
                                const Name& replacement);

/// Free names of a term: session and shared channels, participants,
/// branch labels, variables, and unbound process variables.
NameSet free_names(const Choreography& c);

/// Free names of a formula. Exists binds its variable within its sort;
/// action labels contribute their components; literals are not names.
NameSet free_names_formula(const Formula& f);

/// One-step unfolding of a recursion node. Throws std::invalid_argument
/// when c is not a rec term.
Choreography unfold(const Choreography& c);

bool is_recursion_free(const Choreography& c);

/// Identifier of the first rec binder in the term, empty if none.
/// Used for error messages about the unsupported fragment.
std::string first_rec_binder(const Choreography& c);

/// Canonical alpha form: bound session channels and process variables
/// renamed to positional names, choice branches sorted by label.
/// Equality of canonical forms decides alpha equivalence.
Choreography alpha_canonical(const Choreography& c);

bool alpha_equal(const Choreography& a, const Choreography& b);

/// Every identifier occurring anywhere in the term, bound or free, any
/// sort. Used as the avoid-set when inventing fresh channels.
std::set<std::string> all_idents(const Choreography& c);

std::set<std::string> all_idents_formula(const Formula& f);

/// Literal values occurring in the term / formula (conditional guards,
/// payload expressions, equality sides).
std::set<Value> literals(const Choreography& c);
std::set<Value> literals_formula(const Formula& f);

/// A witness substituted for a quantified variable: an identifier for
/// the name sorts, a value for the expression sort.
struct Witness {
  std::variant<std::string, Value> v;

  static Witness ident(std::string s) { return {std::move(s)}; }
  static Witness value(Value val) { return {std::move(val)}; }

  bool is_ident() const { return std::holds_alternative<std::string>(v); }
  const std::string& as_ident() const { return std::get<std::string>(v); }
  const Value& as_value() const { return std::get<Value>(v); }

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

/// Substitute a witness for the free occurrences of a quantified
/// variable of the given sort. Inner quantifiers over the same
/// (var, sort) shadow.
Formula substitute_witness(const Formula& f, const std::string& var,
                           QuantSort sort, const Witness& w);

} // namespace chorcheck

#endif
