#ifndef CHORCHECK_NAMES_HPP
#define CHORCHECK_NAMES_HPP

#include <compare>
#include <set>
#include <string>

namespace chorcheck {

/// A participant in a choreography. Identifiers are case-sensitive;
/// equality is plain string equality.
class Participant {
public:
  Participant() = default;
  explicit Participant(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  friend auto operator<=>(const Participant&, const Participant&) = default;

private:
  std::string name_;
};

/// Sorts form disjoint namespaces: the same identifier may appear as
/// both a variable and a branch label without clashing.
enum class NameSort {
  SharedChannel,
  SessionChannel,
  BranchLabel,
  Variable,
  ProcessVariable,
  ParticipantName,
};

const char* to_string(NameSort sort);

/// A sorted identifier. Two names are equal iff identifier and sort
/// are equal; the sort is fixed at construction.
class Name {
public:
  Name() : sort_(NameSort::Variable) {}
  Name(std::string id, NameSort sort) : id_(std::move(id)), sort_(sort) {}

  const std::string& id() const { return id_; }
  NameSort sort() const { return sort_; }

  friend auto operator<=>(const Name&, const Name&) = default;

private:
  std::string id_;
  NameSort sort_;
};

inline Name shared_channel(std::string id) { return {std::move(id), NameSort::SharedChannel}; }
inline Name session_channel(std::string id) { return {std::move(id), NameSort::SessionChannel}; }
inline Name branch_label(std::string id) { return {std::move(id), NameSort::BranchLabel}; }
inline Name variable(std::string id) { return {std::move(id), NameSort::Variable}; }
inline Name process_variable(std::string id) { return {std::move(id), NameSort::ProcessVariable}; }

using NameSet = std::set<Name>;

/// Sorts a formula quantifier may range over.
enum class QuantSort {
  Participant,
  SharedChannel,
  SessionChannel,
  BranchLabel,
  Expr,
};

const char* to_string(QuantSort sort);

/// Smallest identifier of the form base or base#n (n >= 1) not in `avoid`.
/// `base` is first stripped of any existing #suffix.
std::string fresh_ident(const std::string& base, const std::set<std::string>& avoid);

} // namespace chorcheck

#endif
