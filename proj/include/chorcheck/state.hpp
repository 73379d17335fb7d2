#ifndef CHORCHECK_STATE_HPP
#define CHORCHECK_STATE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorcheck/names.hpp"
#include "chorcheck/value.hpp"

namespace chorcheck {

/// Participant-indexed variable store. x@A and x@B are distinct slots.
/// Updates return a new State; instances never mutate.
class State {
public:
  State() = default;

  std::optional<Value> lookup(const std::string& var, const Participant& at) const;

  /// Copy of this state with (var, at) bound to v.
  State with(const std::string& var, const Participant& at, Value v) const;

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  /// Ordered by (participant, variable); iteration order is the print order.
  const std::map<std::pair<std::string, std::string>, Value>& bindings() const {
    return bindings_;
  }

  /// Distinct values stored anywhere in the state.
  std::vector<Value> values() const;

  friend bool operator==(const State&, const State&) = default;

private:
  // key = (participant, variable)
  std::map<std::pair<std::string, std::string>, Value> bindings_;
};

} // namespace chorcheck

#endif
