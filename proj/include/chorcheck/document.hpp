#ifndef CHORCHECK_DOCUMENT_HPP
#define CHORCHECK_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "chorcheck/choreography.hpp"
#include "chorcheck/formula.hpp"
#include "chorcheck/session_type.hpp"
#include "chorcheck/state.hpp"

namespace chorcheck {

/// A parsed source file: named terms and formulae, optional session
/// type declarations, and at most one initial-state block. Declaration
/// names are unique within a file.
struct Document {
  std::vector<std::pair<std::string, Choreography>> choreographies;
  std::vector<std::pair<std::string, Formula>> formulae;
  std::vector<std::pair<std::string, SessionType>> session_types;
  std::optional<State> initial_state;

  const Choreography* find_choreography(const std::string& name) const;
  const Formula* find_formula(const std::string& name) const;
};

} // namespace chorcheck

#endif
