#ifndef CHORCHECK_PRINT_HPP
#define CHORCHECK_PRINT_HPP

#include <string>

#include "chorcheck/choreography.hpp"
#include "chorcheck/formula.hpp"
#include "chorcheck/label.hpp"
#include "chorcheck/session_type.hpp"
#include "chorcheck/state.hpp"

namespace chorcheck {

// Deterministic printers. parse(print(x)) is alpha-equivalent to x.

std::string print_value(const Value& v);
std::string print_expression(const Expression& e);
std::string print_choreography(const Choreography& c);
std::string print_formula(const Formula& f);
std::string print_state(const State& s);
std::string print_label(const ActionLabel& l);
std::string print_session_type(const SessionType& t);

} // namespace chorcheck

#endif
