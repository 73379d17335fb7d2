#ifndef CHORCHECK_PARSE_HPP
#define CHORCHECK_PARSE_HPP

#include <string>
#include <string_view>

#include "chorcheck/document.hpp"
#include "chorcheck/errors.hpp"

namespace chorcheck {

// All parsers throw ParseError (with a SourceSpan) on malformed input
// and never crash on arbitrary bytes. `file` only labels error spans.

Document parse_document(std::string_view text, const std::string& file = "<input>");

/// A single closed choreography term; unbound process variables are
/// rejected.
Choreography parse_choreography(std::string_view text, const std::string& file = "<input>");

Formula parse_formula(std::string_view text, const std::string& file = "<input>");

/// Comma-separated bindings "x@A = value"; duplicate (x, A) is an error.
State parse_state(std::string_view text, const std::string& file = "<input>");

SessionType parse_session_type(std::string_view text, const std::string& file = "<input>");

} // namespace chorcheck

#endif
