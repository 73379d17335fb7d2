#ifndef CHORCHECK_TRACE_JSON_HPP
#define CHORCHECK_TRACE_JSON_HPP

#include "json.hpp"

#include "chorcheck/checker.hpp"
#include "chorcheck/pcp.hpp"
#include "chorcheck/semantics.hpp"

namespace chorcheck {

// JSON rendering of the machine-readable records (docs/trace.md).

nlohmann::json value_json(const Value& v);
nlohmann::json state_json(const State& s);
nlohmann::json label_json(const ActionLabel& l);

/// {label, state_delta, chor}; the delta lists bindings the step wrote.
nlohmann::json step_json(const Configuration& before, const Transition& t);

nlohmann::json verdict_json(const Verdict& v);
nlohmann::json proof_json(const ProofStep& p);
nlohmann::json pcp_result_json(const PcpSearchResult& r);

} // namespace chorcheck

#endif
