#ifndef CHORCHECK_CHECKER_HPP
#define CHORCHECK_CHECKER_HPP

#include <optional>
#include <string>
#include <vector>

#include "chorcheck/core_ops.hpp"
#include "chorcheck/errors.hpp"
#include "chorcheck/formula.hpp"
#include "chorcheck/semantics.hpp"

namespace chorcheck {

/// One applied proof rule with the choice it committed to.
struct ProofStep {
  std::string rule;
  std::string note;
  std::vector<ProofStep> children;
};

struct Verdict {
  bool holds = false;
  std::optional<ProofStep> witness;
};

struct CheckOptions {
  bool record_witness = false;
  Deadline deadline = {};
};

/// Rewrite every derived operator into the eight core constructors.
/// Quantifier names introduced by the label-existential expansions are
/// chosen fresh for the body.
Formula expand_derived(const Formula& f);

/// Witness candidates for a quantifier: names of the sort free in the
/// term or the formula body; for the expression sort, every value in
/// the state plus every literal in term or formula; for the session
/// channel sort, additionally one canonical fresh symbol so the
/// quantifier can name channels created by later initiations.
std::vector<Witness> quantifier_domain(const Configuration& cfg, const Formula& body,
                                       QuantSort sort);

/// Configurations a may-formula can continue at: every reachable
/// configuration, under every legal renaming of session channels born
/// along the path onto channels the continuation formula mentions.
std::vector<Configuration> may_candidates(const Configuration& cfg, const Formula& cont,
                                          const Deadline& deadline = {});

/// Proof search over the derivation rules. Requires a recursion-free
/// term (throws RecursionError). Total on that fragment; negation is
/// decided by failure of the subproof.
Verdict entails(const Configuration& cfg, const Formula& f, const CheckOptions& opts = {});

/// Direct evaluation of the satisfaction relation, independent of the
/// proof search; serves as its oracle. Requires a recursion-free term
/// and a core-only formula.
bool satisfies_naive(const Configuration& cfg, const Formula& f);

/// Re-derive a verdict from a recorded witness by re-taking its
/// choices. Returns false if any recorded step no longer validates.
bool replay_witness(const Configuration& cfg, const Formula& f, const ProofStep& w);

} // namespace chorcheck

#endif
