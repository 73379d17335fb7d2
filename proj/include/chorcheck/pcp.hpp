#ifndef CHORCHECK_PCP_HPP
#define CHORCHECK_PCP_HPP

#include <optional>
#include <string>
#include <vector>

#include "chorcheck/errors.hpp"
#include "chorcheck/formula.hpp"
#include "chorcheck/semantics.hpp"

namespace chorcheck {

/// A correspondence instance: pairs of words over {0, 1}.
class PcpInstance {
public:
  /// Throws std::invalid_argument on an empty list or characters
  /// outside the alphabet.
  explicit PcpInstance(std::vector<std::pair<std::string, std::string>> pairs);

  const std::vector<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }
  int size() const { return static_cast<int>(pairs_.size()); }

private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

/// The instance as a configuration: n writer threads racing to pick a
/// pair index in parallel with one appender thread, over the standard
/// five-binding initial state.
Configuration encode_pcp(const PcpInstance& inst);

/// Eventually the two accumulated words are equal and non-empty.
Formula pcp_formula();

struct PcpSolution {
  int depth = 0;
  std::vector<ActionLabel> trace;
  std::vector<int> indices; // pair indices in append order, 1-based
  std::string word;         // the common word
  Configuration final_config;
};

struct PcpSearchResult {
  std::optional<PcpSolution> solution;
  int depth_explored = 0;
  std::size_t configurations_seen = 0;
};

/// Bounded breadth-first search for a configuration whose state
/// satisfies the body of pcp_formula(). Finding nothing at this depth
/// proves nothing. The returned trace is the lexicographically least
/// among minimal-depth solutions.
PcpSearchResult bounded_search(const PcpInstance& inst, int depth,
                               const Deadline& deadline = {});

} // namespace chorcheck

#endif
