#ifndef CHORCHECK_LABEL_HPP
#define CHORCHECK_LABEL_HPP

#include <variant>

#include "chorcheck/names.hpp"

namespace chorcheck {

struct InitLabel {
  Participant from, to;
  Name service; // shared channel
  Name channel; // session channel
  friend auto operator<=>(const InitLabel&, const InitLabel&) = default;
};

struct ComLabel {
  Participant from, to;
  Name channel;
  friend auto operator<=>(const ComLabel&, const ComLabel&) = default;
};

struct BranchLabel {
  Participant from, to;
  Name channel;
  Name label; // branch label
  friend auto operator<=>(const BranchLabel&, const BranchLabel&) = default;
};

/// Transition label: initiation, in-session communication, or branch
/// selection. Mirrors the shapes emitted by the operational rules.
using ActionLabel = std::variant<InitLabel, ComLabel, BranchLabel>;

} // namespace chorcheck

#endif
