#include <algorithm>

#include "chorcheck/checker.hpp"
#include "chorcheck/print.hpp"

namespace chorcheck {

namespace {

NameSort name_sort_of(QuantSort sort) {
  switch (sort) {
    case QuantSort::Participant: return NameSort::ParticipantName;
    case QuantSort::SharedChannel: return NameSort::SharedChannel;
    case QuantSort::SessionChannel: return NameSort::SessionChannel;
    case QuantSort::BranchLabel: return NameSort::BranchLabel;
    case QuantSort::Expr: return NameSort::Variable;
  }
  return NameSort::Variable;
}

} // namespace

std::vector<Witness> quantifier_domain(const Configuration& cfg, const Formula& body,
                                       QuantSort sort) {
  NameSet names = free_names(cfg.chor);
  NameSet from_formula = free_names_formula(body);
  names.insert(from_formula.begin(), from_formula.end());

  std::vector<Witness> out;
  if (sort == QuantSort::Expr) {
    std::set<Value> values;
    for (const Value& v : cfg.state.values()) values.insert(v);
    std::set<Value> lits = literals(cfg.chor);
    values.insert(lits.begin(), lits.end());
    lits = literals_formula(body);
    values.insert(lits.begin(), lits.end());
    for (const Value& v : values) out.push_back(Witness::value(v));
    return out;
  }

  NameSort wanted = name_sort_of(sort);
  std::set<std::string> ids;
  for (const Name& n : names)
    if (n.sort() == wanted) ids.insert(n.id());
  for (const std::string& id : ids) out.push_back(Witness::ident(id));

  if (sort == QuantSort::SessionChannel) {
    // One canonical fresh symbol: lets the quantifier name a channel
    // that only comes into existence at a later initiation.
    std::set<std::string> avoid = all_idents(cfg.chor);
    std::set<std::string> from_f = all_idents_formula(body);
    avoid.insert(from_f.begin(), from_f.end());
    out.push_back(Witness::ident(fresh_ident("k", avoid)));
  }
  return out;
}

std::vector<Configuration> may_candidates(const Configuration& cfg, const Formula& cont,
                                          const Deadline& deadline) {
  std::vector<Configuration> reached = reachable(cfg, std::nullopt, deadline);

  std::set<std::string> origin_free = free_session_channels(cfg.chor);
  std::vector<std::string> wanted;
  for (const Name& n : free_names_formula(cont))
    if (n.sort() == NameSort::SessionChannel && !origin_free.count(n.id()))
      wanted.push_back(n.id());
  std::sort(wanted.begin(), wanted.end());

  std::vector<Configuration> out;
  std::set<std::string> seen;
  auto push = [&](Configuration c) {
    if (seen.insert(configuration_key(c)).second) out.push_back(std::move(c));
  };

  for (const Configuration& reached_cfg : reached) {
    deadline.check("may-candidate enumeration");
    push(reached_cfg);
    if (wanted.empty()) continue;

    std::set<std::string> here = free_session_channels(reached_cfg.chor);
    std::vector<std::string> born;
    for (const std::string& ch : here)
      if (!origin_free.count(ch)) born.push_back(ch);
    if (born.empty()) continue;

    // Channels born along the path could have been given any name
    // fresh for the origin; offer every injective renaming onto the
    // channels the formula wants to talk about.
    std::vector<std::string> targets;
    for (const std::string& w : wanted)
      if (!here.count(w)) targets.push_back(w);
    if (targets.empty()) continue;

    std::vector<std::pair<std::string, std::string>> assignment;
    std::vector<bool> born_used(born.size(), false);
    auto enumerate = [&](auto&& self, std::size_t ti) -> void {
      if (ti == targets.size()) {
        if (assignment.empty()) return; // identity already pushed
        Configuration renamed = reached_cfg;
        for (const auto& [h, w] : assignment)
          renamed.chor = substitute_channel(renamed.chor, session_channel(h),
                                            session_channel(w));
        push(std::move(renamed));
        return;
      }
      self(self, ti + 1); // leave this target unnamed
      for (std::size_t bi = 0; bi < born.size(); ++bi) {
        if (born_used[bi]) continue;
        born_used[bi] = true;
        assignment.emplace_back(born[bi], targets[ti]);
        self(self, ti + 1);
        assignment.pop_back();
        born_used[bi] = false;
      }
    };
    enumerate(enumerate, 0);
  }
  return out;
}

} // namespace chorcheck
