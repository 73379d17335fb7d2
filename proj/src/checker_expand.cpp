#include <stdexcept>

#include "chorcheck/checker.hpp"

namespace chorcheck {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

struct FreshNames {
  std::set<std::string> avoid;

  std::string take(const std::string& base) {
    std::string n = fresh_ident(base, avoid);
    avoid.insert(n);
    return n;
  }
};

// ∃l.<l>f: one disjunct per label shape, quantifying every component.
Formula label_existential(const Formula& body) {
  FreshNames fresh{all_idents_formula(body)};
  std::string pa = fresh.take("A");
  std::string pb = fresh.take("B");
  std::string sa = fresh.take("a");
  std::string sk = fresh.take("k");
  std::string sl = fresh.take("l");
  Participant from(pa), to(pb);
  Formula init_case = Formula::exists(
      pa, QuantSort::Participant,
      Formula::exists(
          pb, QuantSort::Participant,
          Formula::exists(
              sa, QuantSort::SharedChannel,
              Formula::exists(sk, QuantSort::SessionChannel,
                              Formula::action(InitLabel{from, to, shared_channel(sa),
                                                        session_channel(sk)},
                                              body)))));
  Formula com_case = Formula::exists(
      pa, QuantSort::Participant,
      Formula::exists(
          pb, QuantSort::Participant,
          Formula::exists(sk, QuantSort::SessionChannel,
                          Formula::action(ComLabel{from, to, session_channel(sk)},
                                          body))));
  Formula branch_case = Formula::exists(
      pa, QuantSort::Participant,
      Formula::exists(
          pb, QuantSort::Participant,
          Formula::exists(
              sk, QuantSort::SessionChannel,
              Formula::exists(sl, QuantSort::BranchLabel,
                              Formula::action(BranchLabel{from, to, session_channel(sk),
                                                          branch_label(sl)},
                                              body)))));
  return Formula::disj(init_case, Formula::disj(com_case, branch_case));
}

// interact(A, B) f: some interaction from A to B, with the channel
// (and label / service) existentially quantified.
Formula interact_expansion(const InteractF& i) {
  std::set<std::string> avoid = all_idents_formula(i.cont);
  avoid.insert(i.from.name());
  avoid.insert(i.to.name());
  FreshNames fresh{std::move(avoid)};
  std::string sa = fresh.take("a");
  std::string sk = fresh.take("k");
  std::string sl = fresh.take("l");
  Formula init_case = Formula::exists(
      sa, QuantSort::SharedChannel,
      Formula::exists(sk, QuantSort::SessionChannel,
                      Formula::action(InitLabel{i.from, i.to, shared_channel(sa),
                                                session_channel(sk)},
                                      i.cont)));
  Formula com_case = Formula::exists(
      sk, QuantSort::SessionChannel,
      Formula::action(ComLabel{i.from, i.to, session_channel(sk)}, i.cont));
  Formula branch_case = Formula::exists(
      sk, QuantSort::SessionChannel,
      Formula::exists(sl, QuantSort::BranchLabel,
                      Formula::action(BranchLabel{i.from, i.to, session_channel(sk),
                                                  branch_label(sl)},
                                      i.cont)));
  return Formula::disj(init_case, Formula::disj(com_case, branch_case));
}

} // namespace

Formula expand_derived(const Formula& f) {
  return std::visit(
      overloaded{
          [&](const ExistsF& e) {
            return Formula::exists(e.var, e.sort, expand_derived(e.body));
          },
          [&](const AndF& a) {
            return Formula::conj(expand_derived(a.lhs), expand_derived(a.rhs));
          },
          [&](const NegF& n) { return Formula::neg(expand_derived(n.body)); },
          [&](const ActionF& a) {
            return Formula::action(a.label, expand_derived(a.cont));
          },
          [&](const EndF&) { return f; },
          [&](const EqF&) { return f; },
          [&](const SpatialF& s) {
            return Formula::spatial(expand_derived(s.lhs), expand_derived(s.rhs));
          },
          [&](const MayF& m) { return Formula::may(expand_derived(m.body)); },
          [&](const TrueF&) {
            return Formula::eq(Expression::lit_int(0), Expression::lit_int(0));
          },
          [&](const FalseF&) {
            return Formula::eq(Expression::lit_int(0), Expression::lit_int(1));
          },
          [&](const OrF& o) {
            return Formula::neg(Formula::conj(Formula::neg(expand_derived(o.lhs)),
                                              Formula::neg(expand_derived(o.rhs))));
          },
          [&](const ImpliesF& i) {
            return expand_derived(Formula::disj(Formula::neg(i.lhs), i.rhs));
          },
          [&](const ForallF& e) {
            return Formula::neg(Formula::exists(e.var, e.sort,
                                                Formula::neg(expand_derived(e.body))));
          },
          [&](const BoxF& b) {
            return Formula::neg(Formula::may(Formula::neg(expand_derived(b.body))));
          },
          [&](const BoxActionF& b) {
            return Formula::neg(Formula::action(b.label,
                                                Formula::neg(expand_derived(b.cont))));
          },
          [&](const NextF& n) {
            return expand_derived(label_existential(expand_derived(n.body)));
          },
          [&](const ExistsLabelF& n) {
            return expand_derived(label_existential(expand_derived(n.body)));
          },
          [&](const InteractF& i) {
            InteractF expanded{i.from, i.to, expand_derived(i.cont)};
            return expand_derived(interact_expansion(expanded));
          },
      },
      f.node());
}

} // namespace chorcheck
