#include "clw/action_semantics.hpp"

#include "clw/eval_walker.hpp"

namespace clw {

namespace {
StateSet box_action(const ActionModel& m, Coalition c, const StateSet& goal) {
  const CoalitionTable& t = m.table(c);
  StateSet r;
  for (StateId s = 0; s < m.carrier.n_states(); ++s) {
    const auto& av = t.available[s];
    const auto& out = t.outcome[s];
    for (std::size_t j = 0; j < av.size(); ++j) {
      if (av[j] && out[j].subset_of(goal)) {
        r.insert(s);
        break;
      }
    }
  }
  return r;
}
}  // namespace

StateSet sat_action(const ActionModel& m, const Formula& f) {
  return satisfying_states(m.carrier, f, [&](Coalition c, const StateSet& goal) {
    return box_action(m, c, goal);
  });
}

bool eval_action(const ActionModel& m, StateId s, const Formula& f) {
  m.carrier.check_state(s);
  return sat_action(m, f).contains(s);
}

bool valid_on_action(const ActionModel& m, const Formula& f) {
  return sat_action(m, f) == StateSet::full(m.carrier.n_states());
}

EffectivityTable actual_effectivity(const ActionModel& m) {
  EffectivityTable e;
  e.flavor = EffectivityTable::Flavor::Actual;
  int nc = m.carrier.agents.coalition_count();
  int ns = m.carrier.n_states();
  e.table.assign(nc, std::vector<SetFamily>(ns));
  for (int c = 0; c < nc; ++c) {
    const CoalitionTable& t = m.tables[c];
    for (StateId s = 0; s < ns; ++s)
      for (std::size_t j = 0; j < t.available[s].size(); ++j)
        if (t.available[s][j]) e.table[c][s].insert(t.outcome[s][j]);
  }
  return e;
}

SetFamily superset_closure_within(const SetFamily& family, int n_states) {
  if (n_states > kMaxAlphaStates)
    throw TooLarge("superset closure over more than " +
                   std::to_string(kMaxAlphaStates) + " states");
  SetFamily r;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_states); ++bits) {
    StateSet y = StateSet::from_word(bits);
    for (const auto& z : family.members())
      if (z.subset_of(y)) {
        r.insert(y);
        break;
      }
  }
  return r;
}

EffectivityTable alpha_effectivity(const ActionModel& m) {
  int ns = m.carrier.n_states();
  if (ns > kMaxAlphaStates)
    throw TooLarge("alpha effectivity over more than " +
                   std::to_string(kMaxAlphaStates) + " states");
  EffectivityTable e = actual_effectivity(m);
  e.flavor = EffectivityTable::Flavor::Alpha;
  for (auto& per_state : e.table)
    for (auto& fam : per_state) fam = superset_closure_within(fam, ns);
  return e;
}

}  // namespace clw
