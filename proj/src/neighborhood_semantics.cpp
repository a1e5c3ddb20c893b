#include "clw/neighborhood_semantics.hpp"

#include "clw/eval_walker.hpp"

namespace clw {

StateSet sat_neighborhood(const NeighborhoodModel& m, const Formula& f) {
  return satisfying_states(m.carrier, f, [&](Coalition c, const StateSet& goal) {
    StateSet r;
    for (StateId s = 0; s < m.carrier.n_states(); ++s)
      for (const auto& y : m.nei(c, s).members())
        if (y.subset_of(goal)) {
          r.insert(s);
          break;
        }
    return r;
  });
}

bool eval_neighborhood(const NeighborhoodModel& m, StateId s, const Formula& f) {
  m.carrier.check_state(s);
  return sat_neighborhood(m, f).contains(s);
}

bool valid_on_neighborhood(const NeighborhoodModel& m, const Formula& f) {
  return sat_neighborhood(m, f) == StateSet::full(m.carrier.n_states());
}

NeighborhoodModel superset_closure(const NeighborhoodModel& m) {
  int ns = m.carrier.n_states();
  if (ns > kMaxAlphaStates)
    throw TooLarge("superset closure over more than " +
                   std::to_string(kMaxAlphaStates) + " states");
  NeighborhoodModel r = m;
  for (auto& per_state : r.neighborhood)
    for (auto& fam : per_state) fam = superset_closure_within(fam, ns);
  return r;
}

bool is_alpha_model(const NeighborhoodModel& m) {
  // Closed under adding one state at a time iff closed under supersets.
  int ns = m.carrier.n_states();
  for (const auto& per_state : m.neighborhood)
    for (const auto& fam : per_state)
      for (const auto& y : fam.members())
        for (StateId t = 0; t < ns; ++t) {
          if (y.contains(t)) continue;
          StateSet bigger = y;
          bigger.insert(t);
          if (!fam.contains(bigger)) return false;
        }
  return true;
}

namespace {
std::optional<RepresentationMismatch> table_mismatch(const NeighborhoodModel& nm,
                                                     const ActionModel& am,
                                                     const EffectivityTable& eff) {
  if (nm.carrier != am.carrier)
    throw CarrierMismatch("representation requires identical states, agents and labeling");
  int nc = nm.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c)
    for (StateId s = 0; s < nm.carrier.n_states(); ++s)
      if (eff.table[c][s] != nm.neighborhood[c][s])
        return RepresentationMismatch{Coalition::of_mask(c), s, eff.table[c][s],
                                      nm.neighborhood[c][s]};
  return std::nullopt;
}
}  // namespace

std::optional<RepresentationMismatch> z_mismatch(const NeighborhoodModel& nm,
                                                 const ActionModel& am) {
  return table_mismatch(nm, am, actual_effectivity(am));
}

bool z_represents(const NeighborhoodModel& nm, const ActionModel& am) {
  return !z_mismatch(nm, am).has_value();
}

std::optional<RepresentationMismatch> alpha_mismatch(const NeighborhoodModel& nm,
                                                     const ActionModel& am) {
  return table_mismatch(nm, am, alpha_effectivity(am));
}

bool alpha_represents(const NeighborhoodModel& nm, const ActionModel& am) {
  return !alpha_mismatch(nm, am).has_value();
}

NeighborhoodModel effectivity_as_neighborhood(const Carrier& carrier,
                                              const EffectivityTable& table) {
  NeighborhoodModel m = make_neighborhood_model(carrier);
  m.neighborhood = table.table;
  return m;
}

}  // namespace clw
