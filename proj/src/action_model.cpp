#include "clw/action_model.hpp"

namespace clw {

ActionModel make_action_model(Carrier carrier, ActionUniverse actions) {
  ActionModel m{std::move(carrier), std::move(actions), {}};
  int nc = m.carrier.agents.coalition_count();
  int ns = m.carrier.n_states();
  m.tables.resize(nc);
  for (int c = 0; c < nc; ++c) {
    int nja = ja_count(Coalition::of_mask(c), m.actions.size());
    m.tables[c].available.assign(ns, std::vector<char>(nja, 0));
    m.tables[c].outcome.assign(ns, std::vector<StateSet>(nja));
  }
  return m;
}

void ActionModel::validate() const {
  int nc = carrier.agents.coalition_count();
  int ns = carrier.n_states();
  if (static_cast<int>(tables.size()) != nc) throw Error("table count mismatch");
  StateSet univ = StateSet::full(ns);
  for (int c = 0; c < nc; ++c) {
    int nja = ja_count(Coalition::of_mask(c), actions.size());
    const auto& t = tables[c];
    if (static_cast<int>(t.available.size()) != ns ||
        static_cast<int>(t.outcome.size()) != ns)
      throw Error("table state dimension mismatch");
    for (int s = 0; s < ns; ++s) {
      if (static_cast<int>(t.available[s].size()) != nja ||
          static_cast<int>(t.outcome[s].size()) != nja)
        throw Error("table joint-action dimension mismatch");
      for (const auto& o : t.outcome[s])
        if (!o.subset_of(univ)) throw UnknownState("outcome outside the state set");
    }
  }
}

NeighborhoodModel make_neighborhood_model(Carrier carrier) {
  NeighborhoodModel m{std::move(carrier), {}};
  m.neighborhood.assign(m.carrier.agents.coalition_count(),
                        std::vector<SetFamily>(m.carrier.n_states()));
  return m;
}

void NeighborhoodModel::validate() const {
  int nc = carrier.agents.coalition_count();
  int ns = carrier.n_states();
  if (static_cast<int>(neighborhood.size()) != nc)
    throw Error("neighborhood coalition dimension mismatch");
  StateSet univ = StateSet::full(ns);
  for (int c = 0; c < nc; ++c) {
    if (static_cast<int>(neighborhood[c].size()) != ns)
      throw Error("neighborhood state dimension mismatch");
    for (int s = 0; s < ns; ++s)
      for (const auto& y : neighborhood[c][s].members())
        if (!y.subset_of(univ)) throw UnknownState("neighborhood member outside the state set");
  }
}

}  // namespace clw
