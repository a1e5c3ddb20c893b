#include "clw/represent.hpp"

namespace clw {

SingleFirstNeighborhoodModel sam_to_snm(const SingleFirstActionModel& m) {
  SingleFirstNeighborhoodModel r = make_snm(m.carrier);
  r.successor = m.successor;
  for (int a = 0; a < m.carrier.agents.size(); ++a)
    for (StateId s = 0; s < m.carrier.n_states(); ++s)
      for (const auto& o : m.outcome_agent[a][s])
        if (!o.empty()) r.neighborhood_agent[a][s].insert(o);
  r.validate();
  return r;
}

namespace {
std::string member_action_name(const std::string& agent, const std::string& state,
                               const StateSet& x, const Carrier& carrier) {
  std::string n = agent + "@" + state + "@{";
  bool first = true;
  x.for_each([&](StateId t) {
    if (!first) n += ',';
    n += carrier.states[t];
    first = false;
  });
  return n + "}";
}
}  // namespace

SingleFirstActionModel snm_to_sam(const SingleFirstNeighborhoodModel& m) {
  const Carrier& car = m.carrier;
  struct NamedAction {
    int agent;
    StateId state;
    StateSet x;
  };
  std::vector<NamedAction> acts;
  std::vector<std::string> names;
  for (int a = 0; a < car.agents.size(); ++a)
    for (StateId s = 0; s < car.n_states(); ++s)
      for (const auto& x : m.neighborhood_agent[a][s].members()) {
        acts.push_back({a, s, x});
        names.push_back(member_action_name(car.agents.name(a), car.states[s], x, car));
      }
  if (acts.empty()) names.push_back("noop");  // keep the action universe nonempty

  SingleFirstActionModel r = make_sam(car, ActionUniverse(names));
  r.successor = m.successor;
  for (std::size_t k = 0; k < acts.size(); ++k)
    r.outcome_agent[acts[k].agent][acts[k].state][k] = acts[k].x;
  r.validate();
  return r;
}

SingleFirstActionModel gam_to_sam(const GrandFirstActionModel& g) {
  SingleFirstActionModel r = make_sam(g.carrier, g.actions);
  r.successor = successor_map(g);
  for (int a = 0; a < g.carrier.agents.size(); ++a) {
    auto out = derive_outcome(g, Coalition::of_mask(1u << a));
    for (StateId s = 0; s < g.carrier.n_states(); ++s) r.outcome_agent[a][s] = out[s];
  }
  r.validate();
  return r;
}

UnravelResult unravel(const GrandFirstActionModel& g, StateId from, int depth) {
  g.carrier.check_state(from);
  if (depth < 0) throw Error("unravel depth must be nonnegative");

  const int nac = g.actions.size();
  const Coalition ag = g.carrier.agents.grand();
  const int np = ja_count(ag, nac);
  constexpr int kMaxPathStates = 200000;

  struct Path {
    StateId last;
    std::string name;
  };
  std::vector<Path> paths{{from, g.carrier.states[from]}};
  std::vector<std::vector<StateSet>> out;  // per path state, per profile
  std::vector<std::pair<int, int>> level_range{{0, 1}};  // [begin, end) per level

  for (int lvl = 0; lvl < depth; ++lvl) {
    auto [begin, end] = level_range.back();
    if (begin == end) break;  // nothing left to expand
    out.resize(end, std::vector<StateSet>(np));
    int next_begin = static_cast<int>(paths.size());
    for (int id = begin; id < end; ++id) {
      for (int p = 0; p < np; ++p) {
        g.outcome_grand[paths[id].last][p].for_each([&](StateId u) {
          if (static_cast<int>(paths.size()) >= kMaxPathStates)
            throw BoundsExceeded("unraveling exceeds the path-state cap");
          int nid = static_cast<int>(paths.size());
          std::string name = paths[id].name + "/(" +
                             joint_action_key(ja_from_index(ag, p, nac),
                                              g.carrier.agents, g.actions) +
                             ")/" + g.carrier.states[u];
          paths.push_back({u, std::move(name)});
          out[id][p].insert(nid);
        });
      }
    }
    level_range.emplace_back(next_begin, static_cast<int>(paths.size()));
  }
  out.resize(paths.size(), std::vector<StateSet>(np));  // frontier rows stay empty

  std::vector<std::string> state_names;
  state_names.reserve(paths.size());
  for (const auto& p : paths) state_names.push_back(p.name);

  Carrier carrier = make_carrier(std::move(state_names), g.carrier.agents.names());
  for (std::size_t id = 0; id < paths.size(); ++id)
    for (const auto& atom : g.carrier.labeling.atoms(paths[id].last))
      carrier.labeling.add(static_cast<StateId>(id), atom);

  UnravelResult r{make_gam(std::move(carrier), g.actions), 0, StateSet{}, {}};
  r.model.outcome_grand = std::move(out);
  // The last recorded level was never expanded; everything before it was.
  int frontier_begin = level_range.back().first;
  for (int id = 0; id < frontier_begin; ++id) r.interior.insert(id);
  r.last_of.reserve(paths.size());
  for (const auto& p : paths) r.last_of.push_back(p.last);
  return r;
}

}  // namespace clw
