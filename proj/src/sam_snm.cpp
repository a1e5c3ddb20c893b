#include "clw/sam_snm.hpp"

namespace clw {

SingleFirstActionModel make_sam(Carrier carrier, ActionUniverse actions) {
  SingleFirstActionModel m{std::move(carrier), std::move(actions), {}, {}};
  int ns = m.carrier.n_states();
  m.successor.assign(ns, StateSet{});
  m.outcome_agent.assign(m.carrier.agents.size(),
                         std::vector<std::vector<StateSet>>(
                             ns, std::vector<StateSet>(m.actions.size())));
  return m;
}

void SingleFirstActionModel::validate() const {
  int ns = carrier.n_states();
  int na = carrier.agents.size();
  if (static_cast<int>(successor.size()) != ns ||
      static_cast<int>(outcome_agent.size()) != na)
    throw Error("single-coalition-first action model: dimension mismatch");
  StateSet univ = StateSet::full(ns);
  for (int a = 0; a < na; ++a) {
    if (static_cast<int>(outcome_agent[a].size()) != ns)
      throw Error("single-coalition-first action model: dimension mismatch");
    for (StateId s = 0; s < ns; ++s) {
      if (static_cast<int>(outcome_agent[a][s].size()) != actions.size())
        throw Error("single-coalition-first action model: dimension mismatch");
      StateSet u;
      for (const auto& o : outcome_agent[a][s]) {
        if (!o.subset_of(univ)) throw UnknownState("outcome outside the state set");
        u.unite_in(o);
      }
      if (u != successor[s])
        throw Error("agent '" + carrier.agents.name(a) + "' at state '" +
                    carrier.states[s] +
                    "': action outcomes are not a general cover of suc");
    }
  }
}

std::vector<std::vector<StateSet>> sam_derive_outcome(const SingleFirstActionModel& m,
                                                      Coalition c) {
  int ns = m.carrier.n_states();
  int nac = m.actions.size();
  int nja = ja_count(c, nac);
  std::vector<std::vector<StateSet>> out(ns, std::vector<StateSet>(nja));
  for (StateId s = 0; s < ns; ++s) {
    for (int j = 0; j < nja; ++j) {
      if (c.empty()) {
        out[s][j] = m.successor[s];
        continue;
      }
      bool first = true;
      StateSet acc;
      c.for_each([&](int a) {
        const StateSet& oa = m.outcome_agent[a][s][ja_digit(c, j, a, nac)];
        if (first) {
          acc = oa;
          first = false;
        } else {
          acc = acc.intersected(oa);
        }
      });
      out[s][j] = acc;
    }
  }
  return out;
}

std::vector<std::vector<char>> sam_derive_availability(const SingleFirstActionModel& m,
                                                       Coalition c) {
  auto out = sam_derive_outcome(m, c);
  std::vector<std::vector<char>> av(out.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    av[s].resize(out[s].size());
    for (std::size_t j = 0; j < out[s].size(); ++j) av[s][j] = !out[s][j].empty();
  }
  return av;
}

GrandFirstActionModel sam_to_gam(const SingleFirstActionModel& m) {
  GrandFirstActionModel g = make_gam(m.carrier, m.actions);
  g.outcome_grand = sam_derive_outcome(m, m.carrier.agents.grand());
  return g;
}

ActionModel sam_to_action_model(const SingleFirstActionModel& m) {
  ActionModel am = make_action_model(m.carrier, m.actions);
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c) {
    Coalition co = Coalition::of_mask(c);
    am.tables[c].outcome = sam_derive_outcome(m, co);
    for (std::size_t s = 0; s < am.tables[c].outcome.size(); ++s)
      for (std::size_t j = 0; j < am.tables[c].outcome[s].size(); ++j)
        am.tables[c].available[s][j] = !am.tables[c].outcome[s][j].empty();
  }
  return am;
}

// --- the three condition sets -------------------------------------------
//
// Each predicate is written from its own statement; none is derived from
// the others, so the suite checking their agreement is a genuine
// three-way cross-check.

namespace {

// set 1: (a) for every agent, the outcome image covers out_{}(s);
//        (b) nonempty-coalition outcomes are member intersections.
bool condition_set_1(const ActionModel& m, StateId s) {
  int n = m.carrier.agents.size();
  int nac = m.actions.size();
  const StateSet& out_empty = m.tables[0].outcome[s][0];
  for (int a = 0; a < n; ++a) {
    Coalition ca = Coalition::of_mask(1u << a);
    StateSet u;
    for (int k = 0; k < nac; ++k) u.unite_in(m.table(ca).outcome[s][k]);
    if (u != out_empty) return false;
  }
  int nc = m.carrier.agents.coalition_count();
  for (int c = 1; c < nc; ++c) {
    Coalition co = Coalition::of_mask(c);
    int nja = ja_count(co, nac);
    for (int j = 0; j < nja; ++j) {
      bool first = true;
      StateSet expected;
      co.for_each([&](int a) {
        const StateSet& oa =
            m.tables[1u << a].outcome[s][ja_digit(co, j, a, nac)];
        if (first) {
          expected = oa;
          first = false;
        } else {
          expected = expected.intersected(oa);
        }
      });
      if (m.tables[c].outcome[s][j] != expected) return false;
    }
  }
  return true;
}

// set 2: (a) as in set 1; (b) disjoint unions compose by intersection.
bool condition_set_2(const ActionModel& m, StateId s) {
  int n = m.carrier.agents.size();
  int nac = m.actions.size();
  const StateSet& out_empty = m.tables[0].outcome[s][0];
  for (int a = 0; a < n; ++a) {
    StateSet u;
    for (int k = 0; k < nac; ++k) u.unite_in(m.tables[1u << a].outcome[s][k]);
    if (u != out_empty) return false;
  }
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c)
    for (int d = 0; d < nc; ++d) {
      if (c & d) continue;
      Coalition co = Coalition::of_mask(c), dp = Coalition::of_mask(d);
      int njc = ja_count(co, nac), njd = ja_count(dp, nac);
      int u = c | d;
      for (int jc = 0; jc < njc; ++jc)
        for (int jd = 0; jd < njd; ++jd) {
          int ju = ja_union_index(co, jc, dp, jd, nac);
          StateSet expected =
              m.tables[c].outcome[s][jc].intersected(m.tables[d].outcome[s][jd]);
          if (m.tables[u].outcome[s][ju] != expected) return false;
        }
    }
  return true;
}

// set 3: (a) every coalition outcome is the union of the extending
//        grand-coalition outcomes; (b) fusion closure.
bool condition_set_3(const ActionModel& m, StateId s) {
  int nac = m.actions.size();
  Coalition ag = m.carrier.agents.grand();
  int np = ja_count(ag, nac);
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c) {
    Coalition co = Coalition::of_mask(c);
    int nja = ja_count(co, nac);
    for (int j = 0; j < nja; ++j) {
      StateSet expected;
      for (int p = 0; p < np; ++p)
        if (ja_extends(ag, p, co, j, nac)) expected.unite_in(m.tables[ag.mask].outcome[s][p]);
      if (m.tables[c].outcome[s][j] != expected) return false;
    }
  }
  for (int c = 0; c < nc; ++c) {
    Coalition co = Coalition::of_mask(c);
    int k = co.size();
    int nja = ja_count(co, nac);
    for (int j1 = 0; j1 < nja; ++j1)
      for (int j2 = 0; j2 < nja; ++j2) {
        StateSet both = m.tables[c].outcome[s][j1].intersected(m.tables[c].outcome[s][j2]);
        if (both.empty()) continue;
        for (int pick = 0; pick < (1 << k); ++pick) {
          // fusion: member i takes its action from j2 iff bit i of pick
          int jf = 0;
          int i = 0;
          co.for_each([&](int a) {
            int digit = ((pick >> i) & 1) ? ja_digit(co, j2, a, nac)
                                          : ja_digit(co, j1, a, nac);
            jf = jf * nac + digit;
            ++i;
          });
          if (!both.subset_of(m.tables[c].outcome[s][jf])) return false;
        }
      }
  }
  return true;
}

}  // namespace

bool check_condition_set(const ActionModel& m, StateId s, int which) {
  m.carrier.check_state(s);
  switch (which) {
    case 1:
      return condition_set_1(m, s);
    case 2:
      return condition_set_2(m, s);
    case 3:
      return condition_set_3(m, s);
    default:
      throw Error("condition set must be 1, 2 or 3");
  }
}

SetFamily odot(const SetFamily& d1, const SetFamily& d2) {
  if (d1.contains_empty_set() || d2.contains_empty_set())
    throw EmptySetMember("odot is defined over families of nonempty sets");
  SetFamily r;
  for (const auto& y1 : d1.members())
    for (const auto& y2 : d2.members()) {
      StateSet y = y1.intersected(y2);
      if (!y.empty()) r.insert(std::move(y));
    }
  return r;
}

SetFamily odot_all(const std::vector<SetFamily>& families) {
  if (families.empty()) throw Error("odot over an empty index family");
  SetFamily acc = families[0];
  if (acc.contains_empty_set())
    throw EmptySetMember("odot is defined over families of nonempty sets");
  for (std::size_t i = 1; i < families.size(); ++i) acc = odot(acc, families[i]);
  return acc;
}

SingleFirstNeighborhoodModel make_snm(Carrier carrier) {
  SingleFirstNeighborhoodModel m{std::move(carrier), {}, {}};
  m.successor.assign(m.carrier.n_states(), StateSet{});
  m.neighborhood_agent.assign(m.carrier.agents.size(),
                              std::vector<SetFamily>(m.carrier.n_states()));
  return m;
}

void SingleFirstNeighborhoodModel::validate() const {
  int ns = carrier.n_states();
  int na = carrier.agents.size();
  if (static_cast<int>(successor.size()) != ns ||
      static_cast<int>(neighborhood_agent.size()) != na)
    throw Error("single-coalition-first neighborhood model: dimension mismatch");
  for (int a = 0; a < na; ++a) {
    if (static_cast<int>(neighborhood_agent[a].size()) != ns)
      throw Error("single-coalition-first neighborhood model: dimension mismatch");
    for (StateId s = 0; s < ns; ++s) {
      const SetFamily& fam = neighborhood_agent[a][s];
      if (fam.contains_empty_set())
        throw Error("agent '" + carrier.agents.name(a) + "' at state '" +
                    carrier.states[s] + "': neighborhood contains the empty set");
      if (fam.union_all() != successor[s])
        throw Error("agent '" + carrier.agents.name(a) + "' at state '" +
                    carrier.states[s] + "': neighborhood is not a cover of suc");
    }
  }
}

SetFamily snm_derive_neighborhood_at(const SingleFirstNeighborhoodModel& m, Coalition c,
                                     StateId s) {
  if (m.successor[s].empty()) return SetFamily{};
  if (c.empty()) {
    SetFamily f;
    f.insert(m.successor[s]);
    return f;
  }
  std::vector<SetFamily> fams;
  c.for_each([&](int a) { fams.push_back(m.neighborhood_agent[a][s]); });
  return odot_all(fams);
}

std::vector<SetFamily> snm_derive_neighborhood(const SingleFirstNeighborhoodModel& m,
                                               Coalition c) {
  std::vector<SetFamily> r(m.carrier.n_states());
  for (StateId s = 0; s < m.carrier.n_states(); ++s)
    r[s] = snm_derive_neighborhood_at(m, c, s);
  return r;
}

NeighborhoodModel snm_to_neighborhood_model(const SingleFirstNeighborhoodModel& m) {
  NeighborhoodModel nm = make_neighborhood_model(m.carrier);
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c)
    nm.neighborhood[c] = snm_derive_neighborhood(m, Coalition::of_mask(c));
  return nm;
}

bool snm_is_serial(const SingleFirstNeighborhoodModel& m) {
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c)
    for (StateId s = 0; s < m.carrier.n_states(); ++s)
      if (snm_derive_neighborhood_at(m, Coalition::of_mask(c), s).empty()) return false;
  return true;
}

bool snm_is_independent(const SingleFirstNeighborhoodModel& m) {
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c)
    for (int d = 0; d < nc; ++d) {
      if (c & d) continue;
      for (StateId s = 0; s < m.carrier.n_states(); ++s) {
        SetFamily fc = snm_derive_neighborhood_at(m, Coalition::of_mask(c), s);
        SetFamily fd = snm_derive_neighborhood_at(m, Coalition::of_mask(d), s);
        for (const auto& y1 : fc.members())
          for (const auto& y2 : fd.members())
            if (!y1.intersects(y2)) return false;
      }
    }
  return true;
}

bool snm_is_deterministic(const SingleFirstNeighborhoodModel& m) {
  Coalition ag = m.carrier.agents.grand();
  for (StateId s = 0; s < m.carrier.n_states(); ++s) {
    SetFamily fam = snm_derive_neighborhood_at(m, ag, s);
    for (const auto& y : fam.members())
      if (!y.is_singleton()) return false;
  }
  return true;
}

PropertySignature snm_classify(const SingleFirstNeighborhoodModel& m) {
  return PropertySignature{snm_is_serial(m), snm_is_independent(m),
                           snm_is_deterministic(m)};
}

}  // namespace clw
