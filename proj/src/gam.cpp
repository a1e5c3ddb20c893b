#include "clw/gam.hpp"

#include "clw/action_semantics.hpp"

namespace clw {

GrandFirstActionModel make_gam(Carrier carrier, ActionUniverse actions) {
  GrandFirstActionModel g{std::move(carrier), std::move(actions), {}};
  int np = ja_count(g.carrier.agents.grand(), g.actions.size());
  g.outcome_grand.assign(g.carrier.n_states(), std::vector<StateSet>(np));
  return g;
}

void GrandFirstActionModel::validate() const {
  int np = ja_count(carrier.agents.grand(), actions.size());
  if (static_cast<int>(outcome_grand.size()) != carrier.n_states())
    throw Error("outcome_grand state dimension mismatch");
  StateSet univ = StateSet::full(carrier.n_states());
  for (const auto& row : outcome_grand) {
    if (static_cast<int>(row.size()) != np)
      throw Error("outcome_grand profile dimension mismatch");
    for (const auto& o : row)
      if (!o.subset_of(univ)) throw UnknownState("outcome outside the state set");
  }
}

std::vector<std::vector<StateSet>> derive_outcome(const GrandFirstActionModel& g,
                                                  Coalition c) {
  Coalition ag = g.carrier.agents.grand();
  int nac = g.actions.size();
  int np = ja_count(ag, nac);
  int nja = ja_count(c, nac);
  int ns = g.carrier.n_states();

  // bucket profiles by their restriction to c
  std::vector<std::vector<int>> extensions(nja);
  for (int p = 0; p < np; ++p)
    extensions[ja_restrict_index(ag, p, c, nac)].push_back(p);

  std::vector<std::vector<StateSet>> out(ns, std::vector<StateSet>(nja));
  for (StateId s = 0; s < ns; ++s)
    for (int j = 0; j < nja; ++j)
      for (int p : extensions[j]) out[s][j].unite_in(g.outcome_grand[s][p]);
  return out;
}

std::vector<std::vector<char>> derive_availability(const GrandFirstActionModel& g,
                                                   Coalition c) {
  auto out = derive_outcome(g, c);
  std::vector<std::vector<char>> av(out.size());
  for (std::size_t s = 0; s < out.size(); ++s) {
    av[s].resize(out[s].size());
    for (std::size_t j = 0; j < out[s].size(); ++j) av[s][j] = !out[s][j].empty();
  }
  return av;
}

std::vector<StateSet> successor_map(const GrandFirstActionModel& g) {
  std::vector<StateSet> suc(g.carrier.n_states());
  for (StateId s = 0; s < g.carrier.n_states(); ++s)
    for (const auto& o : g.outcome_grand[s]) suc[s].unite_in(o);
  return suc;
}

ActionModel to_action_model(const GrandFirstActionModel& g) {
  ActionModel m = make_action_model(g.carrier, g.actions);
  int nc = g.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c) {
    Coalition co = Coalition::of_mask(c);
    m.tables[c].outcome = derive_outcome(g, co);
    for (std::size_t s = 0; s < m.tables[c].outcome.size(); ++s)
      for (std::size_t j = 0; j < m.tables[c].outcome[s].size(); ++j)
        m.tables[c].available[s][j] = !m.tables[c].outcome[s][j].empty();
  }
  return m;
}

bool eval_gam(const GrandFirstActionModel& g, StateId s, const Formula& f) {
  return eval_action(to_action_model(g), s, f);
}

namespace {
bool state_selected(const std::optional<StateSet>& only, StateId s) {
  return !only || only->contains(s);
}
}  // namespace

bool is_serial(const ActionModel& m, const std::optional<StateSet>& only) {
  int nc = m.carrier.agents.coalition_count();
  for (int c = 0; c < nc; ++c)
    for (StateId s = 0; s < m.carrier.n_states(); ++s) {
      if (!state_selected(only, s)) continue;
      const auto& av = m.tables[c].available[s];
      bool any = false;
      for (char a : av) any = any || a;
      if (!any) return false;
    }
  return true;
}

bool is_independent(const ActionModel& m, const std::optional<StateSet>& only) {
  int nc = m.carrier.agents.coalition_count();
  int nac = m.actions.size();
  for (int c = 0; c < nc; ++c)
    for (int d = 0; d < nc; ++d) {
      if (c & d) continue;
      Coalition co = Coalition::of_mask(c), dp = Coalition::of_mask(d);
      Coalition u = co.united(dp);
      int njc = ja_count(co, nac), njd = ja_count(dp, nac);
      for (StateId s = 0; s < m.carrier.n_states(); ++s) {
        if (!state_selected(only, s)) continue;
        for (int jc = 0; jc < njc; ++jc) {
          if (!m.tables[c].available[s][jc]) continue;
          for (int jd = 0; jd < njd; ++jd) {
            if (!m.tables[d].available[s][jd]) continue;
            int ju = ja_union_index(co, jc, dp, jd, nac);
            if (!m.tables[u.mask].available[s][ju]) return false;
          }
        }
      }
    }
  return true;
}

bool is_deterministic(const ActionModel& m, const std::optional<StateSet>& only) {
  Coalition ag = m.carrier.agents.grand();
  const CoalitionTable& t = m.table(ag);
  for (StateId s = 0; s < m.carrier.n_states(); ++s) {
    if (!state_selected(only, s)) continue;
    for (std::size_t j = 0; j < t.available[s].size(); ++j)
      if (t.available[s][j] && !t.outcome[s][j].is_singleton()) return false;
  }
  return true;
}

PropertySignature signature_of(const ActionModel& m, const std::optional<StateSet>& only) {
  return PropertySignature{is_serial(m, only), is_independent(m, only),
                           is_deterministic(m, only)};
}

bool gam_is_serial(const GrandFirstActionModel& g) { return is_serial(to_action_model(g)); }
bool gam_is_independent(const GrandFirstActionModel& g) {
  return is_independent(to_action_model(g));
}
bool gam_is_deterministic(const GrandFirstActionModel& g) {
  return is_deterministic(to_action_model(g));
}

PropertySignature classify(const GrandFirstActionModel& g) {
  return signature_of(to_action_model(g));
}

}  // namespace clw
