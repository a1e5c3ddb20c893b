#include "clw/clear_tree.hpp"

#include <deque>

namespace clw {

bool is_clear_gam(const GrandFirstActionModel& g) {
  for (const auto& row : g.outcome_grand)
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j)
        if (row[i].intersects(row[j])) return false;
  return true;
}

namespace {
bool rows_pairwise_disjoint(const std::vector<StateSet>& row) {
  for (std::size_t i = 0; i < row.size(); ++i)
    for (std::size_t j = i + 1; j < row.size(); ++j)
      if (row[i].intersects(row[j])) return false;
  return true;
}
}  // namespace

bool clear_condition(const GrandFirstActionModel& g, int which) {
  int n = g.carrier.agents.size();
  switch (which) {
    case 1: {
      for (int a = 0; a < n; ++a) {
        auto out = derive_outcome(g, Coalition::of_mask(1u << a));
        for (const auto& row : out)
          if (!rows_pairwise_disjoint(row)) return false;
      }
      return true;
    }
    case 2: {
      for (int c = 0; c < g.carrier.agents.coalition_count(); ++c) {
        auto out = derive_outcome(g, Coalition::of_mask(c));
        for (const auto& row : out)
          if (!rows_pairwise_disjoint(row)) return false;
      }
      return true;
    }
    case 3:
      for (const auto& row : g.outcome_grand)
        if (!rows_pairwise_disjoint(row)) return false;
      return true;
    default:
      throw Error("clearness condition must be 1, 2 or 3");
  }
}

bool is_general_partition(const SetFamily& family, const StateSet& ground) {
  if (family.union_all() != ground) return false;
  const auto& ms = family.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (ms[i].intersects(ms[j])) return false;
  return true;
}

bool is_partition(const SetFamily& family, const StateSet& ground) {
  return !family.contains_empty_set() && is_general_partition(family, ground);
}

bool is_clear_snm(const SingleFirstNeighborhoodModel& m) {
  for (int a = 0; a < m.carrier.agents.size(); ++a)
    for (StateId s = 0; s < m.carrier.n_states(); ++s)
      if (!is_partition(m.neighborhood_agent[a][s], m.successor[s])) return false;
  return true;
}

bool clear_snm_condition(const SingleFirstNeighborhoodModel& m, int which) {
  switch (which) {
    case 1:
      return is_clear_snm(m);
    case 2: {
      for (int c = 0; c < m.carrier.agents.coalition_count(); ++c)
        for (StateId s = 0; s < m.carrier.n_states(); ++s)
          if (!is_partition(snm_derive_neighborhood_at(m, Coalition::of_mask(c), s),
                            m.successor[s]))
            return false;
      return true;
    }
    default:
      throw Error("clearness condition must be 1 or 2");
  }
}

// --- histories -------------------------------------------------------------

std::vector<GamHistory> enumerate_gam_histories(const GrandFirstActionModel& g,
                                                Coalition c, StateId from, StateId to,
                                                int max_len) {
  g.carrier.check_state(from);
  g.carrier.check_state(to);
  auto out = derive_outcome(g, c);
  int nac = g.actions.size();
  int nja = ja_count(c, nac);

  std::vector<GamHistory> result;
  GamHistory cur;
  cur.from = from;
  // DFS over availability-respecting steps; availability here is derived,
  // so a step exists iff the outcome contains the next state.
  auto walk = [&](auto&& self, StateId at) -> void {
    if (at == to) result.push_back(cur);
    if (static_cast<int>(cur.steps.size()) >= max_len) return;
    for (int j = 0; j < nja; ++j) {
      const StateSet& o = out[at][j];
      o.for_each([&](StateId nxt) {
        cur.steps.emplace_back(ja_from_index(c, j, nac), nxt);
        self(self, nxt);
        cur.steps.pop_back();
      });
    }
  };
  walk(walk, from);
  return result;
}

std::vector<SnmHistory> enumerate_snm_histories(const SingleFirstNeighborhoodModel& m,
                                                Coalition c, StateId from, StateId to,
                                                int max_len) {
  m.carrier.check_state(from);
  m.carrier.check_state(to);
  std::vector<SetFamily> nei = snm_derive_neighborhood(m, c);

  std::vector<SnmHistory> result;
  SnmHistory cur;
  cur.from = from;
  auto walk = [&](auto&& self, StateId at) -> void {
    if (at == to) result.push_back(cur);
    if (static_cast<int>(cur.steps.size()) >= max_len) return;
    for (const auto& y : nei[at].members()) {
      y.for_each([&](StateId nxt) {
        cur.steps.emplace_back(y, nxt);
        self(self, nxt);
        cur.steps.pop_back();
      });
    }
  };
  walk(walk, from);
  return result;
}

// --- tree-likeness -----------------------------------------------------------

namespace {

// Labeled edge multiset of one coalition, reduced to what the arborescence
// check needs: per-state incoming edge counts and the plain successor
// relation.
struct EdgeSummary {
  std::vector<int> in_count;
  std::vector<StateSet> next;  // next[s] = states reachable in one step
};

EdgeSummary summarize(const std::vector<std::vector<StateSet>>& out, int n_states) {
  EdgeSummary e;
  e.in_count.assign(n_states, 0);
  e.next.assign(n_states, StateSet{});
  for (StateId s = 0; s < n_states; ++s)
    for (const auto& o : out[s])
      o.for_each([&](StateId t) {
        ++e.in_count[t];
        e.next[s].insert(t);
      });
  return e;
}

EdgeSummary summarize(const std::vector<SetFamily>& nei, int n_states) {
  EdgeSummary e;
  e.in_count.assign(n_states, 0);
  e.next.assign(n_states, StateSet{});
  for (StateId s = 0; s < n_states; ++s)
    for (const auto& y : nei[s].members())
      y.for_each([&](StateId t) {
        ++e.in_count[t];
        e.next[s].insert(t);
      });
  return e;
}

bool arborescence_at(const EdgeSummary& e, StateId r) {
  int n = static_cast<int>(e.in_count.size());
  if (e.in_count[r] != 0) return false;
  for (StateId s = 0; s < n; ++s)
    if (s != r && e.in_count[s] != 1) return false;
  // reachability
  StateSet seen = StateSet::single(r);
  std::deque<StateId> q{r};
  while (!q.empty()) {
    StateId s = q.front();
    q.pop_front();
    e.next[s].for_each([&](StateId t) {
      if (!seen.contains(t)) {
        seen.insert(t);
        q.push_back(t);
      }
    });
  }
  return seen == StateSet::full(n);
}

// The common-root search: candidates for which every provided edge summary
// is an arborescence.
std::optional<StateId> common_root(const std::vector<EdgeSummary>& summaries,
                                   int n_states) {
  for (StateId r = 0; r < n_states; ++r) {
    bool ok = true;
    for (const auto& e : summaries)
      if (!arborescence_at(e, r)) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<StateId> treelike_root_gam(const GrandFirstActionModel& g) {
  int ns = g.carrier.n_states();
  return common_root({summarize(g.outcome_grand, ns)}, ns);
}

bool tree_condition_gam(const GrandFirstActionModel& g, int which) {
  int ns = g.carrier.n_states();
  std::vector<EdgeSummary> summaries;
  switch (which) {
    case 1:
      for (int a = 0; a < g.carrier.agents.size(); ++a)
        summaries.push_back(summarize(derive_outcome(g, Coalition::of_mask(1u << a)), ns));
      break;
    case 2:
      for (int c = 0; c < g.carrier.agents.coalition_count(); ++c)
        summaries.push_back(summarize(derive_outcome(g, Coalition::of_mask(c)), ns));
      break;
    case 3:
      summaries.push_back(summarize(g.outcome_grand, ns));
      break;
    default:
      throw Error("tree condition must be 1, 2 or 3");
  }
  return common_root(summaries, ns).has_value();
}

bool is_clear_action(const ActionModel& m) {
  const CoalitionTable& t = m.table(m.carrier.agents.grand());
  for (const auto& row : t.outcome)
    if (!rows_pairwise_disjoint(row)) return false;
  return true;
}

std::optional<StateId> treelike_root_action(const ActionModel& m) {
  int ns = m.carrier.n_states();
  const CoalitionTable& t = m.table(m.carrier.agents.grand());
  EdgeSummary e;
  e.in_count.assign(ns, 0);
  e.next.assign(ns, StateSet{});
  for (StateId s = 0; s < ns; ++s)
    for (std::size_t j = 0; j < t.outcome[s].size(); ++j) {
      if (!t.available[s][j]) continue;
      t.outcome[s][j].for_each([&](StateId u) {
        ++e.in_count[u];
        e.next[s].insert(u);
      });
    }
  return common_root({e}, ns);
}

std::optional<StateId> treelike_root_snm(const SingleFirstNeighborhoodModel& m) {
  int ns = m.carrier.n_states();
  std::vector<EdgeSummary> summaries;
  for (int a = 0; a < m.carrier.agents.size(); ++a)
    summaries.push_back(summarize(m.neighborhood_agent[a], ns));
  return common_root(summaries, ns);
}

bool tree_condition_snm(const SingleFirstNeighborhoodModel& m, int which) {
  int ns = m.carrier.n_states();
  std::vector<EdgeSummary> summaries;
  switch (which) {
    case 1:
      return treelike_root_snm(m).has_value();
    case 2:
      for (int c = 0; c < m.carrier.agents.coalition_count(); ++c)
        summaries.push_back(summarize(snm_derive_neighborhood(m, Coalition::of_mask(c)), ns));
      return common_root(summaries, ns).has_value();
    default:
      throw Error("tree condition must be 1 or 2");
  }
}

}  // namespace clw
