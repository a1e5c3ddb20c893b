#ifndef CLW_TESTS_NAIVE_EVAL_HPP
#define CLW_TESTS_NAIVE_EVAL_HPP

// Reference evaluators written straight from the truth clauses, with none
// of the library's set machinery: independent oracles for the semantics
// tests. Deliberately slow and obvious.

#include <set>

#include "clw/action_model.hpp"
#include "clw/formula.hpp"

namespace clw::testing {

inline bool naive_eval_action(const ActionModel& m, StateId s, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Atom:
      return m.carrier.labeling.has(s, f.atom_name());
    case Formula::Kind::Not:
      return !naive_eval_action(m, s, f.child());
    case Formula::Kind::And:
      return naive_eval_action(m, s, f.child(0)) && naive_eval_action(m, s, f.child(1));
    case Formula::Kind::Box: {
      Coalition c = m.carrier.agents.coalition_of(f.coalition_agents());
      for (const JointAction& ja : enumerate_joint_actions(c, m.actions)) {
        int idx = ja_index(ja, m.actions.size());
        if (!m.table(c).available[s][idx]) continue;
        bool all = true;
        for (StateId t : m.table(c).outcome[s][idx].to_vector())
          all = all && naive_eval_action(m, t, f.child());
        if (all) return true;
      }
      return false;
    }
  }
  return false;
}

inline bool naive_eval_neighborhood(const NeighborhoodModel& m, StateId s,
                                    const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Atom:
      return m.carrier.labeling.has(s, f.atom_name());
    case Formula::Kind::Not:
      return !naive_eval_neighborhood(m, s, f.child());
    case Formula::Kind::And:
      return naive_eval_neighborhood(m, s, f.child(0)) &&
             naive_eval_neighborhood(m, s, f.child(1));
    case Formula::Kind::Box: {
      Coalition c = m.carrier.agents.coalition_of(f.coalition_agents());
      for (const StateSet& y : m.nei(c, s).members()) {
        bool all = true;
        for (StateId t : y.to_vector()) all = all && naive_eval_neighborhood(m, t, f.child());
        if (all) return true;
      }
      return false;
    }
  }
  return false;
}

// superset closure by plain subset enumeration over std::set
inline SetFamily naive_closure(const SetFamily& fam, int n_states) {
  std::set<std::set<StateId>> base;
  for (const auto& y : fam.members()) {
    std::set<StateId> s;
    for (StateId t : y.to_vector()) s.insert(t);
    base.insert(s);
  }
  SetFamily out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n_states); ++bits) {
    std::set<StateId> cand;
    for (int i = 0; i < n_states; ++i)
      if ((bits >> i) & 1) cand.insert(i);
    for (const auto& z : base) {
      bool subset = true;
      for (StateId t : z) subset = subset && cand.count(t);
      if (subset) {
        out.insert(StateSet::from_word(bits));
        break;
      }
    }
  }
  return out;
}

// n-ary odot by direct product over all member choices
inline SetFamily naive_odot_all(const std::vector<SetFamily>& families) {
  SetFamily out;
  std::vector<int> pick(families.size(), 0);
  while (true) {
    StateSet acc;
    bool first = true;
    for (std::size_t i = 0; i < families.size(); ++i) {
      const StateSet& y = families[i].members()[pick[i]];
      acc = first ? y : acc.intersected(y);
      first = false;
    }
    if (!acc.empty()) out.insert(acc);
    std::size_t i = 0;
    for (; i < families.size(); ++i) {
      if (++pick[i] < static_cast<int>(families[i].members().size())) break;
      pick[i] = 0;
    }
    if (i == families.size()) break;
  }
  return out;
}

}  // namespace clw::testing

#endif
