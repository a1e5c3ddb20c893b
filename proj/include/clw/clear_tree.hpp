#ifndef CLW_CLEAR_TREE_HPP
#define CLW_CLEAR_TREE_HPP

#include <optional>

#include "clw/sam_snm.hpp"

namespace clw {

// --- clearness ---------------------------------------------------------

/// Distinct action profiles never share an outcome state.
bool is_clear_gam(const GrandFirstActionModel& g);

/// The three equivalent clearness conditions, over the derived tables:
/// 1 per-agent disjointness, 2 per-coalition disjointness, 3 disjointness
/// of the grand coalition's outcomes.
bool clear_condition(const GrandFirstActionModel& g, int which);

/// Union equals ground and distinct members are pairwise disjoint; the
/// empty set is allowed as a member.
bool is_general_partition(const SetFamily& family, const StateSet& ground);

/// A general partition without the empty set as a member.
bool is_partition(const SetFamily& family, const StateSet& ground);

/// Every nei_a(s) is a partition of suc(s).
bool is_clear_snm(const SingleFirstNeighborhoodModel& m);

/// The two equivalent clearness conditions for single-coalition-first
/// neighborhood models: 1 per-agent partition, 2 per-coalition partition of
/// the derived neighborhoods. (A grand-coalition-only variant is weaker and
/// deliberately not offered.)
bool clear_snm_condition(const SingleFirstNeighborhoodModel& m, int which);

// --- histories -----------------------------------------------------------

/// A C-history in an action model: an alternating state / joint-action
/// sequence respecting availability and outcomes. The length-0 history is
/// a bare state.
struct GamHistory {
  StateId from = 0;
  std::vector<std::pair<JointAction, StateId>> steps;
  StateId to() const { return steps.empty() ? from : steps.back().second; }

  friend bool operator==(const GamHistory& a, const GamHistory& b) {
    return a.from == b.from && a.steps == b.steps;
  }
};

/// A C-history in a neighborhood model: labels are neighborhood members.
struct SnmHistory {
  StateId from = 0;
  std::vector<std::pair<StateSet, StateId>> steps;
  StateId to() const { return steps.empty() ? from : steps.back().second; }

  friend bool operator==(const SnmHistory& a, const SnmHistory& b) {
    return a.from == b.from && a.steps == b.steps;
  }
};

/// All C-histories from `from` to `to` with at most max_len transitions,
/// including the bare-state history when from == to.
std::vector<GamHistory> enumerate_gam_histories(const GrandFirstActionModel& g,
                                                Coalition c, StateId from, StateId to,
                                                int max_len);
std::vector<SnmHistory> enumerate_snm_histories(const SingleFirstNeighborhoodModel& m,
                                                Coalition c, StateId from, StateId to,
                                                int max_len);

// --- tree-likeness ---------------------------------------------------------
//
// Decided by an arborescence check over the labeled edges (s, l, t) of the
// relevant coalition: a root r works iff every state is reachable from r,
// no edge enters r, and every other state has exactly one incoming labeled
// edge. On finite models this is exactly uniqueness of histories from r
// (a cycle or a second incoming edge yields a second history).

/// Root for which every state has a unique AG-history, if any.
std::optional<StateId> treelike_root_gam(const GrandFirstActionModel& g);
inline bool is_treelike_gam(const GrandFirstActionModel& g) {
  return treelike_root_gam(g).has_value();
}

/// The three equivalent tree conditions: 1 unique a-histories for every
/// agent from a shared root, 2 unique C-histories for every coalition,
/// 3 unique AG-histories.
bool tree_condition_gam(const GrandFirstActionModel& g, int which);

/// Root for which every agent has unique a-histories to every state, if any.
std::optional<StateId> treelike_root_snm(const SingleFirstNeighborhoodModel& m);
inline bool is_treelike_snm(const SingleFirstNeighborhoodModel& m) {
  return treelike_root_snm(m).has_value();
}

/// The two equivalent tree conditions for single-coalition-first
/// neighborhood models: 1 per-agent, 2 per-coalition. (The AG-only variant
/// is weaker and deliberately not offered.)
bool tree_condition_snm(const SingleFirstNeighborhoodModel& m, int which);

// Raw-table variants for fully explicit action models, where availability
// is stored rather than derived: clearness reads the grand coalition's
// outcome rows, histories step only through available joint actions.
bool is_clear_action(const ActionModel& m);
std::optional<StateId> treelike_root_action(const ActionModel& m);

}  // namespace clw

#endif
