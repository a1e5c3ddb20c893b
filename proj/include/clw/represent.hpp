#ifndef CLW_REPRESENT_HPP
#define CLW_REPRESENT_HPP

#include "clw/clear_tree.hpp"

namespace clw {

/// The representing neighborhood model of a single-coalition-first action
/// model: same carrier and successor, nei_a(s) = the nonempty outcome sets
/// of a's actions at s. The result z-represents the input.
SingleFirstNeighborhoodModel sam_to_snm(const SingleFirstActionModel& m);

/// The action-naming construction: one fresh action per (agent, state,
/// neighborhood member) triple, with
///   out_a(s, alpha_{x,u,X}) = X  when x = a and u = s, empty otherwise.
/// The input z-represents the result. Action names are serialized as
/// "a@s@{t1,t2}". A model whose neighborhoods are all empty would have no
/// actions; a single fresh action with empty outcomes everywhere is
/// injected to keep the action universe nonempty (effectivity unchanged).
SingleFirstActionModel snm_to_sam(const SingleFirstNeighborhoodModel& m);

/// Reads a grand-coalition-first model as single-coalition-first: derived
/// per-agent outcome tables plus the successor function. Faithful (the
/// round trip sam_to_gam recovers g) exactly when g satisfies the
/// single-coalition-first composition conditions, e.g. when g is clear.
SingleFirstActionModel gam_to_sam(const GrandFirstActionModel& g);

/// A truncated unraveling: states are the paths from `from` of at most
/// `depth` transitions, with
///   out'_AG(pi, sigma) = { pi-sigma-u | u in out_AG(last(pi), sigma) }
/// for interior pi and no outgoing edges at frontier paths; labels are
/// inherited from the last element. The result is tree-like with the
/// length-0 path as root, and agrees with the original at the root on all
/// formulas of modal depth <= depth.
struct UnravelResult {
  GrandFirstActionModel model;
  StateId root = 0;
  StateSet interior;             // path states with fewer than `depth` transitions
  std::vector<StateId> last_of;  // original state each path state ends in
};

UnravelResult unravel(const GrandFirstActionModel& g, StateId from, int depth);

}  // namespace clw

#endif
