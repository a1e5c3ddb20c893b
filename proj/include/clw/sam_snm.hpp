#ifndef CLW_SAM_SNM_HPP
#define CLW_SAM_SNM_HPP

#include "clw/gam.hpp"

namespace clw {

/// Single-coalition-first action model: a successor function plus one
/// outcome function per agent; coalition outcomes are intersections of
/// member outcomes (and suc for the empty coalition). For every agent and
/// state the outcome sets of the agent's actions must form a general cover
/// of suc(s).
struct SingleFirstActionModel {
  Carrier carrier;
  ActionUniverse actions;
  std::vector<StateSet> successor;                              // [state]
  std::vector<std::vector<std::vector<StateSet>>> outcome_agent;  // [agent][state][action]

  void validate() const;  // shape + general-cover invariant

  friend bool operator==(const SingleFirstActionModel& a, const SingleFirstActionModel& b) {
    return a.carrier == b.carrier && a.actions == b.actions &&
           a.successor == b.successor && a.outcome_agent == b.outcome_agent;
  }
};

SingleFirstActionModel make_sam(Carrier carrier, ActionUniverse actions);

/// out_C(s, sigma): suc(s) when C is empty, otherwise the intersection of
/// the members' outcome sets under sigma.
std::vector<std::vector<StateSet>> sam_derive_outcome(const SingleFirstActionModel& m,
                                                      Coalition c);

std::vector<std::vector<char>> sam_derive_availability(const SingleFirstActionModel& m,
                                                       Coalition c);

/// The grand-coalition-first model with the derived AG table. Derivations
/// of the two models agree on every coalition.
GrandFirstActionModel sam_to_gam(const SingleFirstActionModel& m);

ActionModel sam_to_action_model(const SingleFirstActionModel& m);

/// The three equivalent condition sets characterizing single-coalition-first
/// composition at a state of a fully explicit action model:
///   1: per-agent outcome images cover out_{}(s) + coalition outcomes are
///      intersections of member outcomes;
///   2: the same cover condition + out_{C u D} = out_C /\ out_D for
///      disjoint C, D;
///   3: out_C is the union of extending grand-coalition outcomes + fusion
///      closure of outcome intersections.
/// The three predicates are coded independently of one another.
bool check_condition_set(const ActionModel& m, StateId s, int which);

/// Pairwise nonempty intersections of two families over P(ST) - {{}}.
/// Throws EmptySetMember when either family contains the empty set.
SetFamily odot(const SetFamily& d1, const SetFamily& d2);

/// n-ary product; the index family must be nonempty, and odot_all({D}) = D.
SetFamily odot_all(const std::vector<SetFamily>& families);

/// Single-coalition-first neighborhood model: a successor function plus one
/// neighborhood function per agent, each nei_a(s) a cover of suc(s)
/// (nonempty members whose union is suc(s)).
struct SingleFirstNeighborhoodModel {
  Carrier carrier;
  std::vector<StateSet> successor;                  // [state]
  std::vector<std::vector<SetFamily>> neighborhood_agent;  // [agent][state]

  void validate() const;  // shape + cover invariant

  friend bool operator==(const SingleFirstNeighborhoodModel& a,
                         const SingleFirstNeighborhoodModel& b) {
    return a.carrier == b.carrier && a.successor == b.successor &&
           a.neighborhood_agent == b.neighborhood_agent;
  }
};

SingleFirstNeighborhoodModel make_snm(Carrier carrier);

/// nei_C(s): empty when suc(s) is empty; {suc(s)} for the empty coalition;
/// otherwise the odot product of the members' neighborhoods.
SetFamily snm_derive_neighborhood_at(const SingleFirstNeighborhoodModel& m, Coalition c,
                                     StateId s);
std::vector<SetFamily> snm_derive_neighborhood(const SingleFirstNeighborhoodModel& m,
                                               Coalition c);

NeighborhoodModel snm_to_neighborhood_model(const SingleFirstNeighborhoodModel& m);

bool snm_is_serial(const SingleFirstNeighborhoodModel& m);
bool snm_is_independent(const SingleFirstNeighborhoodModel& m);
bool snm_is_deterministic(const SingleFirstNeighborhoodModel& m);
PropertySignature snm_classify(const SingleFirstNeighborhoodModel& m);

}  // namespace clw

#endif
