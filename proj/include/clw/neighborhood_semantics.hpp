#ifndef CLW_NEIGHBORHOOD_SEMANTICS_HPP
#define CLW_NEIGHBORHOOD_SEMANTICS_HPP

#include <optional>
#include <string>

#include "clw/action_semantics.hpp"

namespace clw {

/// [C]phi holds iff some member of nei_C(s) is contained in the states
/// satisfying phi (vacuously so when the empty set is a member).
bool eval_neighborhood(const NeighborhoodModel& m, StateId s, const Formula& f);

StateSet sat_neighborhood(const NeighborhoodModel& m, const Formula& f);

bool valid_on_neighborhood(const NeighborhoodModel& m, const Formula& f);

/// The alpha model: every family closed under supersets within the state
/// set. Throws TooLarge beyond kMaxAlphaStates states.
NeighborhoodModel superset_closure(const NeighborhoodModel& m);

/// True iff every family is already closed under supersets within the
/// state set.
bool is_alpha_model(const NeighborhoodModel& m);

/// First (coalition, state) where a representation table differs from the
/// model's neighborhood, with both families rendered for diagnostics.
struct RepresentationMismatch {
  Coalition coalition;
  StateId state;
  SetFamily expected;  // effectivity of the action model
  SetFamily actual;    // neighborhood of the candidate representation
};

/// nm z-represents am iff AE_C = nei_C for every coalition, on one shared
/// carrier (CarrierMismatch otherwise).
bool z_represents(const NeighborhoodModel& nm, const ActionModel& am);
std::optional<RepresentationMismatch> z_mismatch(const NeighborhoodModel& nm,
                                                 const ActionModel& am);

/// Same with the alpha effectivity tables LE_C.
bool alpha_represents(const NeighborhoodModel& nm, const ActionModel& am);
std::optional<RepresentationMismatch> alpha_mismatch(const NeighborhoodModel& nm,
                                                     const ActionModel& am);

/// Neighborhood model carrying an effectivity table verbatim.
NeighborhoodModel effectivity_as_neighborhood(const Carrier& carrier,
                                              const EffectivityTable& table);

}  // namespace clw

#endif
