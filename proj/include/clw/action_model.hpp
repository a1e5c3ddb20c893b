#ifndef CLW_ACTION_MODEL_HPP
#define CLW_ACTION_MODEL_HPP

#include <vector>

#include "clw/types.hpp"

namespace clw {

/// Availability and outcome tables of one coalition, indexed
/// [state][joint-action index]. Every joint action has an outcome row
/// (empty set where the input left it undefined); availability is explicit
/// and independent of outcomes, so an available action may have an empty
/// outcome and vice versa.
struct CoalitionTable {
  std::vector<std::vector<char>> available;
  std::vector<std::vector<StateSet>> outcome;
};

/// Fully explicit action model: one table per coalition of the universe.
struct ActionModel {
  Carrier carrier;
  ActionUniverse actions;
  std::vector<CoalitionTable> tables;  // index = coalition mask

  const CoalitionTable& table(Coalition c) const { return tables[c.mask]; }
  CoalitionTable& table(Coalition c) { return tables[c.mask]; }

  void validate() const;  // shape and range checks
};

/// Allocates tables of the right shape, all unavailable, all outcomes empty.
ActionModel make_action_model(Carrier carrier, ActionUniverse actions);

struct NeighborhoodModel {
  Carrier carrier;
  std::vector<std::vector<SetFamily>> neighborhood;  // [coalition mask][state]

  const SetFamily& nei(Coalition c, StateId s) const { return neighborhood[c.mask][s]; }

  void validate() const;
};

NeighborhoodModel make_neighborhood_model(Carrier carrier);

}  // namespace clw

#endif
