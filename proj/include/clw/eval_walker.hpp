#ifndef CLW_EVAL_WALKER_HPP
#define CLW_EVAL_WALKER_HPP

#include "clw/formula.hpp"
#include "clw/types.hpp"

namespace clw {

// Shared recursive evaluator: computes the set of states satisfying f,
// delegating the modal clause to `box(coalition, goal)`. Both semantics
// plug in here; boolean connectives are set operations over the carrier.
template <class BoxFn>
StateSet satisfying_states(const Carrier& car, const Formula& f, BoxFn&& box) {
  switch (f.kind()) {
    case Formula::Kind::Top:
      return StateSet::full(car.n_states());
    case Formula::Kind::Atom:
      return car.atom_states(f.atom_name());
    case Formula::Kind::Not:
      return StateSet::full(car.n_states()).minus(satisfying_states(car, f.child(), box));
    case Formula::Kind::And:
      return satisfying_states(car, f.child(0), box)
          .intersected(satisfying_states(car, f.child(1), box));
    case Formula::Kind::Box: {
      Coalition c = car.agents.coalition_of(f.coalition_agents());
      return box(c, satisfying_states(car, f.child(), box));
    }
  }
  return StateSet{};
}

}  // namespace clw

#endif
