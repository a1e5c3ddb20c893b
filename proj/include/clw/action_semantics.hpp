#ifndef CLW_ACTION_SEMANTICS_HPP
#define CLW_ACTION_SEMANTICS_HPP

#include "clw/action_model.hpp"
#include "clw/formula.hpp"

namespace clw {

// States with more than this many members make superset closures (and so
// alpha effectivity) intractable to materialize.
constexpr int kMaxAlphaStates = 12;

/// Per-coalition, per-state family of state sets. Actual tables hold the
/// exact outcome sets of available joint actions; Alpha tables are their
/// superset closures within the state set.
struct EffectivityTable {
  enum class Flavor { Actual, Alpha };
  Flavor flavor = Flavor::Actual;
  std::vector<std::vector<SetFamily>> table;  // [coalition mask][state]

  const SetFamily& at(Coalition c, StateId s) const { return table[c.mask][s]; }

  friend bool operator==(const EffectivityTable& a, const EffectivityTable& b) {
    return a.flavor == b.flavor && a.table == b.table;
  }
};

/// Truth at a state. [C]phi holds iff some available joint action of C has
/// every outcome state satisfying phi — vacuously so for an available
/// action with empty outcome.
bool eval_action(const ActionModel& m, StateId s, const Formula& f);

/// All states satisfying f (one pass per subformula).
StateSet sat_action(const ActionModel& m, const Formula& f);

/// True at every state.
bool valid_on_action(const ActionModel& m, const Formula& f);

/// AE_C(s) = { out_C(s, sigma) | sigma available at s }.
EffectivityTable actual_effectivity(const ActionModel& m);

/// LE_C(s) = { Y | out_C(s, sigma) is a subset of Y for some available
/// sigma }; materialized as the superset closure of AE within the state
/// set. Throws TooLarge beyond kMaxAlphaStates states.
EffectivityTable alpha_effectivity(const ActionModel& m);

/// Closure of one family under supersets within {0..n_states-1}.
SetFamily superset_closure_within(const SetFamily& family, int n_states);

}  // namespace clw

#endif
