#ifndef CLW_GAM_HPP
#define CLW_GAM_HPP

#include <optional>

#include "clw/action_model.hpp"
#include "clw/formula.hpp"

namespace clw {

/// Grand-coalition-first action model: only the grand coalition's outcome
/// function is primitive; every other outcome function, all availability
/// functions and the successor function are derived from it.
struct GrandFirstActionModel {
  Carrier carrier;
  ActionUniverse actions;
  std::vector<std::vector<StateSet>> outcome_grand;  // [state][profile index]

  void validate() const;

  friend bool operator==(const GrandFirstActionModel& a, const GrandFirstActionModel& b) {
    return a.carrier == b.carrier && a.actions == b.actions &&
           a.outcome_grand == b.outcome_grand;
  }
};

GrandFirstActionModel make_gam(Carrier carrier, ActionUniverse actions);

/// out_C(s, sigma) = union of out_AG(s, tau) over profiles tau extending sigma.
std::vector<std::vector<StateSet>> derive_outcome(const GrandFirstActionModel& g,
                                                  Coalition c);

/// av_C(s) = the joint actions whose derived outcome at s is nonempty.
std::vector<std::vector<char>> derive_availability(const GrandFirstActionModel& g,
                                                   Coalition c);

/// suc(s) = union of out_AG(s, tau) over all profiles tau.
std::vector<StateSet> successor_map(const GrandFirstActionModel& g);

/// Materializes the derived tables of every coalition; truth over the
/// grand-coalition-first model is truth over this model.
ActionModel to_action_model(const GrandFirstActionModel& g);

bool eval_gam(const GrandFirstActionModel& g, StateId s, const Formula& f);

// Seriality / independence / determinism, over explicit tables. When
// `only` is given the state quantifiers range over that subset (used for
// the interior of truncated unravelings).
bool is_serial(const ActionModel& m, const std::optional<StateSet>& only = std::nullopt);
bool is_independent(const ActionModel& m,
                    const std::optional<StateSet>& only = std::nullopt);
bool is_deterministic(const ActionModel& m,
                      const std::optional<StateSet>& only = std::nullopt);
PropertySignature signature_of(const ActionModel& m,
                               const std::optional<StateSet>& only = std::nullopt);

bool gam_is_serial(const GrandFirstActionModel& g);
bool gam_is_independent(const GrandFirstActionModel& g);
bool gam_is_deterministic(const GrandFirstActionModel& g);
PropertySignature classify(const GrandFirstActionModel& g);

}  // namespace clw

#endif
