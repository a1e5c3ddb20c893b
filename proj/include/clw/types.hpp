#ifndef CLW_TYPES_HPP
#define CLW_TYPES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "clw/errors.hpp"
#include "clw/sets.hpp"

namespace clw {

// Hard cap on agents: coalition tables are indexed by the 2^|AG| coalition
// masks and joint actions carry one slot per agent.
constexpr int kMaxAgents = 6;

bool is_token(const std::string& s);  // [a-z][a-z0-9_]*

/// A coalition, represented as a bitmask over the agent order fixed by the
/// model's AgentUniverse. The empty coalition and the grand coalition are
/// ordinary values.
struct Coalition {
  std::uint8_t mask = 0;

  static Coalition of_mask(unsigned m) { return Coalition{static_cast<std::uint8_t>(m)}; }

  bool contains(int agent) const { return (mask >> agent) & 1u; }
  int size() const { return __builtin_popcount(mask); }
  bool empty() const { return mask == 0; }

  bool subset_of(Coalition o) const { return (mask & ~o.mask) == 0; }
  bool disjoint(Coalition o) const { return (mask & o.mask) == 0; }
  Coalition united(Coalition o) const { return of_mask(mask | o.mask); }
  Coalition intersected(Coalition o) const { return of_mask(mask & o.mask); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    unsigned m = mask;
    while (m) {
      fn(__builtin_ctz(m));
      m &= m - 1;
    }
  }
  std::vector<int> members() const {
    std::vector<int> v;
    for_each([&](int a) { v.push_back(a); });
    return v;
  }

  friend bool operator==(Coalition a, Coalition b) { return a.mask == b.mask; }
  friend bool operator!=(Coalition a, Coalition b) { return a.mask != b.mask; }
};

/// The finite nonempty set of agents, in a fixed order that all coalition
/// masks and joint-action encodings refer to.
class AgentUniverse {
 public:
  explicit AgentUniverse(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool has(const std::string& n) const;
  int index_of(const std::string& n) const;  // throws UnknownAgent

  Coalition grand() const { return Coalition::of_mask((1u << size()) - 1); }
  int coalition_count() const { return 1 << size(); }

  Coalition coalition_of(const std::vector<std::string>& agent_names) const;
  std::vector<std::string> coalition_names(Coalition c) const;

  friend bool operator==(const AgentUniverse& a, const AgentUniverse& b) {
    return a.names_ == b.names_;
  }
  friend bool operator!=(const AgentUniverse& a, const AgentUniverse& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> names_;
};

/// The finite nonempty set of actions shared by all agents.
class ActionUniverse {
 public:
  explicit ActionUniverse(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& n) const;  // throws BadModelFile

  friend bool operator==(const ActionUniverse& a, const ActionUniverse& b) {
    return a.names_ == b.names_;
  }
  friend bool operator!=(const ActionUniverse& a, const ActionUniverse& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> names_;
};

/// A joint action of a coalition: one action per member. Slots of
/// non-members are kept zero so that equality is plain memberwise equality.
struct JointAction {
  Coalition coalition;
  std::array<std::uint16_t, kMaxAgents> act{};

  std::uint16_t action_of(int agent) const { return act[agent]; }

  friend bool operator==(const JointAction& a, const JointAction& b) {
    return a.coalition == b.coalition && a.act == b.act;
  }
  friend bool operator!=(const JointAction& a, const JointAction& b) {
    return !(a == b);
  }
};

// --- joint-action index arithmetic ---------------------------------------
//
// Joint actions of a coalition C are indexed 0 .. |AC|^|C| - 1 in the order
// "lexicographic by agent order then action order": the tuple of member
// actions, members ascending by agent index, with the last member varying
// fastest. All derivations and tables use these indexes; the JointAction
// value type is only materialized at API boundaries.

int ja_count(Coalition c, int n_actions);  // |AC|^|C|, throws BoundsExceeded on blowup

/// Action index assigned to `agent` (a member of c) by joint action `idx`.
int ja_digit(Coalition c, int idx, int agent, int n_actions);

/// True iff the joint action `big_idx` of `big` restricts to `small_idx` on
/// `small` (requires small to be a subset of big).
bool ja_extends(Coalition big, int big_idx, Coalition small, int small_idx,
                int n_actions);

int ja_restrict_index(Coalition c, int idx, Coalition d, int n_actions);

/// Index of the union joint action of two disjoint coalitions.
int ja_union_index(Coalition c, int c_idx, Coalition d, int d_idx, int n_actions);

JointAction ja_from_index(Coalition c, int idx, int n_actions);
int ja_index(const JointAction& ja, int n_actions);

// --- joint-action value operations ----------------------------------------

/// The restriction of sigma to subcoalition d. Throws NotASubcoalition.
JointAction restrict(const JointAction& sigma, Coalition d);

/// The joint action of C union D agreeing with both arguments.
/// Throws OverlappingCoalitions when the coalitions intersect.
JointAction join(const JointAction& sigma_c, const JointAction& sigma_d);

/// True iff sigma agrees with sigma1 or sigma2 at every member. All three
/// must share one coalition (CoalitionMismatch otherwise).
bool is_fusion(const JointAction& sigma, const JointAction& sigma1,
               const JointAction& sigma2);

/// All joint actions of c, in index order; exactly one element when c = {}.
std::vector<JointAction> enumerate_joint_actions(Coalition c,
                                                 const ActionUniverse& ac);

// --- canonical text keys ------------------------------------------------
//
// The model file format names coalitions and joint actions by text keys:
// a coalition is its member names sorted and comma-joined ("" for the
// empty coalition); a joint action is "agent:action" pairs, agents sorted,
// comma-joined ("" for the empty joint action). Actions never contain
// commas in segments meaningful here because agent names cannot; the
// parser splits each segment at the first ':'.

std::string coalition_key(Coalition c, const AgentUniverse& agents);
Coalition coalition_from_key(const std::string& key, const AgentUniverse& agents);

std::string joint_action_key(const JointAction& ja, const AgentUniverse& agents,
                             const ActionUniverse& actions);
JointAction joint_action_from_key(const std::string& key, Coalition expect,
                                  const AgentUniverse& agents,
                                  const ActionUniverse& actions);

// --- labeling and carrier ---------------------------------------------------

/// Assigns each state its set of atomic propositions (sorted names).
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(int n_states) : per_state_(n_states) {}

  int n_states() const { return static_cast<int>(per_state_.size()); }
  bool has(StateId s, const std::string& atom) const;
  void add(StateId s, const std::string& atom);
  const std::vector<std::string>& atoms(StateId s) const { return per_state_[s]; }

  friend bool operator==(const Labeling& a, const Labeling& b) {
    return a.per_state_ == b.per_state_;
  }
  friend bool operator!=(const Labeling& a, const Labeling& b) { return !(a == b); }

 private:
  std::vector<std::vector<std::string>> per_state_;  // each sorted unique
};

/// The parts shared by every model kind: named states, the agent universe
/// and the labeling. Representation checks require carriers to be equal.
struct Carrier {
  std::vector<std::string> states;
  AgentUniverse agents;
  Labeling labeling;

  int n_states() const { return static_cast<int>(states.size()); }
  StateId state_index(const std::string& name) const;  // throws UnknownState
  void check_state(StateId s) const;

  /// States whose label set contains `atom`.
  StateSet atom_states(const std::string& atom) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.states == b.states && a.agents == b.agents && a.labeling == b.labeling;
  }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }
};

Carrier make_carrier(std::vector<std::string> states, std::vector<std::string> agents);

// --- property signatures ----------------------------------------------------

/// Which of seriality, independence and determinism a model has; the eight
/// values are written "", "S", "I", "D", "SI", "SD", "ID", "SID".
struct PropertySignature {
  bool serial = false;
  bool independent = false;
  bool deterministic = false;

  bool includes(const PropertySignature& o) const {
    return (serial || !o.serial) && (independent || !o.independent) &&
           (deterministic || !o.deterministic);
  }

  std::string to_string() const;
  static PropertySignature parse(const std::string& s);
  static std::vector<PropertySignature> all_eight();

  friend bool operator==(const PropertySignature& a, const PropertySignature& b) {
    return a.serial == b.serial && a.independent == b.independent &&
           a.deterministic == b.deterministic;
  }
  friend bool operator!=(const PropertySignature& a, const PropertySignature& b) {
    return !(a == b);
  }
};

}  // namespace clw

#endif
