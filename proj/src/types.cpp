#include "clw/types.hpp"

#include <algorithm>
#include <set>

namespace clw {

bool is_token(const std::string& s) {
  if (s.empty()) return false;
  if (s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  return true;
}

AgentUniverse::AgentUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("agent universe must be nonempty");
  if (static_cast<int>(names_.size()) > kMaxAgents)
    throw BoundsExceeded("at most " + std::to_string(kMaxAgents) + " agents supported");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_token(n)) throw Error("bad agent name: '" + n + "'");
    if (!seen.insert(n).second) throw Error("duplicate agent name: '" + n + "'");
  }
}

bool AgentUniverse::has(const std::string& n) const {
  return std::find(names_.begin(), names_.end(), n) != names_.end();
}

int AgentUniverse::index_of(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == n) return i;
  throw UnknownAgent(n);
}

Coalition AgentUniverse::coalition_of(const std::vector<std::string>& agent_names) const {
  Coalition c;
  for (const auto& n : agent_names) c.mask |= 1u << index_of(n);
  return c;
}

std::vector<std::string> AgentUniverse::coalition_names(Coalition c) const {
  std::vector<std::string> v;
  c.for_each([&](int a) { v.push_back(names_[a]); });
  return v;
}

ActionUniverse::ActionUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw EmptyActionUniverse("action universe must be nonempty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty action name");
    if (!seen.insert(n).second) throw Error("duplicate action name: '" + n + "'");
  }
}

int ActionUniverse::index_of(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == n) return i;
  throw BadModelFile("unknown action: '" + n + "'");
}

int ja_count(Coalition c, int n_actions) {
  long long r = 1;
  for (int i = 0; i < c.size(); ++i) {
    r *= n_actions;
    if (r > (1 << 20)) throw BoundsExceeded("joint action space too large");
  }
  return static_cast<int>(r);
}

int ja_digit(Coalition c, int idx, int agent, int n_actions) {
  // members ascending by agent index, last member varies fastest
  int below = 0;  // members with larger agent index
  for (int a = agent + 1; a < kMaxAgents; ++a)
    if (c.contains(a)) ++below;
  int div = 1;
  for (int i = 0; i < below; ++i) div *= n_actions;
  return (idx / div) % n_actions;
}

bool ja_extends(Coalition big, int big_idx, Coalition small, int small_idx,
                int n_actions) {
  bool ok = true;
  small.for_each([&](int a) {
    if (ja_digit(big, big_idx, a, n_actions) != ja_digit(small, small_idx, a, n_actions))
      ok = false;
  });
  return ok;
}

int ja_restrict_index(Coalition c, int idx, Coalition d, int n_actions) {
  if (!d.subset_of(c)) throw NotASubcoalition("restriction to a non-subcoalition");
  int r = 0;
  d.for_each([&](int a) { r = r * n_actions + ja_digit(c, idx, a, n_actions); });
  return r;
}

int ja_union_index(Coalition c, int c_idx, Coalition d, int d_idx, int n_actions) {
  if (!c.disjoint(d)) throw OverlappingCoalitions("coalitions overlap");
  Coalition u = c.united(d);
  int r = 0;
  u.for_each([&](int a) {
    int digit = c.contains(a) ? ja_digit(c, c_idx, a, n_actions)
                              : ja_digit(d, d_idx, a, n_actions);
    r = r * n_actions + digit;
  });
  return r;
}

JointAction ja_from_index(Coalition c, int idx, int n_actions) {
  JointAction ja;
  ja.coalition = c;
  c.for_each([&](int a) {
    ja.act[a] = static_cast<std::uint16_t>(ja_digit(c, idx, a, n_actions));
  });
  return ja;
}

int ja_index(const JointAction& ja, int n_actions) {
  int r = 0;
  ja.coalition.for_each([&](int a) { r = r * n_actions + ja.act[a]; });
  return r;
}

JointAction restrict(const JointAction& sigma, Coalition d) {
  if (!d.subset_of(sigma.coalition))
    throw NotASubcoalition("restriction to a non-subcoalition");
  JointAction r;
  r.coalition = d;
  d.for_each([&](int a) { r.act[a] = sigma.act[a]; });
  return r;
}

JointAction join(const JointAction& sigma_c, const JointAction& sigma_d) {
  if (!sigma_c.coalition.disjoint(sigma_d.coalition))
    throw OverlappingCoalitions("coalitions overlap");
  JointAction r;
  r.coalition = sigma_c.coalition.united(sigma_d.coalition);
  sigma_c.coalition.for_each([&](int a) { r.act[a] = sigma_c.act[a]; });
  sigma_d.coalition.for_each([&](int a) { r.act[a] = sigma_d.act[a]; });
  return r;
}

bool is_fusion(const JointAction& sigma, const JointAction& sigma1,
               const JointAction& sigma2) {
  if (sigma.coalition != sigma1.coalition || sigma.coalition != sigma2.coalition)
    throw CoalitionMismatch("fusion requires one shared coalition");
  bool ok = true;
  sigma.coalition.for_each([&](int a) {
    if (sigma.act[a] != sigma1.act[a] && sigma.act[a] != sigma2.act[a]) ok = false;
  });
  return ok;
}

std::vector<JointAction> enumerate_joint_actions(Coalition c, const ActionUniverse& ac) {
  int n = ja_count(c, ac.size());
  std::vector<JointAction> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(ja_from_index(c, i, ac.size()));
  return v;
}

namespace {
std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}
}  // namespace

std::string coalition_key(Coalition c, const AgentUniverse& agents) {
  std::vector<std::string> names = agents.coalition_names(c);
  std::sort(names.begin(), names.end());
  std::string key;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) key += ',';
    key += names[i];
  }
  return key;
}

Coalition coalition_from_key(const std::string& key, const AgentUniverse& agents) {
  if (key.empty()) return Coalition{};
  Coalition c;
  for (const auto& name : split(key, ',')) c.mask |= 1u << agents.index_of(name);
  return c;
}

std::string joint_action_key(const JointAction& ja, const AgentUniverse& agents,
                             const ActionUniverse& actions) {
  std::vector<std::string> parts;
  ja.coalition.for_each(
      [&](int a) { parts.push_back(agents.name(a) + ":" + actions.name(ja.act[a])); });
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) key += ',';
    key += parts[i];
  }
  return key;
}

JointAction joint_action_from_key(const std::string& key, Coalition expect,
                                  const AgentUniverse& agents,
                                  const ActionUniverse& actions) {
  JointAction ja;
  if (!key.empty()) {
    for (const auto& part : split(key, ',')) {
      std::size_t colon = part.find(':');
      if (colon == std::string::npos)
        throw BadModelFile("bad joint action key: '" + key + "'");
      int a = agents.index_of(part.substr(0, colon));
      if (ja.coalition.contains(a))
        throw BadModelFile("agent repeated in joint action key: '" + key + "'");
      ja.coalition.mask |= 1u << a;
      ja.act[a] = static_cast<std::uint16_t>(actions.index_of(part.substr(colon + 1)));
    }
  }
  if (ja.coalition != expect)
    throw BadModelFile("joint action key '" + key + "' does not match coalition '" +
                       coalition_key(expect, agents) + "'");
  return ja;
}

bool Labeling::has(StateId s, const std::string& atom) const {
  const auto& v = per_state_[s];
  return std::binary_search(v.begin(), v.end(), atom);
}

void Labeling::add(StateId s, const std::string& atom) {
  auto& v = per_state_[s];
  auto it = std::lower_bound(v.begin(), v.end(), atom);
  if (it == v.end() || *it != atom) v.insert(it, atom);
}

StateId Carrier::state_index(const std::string& name) const {
  for (int i = 0; i < n_states(); ++i)
    if (states[i] == name) return i;
  throw UnknownState(name);
}

void Carrier::check_state(StateId s) const {
  if (s < 0 || s >= n_states())
    throw UnknownState("#" + std::to_string(s));
}

StateSet Carrier::atom_states(const std::string& atom) const {
  StateSet r;
  for (StateId s = 0; s < n_states(); ++s)
    if (labeling.has(s, atom)) r.insert(s);
  return r;
}

Carrier make_carrier(std::vector<std::string> states, std::vector<std::string> agents) {
  if (states.empty()) throw Error("state set must be nonempty");
  std::set<std::string> seen;
  for (const auto& s : states)
    if (!seen.insert(s).second) throw Error("duplicate state name: '" + s + "'");
  Labeling lab(static_cast<int>(states.size()));
  return Carrier{std::move(states), AgentUniverse(std::move(agents)), std::move(lab)};
}

std::string PropertySignature::to_string() const {
  std::string r;
  if (serial) r += 'S';
  if (independent) r += 'I';
  if (deterministic) r += 'D';
  return r;
}

PropertySignature PropertySignature::parse(const std::string& s) {
  PropertySignature p;
  for (char c : s) {
    if (c == 'S' && !p.serial)
      p.serial = true;
    else if (c == 'I' && !p.independent)
      p.independent = true;
    else if (c == 'D' && !p.deterministic)
      p.deterministic = true;
    else
      throw Error("bad property signature: '" + s + "'");
  }
  return p;
}

std::vector<PropertySignature> PropertySignature::all_eight() {
  std::vector<PropertySignature> v;
  for (int m = 0; m < 8; ++m)
    v.push_back({(m & 1) != 0, (m & 2) != 0, (m & 4) != 0});
  return v;
}

}  // namespace clw
