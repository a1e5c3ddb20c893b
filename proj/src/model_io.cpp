#include "clw/model_io.hpp"

#include <fstream>

namespace clw {

namespace {

std::vector<std::string> string_list(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw BadModelFile(std::string("missing or non-array field '") + field + "'");
  std::vector<std::string> v;
  for (const auto& e : j[field]) {
    if (!e.is_string()) throw BadModelFile(std::string("non-string entry in '") + field + "'");
    v.push_back(e.get<std::string>());
  }
  return v;
}

Carrier load_carrier(const Json& j) {
  Carrier car = make_carrier(string_list(j, "states"), string_list(j, "agents"));
  if (j.contains("labeling")) {
    if (!j["labeling"].is_object()) throw BadModelFile("'labeling' must be an object");
    for (const auto& [state, atoms] : j["labeling"].items()) {
      StateId s = car.state_index(state);
      for (const auto& a : atoms) {
        std::string atom = a.get<std::string>();
        if (!is_token(atom)) throw BadModelFile("bad atom name: '" + atom + "'");
        car.labeling.add(s, atom);
      }
    }
  }
  return car;
}

StateSet load_state_set(const Json& j, const Carrier& car) {
  StateSet r;
  if (!j.is_array()) throw BadModelFile("expected an array of states");
  for (const auto& e : j) r.insert(car.state_index(e.get<std::string>()));
  return r;
}

SetFamily load_family(const Json& j, const Carrier& car) {
  SetFamily f;
  if (!j.is_array()) throw BadModelFile("expected an array of state sets");
  for (const auto& e : j) f.insert(load_state_set(e, car));
  return f;
}

std::vector<StateSet> load_successor(const Json& j, const Carrier& car) {
  std::vector<StateSet> suc(car.n_states());
  if (j.contains("successor")) {
    for (const auto& [state, targets] : j["successor"].items())
      suc[car.state_index(state)] = load_state_set(targets, car);
  }
  return suc;
}

ActionModel load_action(const Json& j) {
  ActionModel m = make_action_model(load_carrier(j), ActionUniverse(string_list(j, "actions")));
  const auto& agents = m.carrier.agents;
  int nac = m.actions.size();
  if (j.contains("availability"))
    for (const auto& [ck, per_state] : j["availability"].items()) {
      Coalition c = coalition_from_key(ck, agents);
      for (const auto& [state, jas] : per_state.items()) {
        StateId s = m.carrier.state_index(state);
        for (const auto& jk : jas) {
          JointAction ja = joint_action_from_key(jk.get<std::string>(), c, agents, m.actions);
          m.table(c).available[s][ja_index(ja, nac)] = 1;
        }
      }
    }
  if (j.contains("outcome"))
    for (const auto& [ck, per_state] : j["outcome"].items()) {
      Coalition c = coalition_from_key(ck, agents);
      for (const auto& [state, per_ja] : per_state.items()) {
        StateId s = m.carrier.state_index(state);
        for (const auto& [jk, targets] : per_ja.items()) {
          JointAction ja = joint_action_from_key(jk, c, agents, m.actions);
          m.table(c).outcome[s][ja_index(ja, nac)] = load_state_set(targets, m.carrier);
        }
      }
    }
  m.validate();
  return m;
}

NeighborhoodModel load_neighborhood(const Json& j) {
  NeighborhoodModel m = make_neighborhood_model(load_carrier(j));
  if (j.contains("neighborhood"))
    for (const auto& [ck, per_state] : j["neighborhood"].items()) {
      Coalition c = coalition_from_key(ck, m.carrier.agents);
      for (const auto& [state, fam] : per_state.items())
        m.neighborhood[c.mask][m.carrier.state_index(state)] = load_family(fam, m.carrier);
    }
  m.validate();
  return m;
}

GrandFirstActionModel load_gam(const Json& j) {
  GrandFirstActionModel g =
      make_gam(load_carrier(j), ActionUniverse(string_list(j, "actions")));
  const auto& agents = g.carrier.agents;
  Coalition ag = agents.grand();
  int nac = g.actions.size();
  if (j.contains("outcome_grand"))
    for (const auto& [state, per_profile] : j["outcome_grand"].items()) {
      StateId s = g.carrier.state_index(state);
      for (const auto& [pk, targets] : per_profile.items()) {
        JointAction ja = joint_action_from_key(pk, ag, agents, g.actions);
        g.outcome_grand[s][ja_index(ja, nac)] = load_state_set(targets, g.carrier);
      }
    }
  g.validate();
  return g;
}

SingleFirstActionModel load_sam(const Json& j) {
  SingleFirstActionModel m =
      make_sam(load_carrier(j), ActionUniverse(string_list(j, "actions")));
  m.successor = load_successor(j, m.carrier);
  if (j.contains("outcome_agent"))
    for (const auto& [agent, per_state] : j["outcome_agent"].items()) {
      int a = m.carrier.agents.index_of(agent);
      for (const auto& [state, per_action] : per_state.items()) {
        StateId s = m.carrier.state_index(state);
        for (const auto& [action, targets] : per_action.items())
          m.outcome_agent[a][s][m.actions.index_of(action)] =
              load_state_set(targets, m.carrier);
      }
    }
  m.validate();
  return m;
}

SingleFirstNeighborhoodModel load_snm(const Json& j) {
  SingleFirstNeighborhoodModel m = make_snm(load_carrier(j));
  m.successor = load_successor(j, m.carrier);
  if (j.contains("neighborhood_agent"))
    for (const auto& [agent, per_state] : j["neighborhood_agent"].items()) {
      int a = m.carrier.agents.index_of(agent);
      for (const auto& [state, fam] : per_state.items())
        m.neighborhood_agent[a][m.carrier.state_index(state)] = load_family(fam, m.carrier);
    }
  m.validate();
  return m;
}

Json states_json(const StateSet& set, const Carrier& car) {
  Json arr = Json::array();
  set.for_each([&](StateId s) { arr.push_back(car.states[s]); });
  return arr;
}

Json family_json(const SetFamily& fam, const Carrier& car) {
  Json arr = Json::array();
  for (const auto& y : fam.members()) arr.push_back(states_json(y, car));
  return arr;
}

Json carrier_json(const Carrier& car) {
  Json j;
  j["agents"] = car.agents.names();
  j["states"] = car.states;
  Json lab = Json::object();
  for (StateId s = 0; s < car.n_states(); ++s)
    if (!car.labeling.atoms(s).empty()) lab[car.states[s]] = car.labeling.atoms(s);
  j["labeling"] = lab;
  return j;
}

Json successor_json(const std::vector<StateSet>& suc, const Carrier& car) {
  Json j = Json::object();
  for (StateId s = 0; s < car.n_states(); ++s)
    if (!suc[s].empty()) j[car.states[s]] = states_json(suc[s], car);
  return j;
}

}  // namespace

AnyModel load_model(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw BadModelFile("model document needs a string 'kind'");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "action") return load_action(j);
  if (kind == "neighborhood") return load_neighborhood(j);
  if (kind == "gam") return load_gam(j);
  if (kind == "sam") return load_sam(j);
  if (kind == "snm") return load_snm(j);
  throw BadModelFile("unknown model kind: '" + kind + "'");
}

AnyModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadModelFile("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw BadModelFile("JSON parse error in '" + path + "': " + e.what());
  }
  return load_model(j);
}

Json to_json(const ActionModel& m) {
  Json j = carrier_json(m.carrier);
  j["kind"] = "action";
  j["actions"] = m.actions.names();
  int nac = m.actions.size();
  Json avail = Json::object(), outcome = Json::object();
  for (int c = 0; c < m.carrier.agents.coalition_count(); ++c) {
    Coalition co = Coalition::of_mask(c);
    std::string ck = coalition_key(co, m.carrier.agents);
    Json per_state_av = Json::object(), per_state_out = Json::object();
    for (StateId s = 0; s < m.carrier.n_states(); ++s) {
      Json jas = Json::array(), per_ja = Json::object();
      for (int ja = 0; ja < static_cast<int>(m.tables[c].available[s].size()); ++ja) {
        std::string jk =
            joint_action_key(ja_from_index(co, ja, nac), m.carrier.agents, m.actions);
        if (m.tables[c].available[s][ja]) jas.push_back(jk);
        if (!m.tables[c].outcome[s][ja].empty())
          per_ja[jk] = states_json(m.tables[c].outcome[s][ja], m.carrier);
      }
      if (!jas.empty()) per_state_av[m.carrier.states[s]] = jas;
      if (!per_ja.empty()) per_state_out[m.carrier.states[s]] = per_ja;
    }
    if (!per_state_av.empty()) avail[ck] = per_state_av;
    if (!per_state_out.empty()) outcome[ck] = per_state_out;
  }
  j["availability"] = avail;
  j["outcome"] = outcome;
  return j;
}

Json to_json(const NeighborhoodModel& m) {
  Json j = carrier_json(m.carrier);
  j["kind"] = "neighborhood";
  Json nei = Json::object();
  for (int c = 0; c < m.carrier.agents.coalition_count(); ++c) {
    Json per_state = Json::object();
    for (StateId s = 0; s < m.carrier.n_states(); ++s)
      if (!m.neighborhood[c][s].empty())
        per_state[m.carrier.states[s]] = family_json(m.neighborhood[c][s], m.carrier);
    if (!per_state.empty())
      nei[coalition_key(Coalition::of_mask(c), m.carrier.agents)] = per_state;
  }
  j["neighborhood"] = nei;
  return j;
}

Json to_json(const GrandFirstActionModel& m) {
  Json j = carrier_json(m.carrier);
  j["kind"] = "gam";
  j["actions"] = m.actions.names();
  Coalition ag = m.carrier.agents.grand();
  int nac = m.actions.size();
  Json og = Json::object();
  for (StateId s = 0; s < m.carrier.n_states(); ++s) {
    Json per_profile = Json::object();
    for (int p = 0; p < static_cast<int>(m.outcome_grand[s].size()); ++p)
      if (!m.outcome_grand[s][p].empty())
        per_profile[joint_action_key(ja_from_index(ag, p, nac), m.carrier.agents,
                                     m.actions)] = states_json(m.outcome_grand[s][p], m.carrier);
    if (!per_profile.empty()) og[m.carrier.states[s]] = per_profile;
  }
  j["outcome_grand"] = og;
  return j;
}

Json to_json(const SingleFirstActionModel& m) {
  Json j = carrier_json(m.carrier);
  j["kind"] = "sam";
  j["actions"] = m.actions.names();
  j["successor"] = successor_json(m.successor, m.carrier);
  Json oa = Json::object();
  for (int a = 0; a < m.carrier.agents.size(); ++a) {
    Json per_state = Json::object();
    for (StateId s = 0; s < m.carrier.n_states(); ++s) {
      Json per_action = Json::object();
      for (int k = 0; k < m.actions.size(); ++k)
        if (!m.outcome_agent[a][s][k].empty())
          per_action[m.actions.name(k)] = states_json(m.outcome_agent[a][s][k], m.carrier);
      if (!per_action.empty()) per_state[m.carrier.states[s]] = per_action;
    }
    if (!per_state.empty()) oa[m.carrier.agents.name(a)] = per_state;
  }
  j["outcome_agent"] = oa;
  return j;
}

Json to_json(const SingleFirstNeighborhoodModel& m) {
  Json j = carrier_json(m.carrier);
  j["kind"] = "snm";
  j["successor"] = successor_json(m.successor, m.carrier);
  Json na = Json::object();
  for (int a = 0; a < m.carrier.agents.size(); ++a) {
    Json per_state = Json::object();
    for (StateId s = 0; s < m.carrier.n_states(); ++s)
      if (!m.neighborhood_agent[a][s].empty())
        per_state[m.carrier.states[s]] = family_json(m.neighborhood_agent[a][s], m.carrier);
    if (!per_state.empty()) na[m.carrier.agents.name(a)] = per_state;
  }
  j["neighborhood_agent"] = na;
  return j;
}

Json to_json(const AnyModel& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

std::string kind_of(const AnyModel& m) {
  struct Visitor {
    std::string operator()(const ActionModel&) { return "action"; }
    std::string operator()(const NeighborhoodModel&) { return "neighborhood"; }
    std::string operator()(const GrandFirstActionModel&) { return "gam"; }
    std::string operator()(const SingleFirstActionModel&) { return "sam"; }
    std::string operator()(const SingleFirstNeighborhoodModel&) { return "snm"; }
  };
  return std::visit(Visitor{}, m);
}

}  // namespace clw
