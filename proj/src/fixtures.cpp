#include "clw/fixtures.hpp"

namespace clw::fixtures {

namespace {

struct Act {
  const char* agent;
  const char* action;
};

void edge(GrandFirstActionModel& g, const char* state, std::initializer_list<Act> acts,
          std::initializer_list<const char*> targets) {
  JointAction ja;
  ja.coalition = g.carrier.agents.grand();
  for (const Act& a : acts)
    ja.act[g.carrier.agents.index_of(a.agent)] =
        static_cast<std::uint16_t>(g.actions.index_of(a.action));
  StateSet& out = g.outcome_grand[g.carrier.state_index(state)][ja_index(ja, g.actions.size())];
  for (const char* t : targets) out.insert(g.carrier.state_index(t));
}

void label(Carrier& car, const char* state, std::initializer_list<const char*> atoms) {
  for (const char* a : atoms) car.labeling.add(car.state_index(state), a);
}

StateSet states_of(const Carrier& car, std::initializer_list<const char*> names) {
  StateSet r;
  for (const char* n : names) r.insert(car.state_index(n));
  return r;
}

void agent_out(SingleFirstActionModel& m, const char* agent, const char* state,
               const char* action, std::initializer_list<const char*> targets) {
  m.outcome_agent[m.carrier.agents.index_of(agent)][m.carrier.state_index(state)]
                 [m.actions.index_of(action)] = states_of(m.carrier, targets);
}

Carrier m1_carrier() {
  Carrier car = make_carrier({"s0", "s1", "s2"}, {"a", "b"});
  label(car, "s0", {"p", "q"});
  label(car, "s1", {"p"});
  label(car, "s2", {"q"});
  return car;
}

}  // namespace

GrandFirstActionModel m1() {
  GrandFirstActionModel g =
      make_gam(m1_carrier(), ActionUniverse({"a1", "a2", "b1", "b2"}));
  edge(g, "s0", {{"a", "a1"}, {"b", "b1"}}, {"s1"});
  edge(g, "s0", {{"a", "a2"}, {"b", "b2"}}, {"s1"});
  edge(g, "s0", {{"a", "a1"}, {"b", "b2"}}, {"s2"});
  edge(g, "s0", {{"a", "a2"}, {"b", "b1"}}, {"s2"});
  edge(g, "s1", {{"a", "a1"}, {"b", "b1"}}, {"s1"});
  edge(g, "s2", {{"a", "a1"}, {"b", "b1"}}, {"s2"});
  return g;
}

GrandFirstActionModel gam2() {
  GrandFirstActionModel g =
      make_gam(m1_carrier(), ActionUniverse({"a1", "a2", "b1", "b2"}));
  edge(g, "s0", {{"a", "a1"}, {"b", "b2"}}, {"s1"});
  edge(g, "s0", {{"a", "a2"}, {"b", "b1"}}, {"s1"});
  edge(g, "s0", {{"a", "a1"}, {"b", "b1"}}, {"s2"});
  edge(g, "s0", {{"a", "a2"}, {"b", "b2"}}, {"s2"});
  edge(g, "s1", {{"a", "a1"}, {"b", "b1"}}, {"s1"});
  edge(g, "s2", {{"a", "a1"}, {"b", "b1"}}, {"s2"});
  return g;
}

namespace {
Carrier lock_carrier() {
  Carrier car = make_carrier({"s1", "s2", "s3"}, {"a", "b"});
  label(car, "s1", {"c_f", "c_b"});
  label(car, "s2", {"c_f"});
  label(car, "s3", {"c_b"});
  return car;
}
const std::vector<std::string>& lock_actions() {
  static const std::vector<std::string> v{"skip", "open_f", "close_f", "open_b",
                                          "close_b"};
  return v;
}
}  // namespace

GrandFirstActionModel lock() {
  GrandFirstActionModel g = make_gam(lock_carrier(), ActionUniverse(lock_actions()));
  edge(g, "s1", {{"a", "skip"}, {"b", "skip"}}, {"s1"});
  edge(g, "s1", {{"a", "skip"}, {"b", "open_b"}}, {"s2"});
  edge(g, "s1", {{"a", "open_f"}, {"b", "skip"}}, {"s3"});
  edge(g, "s2", {{"a", "skip"}, {"b", "skip"}}, {"s2"});
  edge(g, "s2", {{"a", "skip"}, {"b", "close_b"}}, {"s1"});
  edge(g, "s3", {{"a", "skip"}, {"b", "skip"}}, {"s3"});
  edge(g, "s3", {{"a", "close_f"}, {"b", "skip"}}, {"s1"});
  return g;
}

SingleFirstActionModel lock_sam() {
  SingleFirstActionModel m = make_sam(lock_carrier(), ActionUniverse(lock_actions()));
  m.successor = {states_of(m.carrier, {"s1", "s2", "s3"}),
                 states_of(m.carrier, {"s1", "s2"}), states_of(m.carrier, {"s1", "s3"})};
  agent_out(m, "a", "s1", "skip", {"s1", "s2"});
  agent_out(m, "a", "s1", "open_f", {"s3"});
  agent_out(m, "b", "s1", "skip", {"s1", "s3"});
  agent_out(m, "b", "s1", "open_b", {"s2"});
  agent_out(m, "a", "s2", "skip", {"s1", "s2"});
  agent_out(m, "b", "s2", "skip", {"s2"});
  agent_out(m, "b", "s2", "close_b", {"s1"});
  agent_out(m, "a", "s3", "skip", {"s3"});
  agent_out(m, "a", "s3", "close_f", {"s1"});
  agent_out(m, "b", "s3", "skip", {"s1", "s3"});
  m.validate();
  return m;
}

namespace {
Carrier proc_carrier() {
  Carrier car = make_carrier({"s1", "s2", "s3", "s4"}, {"a", "b"});
  label(car, "s1", {"x1", "y1"});
  label(car, "s2", {"x1", "y0"});
  label(car, "s3", {"x0", "y1"});
  label(car, "s4", {"x0", "y0"});
  return car;
}
const std::vector<std::string>& proc_actions() {
  static const std::vector<std::string> v{"skip", "x:=1", "y:=1"};
  return v;
}
}  // namespace

GrandFirstActionModel proc() {
  GrandFirstActionModel g = make_gam(proc_carrier(), ActionUniverse(proc_actions()));
  edge(g, "s1", {{"a", "skip"}, {"b", "skip"}}, {"s1"});
  edge(g, "s2", {{"a", "skip"}, {"b", "skip"}}, {"s2"});
  edge(g, "s2", {{"a", "skip"}, {"b", "y:=1"}}, {"s1"});
  edge(g, "s3", {{"a", "skip"}, {"b", "skip"}}, {"s3"});
  edge(g, "s3", {{"a", "x:=1"}, {"b", "skip"}}, {"s1"});
  edge(g, "s4", {{"a", "skip"}, {"b", "skip"}}, {"s4"});
  edge(g, "s4", {{"a", "x:=1"}, {"b", "y:=1"}}, {"s1"});
  edge(g, "s4", {{"a", "x:=1"}, {"b", "skip"}}, {"s2"});
  edge(g, "s4", {{"a", "skip"}, {"b", "y:=1"}}, {"s3"});
  return g;
}

SingleFirstActionModel proc_sam() {
  SingleFirstActionModel m = make_sam(proc_carrier(), ActionUniverse(proc_actions()));
  m.successor = {states_of(m.carrier, {"s1"}), states_of(m.carrier, {"s1", "s2"}),
                 states_of(m.carrier, {"s1", "s3"}),
                 states_of(m.carrier, {"s1", "s2", "s3", "s4"})};
  agent_out(m, "a", "s1", "skip", {"s1"});
  agent_out(m, "b", "s1", "skip", {"s1"});
  agent_out(m, "a", "s2", "skip", {"s1", "s2"});
  agent_out(m, "b", "s2", "skip", {"s2"});
  agent_out(m, "b", "s2", "y:=1", {"s1"});
  agent_out(m, "a", "s3", "skip", {"s3"});
  agent_out(m, "a", "s3", "x:=1", {"s1"});
  agent_out(m, "b", "s3", "skip", {"s1", "s3"});
  agent_out(m, "a", "s4", "skip", {"s3", "s4"});
  agent_out(m, "a", "s4", "x:=1", {"s1", "s2"});
  agent_out(m, "b", "s4", "skip", {"s2", "s4"});
  agent_out(m, "b", "s4", "y:=1", {"s1", "s3"});
  m.validate();
  return m;
}

SingleFirstNeighborhoodModel n1() {
  SingleFirstNeighborhoodModel m =
      make_snm(make_carrier({"s0", "s1", "s2", "s3"}, {"a", "b"}));
  m.successor[0] = states_of(m.carrier, {"s1", "s2", "s3"});
  auto& nei_a = m.neighborhood_agent[m.carrier.agents.index_of("a")][0];
  nei_a.insert(states_of(m.carrier, {"s1", "s2"}));
  nei_a.insert(states_of(m.carrier, {"s2", "s3"}));
  auto& nei_b = m.neighborhood_agent[m.carrier.agents.index_of("b")][0];
  nei_b.insert(states_of(m.carrier, {"s2"}));
  nei_b.insert(states_of(m.carrier, {"s1", "s3"}));
  m.validate();
  return m;
}

GrandFirstActionModel u1() {
  GrandFirstActionModel g =
      make_gam(make_carrier({"s"}, {"a"}), ActionUniverse({"a1", "a2"}));
  edge(g, "s", {{"a", "a1"}}, {"s"});
  edge(g, "s", {{"a", "a2"}}, {"s"});
  return g;
}

NeighborhoodModel nm1() {
  NeighborhoodModel m = make_neighborhood_model(m1_carrier());
  const auto& car = m.carrier;
  StateSet s12 = states_of(car, {"s1", "s2"});
  StateSet s1 = states_of(car, {"s1"});
  StateSet s2 = states_of(car, {"s2"});
  for (int c = 0; c < car.agents.coalition_count(); ++c) {
    // every coalition's effectivity at s1/s2 is the single loop target
    m.neighborhood[c][1].insert(s1);
    m.neighborhood[c][2].insert(s2);
  }
  Coalition ag = car.agents.grand();
  for (int c = 0; c < car.agents.coalition_count(); ++c) {
    if (c == ag.mask) {
      m.neighborhood[c][0].insert(s1);
      m.neighborhood[c][0].insert(s2);
    } else {
      m.neighborhood[c][0].insert(s12);
    }
  }
  return m;
}

SingleFirstNeighborhoodModel loop_snm() {
  SingleFirstNeighborhoodModel m = make_snm(make_carrier({"s"}, {"a", "b"}));
  m.successor[0] = StateSet::single(0);
  for (auto& per_agent : m.neighborhood_agent) per_agent[0].insert(StateSet::single(0));
  m.validate();
  return m;
}

}  // namespace clw::fixtures
