// Command-line front end: evaluate formulas over model files, classify and
// transform models, check representations, and run the theorem suites.

#include <iostream>

#include <CLI11.hpp>

#include "clw/harness.hpp"

namespace {

using namespace clw;

AnyModel load(const std::string& path) { return load_model_file(path); }

const Carrier& carrier_of(const AnyModel& m) {
  return std::visit([](const auto& x) -> const Carrier& { return x.carrier; }, m);
}

bool is_action_kind(const AnyModel& m) {
  return std::holds_alternative<ActionModel>(m) ||
         std::holds_alternative<GrandFirstActionModel>(m) ||
         std::holds_alternative<SingleFirstActionModel>(m);
}

ActionModel as_action_model(const AnyModel& m) {
  if (const auto* am = std::get_if<ActionModel>(&m)) return *am;
  if (const auto* g = std::get_if<GrandFirstActionModel>(&m)) return to_action_model(*g);
  if (const auto* s = std::get_if<SingleFirstActionModel>(&m))
    return sam_to_action_model(*s);
  throw Error("expected an action-kind model (action, gam or sam)");
}

NeighborhoodModel as_neighborhood_model(const AnyModel& m) {
  if (const auto* nm = std::get_if<NeighborhoodModel>(&m)) return *nm;
  if (const auto* s = std::get_if<SingleFirstNeighborhoodModel>(&m))
    return snm_to_neighborhood_model(*s);
  throw Error("expected a neighborhood-kind model (neighborhood or snm)");
}

Coalition parse_coalition_arg(const std::string& text, const AgentUniverse& agents) {
  // same syntax as in formulas: {a,b}, {} or AG
  Formula f = parse("[" + text + "]T", agents);
  return agents.coalition_of(f.coalition_agents());
}

int cmd_eval(const std::string& file, const std::string& state, const std::string& formula) {
  AnyModel m = load(file);
  const Carrier& car = carrier_of(m);
  Formula f = parse(formula, car.agents);
  StateId s = car.state_index(state);
  bool truth = is_action_kind(m) ? eval_action(as_action_model(m), s, f)
                                 : eval_neighborhood(as_neighborhood_model(m), s, f);
  std::cout << (truth ? "true" : "false") << "\n";
  return truth ? 0 : 1;
}

int cmd_classify(const std::string& file) {
  AnyModel m = load(file);
  Json out;
  out["kind"] = kind_of(m);
  const Carrier& car = carrier_of(m);
  auto put_root = [&](const std::optional<StateId>& root) {
    out["tree_like"] = root.has_value();
    if (root) out["root"] = car.states[*root];
  };
  if (const auto* g = std::get_if<GrandFirstActionModel>(&m)) {
    out["signature"] = classify(*g).to_string();
    out["clear"] = is_clear_gam(*g);
    put_root(treelike_root_gam(*g));
  } else if (const auto* s = std::get_if<SingleFirstActionModel>(&m)) {
    GrandFirstActionModel g = sam_to_gam(*s);
    out["signature"] = classify(g).to_string();
    out["clear"] = is_clear_gam(g);
    put_root(treelike_root_gam(g));
  } else if (const auto* s = std::get_if<SingleFirstNeighborhoodModel>(&m)) {
    out["signature"] = snm_classify(*s).to_string();
    out["clear"] = is_clear_snm(*s);
    put_root(treelike_root_snm(*s));
  } else if (const auto* am = std::get_if<ActionModel>(&m)) {
    out["signature"] = signature_of(*am).to_string();
    out["clear"] = is_clear_action(*am);
    put_root(treelike_root_action(*am));
  } else {
    const auto& nm = std::get<NeighborhoodModel>(m);
    // the direct analogues over the stored tables
    bool serial = true, indep = true, det = true;
    int nc = nm.carrier.agents.coalition_count();
    for (int c = 0; c < nc; ++c)
      for (StateId s = 0; s < nm.carrier.n_states(); ++s) {
        if (nm.neighborhood[c][s].empty()) serial = false;
        for (int d = 0; d < nc; ++d) {
          if (c & d) continue;
          for (const auto& y1 : nm.neighborhood[c][s].members())
            for (const auto& y2 : nm.neighborhood[d][s].members())
              if (!y1.intersects(y2)) indep = false;
        }
      }
    for (StateId s = 0; s < nm.carrier.n_states(); ++s)
      for (const auto& y : nm.nei(nm.carrier.agents.grand(), s).members())
        if (!y.is_singleton()) det = false;
    out["signature"] = PropertySignature{serial, indep, det}.to_string();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_derive(const std::string& file, const std::string& coalition_text,
               std::string what) {
  AnyModel m = load(file);
  const Carrier& car = carrier_of(m);
  if (what.empty()) what = is_action_kind(m) ? "outcome" : "neighborhood";
  Json out;
  out["what"] = what;

  if (what == "successor") {
    std::vector<StateSet> suc;
    if (const auto* g = std::get_if<GrandFirstActionModel>(&m))
      suc = successor_map(*g);
    else if (const auto* s = std::get_if<SingleFirstActionModel>(&m))
      suc = s->successor;
    else if (const auto* s = std::get_if<SingleFirstNeighborhoodModel>(&m))
      suc = s->successor;
    else if (is_action_kind(m)) {
      ActionModel am = as_action_model(m);
      suc.assign(car.n_states(), StateSet{});
      const auto& t = am.table(car.agents.grand());
      for (StateId s = 0; s < car.n_states(); ++s)
        for (const auto& o : t.outcome[s]) suc[s].unite_in(o);
    } else {
      throw Error("successor is undefined for a plain neighborhood model");
    }
    Json table = Json::object();
    for (StateId s = 0; s < car.n_states(); ++s) {
      Json arr = Json::array();
      suc[s].for_each([&](StateId t) { arr.push_back(car.states[t]); });
      table[car.states[s]] = arr;
    }
    out["table"] = table;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  Coalition c = parse_coalition_arg(coalition_text, car.agents);
  out["coalition"] = coalition_key(c, car.agents);
  if (what == "outcome" || what == "availability") {
    ActionModel am = as_action_model(m);
    int nac = am.actions.size();
    const CoalitionTable& t = am.table(c);
    Json table = Json::object();
    for (StateId s = 0; s < car.n_states(); ++s) {
      if (what == "availability") {
        Json arr = Json::array();
        for (std::size_t j = 0; j < t.available[s].size(); ++j)
          if (t.available[s][j])
            arr.push_back(joint_action_key(ja_from_index(c, static_cast<int>(j), nac),
                                           car.agents, am.actions));
        table[car.states[s]] = arr;
      } else {
        Json per_ja = Json::object();
        for (std::size_t j = 0; j < t.outcome[s].size(); ++j) {
          if (t.outcome[s][j].empty()) continue;
          Json arr = Json::array();
          t.outcome[s][j].for_each([&](StateId u) { arr.push_back(car.states[u]); });
          per_ja[joint_action_key(ja_from_index(c, static_cast<int>(j), nac), car.agents,
                                  am.actions)] = arr;
        }
        table[car.states[s]] = per_ja;
      }
    }
    out["table"] = table;
  } else if (what == "neighborhood") {
    NeighborhoodModel nm = as_neighborhood_model(m);
    Json table = Json::object();
    for (StateId s = 0; s < car.n_states(); ++s) {
      Json fam = Json::array();
      for (const auto& y : nm.nei(c, s).members()) {
        Json arr = Json::array();
        y.for_each([&](StateId u) { arr.push_back(car.states[u]); });
        fam.push_back(arr);
      }
      table[car.states[s]] = fam;
    }
    out["table"] = table;
  } else {
    throw Error("unknown table: '" + what + "'");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_transform(const std::string& file, const std::string& to) {
  AnyModel m = load(file);
  auto to_sam_checked = [&](const GrandFirstActionModel& g) {
    SingleFirstActionModel sam = gam_to_sam(g);
    if (!(sam_to_gam(sam) == g))
      throw Error(
          "model is not single-coalition-first: coalition outcomes do not "
          "compose from the agents' outcomes");
    return sam;
  };
  Json out;
  if (to == "gam") {
    if (const auto* g = std::get_if<GrandFirstActionModel>(&m))
      out = to_json(*g);
    else if (const auto* s = std::get_if<SingleFirstActionModel>(&m))
      out = to_json(sam_to_gam(*s));
    else
      throw Error("transform --to gam expects a gam or sam model");
  } else if (to == "sam") {
    if (const auto* s = std::get_if<SingleFirstActionModel>(&m))
      out = to_json(*s);
    else if (const auto* g = std::get_if<GrandFirstActionModel>(&m))
      out = to_json(to_sam_checked(*g));
    else if (const auto* s = std::get_if<SingleFirstNeighborhoodModel>(&m))
      out = to_json(snm_to_sam(*s));
    else
      throw Error("transform --to sam expects a gam, sam or snm model");
  } else if (to == "snm") {
    if (const auto* s = std::get_if<SingleFirstNeighborhoodModel>(&m))
      out = to_json(*s);
    else if (const auto* s = std::get_if<SingleFirstActionModel>(&m))
      out = to_json(sam_to_snm(*s));
    else if (const auto* g = std::get_if<GrandFirstActionModel>(&m))
      out = to_json(sam_to_snm(to_sam_checked(*g)));
    else
      throw Error("transform --to snm expects a gam, sam or snm model");
  } else if (to == "alpha") {
    if (const auto* nm = std::get_if<NeighborhoodModel>(&m))
      out = to_json(superset_closure(*nm));
    else if (const auto* s = std::get_if<SingleFirstNeighborhoodModel>(&m))
      out = to_json(superset_closure(snm_to_neighborhood_model(*s)));
    else
      out = to_json(effectivity_as_neighborhood(carrier_of(m),
                                                alpha_effectivity(as_action_model(m))));
  } else {
    throw Error("unknown target kind: '" + to + "'");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_unravel(const std::string& file, const std::string& from, int depth) {
  AnyModel m = load(file);
  GrandFirstActionModel g = [&] {
    if (const auto* gp = std::get_if<GrandFirstActionModel>(&m)) return *gp;
    if (const auto* s = std::get_if<SingleFirstActionModel>(&m)) return sam_to_gam(*s);
    throw Error("unravel expects a gam or sam model");
  }();
  UnravelResult u = unravel(g, g.carrier.state_index(from), depth);
  std::cout << to_json(u.model).dump(2) << "\n";
  return 0;
}

int cmd_represent(const std::string& file_a, const std::string& file_b, bool alpha) {
  AnyModel a = load(file_a), b = load(file_b);
  const AnyModel& action_side = is_action_kind(a) ? a : b;
  const AnyModel& nei_side = is_action_kind(a) ? b : a;
  ActionModel am = as_action_model(action_side);
  NeighborhoodModel nm = as_neighborhood_model(nei_side);
  auto mismatch = alpha ? alpha_mismatch(nm, am) : z_mismatch(nm, am);
  if (!mismatch) {
    std::cout << (alpha ? "alpha-represents" : "z-represents") << "\n";
    return 0;
  }
  std::cout << "no" << "\n";
  Json detail;
  detail["coalition"] = coalition_key(mismatch->coalition, am.carrier.agents);
  detail["state"] = am.carrier.states[mismatch->state];
  auto fam = [&](const SetFamily& f) {
    Json arr = Json::array();
    for (const auto& y : f.members()) {
      Json inner = Json::array();
      y.for_each([&](StateId s) { inner.push_back(am.carrier.states[s]); });
      arr.push_back(inner);
    }
    return arr;
  };
  detail["effectivity"] = fam(mismatch->expected);
  detail["neighborhood"] = fam(mismatch->actual);
  std::cerr << "first mismatch: " << detail.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, long long count,
               bool exhaustive, bool serial) {
  GenSpec hints;
  hints.seed = seed;
  hints.count = count;
  hints.exhaustive = exhaustive;
  SuiteReport report =
      run_suite(suite, hints, serial ? ExecMode::Serial : ExecMode::Parallel);
  std::cout << report.to_json().dump(2) << "\n";
  for (const auto& c : report.checks)
    std::cerr << (c.pass ? "pass " : "FAIL ") << report.suite << "/" << c.name << " ("
              << c.checked << " checked, " << c.millis << " ms)\n";
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coalition logic workbench"};
  app.require_subcommand(1);

  std::string file, file_b, state, formula, coalition, what, to, suite;
  int depth = 0;
  bool alpha = false, exhaustive = false, serial = false;
  std::uint64_t seed = 1;
  long long count = -1;

  auto* eval = app.add_subcommand("eval", "evaluate a formula at a state");
  eval->add_option("model", file)->required();
  eval->add_option("state", state)->required();
  eval->add_option("formula", formula)->required();

  auto* classify = app.add_subcommand("classify", "signature, clearness, tree-likeness");
  classify->add_option("model", file)->required();

  auto* derive = app.add_subcommand("derive", "dump a derived table");
  derive->add_option("model", file)->required();
  derive->add_option("--coalition", coalition, "e.g. '{a,b}', '{}' or 'AG'");
  derive->add_option("--what", what, "outcome|availability|neighborhood|successor");

  auto* transform = app.add_subcommand("transform", "convert between model kinds");
  transform->add_option("model", file)->required();
  transform->add_option("--to", to, "snm|sam|gam|alpha")->required();

  auto* unravel = app.add_subcommand("unravel", "truncated tree unraveling");
  unravel->add_option("model", file)->required();
  unravel->add_option("--from", state)->required();
  unravel->add_option("--depth", depth)->required();

  auto* represent = app.add_subcommand("represent", "check a representation pair");
  represent->add_option("model-a", file)->required();
  represent->add_option("model-b", file_b)->required();
  represent->add_flag("--alpha", alpha, "check alpha representation");

  auto* verify = app.add_subcommand("verify", "run a theorem suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_flag("--exhaustive", exhaustive);
  verify->add_flag("--serial", serial, "use the serial reference kernels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return cmd_eval(file, state, formula);
    if (*classify) return cmd_classify(file);
    if (*derive) {
      if (what != "successor" && coalition.empty())
        throw clw::Error("--coalition is required for this table");
      return cmd_derive(file, coalition.empty() ? "{}" : coalition, what);
    }
    if (*transform) return cmd_transform(file, to);
    if (*unravel) return cmd_unravel(file, state, depth);
    if (*represent) return cmd_represent(file, file_b, alpha);
    if (*verify) return cmd_verify(suite, seed, count, exhaustive, serial);
  } catch (const clw::BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const clw::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\nregistered suites:\n";
    for (const auto& n : clw::suite_names()) std::cerr << "  " << n << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
