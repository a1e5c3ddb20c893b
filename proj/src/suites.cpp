#include <chrono>
#include <map>

#include "clw/fixtures.hpp"
#include "clw/harness.hpp"

// The registered theorem suites. Each suite is a list of named checks over
// model streams; per-model checks are pure, so the driver can run them on
// the OpenMP path or the serial reference path interchangeably.

namespace clw {

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

const char* kRowStateNames[] = {"s0", "s1", "s2", "s3"};

class Runner {
 public:
  Runner(std::string suite, const GenSpec& hints, ExecMode mode)
      : hints_(hints), mode_(mode) {
    report_.suite = std::move(suite);
    report_.mode = mode;
    start_ = now_ms();
  }

  long long count(long long dflt) const { return hints_.count > 0 ? hints_.count : dflt; }
  std::uint64_t seed() const { return hints_.seed; }
  bool exhaustive() const { return hints_.exhaustive; }
  ExecMode mode() const { return mode_; }

  GenSpec random_spec(GenSpec::Kind kind, int ns, int na, int nac, long long dflt) const {
    GenSpec s;
    s.kind = kind;
    s.n_states = ns;
    s.n_agents = na;
    s.n_actions = nac;
    s.seed = hints_.seed;
    s.count = count(dflt);
    return s;
  }

  GenSpec exhaustive_spec(GenSpec::Kind kind, int ns, int na, int nac) const {
    GenSpec s;
    s.kind = kind;
    s.n_states = ns;
    s.n_agents = na;
    s.n_actions = nac;
    s.exhaustive = true;
    return s;
  }

  template <class Model, class Fn>
  void over_stream(const std::string& name, Stream<Model> stream, Fn&& per_model,
                   const std::string& note = "") {
    double t0 = now_ms();
    auto scan = scan_stream(stream, mode_, per_model);
    CheckResult r;
    r.name = name;
    r.checked = scan.checked;
    r.pass = scan.fail_index < 0;
    if (!r.pass) {
      r.detail = note.empty() ? "invariant failed" : note;
      r.detail += " (model #" + std::to_string(scan.fail_index) + ")";
      r.countermodel = countermodel_json(AnyModel(*scan.fail_model), std::nullopt, "", r.detail);
    }
    r.millis = now_ms() - t0;
    report_.checks.push_back(std::move(r));
  }

  /// body returns a failure description, or nothing on success.
  void plain(const std::string& name,
             const std::function<std::optional<std::string>()>& body,
             long long checked = 1) {
    double t0 = now_ms();
    CheckResult r;
    r.name = name;
    r.checked = checked;
    auto fail = body();
    r.pass = !fail.has_value();
    if (fail) r.detail = *fail;
    r.millis = now_ms() - t0;
    report_.checks.push_back(std::move(r));
  }

  void push(CheckResult r) { report_.checks.push_back(std::move(r)); }

  SuiteReport finish() {
    report_.millis = now_ms() - start_;
    return std::move(report_);
  }

 private:
  GenSpec hints_;
  ExecMode mode_;
  SuiteReport report_;
  double start_ = 0;
};

const AgentUniverse& bank_universe() {
  static const AgentUniverse u({"a", "b"});
  return u;
}

const std::vector<Formula>& shared_bank() {
  static const std::vector<Formula> bank = formula_bank(bank_universe());
  return bank;
}

// ---------------------------------------------------------------- suites ---

SuiteReport suite_semantics_equivalence(const GenSpec& hints, ExecMode mode) {
  Runner run("semantics-equivalence", hints, mode);
  const auto& bank = shared_bank();

  auto sam_pairs_agree = [&](long long, const SingleFirstActionModel& m) {
    ActionModel am = sam_to_action_model(m);
    NeighborhoodModel nm = snm_to_neighborhood_model(sam_to_snm(m));
    for (const auto& f : bank)
      if (sat_action(am, f) != sat_neighborhood(nm, f)) return false;
    return true;
  };
  run.over_stream("sam-z-pair-truth",
                  sam_stream(run.random_spec(GenSpec::Kind::Sam, 3, 2, 2, 250)),
                  sam_pairs_agree, "action vs neighborhood truth differs");
  if (run.exhaustive())
    run.over_stream("sam-z-pair-truth-exhaustive",
                    sam_stream(run.exhaustive_spec(GenSpec::Kind::Sam, 2, 2, 2)),
                    sam_pairs_agree, "action vs neighborhood truth differs");

  run.over_stream(
      "alpha-pair-truth", sam_stream(run.random_spec(GenSpec::Kind::Sam, 3, 2, 2, 120)),
      [&](long long, const SingleFirstActionModel& m) {
        ActionModel am = sam_to_action_model(m);
        NeighborhoodModel closure = superset_closure(snm_to_neighborhood_model(sam_to_snm(m)));
        if (!alpha_represents(closure, am)) return false;
        for (const auto& f : bank)
          if (sat_action(am, f) != sat_neighborhood(closure, f)) return false;
        return true;
      },
      "alpha model disagrees with action model");

  // raw action models exercise explicit availability, including available
  // joint actions with empty outcomes (vacuously forcing everything)
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed());
    long long n = run.count(400);
    auto produced = std::make_shared<long long>(0);
    Stream<ActionModel> raw{[rng, produced, n]() -> std::optional<ActionModel> {
      if (*produced >= n) return std::nullopt;
      ++*produced;
      return random_action_model(*rng, 3, 2, 2, true);
    }};
    run.over_stream(
        "raw-z-pair-truth", std::move(raw),
        [&](long long, const ActionModel& am) {
          NeighborhoodModel nm =
              effectivity_as_neighborhood(am.carrier, actual_effectivity(am));
          if (!z_represents(nm, am)) return false;
          NeighborhoodModel closed = superset_closure(nm);
          for (const auto& f : bank) {
            StateSet sa = sat_action(am, f);
            if (sa != sat_neighborhood(nm, f)) return false;
            if (sa != sat_neighborhood(closed, f)) return false;  // closure fact
          }
          return true;
        },
        "actual-effectivity neighborhood model disagrees with raw action model");
  }
  return run.finish();
}

SuiteReport suite_gam_facts(const GenSpec& hints, ExecMode mode) {
  Runner run("gam-facts", hints, mode);

  auto facts_hold = [](long long, const GrandFirstActionModel& g) {
    ActionModel am = to_action_model(g);
    auto suc = successor_map(g);
    int nc = g.carrier.agents.coalition_count();
    int nac = g.actions.size();
    for (int c = 0; c < nc; ++c)
      for (StateId s = 0; s < g.carrier.n_states(); ++s) {
        StateSet u;
        for (const auto& o : am.tables[c].outcome[s]) u.unite_in(o);
        if (u != suc[s]) return false;  // general cover of suc
      }
    // inclusion for disjoint unions
    for (int c = 0; c < nc; ++c)
      for (int d = 0; d < nc; ++d) {
        if (c & d) continue;
        Coalition co = Coalition::of_mask(c), dp = Coalition::of_mask(d);
        int njc = ja_count(co, nac), njd = ja_count(dp, nac);
        for (StateId s = 0; s < g.carrier.n_states(); ++s)
          for (int jc = 0; jc < njc; ++jc)
            for (int jd = 0; jd < njd; ++jd) {
              int ju = ja_union_index(co, jc, dp, jd, nac);
              const StateSet& u = am.tables[c | d].outcome[s][ju];
              if (!u.subset_of(am.tables[c].outcome[s][jc]) ||
                  !u.subset_of(am.tables[d].outcome[s][jd]))
                return false;
            }
      }
    // inclusion in every member's outcome
    for (int c = 1; c < nc; ++c) {
      Coalition co = Coalition::of_mask(c);
      int nja = ja_count(co, nac);
      for (StateId s = 0; s < g.carrier.n_states(); ++s)
        for (int j = 0; j < nja; ++j) {
          bool ok = true;
          co.for_each([&](int a) {
            if (!am.tables[c].outcome[s][j].subset_of(
                    am.tables[1u << a].outcome[s][ja_digit(co, j, a, nac)]))
              ok = false;
          });
          if (!ok) return false;
        }
    }
    return true;
  };
  run.over_stream("cover-and-inclusion",
                  gam_stream(run.random_spec(GenSpec::Kind::Gam, 3, 2, 2, 400)),
                  facts_hold, "derived-table fact failed");
  if (run.exhaustive())
    run.over_stream("cover-and-inclusion-exhaustive",
                    gam_stream(run.exhaustive_spec(GenSpec::Kind::Gam, 2, 2, 2)),
                    facts_hold, "derived-table fact failed");

  run.plain("fig1-values", []() -> std::optional<std::string> {
    GrandFirstActionModel g = fixtures::m1();
    const Carrier& car = g.carrier;
    Coalition a = car.agents.coalition_of({"a"}), b = car.agents.coalition_of({"b"});
    int nac = g.actions.size();
    StateId s0 = car.state_index("s0");
    StateSet s12 = StateSet::single(car.state_index("s1"));
    s12.insert(car.state_index("s2"));
    auto out_a = derive_outcome(g, a), out_b = derive_outcome(g, b);
    JointAction a1 = ja_from_index(a, 0, nac);
    a1.act[0] = static_cast<std::uint16_t>(g.actions.index_of("a1"));
    JointAction b1;
    b1.coalition = b;
    b1.act[1] = static_cast<std::uint16_t>(g.actions.index_of("b1"));
    const StateSet& oa = out_a[s0][ja_index(a1, nac)];
    const StateSet& ob = out_b[s0][ja_index(b1, nac)];
    if (oa != s12) return "out_a(s0,a1) != {s1,s2}";
    if (ob != s12) return "out_b(s0,b1) != {s1,s2}";
    JointAction prof = join(a1, b1);
    const StateSet& og =
        g.outcome_grand[s0][ja_index(prof, nac)];
    if (og != StateSet::single(car.state_index("s1"))) return "out_AG(s0,(a1,b1)) != {s1}";
    if (oa.intersected(ob).subset_of(og))
      return "converse inclusion unexpectedly holds";
    return std::nullopt;
  });

  run.plain("fig2-noncompositional", []() -> std::optional<std::string> {
    GrandFirstActionModel g1 = fixtures::m1(), g2 = fixtures::gam2();
    StateId s0 = g1.carrier.state_index("s0");
    for (const char* agent : {"a", "b"}) {
      Coalition c = g1.carrier.agents.coalition_of({agent});
      if (derive_outcome(g1, c)[s0] != derive_outcome(g2, c)[s0])
        return "single-agent outcome tables differ at s0";
    }
    JointAction prof;
    prof.coalition = g1.carrier.agents.grand();
    prof.act[0] = static_cast<std::uint16_t>(g1.actions.index_of("a1"));
    prof.act[1] = static_cast<std::uint16_t>(g1.actions.index_of("b1"));
    int p = ja_index(prof, g1.actions.size());
    if (g1.outcome_grand[s0][p] == g2.outcome_grand[s0][p])
      return "grand-coalition outcomes unexpectedly agree";
    return std::nullopt;
  });
  return run.finish();
}

// One exhaustively enumerated outcome-row configuration at a single state:
// the condition sets of the three-way equivalence theorem only read the
// outcome rows at the state under test, so enumerating rows at one state
// covers every state of every model within the bounds.
struct RowScanDims {
  int ns, na, nac;
  std::vector<std::pair<int, int>> cells;  // (coalition mask, ja index)
  long long radix = 0, total = 0;

  explicit RowScanDims(int ns_, int na_, int nac_) : ns(ns_), na(na_), nac(nac_) {
    for (int c = 0; c < (1 << na); ++c) {
      int nja = ja_count(Coalition::of_mask(c), nac);
      for (int j = 0; j < nja; ++j) cells.emplace_back(c, j);
    }
    radix = 1LL << ns;
    total = 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (total > (3LL << 27)) throw BoundsExceeded("row scan space too large");
      total *= radix;
    }
  }
};

SuiteReport suite_sam_equivalence(const GenSpec& hints, ExecMode mode) {
  Runner run("sam-equivalence", hints, mode);

  std::vector<std::array<int, 3>> dims;
  for (int na = 1; na <= 2; ++na)
    for (int nac = 1; nac <= 2; ++nac)
      for (int ns = 1; ns <= (run.exhaustive() ? 3 : 2); ++ns) dims.push_back({ns, na, nac});

  for (auto [ns, na, nac] : dims) {
    RowScanDims d(ns, na, nac);
    double t0 = now_ms();
    long long fail = scan_first_failure(
        d.total, run.mode(),
        [&]() {
          return make_action_model(
              make_carrier(std::vector<std::string>(kRowStateNames, kRowStateNames + ns),
                           na == 1 ? std::vector<std::string>{"a"}
                                   : std::vector<std::string>{"a", "b"}),
              ActionUniverse(nac == 1 ? std::vector<std::string>{"x1"}
                                      : std::vector<std::string>{"x1", "x2"}));
        },
        [&](ActionModel& scratch, long long idx) {
          long long v = idx;
          for (const auto& [c, j] : d.cells) {
            scratch.tables[c].outcome[0][j] =
                StateSet::from_word(static_cast<std::uint64_t>(v % d.radix));
            v /= d.radix;
          }
          bool c1 = check_condition_set(scratch, 0, 1);
          bool c2 = check_condition_set(scratch, 0, 2);
          bool c3 = check_condition_set(scratch, 0, 3);
          return c1 == c2 && c2 == c3;
        });
    CheckResult r;
    r.name = "row-agreement-" + std::to_string(ns) + "s" + std::to_string(na) + "a" +
             std::to_string(nac) + "c";
    r.checked = fail < 0 ? d.total : fail + 1;
    r.pass = fail < 0;
    if (!r.pass) r.detail = "condition sets disagree at row #" + std::to_string(fail);
    r.millis = now_ms() - t0;
    run.push(std::move(r));
  }

  run.over_stream("gam-conditions-agree",
                  gam_stream(run.random_spec(GenSpec::Kind::Gam, 4, 2, 2, 300)),
                  [](long long, const GrandFirstActionModel& g) {
                    ActionModel am = to_action_model(g);
                    for (StateId s = 0; s < g.carrier.n_states(); ++s) {
                      bool c1 = check_condition_set(am, s, 1);
                      bool c2 = check_condition_set(am, s, 2);
                      bool c3 = check_condition_set(am, s, 3);
                      if (c1 != c2 || c2 != c3) return false;
                    }
                    return true;
                  },
                  "condition sets disagree");

  run.over_stream("sam-conditions-hold",
                  sam_stream(run.random_spec(GenSpec::Kind::Sam, 3, 2, 2, 300)),
                  [](long long, const SingleFirstActionModel& m) {
                    ActionModel am = sam_to_action_model(m);
                    for (StateId s = 0; s < m.carrier.n_states(); ++s)
                      for (int w = 1; w <= 3; ++w)
                        if (!check_condition_set(am, s, w)) return false;
                    return true;
                  },
                  "a derived single-coalition-first model fails its own conditions");

  run.plain("m1-witness", []() -> std::optional<std::string> {
    GrandFirstActionModel g = fixtures::m1();
    ActionModel am = to_action_model(g);
    StateId s0 = g.carrier.state_index("s0");
    for (int w = 1; w <= 3; ++w)
      if (check_condition_set(am, s0, w))
        return "condition set " + std::to_string(w) + " unexpectedly holds at s0";
    // the fusion clause is the specific failure: (a1,b1) fuses (a1,b2),(a2,b1)
    int nac = g.actions.size();
    Coalition ag = g.carrier.agents.grand();
    auto prof = [&](const char* x, const char* y) {
      JointAction ja;
      ja.coalition = ag;
      ja.act[0] = static_cast<std::uint16_t>(g.actions.index_of(x));
      ja.act[1] = static_cast<std::uint16_t>(g.actions.index_of(y));
      return ja_index(ja, nac);
    };
    StateSet both = g.outcome_grand[s0][prof("a1", "b2")].intersected(
        g.outcome_grand[s0][prof("a2", "b1")]);
    if (both.subset_of(g.outcome_grand[s0][prof("a1", "b1")]))
      return "fusion clause unexpectedly satisfied";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_snm_cover(const GenSpec& hints, ExecMode mode) {
  Runner run("snm-cover", hints, mode);
  auto cover_holds = [](long long, const SingleFirstNeighborhoodModel& m) {
    for (int c = 0; c < m.carrier.agents.coalition_count(); ++c)
      for (StateId s = 0; s < m.carrier.n_states(); ++s) {
        SetFamily fam = snm_derive_neighborhood_at(m, Coalition::of_mask(c), s);
        if (fam.contains_empty_set()) return false;
        if (fam.union_all() != m.successor[s]) return false;
      }
    return true;
  };
  run.over_stream("derived-cover",
                  snm_stream(run.random_spec(GenSpec::Kind::Snm, 3, 2, 2, 400)),
                  cover_holds, "derived neighborhood is not a cover of suc");
  run.over_stream("derived-cover-exhaustive",
                  snm_stream(run.exhaustive_spec(GenSpec::Kind::Snm, 2, 2, 2)),
                  cover_holds, "derived neighborhood is not a cover of suc");

  run.plain("n1-grand-product", []() -> std::optional<std::string> {
    SingleFirstNeighborhoodModel m = fixtures::n1();
    SetFamily fam = snm_derive_neighborhood_at(m, m.carrier.agents.grand(),
                                               m.carrier.state_index("s0"));
    SetFamily expect;
    for (const char* n : {"s1", "s2", "s3"})
      expect.insert(StateSet::single(m.carrier.state_index(n)));
    if (fam != expect) return "derived nei_AG(s0) != {{s1},{s2},{s3}}";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_representation_roundtrip(const GenSpec& hints, ExecMode mode) {
  Runner run("representation-roundtrip", hints, mode);

  run.over_stream("sam-to-snm-z",
                  sam_stream(run.random_spec(GenSpec::Kind::Sam, 3, 2, 2, 500)),
                  [](long long, const SingleFirstActionModel& m) {
                    return z_represents(snm_to_neighborhood_model(sam_to_snm(m)),
                                        sam_to_action_model(m));
                  },
                  "sam_to_snm does not z-represent its input");

  run.over_stream("snm-to-sam-z",
                  snm_stream(run.random_spec(GenSpec::Kind::Snm, 3, 2, 2, 500)),
                  [](long long, const SingleFirstNeighborhoodModel& m) {
                    return z_represents(snm_to_neighborhood_model(m),
                                        sam_to_action_model(snm_to_sam(m)));
                  },
                  "input does not z-represent snm_to_sam output");

  run.plain("fixture-roundtrips", []() -> std::optional<std::string> {
    if (!(sam_to_gam(fixtures::lock_sam()) == fixtures::lock()))
      return "lock_sam does not derive lock";
    if (!(sam_to_gam(fixtures::proc_sam()) == fixtures::proc()))
      return "proc_sam does not derive proc";
    if (!z_represents(snm_to_neighborhood_model(sam_to_snm(fixtures::lock_sam())),
                      sam_to_action_model(fixtures::lock_sam())))
      return "lock_sam z-representation fails";
    if (!z_represents(snm_to_neighborhood_model(fixtures::n1()),
                      sam_to_action_model(snm_to_sam(fixtures::n1()))))
      return "n1 does not z-represent its named action model";
    if (!z_represents(fixtures::nm1(), to_action_model(fixtures::m1())))
      return "nm1 does not z-represent m1";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_x_iff_x(const GenSpec& hints, ExecMode mode) {
  Runner run("x-iff-x", hints, mode);
  run.over_stream("sam-direction",
                  sam_stream(run.random_spec(GenSpec::Kind::Sam, 3, 2, 2, 400)),
                  [](long long, const SingleFirstActionModel& m) {
                    return signature_of(sam_to_action_model(m)) ==
                           snm_classify(sam_to_snm(m));
                  },
                  "signature differs between sam and its snm");
  run.over_stream("snm-direction",
                  snm_stream(run.random_spec(GenSpec::Kind::Snm, 3, 2, 2, 400)),
                  [](long long, const SingleFirstNeighborhoodModel& m) {
                    return snm_classify(m) ==
                           signature_of(sam_to_action_model(snm_to_sam(m)));
                  },
                  "signature differs between snm and its sam");
  return run.finish();
}

SuiteReport suite_clear_equivalences(const GenSpec& hints, ExecMode mode) {
  Runner run("clear-equivalences", hints, mode);

  auto gam_clear_agree = [](long long, const GrandFirstActionModel& g) {
    bool c1 = clear_condition(g, 1), c2 = clear_condition(g, 2), c3 = clear_condition(g, 3);
    return c1 == c2 && c2 == c3 && c3 == is_clear_gam(g);
  };
  run.over_stream("gam-three-way-exhaustive",
                  gam_stream(run.exhaustive_spec(GenSpec::Kind::Gam, 2, 2, 2)),
                  gam_clear_agree, "clearness conditions disagree");
  run.over_stream("gam-three-way-exhaustive-3s",
                  gam_stream(run.exhaustive_spec(GenSpec::Kind::Gam, 3, 1, 2)),
                  gam_clear_agree, "clearness conditions disagree");
  run.over_stream("gam-three-way-random",
                  gam_stream(run.random_spec(GenSpec::Kind::Gam, 4, 2, 2, 400)),
                  gam_clear_agree, "clearness conditions disagree");
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed());
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<GrandFirstActionModel> clear_stream{
        [rng, produced, n]() -> std::optional<GrandFirstActionModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_clear_gam(*rng, 4, 2, 2, true);
        }};
    run.over_stream("clear-gam-partition-fact", std::move(clear_stream),
                    [&](long long, const GrandFirstActionModel& g) {
                      if (!gam_clear_agree(0, g)) return false;
                      if (!is_clear_gam(g)) return false;  // generator contract
                      auto suc = successor_map(g);
                      for (int c = 0; c < g.carrier.agents.coalition_count(); ++c) {
                        auto out = derive_outcome(g, Coalition::of_mask(c));
                        for (StateId s = 0; s < g.carrier.n_states(); ++s) {
                          SetFamily image;
                          for (const auto& o : out[s]) image.insert(o);
                          if (!is_general_partition(image, suc[s])) return false;
                        }
                      }
                      return true;
                    },
                    "clear model whose outcome image is not a general partition");
  }

  run.plain("u1-witness", []() -> std::optional<std::string> {
    GrandFirstActionModel g = fixtures::u1();
    auto suc = successor_map(g);
    for (int c = 0; c < g.carrier.agents.coalition_count(); ++c) {
      auto out = derive_outcome(g, Coalition::of_mask(c));
      for (StateId s = 0; s < g.carrier.n_states(); ++s) {
        SetFamily image;
        for (const auto& o : out[s]) image.insert(o);
        if (!is_general_partition(image, suc[s]))
          return "outcome image is not a general partition";
      }
    }
    if (is_clear_gam(g)) return "u1 is unexpectedly clear";
    return std::nullopt;
  });

  auto snm_clear_agree = [](long long, const SingleFirstNeighborhoodModel& m) {
    bool c1 = clear_snm_condition(m, 1), c2 = clear_snm_condition(m, 2);
    return c1 == c2 && c1 == is_clear_snm(m);
  };
  run.over_stream("snm-two-way-exhaustive",
                  snm_stream(run.exhaustive_spec(GenSpec::Kind::Snm, 2, 2, 2)),
                  snm_clear_agree, "clearness conditions disagree");
  run.over_stream("snm-two-way-random",
                  snm_stream(run.random_spec(GenSpec::Kind::Snm, 4, 2, 2, 300)),
                  snm_clear_agree, "clearness conditions disagree");
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed() + 1);
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<SingleFirstNeighborhoodModel> cs{
        [rng, produced, n]() -> std::optional<SingleFirstNeighborhoodModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_clear_snm(*rng, 4, 2, true);
        }};
    run.over_stream("clear-snm-two-way", std::move(cs),
                    [&](long long i, const SingleFirstNeighborhoodModel& m) {
                      return is_clear_snm(m) && snm_clear_agree(i, m);
                    },
                    "clear generator output fails the clearness equivalence");
  }

  run.plain("n1-witness", []() -> std::optional<std::string> {
    SingleFirstNeighborhoodModel m = fixtures::n1();
    StateId s0 = m.carrier.state_index("s0");
    if (is_partition(m.neighborhood_agent[0][s0], m.successor[s0]))
      return "nei_a(s0) is unexpectedly a partition";
    SetFamily grand = snm_derive_neighborhood_at(m, m.carrier.agents.grand(), s0);
    if (!is_partition(grand, m.successor[s0]))
      return "nei_AG(s0) is unexpectedly not a partition";
    if (is_clear_snm(m)) return "n1 is unexpectedly clear";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_clear_representation(const GenSpec& hints, ExecMode mode) {
  Runner run("clear-representation", hints, mode);
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed());
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<GrandFirstActionModel> cs{
        [rng, produced, n]() -> std::optional<GrandFirstActionModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_clear_gam(*rng, 3, 2, 2, true);
        }};
    run.over_stream("clear-gam-to-clear-snm", std::move(cs),
                    [](long long, const GrandFirstActionModel& g) {
                      SingleFirstActionModel sam = gam_to_sam(g);
                      if (!(sam_to_gam(sam) == g)) return false;  // faithful embedding
                      SingleFirstNeighborhoodModel snm = sam_to_snm(sam);
                      if (!is_clear_snm(snm)) return false;
                      if (!z_represents(snm_to_neighborhood_model(snm), to_action_model(g)))
                        return false;
                      return classify(g) == snm_classify(snm);
                    },
                    "clear gam is not represented by a clear snm");
  }
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed() + 1);
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<SingleFirstNeighborhoodModel> cs{
        [rng, produced, n]() -> std::optional<SingleFirstNeighborhoodModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_clear_snm(*rng, 3, 2, true);
        }};
    run.over_stream("clear-snm-to-clear-gam", std::move(cs),
                    [](long long, const SingleFirstNeighborhoodModel& m) {
                      SingleFirstActionModel sam = snm_to_sam(m);
                      GrandFirstActionModel g = sam_to_gam(sam);
                      if (!is_clear_gam(g)) return false;
                      if (!z_represents(snm_to_neighborhood_model(m),
                                        sam_to_action_model(sam)))
                        return false;
                      return snm_classify(m) == classify(g);
                    },
                    "clear snm does not z-represent a clear gam");
  }
  run.plain("lock-is-clear", []() -> std::optional<std::string> {
    if (!is_clear_gam(fixtures::lock())) return "lock is unexpectedly not clear";
    if (!is_clear_snm(sam_to_snm(fixtures::lock_sam())))
      return "lock snm is unexpectedly not clear";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_tree_equivalences(const GenSpec& hints, ExecMode mode) {
  Runner run("tree-equivalences", hints, mode);

  auto gam_tree_agree = [](long long, const GrandFirstActionModel& g) {
    bool c1 = tree_condition_gam(g, 1), c2 = tree_condition_gam(g, 2),
         c3 = tree_condition_gam(g, 3);
    return c1 == c2 && c2 == c3 && c3 == is_treelike_gam(g);
  };
  run.over_stream("gam-three-way-exhaustive",
                  gam_stream(run.exhaustive_spec(GenSpec::Kind::Gam, 2, 2, 2)),
                  gam_tree_agree, "tree conditions disagree");
  run.over_stream("gam-three-way-exhaustive-3s",
                  gam_stream(run.exhaustive_spec(GenSpec::Kind::Gam, 3, 1, 2)),
                  gam_tree_agree, "tree conditions disagree");
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed());
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<GrandFirstActionModel> ts{
        [rng, produced, n]() -> std::optional<GrandFirstActionModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_tree_gam(*rng, 4, 2, 2, true);
        }};
    run.over_stream("tree-gam-all-conditions", std::move(ts),
                    [&](long long i, const GrandFirstActionModel& g) {
                      auto root = treelike_root_gam(g);
                      return root.has_value() && *root == 0 && gam_tree_agree(i, g);
                    },
                    "generated tree fails a tree condition");
  }

  // the arborescence criterion against plain bounded history counting
  run.over_stream("bounded-enumeration-crosscheck",
                  gam_stream(run.random_spec(GenSpec::Kind::Gam, 3, 2, 2, 120)),
                  [](long long, const GrandFirstActionModel& g) {
                    int ns = g.carrier.n_states();
                    bool by_enumeration = false;
                    for (StateId r = 0; r < ns && !by_enumeration; ++r) {
                      bool all_unique = true;
                      for (StateId s = 0; s < ns && all_unique; ++s)
                        all_unique =
                            enumerate_gam_histories(g, g.carrier.agents.grand(), r, s, ns)
                                .size() == 1;
                      by_enumeration = all_unique;
                    }
                    return by_enumeration == is_treelike_gam(g);
                  },
                  "arborescence check disagrees with history enumeration");

  auto snm_tree_agree = [](long long, const SingleFirstNeighborhoodModel& m) {
    bool c1 = tree_condition_snm(m, 1), c2 = tree_condition_snm(m, 2);
    return c1 == c2 && c1 == is_treelike_snm(m);
  };
  run.over_stream("snm-two-way-exhaustive",
                  snm_stream(run.exhaustive_spec(GenSpec::Kind::Snm, 2, 2, 2)),
                  snm_tree_agree, "tree conditions disagree");
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed() + 1);
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<SingleFirstNeighborhoodModel> ts{
        [rng, produced, n]() -> std::optional<SingleFirstNeighborhoodModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_tree_snm(*rng, 4, 2, true);
        }};
    run.over_stream("tree-snm-all-conditions", std::move(ts),
                    [&](long long i, const SingleFirstNeighborhoodModel& m) {
                      return is_treelike_snm(m) && snm_tree_agree(i, m);
                    },
                    "generated tree snm fails a tree condition");
  }
  return run.finish();
}

SuiteReport suite_tree_implies_clear(const GenSpec& hints, ExecMode mode) {
  Runner run("tree-implies-clear", hints, mode);

  auto implication = [](long long, const GrandFirstActionModel& g) {
    return !is_treelike_gam(g) || is_clear_gam(g);
  };
  run.over_stream("gam-implication-exhaustive",
                  gam_stream(run.exhaustive_spec(GenSpec::Kind::Gam, 2, 2, 2)),
                  implication, "tree-like model is not clear");
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed());
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<GrandFirstActionModel> ts{
        [rng, produced, n]() -> std::optional<GrandFirstActionModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_tree_gam(*rng, 4, 2, 2, true);
        }};
    run.over_stream("tree-gam-clear", std::move(ts),
                    [](long long, const GrandFirstActionModel& g) {
                      return is_treelike_gam(g) && is_clear_gam(g);
                    },
                    "tree-like model is not clear");
  }
  run.plain("clear-loop-witness", []() -> std::optional<std::string> {
    GrandFirstActionModel g = fixtures::lock();
    if (!is_clear_gam(g)) return "lock is unexpectedly not clear";
    if (is_treelike_gam(g)) return "lock is unexpectedly tree-like";
    return std::nullopt;
  });
  {
    auto rng = std::make_shared<std::mt19937_64>(run.seed() + 1);
    long long n = run.count(300);
    auto produced = std::make_shared<long long>(0);
    Stream<SingleFirstNeighborhoodModel> ts{
        [rng, produced, n]() -> std::optional<SingleFirstNeighborhoodModel> {
          if (*produced >= n) return std::nullopt;
          ++*produced;
          return random_tree_snm(*rng, 4, 2, true);
        }};
    run.over_stream("tree-snm-clear", std::move(ts),
                    [](long long, const SingleFirstNeighborhoodModel& m) {
                      return is_treelike_snm(m) && is_clear_snm(m);
                    },
                    "tree-like snm is not clear");
  }
  run.plain("clear-loop-snm-witness", []() -> std::optional<std::string> {
    SingleFirstNeighborhoodModel m = fixtures::loop_snm();
    if (!is_clear_snm(m)) return "loop snm is unexpectedly not clear";
    if (is_treelike_snm(m)) return "loop snm is unexpectedly tree-like";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_unravel_equivalence(const GenSpec& hints, ExecMode mode) {
  Runner run("unravel-equivalence", hints, mode);
  const auto& bank = shared_bank();

  run.over_stream(
      "bounded-truth", gam_stream(run.random_spec(GenSpec::Kind::Gam, 3, 2, 2, 150)),
      [&](long long, const GrandFirstActionModel& g) {
        ActionModel am = to_action_model(g);
        for (StateId s = 0; s < g.carrier.n_states(); ++s) {
          UnravelResult u1 = unravel(g, s, 1);
          UnravelResult u2 = unravel(g, s, 2);
          if (!is_treelike_gam(u1.model) || !is_treelike_gam(u2.model)) return false;
          if (treelike_root_gam(u2.model) != std::optional<StateId>(u2.root)) return false;
          ActionModel am1 = to_action_model(u1.model);
          ActionModel am2 = to_action_model(u2.model);
          // interior states keep the original classification letters
          if (!signature_of(am2, u2.interior).includes(signature_of(am))) return false;
          for (const auto& f : bank) {
            const ActionModel& target = f.modal_depth() <= 1 ? am1 : am2;
            if (eval_action(am, s, f) != eval_action(target, 0, f)) return false;
          }
          // step projection: derived coalition steps of interior path states
          // project onto the original derived steps
          int nac = g.actions.size();
          for (int c = 0; c < g.carrier.agents.coalition_count(); ++c) {
            Coalition co = Coalition::of_mask(c);
            int nja = ja_count(co, nac);
            for (StateId pi = 0; pi < u2.model.carrier.n_states(); ++pi) {
              if (!u2.interior.contains(pi)) continue;
              for (int j = 0; j < nja; ++j) {
                StateSet projected;
                am2.tables[c].outcome[pi][j].for_each(
                    [&](StateId t) { projected.insert(u2.last_of[t]); });
                if (projected != am.tables[c].outcome[u2.last_of[pi]][j]) return false;
              }
            }
          }
        }
        return true;
      },
      "truncated unraveling breaks bounded truth");
  return run.finish();
}

SuiteReport suite_axiom_validity(const GenSpec& hints, ExecMode mode) {
  Runner run("axiom-validity", hints, mode);

  for (const PropertySignature& sig : PropertySignature::all_eight()) {
    std::vector<Formula> formulas;
    for (AxiomSchema s : {AxiomSchema::NAAA, AxiomSchema::MG, AxiomSchema::MC}) {
      auto v = axiom_instances(s, bank_universe());
      formulas.insert(formulas.end(), v.begin(), v.end());
    }
    if (sig.serial) {
      auto v = axiom_instances(AxiomSchema::Ser, bank_universe());
      formulas.insert(formulas.end(), v.begin(), v.end());
    }
    if (sig.independent) {
      auto v = axiom_instances(AxiomSchema::IA, bank_universe());
      formulas.insert(formulas.end(), v.begin(), v.end());
    }
    if (sig.deterministic) {
      auto v = axiom_instances(AxiomSchema::Det, bank_universe());
      formulas.insert(formulas.end(), v.begin(), v.end());
    }
    GenSpec spec = run.random_spec(GenSpec::Kind::Gam, 3, 2, 2, 60);
    spec.signature_filter = sig;
    std::string label = sig.to_string().empty() ? "e" : sig.to_string();
    run.over_stream("sound-on-" + label, gam_stream(spec),
                    [formulas](long long, const GrandFirstActionModel& g) {
                      ActionModel am = to_action_model(g);
                      for (const auto& f : formulas)
                        if (!valid_on_action(am, f)) return false;
                      return true;
                    },
                    "axiom instance fails on a model of its class");
  }

  run.plain("countermodels-exist", [&]() -> std::optional<std::string> {
    const AgentUniverse& u = bank_universe();
    Formula p = Formula::atom("p"), q = Formula::atom("q");
    Coalition ca = u.coalition_of({"a"}), cb = u.coalition_of({"b"});
    std::vector<std::pair<const char*, Formula>> targets = {
        {"A-Ser", instantiate_axiom(AxiomSchema::Ser, {ca}, {}, u)},
        {"A-IA", instantiate_axiom(AxiomSchema::IA, {ca, cb}, {p, q}, u)},
        {"A-Det", instantiate_axiom(AxiomSchema::Det, {u.grand()}, {p, q}, u)},
    };
    GenSpec spec = run.random_spec(GenSpec::Kind::Gam, 3, 2, 2, 0);
    spec.count = 200000;  // search budget; found countermodels end the scan early
    for (auto& [name, f] : targets)
      if (!find_countermodel(f, spec))
        return std::string(name) + ": no countermodel in the unrestricted class";
    return std::nullopt;
  });
  return run.finish();
}

SuiteReport suite_final_determination(const GenSpec& hints, ExecMode mode) {
  Runner run("final-determination", hints, mode);
  const auto& bank = shared_bank();

  for (const PropertySignature& sig : PropertySignature::all_eight()) {
    GenSpec spec = run.random_spec(GenSpec::Kind::Gam, 3, 2, 2, 25);
    spec.signature_filter = sig;
    std::string label = sig.to_string().empty() ? "e" : sig.to_string();
    run.over_stream(
        "chain-" + label, gam_stream(spec),
        [&bank, sig](long long, const GrandFirstActionModel& g) {
          ActionModel am = to_action_model(g);
          for (StateId s = 0; s < g.carrier.n_states(); ++s) {
            UnravelResult u = unravel(g, s, 2);
            // tree-like, hence clear, hence single-coalition-first
            if (!is_treelike_gam(u.model)) return false;
            if (!is_clear_gam(u.model)) return false;
            ActionModel amu = to_action_model(u.model);
            for (StateId t = 0; t < u.model.carrier.n_states(); ++t)
              for (int w = 1; w <= 3; ++w)
                if (!check_condition_set(amu, t, w)) return false;
            SingleFirstActionModel sam = gam_to_sam(u.model);
            if (!(sam_to_gam(sam) == u.model)) return false;
            SingleFirstNeighborhoodModel snm = sam_to_snm(sam);
            if (!is_treelike_snm(snm) || !is_clear_snm(snm)) return false;
            NeighborhoodModel nm = snm_to_neighborhood_model(snm);
            if (!z_represents(nm, amu)) return false;
            // class membership carries to the interior of the tree model
            if (!signature_of(amu, u.interior).includes(sig)) return false;
            for (const auto& f : bank) {
              bool here = eval_action(am, s, f);
              if (here != eval_action(amu, u.root, f)) return false;
              if (here != eval_neighborhood(nm, u.root, f)) return false;
            }
          }
          return true;
        },
        "determination chain broke");
  }
  return run.finish();
}

using SuiteFn = SuiteReport (*)(const GenSpec&, ExecMode);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"semantics-equivalence", suite_semantics_equivalence},
      {"gam-facts", suite_gam_facts},
      {"sam-equivalence", suite_sam_equivalence},
      {"snm-cover", suite_snm_cover},
      {"representation-roundtrip", suite_representation_roundtrip},
      {"x-iff-x", suite_x_iff_x},
      {"clear-equivalences", suite_clear_equivalences},
      {"clear-representation", suite_clear_representation},
      {"tree-equivalences", suite_tree_equivalences},
      {"tree-implies-clear", suite_tree_implies_clear},
      {"unravel-equivalence", suite_unravel_equivalence},
      {"axiom-validity", suite_axiom_validity},
      {"final-determination", suite_final_determination},
  };
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& name, const GenSpec& hints, ExecMode mode) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownSuite(name);
  return it->second(hints, mode);
}

}  // namespace clw
