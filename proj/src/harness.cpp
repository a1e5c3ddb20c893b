#include "clw/harness.hpp"

#include "clw/sam_snm.hpp"

namespace clw {

void GenSpec::check_bounds() const {
  if (n_states < 1 || n_states > 4 || n_agents < 1 || n_agents > 2 || n_actions < 1 ||
      n_actions > 2)
    throw BoundsExceeded("generation bounds: 1..4 states, 1..2 agents, 1..2 actions");
  if (!exhaustive && count < 0) throw BoundsExceeded("negative sample count");
}

namespace {

const char* kStateNames[] = {"s0", "s1", "s2", "s3"};
const char* kAgentNames[] = {"a", "b"};
const char* kActionNames[] = {"x1", "x2"};

Carrier generated_carrier(int ns, int na) {
  std::vector<std::string> states(kStateNames, kStateNames + ns);
  std::vector<std::string> agents(kAgentNames, kAgentNames + na);
  return make_carrier(std::move(states), std::move(agents));
}

ActionUniverse generated_actions(int nac) {
  return ActionUniverse(std::vector<std::string>(kActionNames, kActionNames + nac));
}

std::uint64_t rand_word(std::mt19937_64& rng) { return rng(); }

// uniform subset of the bits of `allowed`
std::uint64_t rand_submask(std::mt19937_64& rng, std::uint64_t allowed) {
  return rand_word(rng) & allowed;
}

std::uint64_t rand_nonempty_submask(std::mt19937_64& rng, std::uint64_t allowed) {
  // allowed must be nonzero
  while (true) {
    std::uint64_t m = rand_submask(rng, allowed);
    if (m) return m;
  }
}

std::uint64_t rand_singleton(std::mt19937_64& rng, std::uint64_t allowed) {
  int n = __builtin_popcountll(allowed);
  int k = static_cast<int>(rand_word(rng) % static_cast<std::uint64_t>(n));
  std::uint64_t m = allowed;
  while (k--) m &= m - 1;
  return m & ~(m - 1);
}

void random_labels(std::mt19937_64& rng, Carrier& car) {
  static const char* atoms[] = {"p", "q"};
  for (StateId s = 0; s < car.n_states(); ++s)
    for (const char* a : atoms)
      if (rand_word(rng) & 1) car.labeling.add(s, a);
}

long long checked_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kExhaustiveCap / base + 1) return kExhaustiveCap + 1;
    r *= base;
    if (r > kExhaustiveCap) return kExhaustiveCap + 1;
  }
  return r;
}

}  // namespace

long long exhaustive_gam_count(int ns, int na, int nac) {
  int np = 1;
  for (int i = 0; i < na; ++i) np *= nac;
  return checked_pow(1LL << ns, ns * np);
}

GrandFirstActionModel random_gam(std::mt19937_64& rng, int ns, int na, int nac,
                                 bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  GrandFirstActionModel g = make_gam(std::move(car), generated_actions(nac));
  std::uint64_t univ = (1u << ns) - 1;
  for (auto& row : g.outcome_grand)
    for (auto& cell : row) cell = StateSet::from_word(rand_submask(rng, univ));
  return g;
}

GrandFirstActionModel random_gam_at_least(std::mt19937_64& rng, int ns, int na, int nac,
                                          bool labels, PropertySignature sig) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  GrandFirstActionModel g = make_gam(std::move(car), generated_actions(nac));
  std::uint64_t univ = (1u << ns) - 1;
  for (auto& row : g.outcome_grand) {
    if (sig.independent) {
      // independence by construction: states are dead or have every
      // profile outcome nonempty (full availability)
      bool alive = sig.serial || (rand_word(rng) % 4 != 0);
      for (auto& cell : row)
        cell = !alive ? StateSet{}
               : sig.deterministic
                   ? StateSet::from_word(rand_singleton(rng, univ))
                   : StateSet::from_word(rand_nonempty_submask(rng, univ));
    } else {
      bool any = false;
      for (auto& cell : row) {
        std::uint64_t w = sig.deterministic
                              ? ((rand_word(rng) & 1) ? 0 : rand_singleton(rng, univ))
                              : rand_submask(rng, univ);
        cell = StateSet::from_word(w);
        any = any || w;
      }
      if (sig.serial && !any) {
        auto& cell = row[rand_word(rng) % row.size()];
        cell = StateSet::from_word(sig.deterministic
                                       ? rand_singleton(rng, univ)
                                       : rand_nonempty_submask(rng, univ));
      }
    }
  }
  return g;
}

GrandFirstActionModel random_clear_gam(std::mt19937_64& rng, int ns, int na, int nac,
                                       bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  GrandFirstActionModel g = make_gam(std::move(car), generated_actions(nac));
  std::uint64_t univ = (1u << ns) - 1;
  for (auto& row : g.outcome_grand) {
    std::uint64_t ground = rand_submask(rng, univ);
    // scatter the ground set over the profiles; rows stay disjoint
    while (ground) {
      std::uint64_t bit = ground & ~(ground - 1);
      ground &= ground - 1;
      row[rand_word(rng) % row.size()].insert(__builtin_ctzll(bit));
    }
  }
  return g;
}

GrandFirstActionModel random_tree_gam(std::mt19937_64& rng, int ns, int na, int nac,
                                      bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  GrandFirstActionModel g = make_gam(std::move(car), generated_actions(nac));
  int np = static_cast<int>(g.outcome_grand[0].size());
  for (StateId child = 1; child < ns; ++child) {
    StateId parent = static_cast<StateId>(rand_word(rng) % child);
    int profile = static_cast<int>(rand_word(rng) % np);
    g.outcome_grand[parent][profile].insert(child);
  }
  return g;
}

ActionModel random_action_model(std::mt19937_64& rng, int ns, int na, int nac,
                                bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  ActionModel m = make_action_model(std::move(car), generated_actions(nac));
  std::uint64_t univ = (1u << ns) - 1;
  for (auto& t : m.tables)
    for (StateId s = 0; s < ns; ++s)
      for (std::size_t j = 0; j < t.available[s].size(); ++j) {
        t.available[s][j] = static_cast<char>(rand_word(rng) & 1);
        t.outcome[s][j] = StateSet::from_word(rand_submask(rng, univ));
      }
  return m;
}

SingleFirstActionModel random_sam(std::mt19937_64& rng, int ns, int na, int nac,
                                  bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  SingleFirstActionModel m = make_sam(std::move(car), generated_actions(nac));
  std::uint64_t univ = (1u << ns) - 1;
  for (StateId s = 0; s < ns; ++s) {
    std::uint64_t suc = rand_submask(rng, univ);
    m.successor[s] = StateSet::from_word(suc);
    for (int a = 0; a < na; ++a) {
      std::uint64_t covered = 0;
      for (int k = 0; k < nac; ++k) {
        std::uint64_t w = rand_submask(rng, suc);
        m.outcome_agent[a][s][k] = StateSet::from_word(w);
        covered |= w;
      }
      std::uint64_t missing = suc & ~covered;
      while (missing) {
        // patch the cover: hand each uncovered state to a random action
        std::uint64_t bit = missing & ~(missing - 1);
        missing &= missing - 1;
        m.outcome_agent[a][s][rand_word(rng) % nac].insert(__builtin_ctzll(bit));
      }
    }
  }
  m.validate();
  return m;
}

SingleFirstNeighborhoodModel random_snm(std::mt19937_64& rng, int ns, int na,
                                        bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  SingleFirstNeighborhoodModel m = make_snm(std::move(car));
  std::uint64_t univ = (1u << ns) - 1;
  for (StateId s = 0; s < ns; ++s) {
    std::uint64_t suc = rand_submask(rng, univ);
    m.successor[s] = StateSet::from_word(suc);
    for (int a = 0; a < na; ++a) {
      auto& fam = m.neighborhood_agent[a][s];
      if (!suc) continue;
      int k = 1 + static_cast<int>(rand_word(rng) % 3);
      std::uint64_t covered = 0;
      for (int i = 0; i < k; ++i) {
        std::uint64_t w = rand_nonempty_submask(rng, suc);
        fam.insert(StateSet::from_word(w));
        covered |= w;
      }
      std::uint64_t missing = suc & ~covered;
      while (missing) {
        std::uint64_t bit = missing & ~(missing - 1);
        missing &= missing - 1;
        fam.insert(StateSet::from_word(bit));
      }
    }
  }
  m.validate();
  return m;
}

SingleFirstNeighborhoodModel random_clear_snm(std::mt19937_64& rng, int ns, int na,
                                              bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  SingleFirstNeighborhoodModel m = make_snm(std::move(car));
  std::uint64_t univ = (1u << ns) - 1;
  for (StateId s = 0; s < ns; ++s) {
    std::uint64_t suc = rand_submask(rng, univ);
    m.successor[s] = StateSet::from_word(suc);
    for (int a = 0; a < na; ++a) {
      if (!suc) continue;
      std::uint64_t blocks[4] = {0, 0, 0, 0};
      int nb = 1 + static_cast<int>(rand_word(rng) % 3);
      std::uint64_t rest = suc;
      while (rest) {
        std::uint64_t bit = rest & ~(rest - 1);
        rest &= rest - 1;
        blocks[rand_word(rng) % nb] |= bit;
      }
      for (int b = 0; b < nb; ++b)
        if (blocks[b]) m.neighborhood_agent[a][s].insert(StateSet::from_word(blocks[b]));
    }
  }
  m.validate();
  return m;
}

SingleFirstNeighborhoodModel random_tree_snm(std::mt19937_64& rng, int ns, int na,
                                             bool labels) {
  Carrier car = generated_carrier(ns, na);
  if (labels) random_labels(rng, car);
  SingleFirstNeighborhoodModel m = make_snm(std::move(car));
  std::vector<std::uint64_t> children(ns, 0);
  for (StateId child = 1; child < ns; ++child)
    children[rand_word(rng) % child] |= std::uint64_t{1} << child;
  for (StateId s = 0; s < ns; ++s) {
    m.successor[s] = StateSet::from_word(children[s]);
    for (int a = 0; a < na; ++a) {
      std::uint64_t rest = children[s];
      if (!rest) continue;
      std::uint64_t blocks[4] = {0, 0, 0, 0};
      int nb = 1 + static_cast<int>(rand_word(rng) % 3);
      while (rest) {
        std::uint64_t bit = rest & ~(rest - 1);
        rest &= rest - 1;
        blocks[rand_word(rng) % nb] |= bit;
      }
      for (int b = 0; b < nb; ++b)
        if (blocks[b]) m.neighborhood_agent[a][s].insert(StateSet::from_word(blocks[b]));
    }
  }
  m.validate();
  return m;
}

// --- streams -------------------------------------------------------------

namespace {

// Exhaustive grand-coalition-first enumeration: one digit (a subset of the
// state set) per (state, profile) cell, least significant digit first.
struct ExhaustiveGamState {
  GenSpec spec;
  long long index = 0;
  long long total = 0;
  int np = 0;

  std::optional<GrandFirstActionModel> next() {
    if (index >= total) return std::nullopt;
    long long v = index++;
    GrandFirstActionModel out = make_gam(generated_carrier(spec.n_states, spec.n_agents),
                                         generated_actions(spec.n_actions));
    long long radix = 1LL << spec.n_states;
    for (StateId s = 0; s < spec.n_states; ++s)
      for (int p = 0; p < np; ++p) {
        out.outcome_grand[s][p] =
            StateSet::from_word(static_cast<std::uint64_t>(v % radix));
        v /= radix;
      }
    return out;
  }
};

// Exhaustive single-coalition-first enumeration: all per-state
// configurations (successor set plus covering outcome tuples per agent),
// then the product over states.
struct SamStateConfig {
  std::uint64_t suc;
  std::vector<std::vector<std::uint64_t>> out;  // [agent][action]
};

std::vector<SamStateConfig> sam_state_configs(int ns, int na, int nac) {
  std::vector<SamStateConfig> configs;
  for (std::uint64_t suc = 0; suc < (std::uint64_t{1} << ns); ++suc) {
    // per-agent tuples of nac subsets of suc whose union is suc
    std::vector<std::vector<std::uint64_t>> agent_tuples;
    std::vector<std::uint64_t> tuple(nac, 0);
    auto rec = [&](auto&& self, int k, std::uint64_t covered) -> void {
      if (k == nac) {
        if (covered == suc) agent_tuples.push_back(tuple);
        return;
      }
      for (std::uint64_t w = 0;; w = (w - suc) & suc) {  // submask enumeration
        tuple[k] = w;
        self(self, k + 1, covered | w);
        if (w == suc) break;
      }
    };
    rec(rec, 0, 0);
    // product over agents
    std::vector<int> pick(na, 0);
    while (true) {
      SamStateConfig c;
      c.suc = suc;
      for (int a = 0; a < na; ++a) c.out.push_back(agent_tuples[pick[a]]);
      configs.push_back(std::move(c));
      int a = 0;
      for (; a < na; ++a) {
        if (++pick[a] < static_cast<int>(agent_tuples.size())) break;
        pick[a] = 0;
      }
      if (a == na) break;
    }
  }
  return configs;
}

struct ExhaustiveSamState {
  GenSpec spec;
  std::vector<SamStateConfig> configs;
  long long index = 0;
  long long total = 0;

  std::optional<SingleFirstActionModel> next() {
    if (index >= total) return std::nullopt;
    long long v = index++;
    SingleFirstActionModel out = make_sam(generated_carrier(spec.n_states, spec.n_agents),
                                          generated_actions(spec.n_actions));
    long long radix = static_cast<long long>(configs.size());
    for (StateId s = 0; s < spec.n_states; ++s) {
      const SamStateConfig& c = configs[v % radix];
      v /= radix;
      out.successor[s] = StateSet::from_word(c.suc);
      for (int a = 0; a < spec.n_agents; ++a)
        for (int k = 0; k < spec.n_actions; ++k)
          out.outcome_agent[a][s][k] = StateSet::from_word(c.out[a][k]);
    }
    return out;
  }
};

// Exhaustive single-coalition-first neighborhood enumeration.
struct SnmStateConfig {
  std::uint64_t suc;
  std::vector<std::vector<std::uint64_t>> nei;  // [agent] -> cover members
};

std::vector<std::vector<std::uint64_t>> covers_of(std::uint64_t suc) {
  std::vector<std::uint64_t> nonempty;
  for (std::uint64_t w = suc;; w = (w - 1) & suc) {
    if (w) nonempty.push_back(w);
    if (w == 0) break;
  }
  std::vector<std::vector<std::uint64_t>> covers;
  int n = static_cast<int>(nonempty.size());
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n); ++sel) {
    std::uint64_t covered = 0;
    for (int i = 0; i < n; ++i)
      if ((sel >> i) & 1) covered |= nonempty[i];
    if (covered != suc) continue;
    std::vector<std::uint64_t> fam;
    for (int i = 0; i < n; ++i)
      if ((sel >> i) & 1) fam.push_back(nonempty[i]);
    covers.push_back(std::move(fam));
  }
  return covers;
}

std::vector<SnmStateConfig> snm_state_configs(int ns, int na) {
  std::vector<SnmStateConfig> configs;
  for (std::uint64_t suc = 0; suc < (std::uint64_t{1} << ns); ++suc) {
    auto covers = covers_of(suc);
    std::vector<int> pick(na, 0);
    while (true) {
      SnmStateConfig c;
      c.suc = suc;
      for (int a = 0; a < na; ++a) c.nei.push_back(covers[pick[a]]);
      configs.push_back(std::move(c));
      int a = 0;
      for (; a < na; ++a) {
        if (++pick[a] < static_cast<int>(covers.size())) break;
        pick[a] = 0;
      }
      if (a == na) break;
    }
  }
  return configs;
}

struct ExhaustiveSnmState {
  GenSpec spec;
  std::vector<SnmStateConfig> configs;
  long long index = 0;
  long long total = 0;

  std::optional<SingleFirstNeighborhoodModel> next() {
    if (index >= total) return std::nullopt;
    long long v = index++;
    SingleFirstNeighborhoodModel out = make_snm(generated_carrier(spec.n_states, spec.n_agents));
    long long radix = static_cast<long long>(configs.size());
    for (StateId s = 0; s < spec.n_states; ++s) {
      const SnmStateConfig& c = configs[v % radix];
      v /= radix;
      out.successor[s] = StateSet::from_word(c.suc);
      for (int a = 0; a < spec.n_agents; ++a)
        for (std::uint64_t w : c.nei[a])
          out.neighborhood_agent[a][s].insert(StateSet::from_word(w));
    }
    return out;
  }
};

constexpr long long kFilterAttemptCap = 1000000;

template <class Model, class Gen, class Classify>
Stream<Model> filtered_stream(Gen gen, Classify classify,
                              std::optional<PropertySignature> filter,
                              long long wanted) {
  auto produced = std::make_shared<long long>(0);
  auto attempts = std::make_shared<long long>(0);
  return Stream<Model>{[=]() -> std::optional<Model> {
    while (*produced < wanted || wanted < 0) {
      std::optional<Model> out = gen();
      if (!out) return std::nullopt;
      if (filter && ++*attempts > kFilterAttemptCap)
        throw BoundsExceeded("signature filter exhausted the attempt budget");
      if (!filter || classify(*out).includes(*filter)) {
        ++*produced;
        return out;
      }
    }
    return std::nullopt;
  }};
}

}  // namespace

Stream<GrandFirstActionModel> gam_stream(const GenSpec& spec) {
  spec.check_bounds();
  if (spec.exhaustive) {
    long long total = exhaustive_gam_count(spec.n_states, spec.n_agents, spec.n_actions);
    if (total > kExhaustiveCap)
      throw BoundsExceeded("exhaustive grand-coalition-first space too large");
    auto st = std::make_shared<ExhaustiveGamState>();
    st->spec = spec;
    st->total = total;
    st->np = ja_count(Coalition::of_mask((1u << spec.n_agents) - 1), spec.n_actions);
    return filtered_stream<GrandFirstActionModel>(
        [st]() { return st->next(); },
        [](const GrandFirstActionModel& g) { return classify(g); },
        spec.signature_filter, -1);
  }
  auto rng = std::make_shared<std::mt19937_64>(spec.seed);
  GenSpec s = spec;
  auto gen = [rng, s]() -> std::optional<GrandFirstActionModel> {
    return s.signature_filter
               ? random_gam_at_least(*rng, s.n_states, s.n_agents, s.n_actions, true,
                                     *s.signature_filter)
               : random_gam(*rng, s.n_states, s.n_agents, s.n_actions, true);
  };
  return filtered_stream<GrandFirstActionModel>(
      gen, [](const GrandFirstActionModel& g) { return classify(g); },
      spec.signature_filter, spec.count);
}

Stream<SingleFirstActionModel> sam_stream(const GenSpec& spec) {
  spec.check_bounds();
  auto classify_sam = [](const SingleFirstActionModel& m) {
    return signature_of(sam_to_action_model(m));
  };
  if (spec.exhaustive) {
    auto st = std::make_shared<ExhaustiveSamState>();
    st->spec = spec;
    st->configs = sam_state_configs(spec.n_states, spec.n_agents, spec.n_actions);
    st->total = checked_pow(static_cast<long long>(st->configs.size()), spec.n_states);
    if (st->total > kExhaustiveCap)
      throw BoundsExceeded("exhaustive single-coalition-first space too large");
    return filtered_stream<SingleFirstActionModel>(
        [st]() { return st->next(); }, classify_sam, spec.signature_filter, -1);
  }
  auto rng = std::make_shared<std::mt19937_64>(spec.seed);
  GenSpec s = spec;
  return filtered_stream<SingleFirstActionModel>(
      [rng, s]() -> std::optional<SingleFirstActionModel> {
        return random_sam(*rng, s.n_states, s.n_agents, s.n_actions, true);
      },
      classify_sam, spec.signature_filter, spec.count);
}

Stream<SingleFirstNeighborhoodModel> snm_stream(const GenSpec& spec) {
  spec.check_bounds();
  auto classify_snm = [](const SingleFirstNeighborhoodModel& m) { return snm_classify(m); };
  if (spec.exhaustive) {
    auto st = std::make_shared<ExhaustiveSnmState>();
    st->spec = spec;
    st->configs = snm_state_configs(spec.n_states, spec.n_agents);
    st->total = checked_pow(static_cast<long long>(st->configs.size()), spec.n_states);
    if (st->total > kExhaustiveCap)
      throw BoundsExceeded("exhaustive neighborhood space too large");
    return filtered_stream<SingleFirstNeighborhoodModel>(
        [st]() { return st->next(); }, classify_snm, spec.signature_filter, -1);
  }
  auto rng = std::make_shared<std::mt19937_64>(spec.seed);
  GenSpec s = spec;
  return filtered_stream<SingleFirstNeighborhoodModel>(
      [rng, s]() -> std::optional<SingleFirstNeighborhoodModel> {
        return random_snm(*rng, s.n_states, s.n_agents, true);
      },
      classify_snm, spec.signature_filter, spec.count);
}

// --- countermodel search ---------------------------------------------------

std::optional<Refutation> find_countermodel(const Formula& f, const GenSpec& spec) {
  switch (spec.kind) {
    case GenSpec::Kind::Gam: {
      auto stream = gam_stream(spec);
      while (auto g = stream.next()) {
        StateSet sat = sat_action(to_action_model(*g), f);
        for (StateId s = 0; s < g->carrier.n_states(); ++s)
          if (!sat.contains(s)) return Refutation{AnyModel(*g), s};
      }
      return std::nullopt;
    }
    case GenSpec::Kind::Sam: {
      auto stream = sam_stream(spec);
      while (auto m = stream.next()) {
        StateSet sat = sat_action(sam_to_action_model(*m), f);
        for (StateId s = 0; s < m->carrier.n_states(); ++s)
          if (!sat.contains(s)) return Refutation{AnyModel(*m), s};
      }
      return std::nullopt;
    }
    case GenSpec::Kind::Snm: {
      auto stream = snm_stream(spec);
      while (auto m = stream.next()) {
        StateSet sat = sat_neighborhood(snm_to_neighborhood_model(*m), f);
        for (StateId s = 0; s < m->carrier.n_states(); ++s)
          if (!sat.contains(s)) return Refutation{AnyModel(*m), s};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// --- formula bank ---------------------------------------------------------

std::vector<Formula> bank_fillers(const AgentUniverse& agents) {
  Formula p = Formula::atom("p"), q = Formula::atom("q");
  return {p,
          q,
          Formula::conjunction(p, q),
          Formula::negation(p),
          Formula::box({}, p),
          Formula::box(agents.names(), p)};
}

std::vector<Formula> axiom_instances(AxiomSchema schema, const AgentUniverse& agents) {
  std::vector<Formula> fillers = bank_fillers(agents);
  int nc = agents.coalition_count();
  std::vector<Formula> out;

  auto for_fillers = [&](auto&& emit, int arity) {
    if (arity == 0) {
      emit(std::vector<Formula>{});
    } else if (arity == 1) {
      for (const auto& f : fillers) emit(std::vector<Formula>{f});
    } else {
      for (const auto& f : fillers)
        for (const auto& g : fillers) emit(std::vector<Formula>{f, g});
    }
  };

  switch (schema) {
    case AxiomSchema::NAAA:
    case AxiomSchema::Ser:
      for (int c = 0; c < nc; ++c)
        out.push_back(instantiate_axiom(schema, {Coalition::of_mask(c)}, {}, agents));
      break;
    case AxiomSchema::MG:
    case AxiomSchema::Det:
      for (int c = 0; c < nc; ++c)
        for_fillers(
            [&](const std::vector<Formula>& fs) {
              out.push_back(instantiate_axiom(schema, {Coalition::of_mask(c)}, fs, agents));
            },
            2);
      break;
    case AxiomSchema::MC:
      for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nc; ++d) {
          if (!Coalition::of_mask(c).subset_of(Coalition::of_mask(d))) continue;
          for_fillers(
              [&](const std::vector<Formula>& fs) {
                out.push_back(instantiate_axiom(
                    schema, {Coalition::of_mask(c), Coalition::of_mask(d)}, fs, agents));
              },
              1);
        }
      break;
    case AxiomSchema::IA:
      for (int c = 0; c < nc; ++c)
        for (int d = 0; d < nc; ++d) {
          if (!Coalition::of_mask(c).disjoint(Coalition::of_mask(d))) continue;
          for_fillers(
              [&](const std::vector<Formula>& fs) {
                out.push_back(instantiate_axiom(
                    schema, {Coalition::of_mask(c), Coalition::of_mask(d)}, fs, agents));
              },
              2);
        }
      break;
  }
  return out;
}

std::vector<Formula> formula_bank(const AgentUniverse& agents) {
  std::vector<Formula> bank;
  for (AxiomSchema s : {AxiomSchema::NAAA, AxiomSchema::MG, AxiomSchema::MC,
                        AxiomSchema::Ser, AxiomSchema::IA, AxiomSchema::Det}) {
    auto v = axiom_instances(s, agents);
    bank.insert(bank.end(), v.begin(), v.end());
  }
  return bank;
}

// --- reports ----------------------------------------------------------------

bool SuiteReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["mode"] = mode == ExecMode::Parallel ? "parallel" : "serial";
  j["millis"] = millis;
  j["all_pass"] = all_pass();
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["checked"] = c.checked;
    cj["millis"] = c.millis;
    if (!c.pass) {
      cj["detail"] = c.detail;
      cj["countermodel"] = c.countermodel;
    }
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j;
}

Json countermodel_json(const AnyModel& model, std::optional<StateId> focus_state,
                       const std::string& formula, const std::string& note) {
  Json j = to_json(model);
  if (focus_state) {
    const Carrier& car = std::visit([](const auto& m) -> const Carrier& { return m.carrier; }, model);
    j["focus_state"] = car.states[*focus_state];
  }
  if (!formula.empty()) j["formula"] = formula;
  if (!note.empty()) j["note"] = note;
  return j;
}

}  // namespace clw
