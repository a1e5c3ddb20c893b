#ifndef CLW_HARNESS_HPP
#define CLW_HARNESS_HPP

#include <climits>
#include <functional>
#include <optional>
#include <random>

#include "clw/model_io.hpp"
#include "clw/neighborhood_semantics.hpp"

namespace clw {

/// Execution mode of the per-model checking kernels. Parallel runs the
/// OpenMP path; Serial is the reference implementation kept for testing
/// and benchmarking. Both produce identical reports: aggregation is a
/// min-index reduction over pure per-model checks.
enum class ExecMode { Serial, Parallel };

/// What to generate. Exhaustive mode enumerates every model up to the
/// bounds in a canonical order with the labeling fixed empty; random mode
/// is a seeded deterministic sample with labels over {p, q}. The
/// signature filter keeps models whose classification includes the given
/// letters.
struct GenSpec {
  enum class Kind { Gam, Sam, Snm };
  Kind kind = Kind::Gam;
  int n_states = 2;
  int n_agents = 2;
  int n_actions = 2;
  std::optional<PropertySignature> signature_filter;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  long long count = 100;  // random mode only

  void check_bounds() const;  // states <= 4, agents <= 2, actions <= 2
};

// Exhaustive spaces larger than this raise BoundsExceeded; the suites
// document which bounds they enumerate exhaustively.
constexpr long long kExhaustiveCap = 1LL << 22;

template <class Model>
struct Stream {
  std::function<std::optional<Model>()> next;
};

Stream<GrandFirstActionModel> gam_stream(const GenSpec& spec);
Stream<SingleFirstActionModel> sam_stream(const GenSpec& spec);
Stream<SingleFirstNeighborhoodModel> snm_stream(const GenSpec& spec);

long long exhaustive_gam_count(int n_states, int n_agents, int n_actions);

// Seeded one-shot generators used by the suites for targeted sampling.
GrandFirstActionModel random_gam(std::mt19937_64& rng, int ns, int na, int nac,
                                 bool labels);
GrandFirstActionModel random_gam_at_least(std::mt19937_64& rng, int ns, int na, int nac,
                                          bool labels, PropertySignature sig);
GrandFirstActionModel random_clear_gam(std::mt19937_64& rng, int ns, int na, int nac,
                                       bool labels);
GrandFirstActionModel random_tree_gam(std::mt19937_64& rng, int ns, int na, int nac,
                                      bool labels);
ActionModel random_action_model(std::mt19937_64& rng, int ns, int na, int nac,
                                bool labels);
SingleFirstActionModel random_sam(std::mt19937_64& rng, int ns, int na, int nac,
                                  bool labels);
SingleFirstNeighborhoodModel random_snm(std::mt19937_64& rng, int ns, int na,
                                        bool labels);
SingleFirstNeighborhoodModel random_clear_snm(std::mt19937_64& rng, int ns, int na,
                                              bool labels);
SingleFirstNeighborhoodModel random_tree_snm(std::mt19937_64& rng, int ns, int na,
                                             bool labels);

// --- parallel scan kernels --------------------------------------------------

constexpr long long kScanChunk = 1 << 16;

/// First index in [0, n) failing `check`, or -1. `make_ctx()` builds one
/// scratch context per thread; `check(ctx, i)` must be pure apart from the
/// scratch. Serial and Parallel agree: chunks run in order, and within a
/// chunk the minimal failing index wins.
template <class MakeCtx, class Check>
long long scan_first_failure(long long n, ExecMode mode, MakeCtx&& make_ctx,
                             Check&& check) {
  for (long long base = 0; base < n; base += kScanChunk) {
    long long hi = base + kScanChunk < n ? base + kScanChunk : n;
    long long found = LLONG_MAX;
    if (mode == ExecMode::Parallel) {
#pragma omp parallel
      {
        auto ctx = make_ctx();
        long long mine = LLONG_MAX;
#pragma omp for schedule(static) nowait
        for (long long i = base; i < hi; ++i)
          if (i < mine && !check(ctx, i)) mine = i;
#pragma omp critical
        if (mine < found) found = mine;
      }
    } else {
      auto ctx = make_ctx();
      for (long long i = base; i < hi; ++i)
        if (!check(ctx, i)) {
          found = i;
          break;
        }
    }
    if (found != LLONG_MAX) return found;
  }
  return -1;
}

template <class Model>
struct StreamScanResult {
  long long checked = 0;
  long long fail_index = -1;
  std::optional<Model> fail_model;
};

/// Pulls batches out of the stream serially, checks them in parallel,
/// stops after the first batch containing a failure (minimal index wins,
/// so Serial and Parallel report the same model).
template <class Model, class Check>
StreamScanResult<Model> scan_stream(Stream<Model>& stream, ExecMode mode, Check&& check) {
  constexpr long long kBatch = 1024;
  StreamScanResult<Model> result;
  std::vector<Model> batch;
  long long base = 0;
  while (true) {
    batch.clear();
    while (static_cast<long long>(batch.size()) < kBatch) {
      std::optional<Model> m = stream.next();
      if (!m) break;
      batch.push_back(std::move(*m));
    }
    if (batch.empty()) break;
    long long n = static_cast<long long>(batch.size());
    long long found = LLONG_MAX;
    if (mode == ExecMode::Parallel) {
#pragma omp parallel
      {
        long long mine = LLONG_MAX;
#pragma omp for schedule(dynamic, 8) nowait
        for (long long i = 0; i < n; ++i)
          if (i < mine && !check(base + i, batch[i])) mine = i;
#pragma omp critical
        if (mine < found) found = mine;
      }
    } else {
      for (long long i = 0; i < n; ++i)
        if (!check(base + i, batch[i])) {
          found = i;
          break;
        }
    }
    if (found != LLONG_MAX) {
      result.checked = base + found + 1;
      result.fail_index = base + found;
      result.fail_model = std::move(batch[found]);
      return result;
    }
    base += n;
  }
  result.checked = base;
  return result;
}

// --- suites ------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = true;
  long long checked = 0;
  double millis = 0;
  std::string detail;     // first-failure description, empty when passing
  Json countermodel;      // model dump + focus fields, null when passing
};

struct SuiteReport {
  std::string suite;
  ExecMode mode = ExecMode::Parallel;
  std::vector<CheckResult> checks;
  double millis = 0;

  bool all_pass() const;
  Json to_json() const;
};

std::vector<std::string> suite_names();

/// Runs one registered suite. The hints carry seed / count / exhaustive
/// from the caller; dimensions and defaults are per suite (count <= 0
/// selects the suite's default).
SuiteReport run_suite(const std::string& name, const GenSpec& hints,
                      ExecMode mode = ExecMode::Parallel);

struct Refutation {
  AnyModel model;
  StateId state = 0;
};

/// First generated pointed model refuting f, scanning the spec's stream in
/// canonical order.
std::optional<Refutation> find_countermodel(const Formula& f, const GenSpec& spec);

// --- the fixed formula bank ---------------------------------------------------

/// The six fillers {p, q, p & q, ~p, [{}]p, [AG]p}.
std::vector<Formula> bank_fillers(const AgentUniverse& agents);

/// Every instance of one schema over all legal coalition tuples of the
/// universe, fillers drawn from bank_fillers.
std::vector<Formula> axiom_instances(AxiomSchema schema, const AgentUniverse& agents);

/// All schema instances; the bank used by the validity and equivalence
/// suites. Modal depth is at most 2.
std::vector<Formula> formula_bank(const AgentUniverse& agents);

/// Countermodel JSON: the model document plus the focused state/formula.
Json countermodel_json(const AnyModel& model, std::optional<StateId> focus_state,
                       const std::string& formula, const std::string& note);

}  // namespace clw

#endif
