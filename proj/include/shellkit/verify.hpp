#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shellkit/core.hpp"

namespace shellkit {

/// Suite bounds beyond the hard guards.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::string suite;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> counterexample;
  /// Extra named counts, e.g. how many linear extensions were examined.
  std::vector<std::pair<std::string, std::size_t>> counts;
  std::chrono::milliseconds duration{0};

  bool ok() const { return failed == 0; }
  /// Deterministic text (no timing).
  std::string to_text() const;
  /// Folds another report in; counterexamples keep the first one recorded.
  void merge(const RunReport& other);
};

struct SuiteOptions {
  int n = 5;
  int k = 2;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  int max_facets = 5;
  int random_n = 6;
  int random_k = 3;
  int random_max_h = 10;
  int jobs = 1;
};

enum class CorpusCheck { PromotionShell, EvacuationShell, Involution, Eq2, AppendingSwap };

using Sequence = std::vector<KSubset>;

/// Every shelling order of every complex in [n]^k_< with at most `max_facets` facets.
std::vector<Sequence> exhaustive_shelling_orders(int n, int k, int max_facets);
/// Random shelling orders: a random first facet, then uniformly random attachable
/// facets until a uniformly drawn target length in [1, max_h] or a dead end.
std::vector<Sequence> random_shelling_orders(int n, int k, int max_h, std::size_t samples,
                                             std::uint64_t seed);

/// Every linear extension of every quasi-exchange subset of [n]^k_< is a shelling order.
RunReport verify_extensions_shell(int n, int k, int jobs = 1);
/// X is a matroid iff B(X) is a Coxeter matroid, over all nonempty X in [n]^k_<.
RunReport verify_barycentric_coxeter(int n, int k, int jobs = 1);
/// Every linear extension of every order ideal of Conf_k([n]) is a flag shelling order.
RunReport verify_conf_ideals_flagshell(int n, int k, int jobs = 1);
/// Runs all `checks` on each corpus sequence; each input must itself be a shelling order.
RunReport verify_corpus(std::string suite, std::span<const Sequence> corpus,
                        std::span<const CorpusCheck> checks, int jobs = 1);
/// For linear extensions of Gale order ideals and intervals: H(L) ⊆ D(L) and ∂_D L = ∂_H L.
RunReport verify_hasse_vs_dual(int n, int k, int jobs = 1);
/// Dual-graph edges are exactly the single-transposition pairs and join comparable facets.
RunReport verify_bruhat_graph(int n, int k, int jobs = 1);

/// Names accepted by run_suite.
std::vector<std::string_view> suite_names();
/// Dispatches a named suite; throws UsageError on unknown names or bounds past the guards.
RunReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace shellkit
