#include "shellkit/verify.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "shellkit/bruhat.hpp"
#include "shellkit/matroid.hpp"
#include "shellkit/promotion.hpp"
#include "shellkit/shelling.hpp"
#include "shellkit/subdivision.hpp"

namespace shellkit {
namespace {

constexpr int kMaxExhaustiveN = 6;
constexpr std::size_t kMaxGround = 20;

void bump(RunReport& r, std::string_view name, std::size_t by = 1) {
  for (auto& [k, v] : r.counts) {
    if (k == name) {
      v += by;
      return;
    }
  }
  r.counts.emplace_back(std::string(name), by);
}

void pass(RunReport& r) {
  ++r.instances;
  ++r.passed;
}

void fail(RunReport& r, std::string what) {
  ++r.instances;
  ++r.failed;
  if (!r.counterexample) r.counterexample = std::move(what);
}

// Splits [0, count) into contiguous chunks, one per worker, and merges the partial
// reports in chunk order so the result does not depend on `jobs`.
template <class Fn>
RunReport sweep(std::string suite, std::size_t count, int jobs, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
  std::vector<RunReport> parts(workers);
  auto run = [&](std::size_t w) {
    const std::size_t lo = count * w / workers;
    const std::size_t hi = count * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) fn(i, parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  RunReport out;
  out.suite = std::move(suite);
  for (const auto& p : parts) out.merge(p);
  out.duration = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return out;
}

void check_bounds(int n, int k) {
  if (n < 1 || n > kMaxExhaustiveN) throw UsageError("exhaustive sweeps need 1 <= n <= 6");
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
}

template <class T>
std::vector<T> subset_of(std::span<const T> ground, std::uint64_t mask) {
  std::vector<T> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if ((mask >> i) & 1U) out.push_back(ground[i]);
  }
  return out;
}

template <class T>
void check_ground(std::span<const T> ground) {
  if (ground.size() > kMaxGround) throw UsageError("more than 2^20 subsets; lower n or k");
}

std::string show(std::span<const KSubset> s) { return to_string(s); }
std::string show(std::span<const FlagTuple> s) { return to_string(s); }

bool transposition_pair(const KSubset& x, const KSubset& y) {
  const int n = x.universe();
  const FlagTuple base = canonical_completion(y);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      std::vector<int> t(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v) t[static_cast<std::size_t>(v - 1)] = v;
      std::swap(t[static_cast<std::size_t>(a - 1)], t[static_cast<std::size_t>(b - 1)]);
      // P^(k)(t y): left multiplication relabels values; the projection sorts them.
      const FlagTuple moved(n, [&] {
        std::vector<int> e;
        for (int v : base.entries()) e.push_back(t[static_cast<std::size_t>(v - 1)]);
        return e;
      }());
      if (prefix_projection(moved, y.size()) == x) return true;
    }
  }
  return false;
}

}  // namespace

std::string RunReport::to_text() const {
  std::string out = "suite: " + suite + "\n";
  out += "instances: " + std::to_string(instances) + "\n";
  out += "passed: " + std::to_string(passed) + "\n";
  out += "failed: " + std::to_string(failed) + "\n";
  for (const auto& [name, v] : counts) out += name + ": " + std::to_string(v) + "\n";
  if (counterexample) out += "counterexample: " + *counterexample + "\n";
  out += std::string("verdict: ") + (ok() ? "PASS" : "FAIL") + "\n";
  return out;
}

void RunReport::merge(const RunReport& other) {
  instances += other.instances;
  passed += other.passed;
  failed += other.failed;
  if (!counterexample && other.counterexample) counterexample = other.counterexample;
  for (const auto& [name, v] : other.counts) bump(*this, name, v);
  duration += other.duration;
}

std::vector<Sequence> exhaustive_shelling_orders(int n, int k, int max_facets) {
  check_bounds(n, k);
  const auto ground = all_ksubsets(n, k);
  std::vector<Sequence> out;
  Sequence cur;
  std::vector<char> used(ground.size(), 0);
  auto grow = [&](auto&& self) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_facets) return;
    for (std::size_t c = 0; c < ground.size(); ++c) {
      if (used[c]) continue;
      if (!cur.empty() && !detail::attaches(ground[c], std::span<const KSubset>(cur), k)) continue;
      used[c] = 1;
      cur.push_back(ground[c]);
      self(self);
      cur.pop_back();
      used[c] = 0;
    }
  };
  grow(grow);
  return out;
}

std::vector<Sequence> random_shelling_orders(int n, int k, int max_h, std::size_t samples,
                                             std::uint64_t seed) {
  if (n < 1 || n > kMaxUniverse || k < 1 || k > n || max_h < 1) throw UsageError("bad random corpus bounds");
  const auto ground = all_ksubsets(n, k);
  std::mt19937_64 rng(seed);
  std::vector<Sequence> out;
  out.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto target = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, max_h)(rng));
    std::vector<char> used(ground.size(), 0);
    Sequence seq;
    const auto first = std::uniform_int_distribution<std::size_t>(0, ground.size() - 1)(rng);
    seq.push_back(ground[first]);
    used[first] = 1;
    while (seq.size() < target) {
      std::vector<std::size_t> cand;
      for (std::size_t c = 0; c < ground.size(); ++c) {
        if (!used[c] && detail::attaches(ground[c], std::span<const KSubset>(seq), k)) cand.push_back(c);
      }
      if (cand.empty()) break;
      const auto pick = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
      used[pick] = 1;
      seq.push_back(ground[pick]);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

RunReport verify_extensions_shell(int n, int k, int jobs) {
  check_bounds(n, k);
  const auto ground = all_ksubsets(n, k);
  check_ground(std::span<const KSubset>(ground));
  const std::size_t count = (std::size_t{1} << ground.size()) - 1;
  return sweep("extensions-shell", count, jobs, [&](std::size_t i, RunReport& r) {
    const auto x = subset_of(std::span<const KSubset>(ground), i + 1);
    const std::span<const KSubset> xs(x);
    if (!has_quasi_exchange(xs)) return;
    if (is_matroid(xs)) bump(r, "matroids");
    if (is_order_ideal(xs)) bump(r, "order ideals");
    bool ok = true;
    for_each_linear_extension(xs, Order::Gale, [&](std::span<const KSubset> ext) {
      bump(r, "linear extensions");
      if (!is_shelling_order(ext)) {
        fail(r, "extension " + show(ext) + " of " + show(xs) + " is not a shelling order");
        ok = false;
        return false;
      }
      return true;
    });
    if (ok) pass(r);
  });
}

RunReport verify_barycentric_coxeter(int n, int k, int jobs) {
  check_bounds(n, k);
  const auto ground = all_ksubsets(n, k);
  check_ground(std::span<const KSubset>(ground));
  const std::size_t count = (std::size_t{1} << ground.size()) - 1;
  return sweep("barycentric-coxeter", count, jobs, [&](std::size_t i, RunReport& r) {
    const auto x = subset_of(std::span<const KSubset>(ground), i + 1);
    const bool matroid = is_matroid(std::span<const KSubset>(x)).holds;
    const auto b = barycentric(std::span<const KSubset>(x));
    const bool coxeter = is_coxeter_matroid(std::span<const FlagTuple>(b));
    if (matroid) bump(r, "matroids");
    if (matroid == coxeter) {
      pass(r);
    } else {
      fail(r, show(std::span<const KSubset>(x)) + (matroid ? " is a matroid but B(X) is not a Coxeter matroid"
                                                           : " is not a matroid but B(X) is a Coxeter matroid"));
    }
  });
}

RunReport verify_conf_ideals_flagshell(int n, int k, int jobs) {
  check_bounds(n, k);
  const auto ground = all_flag_tuples(n, k);
  check_ground(std::span<const FlagTuple>(ground));
  const std::size_t count = (std::size_t{1} << ground.size()) - 1;
  return sweep("conf-ideals-flagshell", count, jobs, [&](std::size_t i, RunReport& r) {
    const auto y = subset_of(std::span<const FlagTuple>(ground), i + 1);
    const std::span<const FlagTuple> ys(y);
    if (!is_order_ideal(ys, Order::Conf)) return;
    bool ok = true;
    for_each_linear_extension(ys, Order::Conf, [&](std::span<const FlagTuple> ext) {
      bump(r, "linear extensions");
      if (!is_flag_shelling_order(ext)) {
        fail(r, "extension " + show(ext) + " of the ideal " + show(ys) + " is not a flag shelling order");
        ok = false;
        return false;
      }
      return true;
    });
    if (ok) pass(r);
  });
}

RunReport verify_corpus(std::string suite, std::span<const Sequence> corpus,
                        std::span<const CorpusCheck> checks, int jobs) {
  return sweep(std::move(suite), corpus.size(), jobs, [&](std::size_t i, RunReport& r) {
    const std::span<const KSubset> c(corpus[i]);
    if (!is_shelling_order(c)) {
      fail(r, "corpus entry " + show(c) + " is not a shelling order");
      return;
    }
    const int k = c[0].size();
    bool applicable = false;
    for (CorpusCheck check : checks) {
      switch (check) {
        case CorpusCheck::PromotionShell: {
          applicable = true;
          const auto p = promote(c, GraphKind::Dual);
          if (!is_shelling_order(std::span<const KSubset>(p))) {
            return fail(r, "promotion of " + show(c) + " is " + show(std::span<const KSubset>(p)) + ", not a shelling order");
          }
          break;
        }
        case CorpusCheck::EvacuationShell: {
          applicable = true;
          const auto e = evacuate(c, GraphKind::Dual);
          if (!is_shelling_order(std::span<const KSubset>(e))) {
            return fail(r, "evacuation of " + show(c) + " is " + show(std::span<const KSubset>(e)) + ", not a shelling order");
          }
          break;
        }
        case CorpusCheck::Involution: {
          applicable = true;
          const auto e = evacuate(c, GraphKind::Dual);
          const auto ee = evacuate(std::span<const KSubset>(e), GraphKind::Dual);
          if (!std::equal(ee.begin(), ee.end(), c.begin(), c.end())) {
            return fail(r, "evacuating " + show(c) + " twice gives " + show(std::span<const KSubset>(ee)));
          }
          break;
        }
        case CorpusCheck::Eq2: {
          applicable = true;
          const auto a = promote_via_moves(c);
          const auto b = promote(c, GraphKind::Dual);
          if (a != b) {
            return fail(r, "moves give " + show(std::span<const KSubset>(a)) + " but promotion gives " +
                               show(std::span<const KSubset>(b)) + " for " + show(c));
          }
          break;
        }
        case CorpusCheck::AppendingSwap: {
          const std::size_t h = c.size();
          if (h < 3 || (c[h - 2] & c[h - 1]).size() >= k - 1) break;
          applicable = true;
          Sequence s(c.begin(), c.end());
          std::swap(s[h - 2], s[h - 1]);
          if (!is_shelling_order(std::span<const KSubset>(s))) {
            return fail(r, "swapping the last two facets of " + show(c) + " breaks the shelling");
          }
          break;
        }
      }
    }
    if (applicable) {
      pass(r);
    } else {
      bump(r, "not applicable");
    }
  });
}

RunReport verify_hasse_vs_dual(int n, int k, int jobs) {
  check_bounds(n, k);
  const auto ground = all_ksubsets(n, k);
  check_ground(std::span<const KSubset>(ground));
  std::vector<std::pair<std::string, std::vector<KSubset>>> supports;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << ground.size()); ++m) {
    auto x = subset_of(std::span<const KSubset>(ground), m);
    if (is_order_ideal(std::span<const KSubset>(x))) supports.emplace_back("order ideal", std::move(x));
  }
  for (const auto& lo : ground) {
    for (const auto& hi : ground) {
      if (!gale_leq(lo, hi)) continue;
      std::vector<KSubset> x;
      for (const auto& z : ground) {
        if (gale_leq(lo, z) && gale_leq(z, hi)) x.push_back(z);
      }
      supports.emplace_back("interval", std::move(x));
    }
  }
  return sweep("hasse-vs-dual", supports.size(), jobs, [&](std::size_t i, RunReport& r) {
    const auto& [what, x] = supports[i];
    bump(r, what == "interval" ? "intervals" : "order ideals");
    for_each_linear_extension(std::span<const KSubset>(x), Order::Gale, [&](std::span<const KSubset> l) {
      const LabeledGraph h = graph_of(l, GraphKind::Hasse);
      const LabeledGraph d = graph_of(l, GraphKind::Dual);
      if (!h.is_subgraph_of(d)) {
        fail(r, "Hasse graph of " + show(l) + " (" + what + ") is not inside its dual graph");
        return false;
      }
      if (promote(l, GraphKind::Dual) != promote(l, GraphKind::Hasse)) {
        fail(r, "dual and Hasse promotion differ on " + show(l) + " (" + what + ")");
        return false;
      }
      pass(r);
      return true;
    });
  });
}

RunReport verify_bruhat_graph(int n, int k, int jobs) {
  check_bounds(n, k);
  const auto ground = all_ksubsets(n, k);
  check_ground(std::span<const KSubset>(ground));
  const std::size_t count = (std::size_t{1} << ground.size()) - 1;
  return sweep("remark-bruhat-graph", count, jobs, [&](std::size_t i, RunReport& r) {
    const auto x = subset_of(std::span<const KSubset>(ground), i + 1);
    const LabeledGraph d = dual_graph(std::span<const KSubset>(x));
    for (int a = 1; a <= d.order(); ++a) {
      for (int b = a + 1; b <= d.order(); ++b) {
        const KSubset& fa = x[static_cast<std::size_t>(a - 1)];
        const KSubset& fb = x[static_cast<std::size_t>(b - 1)];
        const bool edge = d.adjacent(a, b);
        if (edge != transposition_pair(fa, fb)) {
          return fail(r, "dual edge {" + fa.to_string() + "," + fb.to_string() + "} disagrees with the transposition test in " +
                             show(std::span<const KSubset>(x)));
        }
        if (edge && !gale_leq(fa, fb) && !gale_leq(fb, fa)) {
          return fail(r, "dual edge {" + fa.to_string() + "," + fb.to_string() + "} joins incomparable facets");
        }
      }
    }
    bump(r, "dual edges", d.edge_count());
    pass(r);
  });
}

std::vector<std::string_view> suite_names() {
  return {"extensions-shell", "barycentric-coxeter", "conf-ideals-flagshell", "promotion-shell",
          "evacuation-shell", "hasse-vs-dual",       "eq2-oracle",            "remark-bruhat-graph"};
}

RunReport run_suite(std::string_view name, const SuiteOptions& o) {
  if (name == "extensions-shell") return verify_extensions_shell(o.n, o.k, o.jobs);
  if (name == "barycentric-coxeter") return verify_barycentric_coxeter(o.n, o.k, o.jobs);
  if (name == "conf-ideals-flagshell") return verify_conf_ideals_flagshell(o.n, o.k, o.jobs);
  if (name == "hasse-vs-dual") return verify_hasse_vs_dual(o.n, o.k, o.jobs);
  if (name == "remark-bruhat-graph") return verify_bruhat_graph(o.n, o.k, o.jobs);

  std::vector<CorpusCheck> checks;
  if (name == "promotion-shell") {
    checks = {CorpusCheck::PromotionShell, CorpusCheck::AppendingSwap};
  } else if (name == "evacuation-shell") {
    checks = {CorpusCheck::EvacuationShell, CorpusCheck::Involution};
  } else if (name == "eq2-oracle") {
    checks = {CorpusCheck::Eq2};
  } else {
    throw UsageError("unknown suite: " + std::string(name));
  }
  if (o.max_facets < 1) throw UsageError("--max-facets must be positive");
  auto corpus = exhaustive_shelling_orders(o.n, o.k, o.max_facets);
  if (o.samples > 0) {
    if (o.random_n > 8) throw UsageError("random corpus needs n <= 8");
    auto extra = random_shelling_orders(o.random_n, o.random_k, o.random_max_h, o.samples, o.seed);
    corpus.insert(corpus.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  }
  return verify_corpus(std::string(name), std::span<const Sequence>(corpus), checks, o.jobs);
}

}  // namespace shellkit
