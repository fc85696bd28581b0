#include "shellkit/matroid.hpp"

#include <algorithm>
#include <unordered_set>

namespace shellkit {
namespace {

constexpr int kMaxSweepUniverse = 8;

template <class T>
bool coxeter_sweep(std::span<const T> facets, Order order) {
  if (facets.empty()) throw Error("is_coxeter_matroid needs a nonempty set");
  validate_facets(facets);
  const int n = facets[0].universe();
  if (n > kMaxSweepUniverse) throw Error("the S_n sweep is limited to n <= 8");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    const auto image = act(FlagTuple(n, w), facets);
    if (!unique_maximum(std::span<const T>(image), order)) return false;
  } while (std::next_permutation(w.begin(), w.end()));
  return true;
}

}  // namespace

MatroidVerdict is_matroid(std::span<const KSubset> facets) {
  validate_facets(facets);
  const std::unordered_set<KSubset> members(facets.begin(), facets.end());
  for (const KSubset& a : facets) {
    for (const KSubset& b : facets) {
      const auto b_only = (b - a).members();
      for (int x : (a - b).members()) {
        const bool ok = std::any_of(b_only.begin(), b_only.end(), [&](int y) {
          return members.contains(symmetric_difference_update(a, x, y));
        });
        if (!ok) return {false, ExchangeWitness{a, b, x}};
      }
    }
  }
  return {};
}

MatroidVerdict has_quasi_exchange(std::span<const KSubset> facets) {
  validate_facets(facets);
  const std::unordered_set<KSubset> members(facets.begin(), facets.end());
  for (const KSubset& x : facets) {
    for (const KSubset& y : facets) {
      if (x == y) continue;
      const KSubset y_only = y - x;
      const int bound = y_only.max();
      for (int i : (x - y).members()) {
        if (i <= bound) continue;
        const auto ys = y_only.members();
        const bool ok = std::any_of(ys.begin(), ys.end(), [&](int j) {
          return members.contains(symmetric_difference_update(x, i, j));
        });
        if (!ok) return {false, ExchangeWitness{x, y, i}};
      }
    }
  }
  return {};
}

bool replays_exchange_failure(std::span<const KSubset> facets, const ExchangeWitness& w) {
  const auto has = [&](const KSubset& s) { return std::find(facets.begin(), facets.end(), s) != facets.end(); };
  if (!has(w.a_set) || !has(w.b_set) || !(w.a_set - w.b_set).contains(w.element)) return false;
  for (int y : (w.b_set - w.a_set).members()) {
    if (has(symmetric_difference_update(w.a_set, w.element, y))) return false;
  }
  return true;
}

bool replays_quasi_exchange_failure(std::span<const KSubset> facets, const ExchangeWitness& w) {
  if (w.a_set == w.b_set || w.element <= (w.b_set - w.a_set).max()) return false;
  return replays_exchange_failure(facets, w);
}

std::vector<KSubset> act(const FlagTuple& w, std::span<const KSubset> facets) {
  std::vector<KSubset> out;
  out.reserve(facets.size());
  for (const KSubset& x : facets) {
    if (x.universe() != w.universe()) throw Error("permutation and subset disagree on n");
    std::uint64_t m = 0;
    for (int v : x.members()) m |= std::uint64_t{1} << (w(v) - 1);
    out.push_back(KSubset::from_mask(x.universe(), m));
  }
  return out;
}

std::vector<FlagTuple> act(const FlagTuple& w, std::span<const FlagTuple> facets) {
  std::vector<FlagTuple> out;
  out.reserve(facets.size());
  for (const FlagTuple& x : facets) {
    if (x.universe() != w.universe()) throw Error("permutation and tuple disagree on n");
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(x.size()));
    for (int v : x.entries()) e.push_back(w(v));
    out.emplace_back(x.universe(), std::move(e));
  }
  return out;
}

bool is_coxeter_matroid(std::span<const KSubset> facets) { return coxeter_sweep(facets, Order::Gale); }

bool is_coxeter_matroid(std::span<const FlagTuple> facets, Order order) {
  if (order == Order::Gale) throw Error("tuples are ordered by the Conf or Perm order, not Gale");
  return coxeter_sweep(facets, order);
}

std::vector<KSubset> shift(std::span<const KSubset> facets, int i) {
  std::vector<FlagTuple> completed;
  completed.reserve(facets.size());
  for (const KSubset& x : facets) completed.push_back(canonical_completion(x));
  return shift(std::span<const FlagTuple>(completed), i);
}

std::vector<KSubset> shift(std::span<const FlagTuple> facets, int i) {
  std::vector<KSubset> out;
  for (const FlagTuple& x : facets) out.push_back(prefix_projection(x, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FlagTuple> underlying_flag_matroid(std::span<const KSubset> bases) {
  validate_facets(bases);
  std::vector<FlagTuple> out;
  for (const KSubset& x : bases) {
    const FlagTuple c = canonical_completion(x);
    const auto k = static_cast<std::ptrdiff_t>(x.size());
    std::vector<int> head(c.entries().begin(), c.entries().begin() + k);
    do {
      std::vector<int> tail(c.entries().begin() + k, c.entries().end());
      do {
        std::vector<int> e = head;
        e.insert(e.end(), tail.begin(), tail.end());
        out.emplace_back(x.universe(), std::move(e));
      } while (std::next_permutation(tail.begin(), tail.end()));
    } while (std::next_permutation(head.begin(), head.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shellkit
