#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shellkit/bruhat.hpp"
#include "shellkit/core.hpp"

namespace shellkit {

/// A failed exchange: for `a` in A\B no `b` in B\A puts A+{a,b} back into the complex.
/// For the quasi-exchange test A plays x, B plays y and `a` plays i.
struct ExchangeWitness {
  KSubset a_set;
  KSubset b_set;
  int element = 0;
};

struct MatroidVerdict {
  bool holds = true;
  std::optional<ExchangeWitness> witness;

  explicit operator bool() const { return holds; }
};

/// Basis exchange: for all A, B in X and a in A\B there is b in B\A with A+{a,b} in X.
MatroidVerdict is_matroid(std::span<const KSubset> facets);

/// Quasi-exchange: only elements i of x\y exceeding max(y\x) must be exchangeable.
MatroidVerdict has_quasi_exchange(std::span<const KSubset> facets);

/// Re-checks one witness against the complex; true iff the axiom really fails there.
bool replays_exchange_failure(std::span<const KSubset> facets, const ExchangeWitness& w);
bool replays_quasi_exchange_failure(std::span<const KSubset> facets, const ExchangeWitness& w);

/// The element m with x <= m for all x, if it exists.
template <class T>
std::optional<T> unique_maximum(std::span<const T> elements, Order order) {
  if (elements.empty()) throw Error("unique_maximum of an empty set");
  // A maximum, if there is one, displaces every earlier candidate during the scan.
  const T* cand = &elements[0];
  for (const T& x : elements) {
    if (!leq(x, *cand, order)) cand = &x;
  }
  for (const T& x : elements) {
    if (!leq(x, *cand, order)) return std::nullopt;
  }
  return *cand;
}

template <class T>
std::optional<T> unique_minimum(std::span<const T> elements, Order order) {
  if (elements.empty()) throw Error("unique_minimum of an empty set");
  const T* cand = &elements[0];
  for (const T& x : elements) {
    if (!leq(*cand, x, order)) cand = &x;
  }
  for (const T& x : elements) {
    if (!leq(*cand, x, order)) return std::nullopt;
  }
  return *cand;
}

/// The image {P^J(w x) : x in X} for one w in S_n.
std::vector<KSubset> act(const FlagTuple& w, std::span<const KSubset> facets);
std::vector<FlagTuple> act(const FlagTuple& w, std::span<const FlagTuple> facets);

/// Maximality property: every w-image of Y has a unique maximum. KSubsets use the
/// Gale order; tuples use Conf (or Perm when explicitly requested for permutations).
/// Sweeps all of S_n, so n <= 8.
bool is_coxeter_matroid(std::span<const KSubset> facets);
bool is_coxeter_matroid(std::span<const FlagTuple> facets, Order order = Order::Conf);

/// {P^(i)(x) : x in X}. KSubsets are completed by their sorted complement when i > k.
std::vector<KSubset> shift(std::span<const KSubset> facets, int i);
std::vector<KSubset> shift(std::span<const FlagTuple> facets, int i);

/// Union of the cosets x (S_n)_{S\{s_k}} over the bases x, as sorted permutations.
std::vector<FlagTuple> underlying_flag_matroid(std::span<const KSubset> bases);

}  // namespace shellkit
