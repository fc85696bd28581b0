#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shellkit/core.hpp"

namespace shellkit {

/// Vertices of `pivot` that also lie in `other`, as a mask over pivot's vertices.
/// Facet alphabets plug into the shelling machinery by overloading this.
inline std::uint64_t meet_in(const KSubset& other, const KSubset& pivot) {
  return other.mask() & pivot.mask();
}

/// One certified pair: facet z < j meets C_j in a codimension-one face containing C_i ∩ C_j.
/// Positions are 1-based.
struct ShellingStep {
  int i = 0;
  int j = 0;
  int z = 0;
  bool operator==(const ShellingStep&) const = default;
};

struct ShellingWitness {
  std::vector<ShellingStep> steps;
};

struct ShellingResult {
  std::optional<ShellingWitness> witness;
  /// Least failing j with its first failing i, when the sequence is not a shelling.
  std::optional<std::pair<int, int>> failure;

  explicit operator bool() const { return witness.has_value(); }
};

namespace detail {

template <class F>
bool attaches(const F& facet, std::span<const F> placed, int k) {
  std::vector<std::uint64_t> ridges;
  std::vector<std::uint64_t> meets;
  meets.reserve(placed.size());
  for (const F& g : placed) {
    const std::uint64_t m = meet_in(g, facet);
    meets.push_back(m);
    if (std::popcount(m) == k - 1) ridges.push_back(m);
  }
  for (std::uint64_t m : meets) {
    if (std::none_of(ridges.begin(), ridges.end(), [m](std::uint64_t r) { return (m & ~r) == 0; })) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Checks that for all i < j some z < j has |C_z ∩ C_j| = k-1 and C_i ∩ C_j ⊆ C_z ∩ C_j.
/// z is searched from j-1 downward, and the first hit is recorded.
template <class F>
ShellingResult is_shelling_order(std::span<const F> seq) {
  validate_facets(seq);
  ShellingResult result;
  if (seq.empty()) throw Error("empty facet sequence");
  const int k = seq[0].size();
  const int h = static_cast<int>(seq.size());
  ShellingWitness witness;
  std::vector<std::uint64_t> meets(seq.size());
  for (int j = 2; j <= h; ++j) {
    const F& cj = seq[static_cast<std::size_t>(j - 1)];
    for (int t = 1; t < j; ++t) meets[static_cast<std::size_t>(t - 1)] = meet_in(seq[static_cast<std::size_t>(t - 1)], cj);
    for (int i = 1; i < j; ++i) {
      const std::uint64_t mi = meets[static_cast<std::size_t>(i - 1)];
      int found = 0;
      for (int z = j - 1; z >= 1; --z) {
        const std::uint64_t mz = meets[static_cast<std::size_t>(z - 1)];
        if (std::popcount(mz) == k - 1 && (mi & ~mz) == 0) {
          found = z;
          break;
        }
      }
      if (found == 0) {
        result.failure = std::pair{j, i};
        return result;
      }
      witness.steps.push_back({i, j, found});
    }
  }
  result.witness = std::move(witness);
  return result;
}

/// Some shelling order of the facets, by backtracking over canonically sorted facets.
/// A partial order is extended only by facets that attach along codimension-one faces;
/// since attachability depends on the placed set alone, dead sets are memoized.
template <class F>
std::optional<std::vector<F>> find_shelling_order(std::span<const F> facets) {
  validate_facets(facets);
  if (facets.empty()) throw Error("empty complex");
  std::vector<F> items(facets.begin(), facets.end());
  std::sort(items.begin(), items.end());
  const std::size_t h = items.size();
  const int k = items[0].size();

  std::vector<F> current;
  std::vector<bool> used(h, false);
  std::unordered_set<std::vector<bool>> dead;

  auto search = [&](auto&& self) -> bool {
    if (current.size() == h) return true;
    if (dead.contains(used)) return false;
    for (std::size_t c = 0; c < h; ++c) {
      if (used[c]) continue;
      if (!current.empty() && !detail::attaches(items[c], std::span<const F>(current), k)) continue;
      used[c] = true;
      current.push_back(items[c]);
      if (self(self)) return true;
      current.pop_back();
      used[c] = false;
    }
    dead.insert(used);
    return false;
  };
  if (search(search)) return current;
  return std::nullopt;
}

/// Graph on [h] with {i,j} an edge iff |C_i ∩ C_j| = k-1.
template <class F>
LabeledGraph dual_graph(std::span<const F> seq) {
  validate_facets(seq);
  if (seq.empty()) throw Error("empty facet sequence");
  const int k = seq[0].size();
  const int h = static_cast<int>(seq.size());
  LabeledGraph g(h);
  for (int i = 1; i <= h; ++i) {
    for (int j = i + 1; j <= h; ++j) {
      if (std::popcount(meet_in(seq[static_cast<std::size_t>(i - 1)], seq[static_cast<std::size_t>(j - 1)])) == k - 1) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

/// sigma applied vertexwise to every facet (each facet re-sorted).
std::vector<KSubset> relabel(const FlagTuple& sigma, std::span<const KSubset> seq);

/// Whether some sigma in S_n maps A to B position by position. Brute force, n <= 8.
bool are_isomorphic(std::span<const KSubset> a, std::span<const KSubset> b);

}  // namespace shellkit
