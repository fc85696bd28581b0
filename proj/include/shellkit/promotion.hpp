#pragma once

#include <span>
#include <string>
#include <vector>

#include "shellkit/bruhat.hpp"
#include "shellkit/core.hpp"
#include "shellkit/shelling.hpp"
#include "shellkit/subdivision.hpp"

namespace shellkit {

enum class GraphKind { Dual, Hasse };

/// T_G: v_1 = 1, then repeatedly the least neighbour above the current vertex.
struct Track {
  std::vector<int> vertices;
  bool contains(int v) const;
  bool operator==(const Track&) const = default;
};

/// A permutation of [h] acting on sequence positions, in one-line notation.
class PositionPermutation {
 public:
  explicit PositionPermutation(std::vector<int> one_line);
  static PositionPermutation identity(int h);

  int size() const { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return one_line_; }
  PositionPermutation inverse() const;

  bool operator==(const PositionPermutation&) const = default;

 private:
  std::vector<int> one_line_;
};

Track track(const LabeledGraph& g);

/// ∂_G: off-track i goes to i-1, v_j to v_{j+1}-1, and the last track vertex to h.
PositionPermutation promotion_permutation(const LabeledGraph& g);

/// sigma C: the item landing at position p is C_{sigma^{-1}(p)}.
template <class F>
std::vector<F> apply_positions(const PositionPermutation& sigma, std::span<const F> seq) {
  if (static_cast<std::size_t>(sigma.size()) != seq.size()) {
    throw Error("permutation length does not match the sequence");
  }
  std::vector<F> out(seq.size());
  for (int p = 1; p <= sigma.size(); ++p) {
    out[static_cast<std::size_t>(sigma(p) - 1)] = seq[static_cast<std::size_t>(p - 1)];
  }
  return out;
}

/// Dual graph D(C), or H(C): the covering pairs of the subposet induced on the
/// support {C_1, ..., C_h}, translated to positions.
LabeledGraph graph_of(std::span<const KSubset> seq, GraphKind kind, Order order = Order::Gale);
LabeledGraph graph_of(std::span<const FlagTuple> seq, GraphKind kind, Order order = Order::Conf);
/// Flag facets carry no order; only the dual graph is available.
LabeledGraph graph_of(std::span<const FlagFacet> seq, GraphKind kind);

template <class F>
std::vector<F> promote(std::span<const F> seq, GraphKind kind) {
  return apply_positions(promotion_permutation(graph_of(seq, kind)), seq);
}

/// s_i^G C: swaps positions i and i+1 unless they are adjacent in the graph of C.
template <class F>
std::vector<F> elementary_move(std::span<const F> seq, int i, GraphKind kind) {
  const int h = static_cast<int>(seq.size());
  if (i < 1 || i > h - 1) throw Error("move position outside [1, h-1]");
  std::vector<F> out(seq.begin(), seq.end());
  if (!graph_of(seq, kind).adjacent(i, i + 1)) {
    std::swap(out[static_cast<std::size_t>(i - 1)], out[static_cast<std::size_t>(i)]);
  }
  return out;
}

/// s_{h-1} ... s_1 C, with the graph recomputed from the current sequence before each move.
template <class F>
std::vector<F> promote_via_moves(std::span<const F> seq, GraphKind kind = GraphKind::Dual) {
  validate_facets(seq);
  std::vector<F> cur(seq.begin(), seq.end());
  for (int i = 1; i < static_cast<int>(cur.size()); ++i) {
    cur = elementary_move(std::span<const F>(cur), i, kind);
  }
  return cur;
}

/// Promotes the first r items as a standalone sequence and keeps the rest in place.
template <class F>
std::vector<F> r_promote(std::span<const F> seq, int r, GraphKind kind) {
  if (r < 1 || static_cast<std::size_t>(r) > seq.size()) throw Error("r outside [1, h]");
  std::vector<F> out = promote(seq.first(static_cast<std::size_t>(r)), kind);
  out.insert(out.end(), seq.begin() + r, seq.end());
  return out;
}

/// ε C = (∂_2 ∘ ... ∘ ∂_{h-1} ∘ ∂_h)(C).
template <class F>
std::vector<F> evacuate(std::span<const F> seq, GraphKind kind) {
  validate_facets(seq);
  if (seq.empty()) throw Error("empty facet sequence");
  std::vector<F> cur(seq.begin(), seq.end());
  for (int r = static_cast<int>(cur.size()); r >= 2; --r) {
    cur = r_promote(std::span<const F>(cur), r, kind);
  }
  return cur;
}

}  // namespace shellkit
