#include "shellkit/promotion.hpp"

#include <algorithm>

namespace shellkit {
namespace {

template <class T>
LabeledGraph hasse_graph(std::span<const T> seq, Order order) {
  LabeledGraph g(static_cast<int>(seq.size()));
  for (auto [lo, hi] : induced_covers(seq, order)) {
    g.add_edge(static_cast<int>(lo) + 1, static_cast<int>(hi) + 1);
  }
  return g;
}

}  // namespace

bool Track::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

PositionPermutation::PositionPermutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<char> seen(one_line_.size(), 0);
  for (int v : one_line_) {
    if (v < 1 || static_cast<std::size_t>(v) > one_line_.size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw Error("not a permutation of [h]");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

PositionPermutation PositionPermutation::identity(int h) {
  std::vector<int> v(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return PositionPermutation(std::move(v));
}

PositionPermutation PositionPermutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (int p = 1; p <= size(); ++p) inv[static_cast<std::size_t>((*this)(p) - 1)] = p;
  return PositionPermutation(std::move(inv));
}

Track track(const LabeledGraph& g) {
  Track t{{1}};
  while (true) {
    const int v = t.vertices.back();
    const auto& nb = g.neighbors(v);
    const auto next = std::upper_bound(nb.begin(), nb.end(), v);
    if (next == nb.end()) break;
    t.vertices.push_back(*next);
  }
  return t;
}

PositionPermutation promotion_permutation(const LabeledGraph& g) {
  const int h = g.order();
  const Track t = track(g);
  std::vector<int> p(static_cast<std::size_t>(h));
  for (int i = 1; i <= h; ++i) p[static_cast<std::size_t>(i - 1)] = i - 1;
  const auto& v = t.vertices;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) p[static_cast<std::size_t>(v[j] - 1)] = v[j + 1] - 1;
  p[static_cast<std::size_t>(v.back() - 1)] = h;
  return PositionPermutation(std::move(p));
}

LabeledGraph graph_of(std::span<const KSubset> seq, GraphKind kind, Order order) {
  if (kind == GraphKind::Dual) return dual_graph(seq);
  return hasse_graph(seq, order);
}

LabeledGraph graph_of(std::span<const FlagTuple> seq, GraphKind kind, Order order) {
  if (kind == GraphKind::Dual) {
    const auto facets = flag_complex(seq);
    return dual_graph(std::span<const FlagFacet>(facets));
  }
  return hasse_graph(seq, order);
}

LabeledGraph graph_of(std::span<const FlagFacet> seq, GraphKind kind) {
  if (kind == GraphKind::Hasse) throw Error("flag facets carry no order; the Hasse graph is undefined");
  return dual_graph(seq);
}

}  // namespace shellkit
