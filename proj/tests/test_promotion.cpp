#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace shellkit;
using namespace testing;

namespace {

std::vector<std::vector<char>> adjacency(const LabeledGraph& g) {
  const auto h = static_cast<std::size_t>(g.order());
  std::vector<std::vector<char>> adj(h, std::vector<char>(h, 0));
  for (auto [a, b] : g.edges()) {
    adj[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = 1;
    adj[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = 1;
  }
  return adj;
}

LabeledGraph random_graph(int h, std::mt19937_64& rng) {
  LabeledGraph g(h);
  for (int i = 1; i <= h; ++i) {
    for (int j = i + 1; j <= h; ++j) {
      if (rng() % 3 == 0) g.add_edge(i, j);
    }
  }
  return g;
}

std::vector<KSubset> random_sequence(int n, int k, int max_h, std::mt19937_64& rng) {
  auto pool = all_ksubsets(n, k);
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(1 + rng() % static_cast<unsigned>(max_h));
  return pool;
}

using Seq = std::vector<KSubset>;

}  // namespace

TEST_CASE("track") {
  const auto d = graph_of(std::span<const KSubset>(bjorner()), GraphKind::Dual);
  const auto h = graph_of(std::span<const KSubset>(bjorner()), GraphKind::Hasse);
  CHECK(track(d).vertices == std::vector<int>{1, 2, 3, 7, 10, 11});
  CHECK(track(h).vertices == std::vector<int>{1, 2, 3, 7, 9, 10, 11});
  CHECK(track(LabeledGraph(1)).vertices == std::vector<int>{1});
  CHECK_THROWS_AS(track(LabeledGraph(0)), Error);

  // Tracks are maximal increasing greedy paths.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_graph(1 + static_cast<int>(rng() % 9), rng);
    const auto t = track(g).vertices;
    CHECK(t.front() == 1);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      CHECK(g.adjacent(t[i], t[i + 1]));
      for (int j = t[i] + 1; j < t[i + 1]; ++j) CHECK(!g.adjacent(t[i], j));
    }
    for (int j = t.back() + 1; j <= g.order(); ++j) CHECK(!g.adjacent(t.back(), j));
  }
}

TEST_CASE("promotion_permutation") {
  const auto d = graph_of(std::span<const KSubset>(bjorner()), GraphKind::Dual);
  const auto h = graph_of(std::span<const KSubset>(bjorner()), GraphKind::Hasse);
  CHECK(promotion_permutation(d).one_line() == std::vector<int>{1, 2, 6, 3, 4, 5, 9, 7, 8, 10, 11});
  CHECK(promotion_permutation(h).one_line() == std::vector<int>{1, 2, 6, 3, 4, 5, 8, 7, 9, 10, 11});

  LabeledGraph complete(5);
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) complete.add_edge(i, j);
  }
  CHECK(promotion_permutation(complete) == PositionPermutation::identity(5));
  CHECK(promotion_permutation(LabeledGraph(5)).one_line() == std::vector<int>{5, 1, 2, 3, 4});

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_graph(1 + static_cast<int>(rng() % 9), rng);
    auto expected = oracle::promotion(adjacency(g));
    CHECK(promotion_permutation(g).one_line() == expected);
  }
}

TEST_CASE("PositionPermutation and apply_positions") {
  CHECK_THROWS_AS(PositionPermutation({1, 1}), Error);
  CHECK_THROWS_AS(PositionPermutation({0, 1}), Error);
  const PositionPermutation s({2, 3, 1});
  CHECK(s.inverse().one_line() == std::vector<int>{3, 1, 2});

  const auto& c = bjorner();
  CHECK(apply_positions(PositionPermutation::identity(11), std::span<const KSubset>(c)) == c);
  const auto d = promotion_permutation(graph_of(std::span<const KSubset>(c), GraphKind::Dual));
  CHECK(apply_positions(d, std::span<const KSubset>(c)) ==
        ksv(6, {"123", "125", "234", "235", "134", "126", "145", "246", "136", "356", "456"}));
  const auto small = ksv(6, {"235", "234", "246"});
  CHECK(apply_positions(PositionPermutation({1, 3, 2}), std::span<const KSubset>(small)) ==
        ksv(6, {"235", "246", "234"}));
  CHECK_THROWS_AS(apply_positions(PositionPermutation({1, 2}), std::span<const KSubset>(small)), Error);
}

TEST_CASE("graph_of") {
  const auto small = ksv(6, {"235", "234", "246"});
  const std::vector<std::pair<int, int>> e1{{1, 2}, {1, 3}};
  CHECK(graph_of(std::span<const KSubset>(small), GraphKind::Hasse).edges() == e1);
  const auto chain = ksv(5, {"123", "124", "135", "145"});
  const std::vector<std::pair<int, int>> e2{{1, 2}, {2, 3}, {3, 4}};
  CHECK(graph_of(std::span<const KSubset>(chain), GraphKind::Hasse).edges() == e2);
  const auto one = ksv(5, {"135"});
  CHECK(graph_of(std::span<const KSubset>(one), GraphKind::Hasse).edge_count() == 0);
  CHECK(graph_of(std::span<const KSubset>(one), GraphKind::Dual).edge_count() == 0);

  const auto facets = flag_complex(ftv(4, {"12", "13"}));
  CHECK(graph_of(std::span<const FlagFacet>(facets), GraphKind::Dual).edge_count() == 1);
  CHECK_THROWS_AS(graph_of(std::span<const FlagFacet>(facets), GraphKind::Hasse), Error);

  // Tuple sequences: the dual graph is the flag complex's, the Hasse graph uses Conf.
  const auto y = ftv(4, {"12", "13", "21", "23", "14"});
  const auto fy = flag_complex(y);
  CHECK(graph_of(std::span<const FlagTuple>(y), GraphKind::Dual) == dual_graph(std::span<const FlagFacet>(fy)));
  const auto hy = graph_of(std::span<const FlagTuple>(y), GraphKind::Hasse);
  for (auto [a, b] : hy.edges()) {
    CHECK(conf_leq(y[static_cast<std::size_t>(a - 1)], y[static_cast<std::size_t>(b - 1)]));
  }
}

TEST_CASE("promote") {
  const auto& c = bjorner();
  CHECK(promote(std::span<const KSubset>(c), GraphKind::Dual) ==
        ksv(6, {"123", "125", "234", "235", "134", "126", "145", "246", "136", "356", "456"}));
  CHECK(promote(std::span<const KSubset>(c), GraphKind::Hasse) ==
        ksv(6, {"123", "125", "234", "235", "134", "126", "145", "136", "246", "356", "456"}));
  const auto small = ksv(6, {"235", "234", "246"});
  CHECK(promote(std::span<const KSubset>(small), GraphKind::Dual) == small);
  CHECK(promote(std::span<const KSubset>(small), GraphKind::Hasse) == ksv(6, {"235", "246", "234"}));
  const auto l = ksv(5, {"123", "124", "135", "145"});
  CHECK(promote(std::span<const KSubset>(l), GraphKind::Dual) == ksv(5, {"123", "135", "124", "145"}));
  CHECK(promote(std::span<const KSubset>(l), GraphKind::Hasse) == l);
}

TEST_CASE("elementary_move") {
  const auto c = ksv(9, {"123", "456", "789"});
  CHECK(elementary_move(std::span<const KSubset>(c), 1, GraphKind::Dual) == ksv(9, {"456", "123", "789"}));
  const auto d = ksv(9, {"123", "124", "789"});
  CHECK(elementary_move(std::span<const KSubset>(d), 1, GraphKind::Dual) == d);
  CHECK_THROWS_AS(elementary_move(std::span<const KSubset>(d), 0, GraphKind::Dual), Error);
  CHECK_THROWS_AS(elementary_move(std::span<const KSubset>(d), 3, GraphKind::Dual), Error);
}

TEST_CASE("promote_via_moves matches promote") {
  CHECK(promote_via_moves(std::span<const KSubset>(bjorner())) == promote(std::span<const KSubset>(bjorner()), GraphKind::Dual));
  const auto one = ksv(6, {"123"});
  CHECK(promote_via_moves(std::span<const KSubset>(one)) == one);

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto c = random_sequence(6, 3, 8, rng);
    CHECK(promote_via_moves(std::span<const KSubset>(c)) == promote(std::span<const KSubset>(c), GraphKind::Dual));
  }
}

TEST_CASE("r_promote") {
  const auto small = ksv(6, {"235", "234", "246"});
  CHECK(r_promote(std::span<const KSubset>(small), 3, GraphKind::Dual) ==
        promote(std::span<const KSubset>(small), GraphKind::Dual));
  CHECK(r_promote(std::span<const KSubset>(small), 1, GraphKind::Hasse) == small);
  CHECK(r_promote(std::span<const KSubset>(small), 2, GraphKind::Dual) == small);
  CHECK_THROWS_AS(r_promote(std::span<const KSubset>(small), 0, GraphKind::Dual), Error);
  CHECK_THROWS_AS(r_promote(std::span<const KSubset>(small), 4, GraphKind::Dual), Error);
}

TEST_CASE("evacuate") {
  const auto one = ksv(6, {"123"});
  CHECK(evacuate(std::span<const KSubset>(one), GraphKind::Dual) == one);
  const auto far = ksv(6, {"123", "456"});
  CHECK(evacuate(std::span<const KSubset>(far), GraphKind::Dual) == ksv(6, {"456", "123"}));
  const auto near = ksv(6, {"123", "124"});
  CHECK(evacuate(std::span<const KSubset>(near), GraphKind::Dual) == near);

  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto c = random_sequence(6, 3, 8, rng);
    const auto e = evacuate(std::span<const KSubset>(c), GraphKind::Dual);
    CHECK(as_set_of(e) == as_set_of(c));
    CHECK(evacuate(std::span<const KSubset>(e), GraphKind::Dual) == c);
  }
}

TEST_CASE("promotion commutes with relabeling") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_sequence(6, 3, 9, rng);
    const auto sigma = random_permutation(6, rng);
    const auto image = relabel(sigma, c);
    const auto pc = promote(std::span<const KSubset>(c), GraphKind::Dual);
    CHECK(promote(std::span<const KSubset>(image), GraphKind::Dual) == relabel(sigma, pc));
  }
}
