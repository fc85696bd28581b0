#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace shellkit;
using namespace testing;

TEST_CASE("sort_blocks") {
  CHECK(sort_blocks(ft(7, "4317625"), DescentSet(7, {1, 2, 4, 6})) == ft(7, "1346725"));
  CHECK(sort_blocks(ft(5, "42513"), DescentSet(5, {})) == ft(5, "42513"));
  CHECK(sort_blocks(ft(5, "42513"), DescentSet::all(5)) == FlagTuple::identity(5));
  CHECK_THROWS_AS(DescentSet(5, {5}), Error);
  CHECK_THROWS_AS(sort_blocks(ft(5, "425"), DescentSet(5, {1})), Error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const FlagTuple w = random_permutation(7, rng);
    std::vector<int> j;
    for (int i = 1; i < 7; ++i) {
      if (rng() & 1U) j.push_back(i);
    }
    const DescentSet js(7, j);
    const FlagTuple p = sort_blocks(w, js);
    CHECK(sort_blocks(p, js) == p);
    for (int i : j) CHECK(p(i) < p(i + 1));
  }
}

TEST_CASE("prefix_projection") {
  CHECK(prefix_projection(ft(5, "3152"), 3) == ks(5, "135"));
  CHECK(prefix_projection(ft(5, "4215"), 3) == ks(5, "124"));
  CHECK(prefix_projection(ft(5, "4215"), 4) == sort_to_ksubset(ft(5, "4215")));
  CHECK_THROWS_AS(prefix_projection(ft(5, "4215"), 5), Error);
  CHECK_THROWS_AS(prefix_projection(ft(5, "4215"), 0), Error);
}

TEST_CASE("gale_leq") {
  CHECK(gale_leq(ks(8, "3456"), ks(8, "4568")));
  CHECK(!gale_leq(ks(8, "2568"), ks(8, "3478")));
  CHECK(gale_leq(ks(8, "2568"), ks(8, "2568")));
  CHECK_THROWS_AS(gale_leq(ks(8, "25"), ks(8, "347")), Error);
  CHECK_THROWS_AS(gale_leq(ks(8, "25"), ks(7, "34")), Error);
}

TEST_CASE("conf_leq and perm_leq") {
  CHECK(conf_leq(ft(5, "3125"), ft(5, "4251")));
  CHECK(!conf_leq(ft(5, "3152"), ft(5, "4215")));
  CHECK(conf_leq(ft(5, "3152"), ft(5, "3152")));
  CHECK_THROWS_AS(conf_leq(ft(5, "315"), ft(5, "4215")), Error);

  CHECK(perm_leq(ft(3, "231"), ft(3, "321")));
  CHECK(!perm_leq(ft(3, "321"), ft(3, "231")));
  CHECK_THROWS_AS(perm_leq(ft(3, "23"), ft(3, "321")), Error);
  for (const auto& w : all_flag_tuples(4, 4)) CHECK(perm_leq(FlagTuple::identity(4), w));
}

TEST_CASE("orders agree with the Bruhat order of S_n built from transpositions") {
  for (int n = 1; n <= 5; ++n) {
    const oracle::BruhatSn b(n);
    for (int k = 1; k <= n; ++k) {
      const auto conf = all_flag_tuples(n, k);
      for (const auto& x : conf) {
        for (const auto& y : conf) {
          CHECK(conf_leq(x, y) == oracle::tuple_leq(b, x.entries(), y.entries()));
        }
      }
      const auto grass = all_ksubsets(n, k);
      for (const auto& x : grass) {
        for (const auto& y : grass) {
          CHECK(gale_leq(x, y) == oracle::tuple_leq(b, x.members(), y.members()));
        }
      }
    }
    const auto perms = all_flag_tuples(n, n);
    for (const auto& u : perms) {
      for (const auto& v : perms) CHECK(perm_leq(u, v) == b.leq(u.entries(), v.entries()));
    }
  }
}

TEST_CASE("order axioms and projection monotonicity on random triples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const FlagTuple x = random_tuple(n, k, rng);
    const FlagTuple y = random_tuple(n, k, rng);
    const FlagTuple z = random_tuple(n, k, rng);
    CHECK(conf_leq(x, x));
    if (conf_leq(x, y) && conf_leq(y, x)) CHECK(x == y);
    if (conf_leq(x, y) && conf_leq(y, z)) CHECK(conf_leq(x, z));
    if (conf_leq(x, y)) {
      for (int i = 1; i <= k; ++i) CHECK(gale_leq(prefix_projection(x, i), prefix_projection(y, i)));
    }
    const KSubset a = sort_to_ksubset(x);
    const KSubset b = sort_to_ksubset(y);
    const KSubset c = sort_to_ksubset(z);
    CHECK(gale_leq(a, b) == conf_leq(canonical_completion(a), canonical_completion(b)));
    CHECK(gale_leq(a, b) == conf_leq(FlagTuple(n, a.members()), FlagTuple(n, b.members())));
    if (gale_leq(a, b) && gale_leq(b, a)) CHECK(a == b);
    if (gale_leq(a, b) && gale_leq(b, c)) CHECK(gale_leq(a, c));

    const FlagTuple u = random_permutation(n, rng);
    const FlagTuple v = random_permutation(n, rng);
    const FlagTuple w = random_permutation(n, rng);
    CHECK(perm_leq(u, v) == conf_leq(u, v));
    if (perm_leq(u, v) && perm_leq(v, u)) CHECK(u == v);
    if (perm_leq(u, v) && perm_leq(v, w)) CHECK(perm_leq(u, w));
  }
}

TEST_CASE("descent_set") {
  CHECK(descent_set(FlagTuple::identity(5)).positions().empty());
  CHECK(descent_set(ft(5, "21345")).positions() == std::vector<int>{1});
  CHECK(descent_set(ft(7, "4317625")).positions() == std::vector<int>{1, 2, 4, 5});
}

TEST_CASE("induced_covers") {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  const auto s1 = ksv(5, {"123", "124", "135", "145"});
  CHECK(induced_covers(std::span<const KSubset>(s1), Order::Gale) == Pairs{{0, 1}, {1, 2}, {2, 3}});
  const auto s2 = ksv(6, {"235", "234", "246"});
  CHECK(induced_covers(std::span<const KSubset>(s2), Order::Gale) == Pairs{{0, 2}, {1, 0}});
  const auto s3 = ksv(6, {"235"});
  CHECK(induced_covers(std::span<const KSubset>(s3), Order::Gale).empty());
  CHECK_THROWS_AS(induced_covers(std::span<const KSubset>(s1), Order::Conf), Error);
}

TEST_CASE("is_order_ideal") {
  const auto y = ftv(4, {"12", "13", "21", "23", "14"});
  CHECK(is_order_ideal(std::span<const FlagTuple>(y)));
  const auto x = ksv(4, {"24", "34"});
  CHECK(!is_order_ideal(std::span<const KSubset>(x)));
  const auto all = all_ksubsets(5, 2);
  CHECK(is_order_ideal(std::span<const KSubset>(all)));
  const auto conf = all_flag_tuples(4, 2);
  CHECK(is_order_ideal(std::span<const FlagTuple>(conf)));

  // The cover-move test for subsets agrees with the full down-set definition.
  const auto ground = all_ksubsets(5, 2);
  for (std::uint64_t m = 1; m < (1U << ground.size()); m += 7) {
    std::vector<KSubset> s;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if ((m >> i) & 1U) s.push_back(ground[i]);
    }
    bool closed = true;
    for (const auto& a : s) {
      for (const auto& b : ground) {
        if (gale_leq(b, a) && std::find(s.begin(), s.end(), b) == s.end()) closed = false;
      }
    }
    CHECK(is_order_ideal(std::span<const KSubset>(s)) == closed);
  }
}

TEST_CASE("is_linear_extension") {
  const auto l = ksv(8, {"357", "268", "468"});
  CHECK(is_linear_extension(std::span<const KSubset>(l), Order::Gale));
  const auto support = ksv(4, {"12", "13", "14", "23", "24"});
  const auto lex = ksv(4, {"12", "13", "23", "14", "24"});
  CHECK(is_linear_extension(std::span<const KSubset>(lex), std::span<const KSubset>(support), Order::Gale));
  const auto bad = ksv(4, {"12", "23", "13", "14", "24"});
  CHECK(!is_linear_extension(std::span<const KSubset>(bad), std::span<const KSubset>(support), Order::Gale));
  const auto short_seq = ksv(4, {"12", "13"});
  CHECK_THROWS_AS(is_linear_extension(std::span<const KSubset>(short_seq), std::span<const KSubset>(support), Order::Gale),
                  Error);
}

TEST_CASE("linear_extensions") {
  const auto interval = ksv(4, {"12", "13", "14", "23", "24"});
  const auto exts = linear_extensions(std::span<const KSubset>(interval), Order::Gale);
  REQUIRE(exts.size() == 2);
  CHECK(exts[0] == ksv(4, {"12", "13", "14", "23", "24"}));
  CHECK(exts[1] == ksv(4, {"12", "13", "23", "14", "24"}));

  const auto y = ftv(4, {"12", "13", "21", "23", "14"});
  const auto yexts = linear_extensions(std::span<const FlagTuple>(y), Order::Conf);
  CHECK(yexts.size() == 5);
  CHECK(as_set_of(yexts) == std::set<std::vector<FlagTuple>>{
                                ftv(4, {"12", "13", "21", "23", "14"}), ftv(4, {"12", "21", "13", "23", "14"}),
                                ftv(4, {"12", "13", "21", "14", "23"}), ftv(4, {"12", "21", "13", "14", "23"}),
                                ftv(4, {"12", "13", "14", "21", "23"})});

  const auto antichain = ksv(6, {"16", "25", "34"});
  CHECK(linear_extensions(std::span<const KSubset>(antichain), Order::Gale).size() == 6);

  // Every emitted sequence is an extension, none repeats, and the count matches
  // brute force over all orderings.
  std::mt19937_64 rng(9);
  const auto ground = all_ksubsets(5, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<KSubset> s;
    for (const auto& g : ground) {
      if (rng() % 3 == 0) s.push_back(g);
    }
    if (s.empty() || s.size() > 7) continue;
    const auto e = linear_extensions(std::span<const KSubset>(s), Order::Gale);
    for (const auto& l : e) CHECK(is_linear_extension(std::span<const KSubset>(l), std::span<const KSubset>(s), Order::Gale));
    CHECK(as_set_of(e).size() == e.size());
    const oracle::BruhatSn b(5);
    CHECK(e.size() == oracle::count_linear_extensions(s, [&](const KSubset& p, const KSubset& q) {
            return oracle::tuple_leq(b, p.members(), q.members());
          }));
  }
}
