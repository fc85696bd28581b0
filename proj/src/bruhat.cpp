#include "shellkit/bruhat.hpp"

#include <unordered_set>

namespace shellkit {

DescentSet::DescentSet(int n, std::span<const int> positions) : n_(n) {
  if (n < 1 || n > kMaxUniverse) throw Error("universe size must lie in [1, 64]");
  for (int i : positions) {
    if (i < 1 || i > n - 1) {
      throw Error("position " + std::to_string(i) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    mask_ |= std::uint64_t{1} << (i - 1);
  }
}

DescentSet DescentSet::all(int n) {
  std::vector<int> p;
  for (int i = 1; i < n; ++i) p.push_back(i);
  return DescentSet(n, p);
}

std::vector<int> DescentSet::positions() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

FlagTuple sort_blocks(const FlagTuple& w, const DescentSet& j) {
  if (!w.is_permutation()) throw Error("sort_blocks expects a permutation");
  if (j.universe() != w.universe()) throw Error("descent set and permutation disagree on n");
  std::vector<int> e = w.entries();
  const int n = w.universe();
  int start = 1;
  for (int i = 1; i <= n; ++i) {
    if (i == n || !j.contains(i)) {
      std::sort(e.begin() + (start - 1), e.begin() + i);
      start = i + 1;
    }
  }
  return FlagTuple(n, std::move(e));
}

KSubset prefix_projection(const FlagTuple& x, int i) {
  if (i < 1 || i > x.size()) {
    throw Error("prefix length " + std::to_string(i) + " outside [1, " + std::to_string(x.size()) + "]");
  }
  return KSubset(x.universe(), std::span<const int>(x.entries().data(), static_cast<std::size_t>(i)));
}

bool gale_leq(const KSubset& a, const KSubset& b) {
  if (a.universe() != b.universe() || a.size() != b.size()) {
    throw Error("Gale comparison needs equal n and k: " + a.to_string() + " vs " + b.to_string());
  }
  std::uint64_t ma = a.mask();
  std::uint64_t mb = b.mask();
  while (ma != 0) {
    if (std::countr_zero(ma) > std::countr_zero(mb)) return false;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  return true;
}

bool conf_leq(const FlagTuple& x, const FlagTuple& y) {
  if (x.universe() != y.universe() || x.size() != y.size()) {
    throw Error("Bruhat comparison needs equal n and k: " + x.to_string() + " vs " + y.to_string());
  }
  const int n = x.universe();
  std::uint64_t px = 0;
  std::uint64_t py = 0;
  for (int i = 1; i <= x.size(); ++i) {
    px |= std::uint64_t{1} << (x(i) - 1);
    py |= std::uint64_t{1} << (y(i) - 1);
    if (!gale_leq(KSubset::from_mask(n, px), KSubset::from_mask(n, py))) return false;
  }
  return true;
}

bool perm_leq(const FlagTuple& u, const FlagTuple& v) {
  if (!u.is_permutation() || !v.is_permutation() || u.universe() != v.universe()) {
    throw Error("perm_leq expects two permutations of the same [n]");
  }
  const int n = u.universe();
  for (int k = 1; k < n; ++k) {
    std::vector<int> j;
    for (int i = 1; i < n; ++i) {
      if (i != k) j.push_back(i);
    }
    const DescentSet quotient(n, j);
    const FlagTuple pu = sort_blocks(u, quotient);
    const FlagTuple pv = sort_blocks(v, quotient);
    for (int i = 1; i <= k; ++i) {
      if (pu(i) > pv(i)) return false;
    }
  }
  return true;
}

DescentSet descent_set(const FlagTuple& w) {
  if (!w.is_permutation()) throw Error("descent_set expects a permutation");
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) d.push_back(i);
  }
  return DescentSet(w.universe(), d);
}

bool leq(const KSubset& a, const KSubset& b, Order order) {
  if (order != Order::Gale) throw Error("subsets are ordered by the Gale order only");
  return gale_leq(a, b);
}

bool leq(const FlagTuple& a, const FlagTuple& b, Order order) {
  switch (order) {
    case Order::Conf:
      return conf_leq(a, b);
    case Order::Perm:
      return perm_leq(a, b);
    case Order::Gale:
      break;
  }
  throw Error("tuples are ordered by the Conf or Perm order, not Gale");
}

bool is_order_ideal(std::span<const KSubset> facets, Order order) {
  if (order != Order::Gale) throw Error("subsets are ordered by the Gale order only");
  validate_facets(facets);
  const std::unordered_set<KSubset> members(facets.begin(), facets.end());
  // Closing under lower covers closes under the whole down-set; in [n]^k_< a lower
  // cover replaces one member a by a-1 when a-1 is absent.
  for (const KSubset& x : facets) {
    for (int a : x.members()) {
      if (a > 1 && !x.contains(a - 1)) {
        if (!members.contains(symmetric_difference_update(x, a, a - 1))) return false;
      }
    }
  }
  return true;
}

bool is_order_ideal(std::span<const FlagTuple> facets, Order order) {
  if (order == Order::Gale) throw Error("tuples are ordered by the Conf or Perm order, not Gale");
  validate_facets(facets);
  if (facets.empty()) return true;
  const int n = facets[0].universe();
  const int k = facets[0].size();
  if (n > 8) throw Error("order-ideal test on tuples is limited to n <= 8");
  if (order == Order::Perm && k != n) throw Error("Perm order needs full permutations");
  const auto ambient = all_flag_tuples(n, k);
  for (const FlagTuple& x : facets) {
    for (const FlagTuple& y : ambient) {
      if (leq(y, x, order) && std::find(facets.begin(), facets.end(), y) == facets.end()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace shellkit
