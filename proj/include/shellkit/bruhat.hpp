#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "shellkit/core.hpp"

namespace shellkit {

/// Which quotient of S_n an order comparison lives in.
///   Gale: [n]^k_< (KSubsets), the minuscule quotient.
///   Conf: Conf_k([n]) (FlagTuples), the quotient by the last n-k positions.
///   Perm: S_n itself (FlagTuples with k = n).
enum class Order { Gale, Conf, Perm };

/// A subset of [n-1]: descent positions, or the J of a parabolic quotient S_n^J.
class DescentSet {
 public:
  DescentSet(int n, std::span<const int> positions);
  DescentSet(int n, std::initializer_list<int> positions)
      : DescentSet(n, std::span<const int>(positions.begin(), positions.size())) {}
  static DescentSet all(int n);

  int universe() const { return n_; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1U) != 0; }
  std::vector<int> positions() const;

  bool operator==(const DescentSet&) const = default;

 private:
  int n_;
  std::uint64_t mask_ = 0;
};

/// P^J(w): sorts every maximal block of positions i, i+1, ... linked by i in J.
FlagTuple sort_blocks(const FlagTuple& w, const DescentSet& j);

/// P^(i)(x): the first i entries of x, as a sorted subset.
KSubset prefix_projection(const FlagTuple& x, int i);

/// Gale order: the i-th smallest member of a is at most that of b, for every i.
bool gale_leq(const KSubset& a, const KSubset& b);

/// Bruhat order on Conf_k([n]): every prefix projection is Gale-dominated.
bool conf_leq(const FlagTuple& x, const FlagTuple& y);

/// Bruhat order on S_n through the tableau criterion, comparing the projections
/// P^{[n-1]\{k}} for every k in [n-1].
bool perm_leq(const FlagTuple& u, const FlagTuple& v);

DescentSet descent_set(const FlagTuple& w);

/// Order comparison dispatched by kind. KSubsets accept Gale only, FlagTuples accept
/// Conf or Perm; anything else throws.
bool leq(const KSubset& a, const KSubset& b, Order order);
bool leq(const FlagTuple& a, const FlagTuple& b, Order order);

template <class T>
bool less(const T& a, const T& b, Order order) {
  return !(a == b) && leq(a, b, order);
}

/// Covering pairs of the subposet induced on `elements`, returned as index pairs
/// (lower, upper) into the span, sorted.
template <class T>
std::vector<std::pair<std::size_t, std::size_t>> induced_covers(std::span<const T> elements,
                                                                Order order) {
  validate_facets(elements);
  const std::size_t m = elements.size();
  std::vector<char> lt(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b) lt[a * m + b] = leq(elements[a], elements[b], order) ? 1 : 0;
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!lt[a * m + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < m && cover; ++c) {
        if (lt[a * m + c] && lt[c * m + b]) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Whether X is closed downward inside its ambient quotient ([n]^k_<, Conf_k([n]) or S_n).
bool is_order_ideal(std::span<const KSubset> facets, Order order = Order::Gale);
bool is_order_ideal(std::span<const FlagTuple> facets, Order order = Order::Conf);

/// Whether `seq` lists exactly the facets of `support` with no strictly smaller element
/// appearing after a larger one. Throws if `seq` is not a permutation of `support`.
template <class T>
bool is_linear_extension(std::span<const T> seq, std::span<const T> support, Order order) {
  validate_facets(seq);
  validate_facets(support);
  if (seq.size() != support.size() ||
      !std::all_of(seq.begin(), seq.end(), [&](const T& x) {
        return std::find(support.begin(), support.end(), x) != support.end();
      })) {
    throw Error("sequence is not an ordering of the given facets");
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (less(seq[j], seq[i], order)) return false;
    }
  }
  return true;
}

template <class T>
bool is_linear_extension(std::span<const T> seq, Order order) {
  return is_linear_extension(seq, seq, order);
}

/// Calls `visit(std::span<const T>)` for every linear extension of the induced poset on
/// `facets`. At each step the minimal remaining elements are tried in ascending
/// lexicographic order, so the output order is deterministic. If `visit` returns bool,
/// returning false stops the enumeration.
template <class T, class Visit>
void for_each_linear_extension(std::span<const T> facets, Order order, Visit&& visit) {
  validate_facets(facets);
  std::vector<T> items(facets.begin(), facets.end());
  std::sort(items.begin(), items.end());
  const std::size_t m = items.size();
  if (m == 0) return;

  std::vector<std::vector<std::size_t>> above(m);
  std::vector<int> pending(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && leq(items[a], items[b], order)) {
        above[a].push_back(b);
        ++pending[b];
      }
    }
  }

  std::vector<T> current;
  current.reserve(m);
  std::vector<char> used(m, 0);
  bool stop = false;

  auto recurse = [&](auto&& self) -> void {
    if (current.size() == m) {
      if constexpr (std::is_same_v<std::invoke_result_t<Visit&, std::span<const T>>, bool>) {
        stop = !visit(std::span<const T>(current));
      } else {
        visit(std::span<const T>(current));
      }
      return;
    }
    for (std::size_t a = 0; a < m && !stop; ++a) {
      if (used[a] || pending[a] != 0) continue;
      used[a] = 1;
      for (std::size_t b : above[a]) --pending[b];
      current.push_back(items[a]);
      self(self);
      current.pop_back();
      for (std::size_t b : above[a]) ++pending[b];
      used[a] = 0;
    }
  };
  recurse(recurse);
}

template <class T>
std::vector<std::vector<T>> linear_extensions(std::span<const T> facets, Order order) {
  std::vector<std::vector<T>> out;
  for_each_linear_extension(facets, order, [&](std::span<const T> ext) {
    out.emplace_back(ext.begin(), ext.end());
  });
  return out;
}

}  // namespace shellkit
