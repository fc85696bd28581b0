#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shellkit {

/// Largest supported universe size; KSubsets are stored as 64-bit masks.
inline constexpr int kMaxUniverse = 64;

/// Thrown on any violated precondition or malformed value.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subset of [n] = {1,...,n}, stored as a bitmask (bit v-1 set iff v is a member).
///
/// This is both an element of [n]^k_< (the sorted tuple of its members) and a plain
/// set, so intersection, union and symmetric difference are mask operations. The
/// empty subset is representable; it is the single element of [n]^0_<.
class KSubset {
 public:
  KSubset() = default;
  KSubset(int n, std::span<const int> members);
  KSubset(int n, std::initializer_list<int> members)
      : KSubset(n, std::span<const int>(members.begin(), members.size())) {}

  static KSubset from_mask(int n, std::uint64_t mask);
  /// Parses compact notation such as "135" (single digits, n <= 9).
  static KSubset parse(int n, std::string_view digits);

  int universe() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int v) const {
    return v >= 1 && v <= n_ && ((mask_ >> (v - 1)) & 1U) != 0;
  }
  /// Largest member; the subset must be nonempty.
  int max() const;
  /// Members in increasing order.
  std::vector<int> members() const;
  /// The i-th smallest member, 1-based.
  int nth(int i) const;

  KSubset operator&(const KSubset& o) const { return from_mask(n_, mask_ & o.mask_); }
  KSubset operator|(const KSubset& o) const { return from_mask(n_, mask_ | o.mask_); }
  /// Symmetric difference A + B.
  KSubset operator+(const KSubset& o) const { return from_mask(n_, mask_ ^ o.mask_); }
  KSubset operator-(const KSubset& o) const { return from_mask(n_, mask_ & ~o.mask_); }
  bool is_subset_of(const KSubset& o) const { return (mask_ & ~o.mask_) == 0; }

  bool operator==(const KSubset&) const = default;
  /// Lexicographic order on the increasing member sequences (a proper prefix sorts first).
  std::strong_ordering operator<=>(const KSubset& o) const;

  /// "135" when n <= 9, otherwise "1,3,5".
  std::string to_string() const;

 private:
  KSubset(int n, std::uint64_t mask, std::nullptr_t) : n_(n), mask_(mask) {}

  int n_ = 0;
  std::uint64_t mask_ = 0;
};

/// A tuple of k distinct values in [n]: an element of Conf_k([n]). With k == n it is a
/// permutation in one-line notation.
class FlagTuple {
 public:
  FlagTuple() = default;
  FlagTuple(int n, std::vector<int> entries);
  FlagTuple(int n, std::initializer_list<int> entries)
      : FlagTuple(n, std::vector<int>(entries)) {}

  static FlagTuple parse(int n, std::string_view digits);
  static FlagTuple identity(int n);

  int universe() const { return n_; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool is_permutation() const { return size() == n_; }
  /// 1-based access.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const FlagTuple&) const = default;
  auto operator<=>(const FlagTuple& o) const { return entries_ <=> o.entries_; }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

/// The members of x in increasing order, {x_1,...,x_k}_<.
KSubset sort_to_ksubset(const FlagTuple& x);

/// x + {drop, add}; requires drop in x and add not in x.
KSubset symmetric_difference_update(const KSubset& x, int drop, int add);

/// Completes a k-subset to the permutation whose first k entries are its members and
/// whose tail is the sorted complement.
FlagTuple canonical_completion(const KSubset& x);

/// All k-subsets of [n] in lexicographic order.
std::vector<KSubset> all_ksubsets(int n, int k);
/// All of Conf_k([n]) in lexicographic order.
std::vector<FlagTuple> all_flag_tuples(int n, int k);

/// Throws unless every facet is distinct and all share one cardinality.
template <class F>
void validate_facets(std::span<const F> facets) {
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].size() != facets[0].size()) {
      throw Error("facets have different sizes: " + facets[0].to_string() + " and " +
                  facets[i].to_string());
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (facets[i] == facets[j]) throw Error("duplicate facet " + facets[i].to_string());
    }
  }
}

/// Simple undirected graph on [h].
class LabeledGraph {
 public:
  explicit LabeledGraph(int order);
  LabeledGraph(int order, std::span<const std::pair<int, int>> edges);

  int order() const { return order_; }
  bool adjacent(int i, int j) const;
  void add_edge(int i, int j);
  /// Neighbours of i in increasing order.
  const std::vector<int>& neighbors(int i) const { return adj_[static_cast<std::size_t>(i - 1)]; }
  /// Edges {i,j} with i < j, sorted.
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;
  bool is_subgraph_of(const LabeledGraph& other) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  int order_;
  std::vector<std::vector<int>> adj_;
};

std::string to_string(std::span<const KSubset> seq);
std::string to_string(std::span<const FlagTuple> seq);

}  // namespace shellkit

template <>
struct std::hash<shellkit::KSubset> {
  std::size_t operator()(const shellkit::KSubset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(s.universe()));
  }
};
