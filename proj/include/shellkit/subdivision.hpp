#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shellkit/core.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

/// A facet of a flag complex: a chain of subsets of [n] under inclusion, one per
/// cardinality 1..k. Vertices are kept sorted by cardinality.
class FlagFacet {
 public:
  FlagFacet() = default;
  explicit FlagFacet(std::vector<KSubset> chain);

  /// P(y) = {P^(1)(y), ..., P^(k)(y)}.
  static FlagFacet of(const FlagTuple& y);

  int size() const { return static_cast<int>(vertices_.size()); }
  int universe() const { return vertices_.empty() ? 0 : vertices_.front().universe(); }
  const std::vector<KSubset>& vertices() const { return vertices_; }
  /// The unique tuple y with P(y) equal to this chain.
  FlagTuple tuple() const;

  bool operator==(const FlagFacet&) const = default;
  auto operator<=>(const FlagFacet& o) const { return vertices_ <=> o.vertices_; }

  /// "{1,13,123}".
  std::string to_string() const;

 private:
  std::vector<KSubset> vertices_;
};

inline std::uint64_t meet_in(const FlagFacet& other, const FlagFacet& pivot) {
  // Both are chains with one vertex per cardinality, so compare rank by rank.
  std::uint64_t m = 0;
  const auto& a = other.vertices();
  const auto& b = pivot.vertices();
  for (std::size_t t = 0; t < b.size() && t < a.size(); ++t) {
    if (a[t] == b[t]) m |= std::uint64_t{1} << t;
  }
  return m;
}

std::string to_string(std::span<const FlagFacet> seq);

/// B(X): every ordering of the members of every facet, sorted.
std::vector<FlagTuple> barycentric(std::span<const KSubset> facets);

/// Δ(Y) as the facets P(y), in the order of Y.
std::vector<FlagFacet> flag_complex(std::span<const FlagTuple> tuples);

/// Whether (P(L_1), P(L_2), ...) is a shelling order.
bool is_flag_shelling_order(std::span<const FlagTuple> seq);

bool is_flag_shellable(std::span<const FlagTuple> tuples);

/// Maximal chains of the face poset of X, built directly from the faces, as sorted
/// flag facets. Agrees with flag_complex(barycentric(X)) up to order.
std::vector<FlagFacet> face_poset_order_complex(std::span<const KSubset> facets);

}  // namespace shellkit
