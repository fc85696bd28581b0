#include "shellkit/subdivision.hpp"

#include <algorithm>

#include "shellkit/bruhat.hpp"

namespace shellkit {

FlagFacet::FlagFacet(std::vector<KSubset> chain) : vertices_(std::move(chain)) {
  if (vertices_.empty()) throw Error("flag facet needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end(),
            [](const KSubset& a, const KSubset& b) { return a.size() < b.size(); });
  for (std::size_t t = 0; t < vertices_.size(); ++t) {
    if (vertices_[t].size() != static_cast<int>(t) + 1) {
      throw Error("flag facet needs exactly one vertex of each size 1..k");
    }
    if (t > 0 && !vertices_[t - 1].is_subset_of(vertices_[t])) {
      throw Error("flag facet vertices must be nested");
    }
  }
}

FlagFacet FlagFacet::of(const FlagTuple& y) {
  std::vector<KSubset> chain;
  chain.reserve(static_cast<std::size_t>(y.size()));
  for (int i = 1; i <= y.size(); ++i) chain.push_back(prefix_projection(y, i));
  return FlagFacet(std::move(chain));
}

FlagTuple FlagFacet::tuple() const {
  if (vertices_.empty()) throw Error("empty flag facet");
  std::vector<int> e;
  std::uint64_t prev = 0;
  for (const KSubset& v : vertices_) {
    e.push_back(std::countr_zero(v.mask() & ~prev) + 1);
    prev = v.mask();
  }
  return FlagTuple(universe(), std::move(e));
}

std::string FlagFacet::to_string() const {
  std::string out = "{";
  for (std::size_t t = 0; t < vertices_.size(); ++t) {
    if (t) out += ',';
    out += vertices_[t].to_string();
  }
  return out + "}";
}

std::string to_string(std::span<const FlagFacet> seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i].to_string();
  }
  return out + ")";
}

std::vector<FlagTuple> barycentric(std::span<const KSubset> facets) {
  validate_facets(facets);
  std::vector<FlagTuple> out;
  for (const KSubset& x : facets) {
    std::vector<int> e = x.members();
    do {
      out.emplace_back(x.universe(), e);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FlagFacet> flag_complex(std::span<const FlagTuple> tuples) {
  validate_facets(tuples);
  std::vector<FlagFacet> out;
  out.reserve(tuples.size());
  for (const FlagTuple& y : tuples) out.push_back(FlagFacet::of(y));
  return out;
}

bool is_flag_shelling_order(std::span<const FlagTuple> seq) {
  const auto facets = flag_complex(seq);
  return static_cast<bool>(is_shelling_order(std::span<const FlagFacet>(facets)));
}

bool is_flag_shellable(std::span<const FlagTuple> tuples) {
  const auto facets = flag_complex(tuples);
  return find_shelling_order(std::span<const FlagFacet>(facets)).has_value();
}

std::vector<FlagFacet> face_poset_order_complex(std::span<const KSubset> facets) {
  validate_facets(facets);
  if (facets.empty()) return {};
  const int n = facets[0].universe();
  const int k = facets[0].size();
  const auto is_face = [&](std::uint64_t m) {
    return std::any_of(facets.begin(), facets.end(),
                       [m](const KSubset& f) { return (m & ~f.mask()) == 0; });
  };

  std::vector<FlagFacet> out;
  std::vector<KSubset> chain;
  // Grow chains one vertex at a time; a face of size < k always sits in some facet.
  auto grow = [&](auto&& self, std::uint64_t face) -> void {
    if (static_cast<int>(chain.size()) == k) {
      out.emplace_back(chain);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if ((face & bit) || !is_face(face | bit)) continue;
      chain.push_back(KSubset::from_mask(n, face | bit));
      self(self, face | bit);
      chain.pop_back();
    }
  };
  grow(grow, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace shellkit
