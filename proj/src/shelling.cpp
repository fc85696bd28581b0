#include "shellkit/shelling.hpp"

#include "shellkit/matroid.hpp"

namespace shellkit {

std::vector<KSubset> relabel(const FlagTuple& sigma, std::span<const KSubset> seq) {
  if (!sigma.is_permutation()) throw Error("relabeling needs a permutation");
  return act(sigma, seq);
}

bool are_isomorphic(std::span<const KSubset> a, std::span<const KSubset> b) {
  validate_facets(a);
  validate_facets(b);
  if (a.empty() || a.size() != b.size() || a[0].universe() != b[0].universe() ||
      a[0].size() != b[0].size()) {
    throw Error("isomorphism needs sequences of the same length, n and k");
  }
  const int n = a[0].universe();
  if (n > 8) throw Error("the S_n sweep is limited to n <= 8");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  do {
    const FlagTuple sigma(n, w);
    bool same = true;
    for (std::size_t p = 0; p < a.size() && same; ++p) {
      same = act(sigma, a.subspan(p, 1))[0] == b[p];
    }
    if (same) return true;
  } while (std::next_permutation(w.begin(), w.end()));
  return false;
}

}  // namespace shellkit
