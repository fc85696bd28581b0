#include "shellkit/core.hpp"

#include <algorithm>
#include <numeric>

namespace shellkit {
namespace {

void check_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw Error("universe size must lie in [1, 64], got " + std::to_string(n));
  }
}

std::vector<int> parse_digits(std::string_view digits) {
  std::vector<int> out;
  for (char c : digits) {
    if (c < '1' || c > '9') throw Error("bad digit in '" + std::string(digits) + "'");
    out.push_back(c - '0');
  }
  return out;
}

}  // namespace

KSubset::KSubset(int n, std::span<const int> members) : n_(n) {
  check_universe(n);
  for (int v : members) {
    if (v < 1 || v > n) {
      throw Error("vertex " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (mask_ & bit) throw Error("repeated vertex " + std::to_string(v));
    mask_ |= bit;
  }
}

KSubset KSubset::from_mask(int n, std::uint64_t mask) {
  check_universe(n);
  if (n < 64 && (mask >> n) != 0) throw Error("mask exceeds universe");
  return KSubset(n, mask, nullptr);
}

KSubset KSubset::parse(int n, std::string_view digits) {
  const auto v = parse_digits(digits);
  return KSubset(n, v);
}

int KSubset::max() const {
  if (mask_ == 0) throw Error("max of empty subset");
  return 64 - std::countl_zero(mask_);
}

std::vector<int> KSubset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int KSubset::nth(int i) const {
  std::uint64_t m = mask_;
  for (int t = 1; t < i && m != 0; ++t) m &= m - 1;
  if (m == 0 || i < 1) throw Error("member index out of range");
  return std::countr_zero(m) + 1;
}

std::strong_ordering KSubset::operator<=>(const KSubset& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  const std::uint64_t diff = mask_ ^ o.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  // The least element of the symmetric difference decides; everything below it is shared.
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t above = ~((low << 1) - 1);
  if (mask_ & low) {
    return (o.mask_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return (mask_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::string KSubset::to_string() const {
  std::string out;
  for (int v : members()) {
    if (n_ > 9 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out.empty() ? "{}" : out;
}

FlagTuple::FlagTuple(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  check_universe(n);
  if (entries_.empty() || static_cast<int>(entries_.size()) > n) {
    throw Error("tuple length must lie in [1, n]");
  }
  std::uint64_t seen = 0;
  for (int v : entries_) {
    if (v < 1 || v > n) {
      throw Error("entry " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (seen & bit) throw Error("repeated entry " + std::to_string(v));
    seen |= bit;
  }
}

FlagTuple FlagTuple::parse(int n, std::string_view digits) {
  return FlagTuple(n, parse_digits(digits));
}

FlagTuple FlagTuple::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return FlagTuple(n, std::move(e));
}

std::string FlagTuple::to_string() const {
  std::string out;
  for (int v : entries_) {
    if (n_ > 9 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

KSubset sort_to_ksubset(const FlagTuple& x) { return KSubset(x.universe(), x.entries()); }

KSubset symmetric_difference_update(const KSubset& x, int drop, int add) {
  if (!x.contains(drop)) {
    throw Error(std::to_string(drop) + " is not a member of " + x.to_string());
  }
  if (add < 1 || add > x.universe() || x.contains(add)) {
    throw Error(std::to_string(add) + " cannot be added to " + x.to_string());
  }
  return x + KSubset(x.universe(), {drop, add});
}

FlagTuple canonical_completion(const KSubset& x) {
  std::vector<int> e = x.members();
  const auto rest = (KSubset::from_mask(x.universe(),
                                        x.universe() == 64 ? ~std::uint64_t{0}
                                                           : (std::uint64_t{1} << x.universe()) - 1) -
                     x)
                        .members();
  e.insert(e.end(), rest.begin(), rest.end());
  return FlagTuple(x.universe(), std::move(e));
}

std::vector<KSubset> all_ksubsets(int n, int k) {
  check_universe(n);
  if (k < 0 || k > n) throw Error("k outside [0, n]");
  std::vector<KSubset> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    out.emplace_back(n, c);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<FlagTuple> all_flag_tuples(int n, int k) {
  std::vector<FlagTuple> out;
  for (const auto& s : all_ksubsets(n, k)) {
    std::vector<int> e = s.members();
    do {
      out.emplace_back(n, e);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph::LabeledGraph(int order) : order_(order), adj_(static_cast<std::size_t>(order)) {
  if (order < 1) throw Error("graph order must be positive");
}

LabeledGraph::LabeledGraph(int order, std::span<const std::pair<int, int>> edges)
    : LabeledGraph(order) {
  for (auto [i, j] : edges) {
    if (adjacent(i, j)) throw Error("duplicate edge");
    add_edge(i, j);
  }
}

bool LabeledGraph::adjacent(int i, int j) const {
  if (i < 1 || i > order_ || j < 1 || j > order_) throw Error("vertex outside graph");
  const auto& n = adj_[static_cast<std::size_t>(i - 1)];
  return std::binary_search(n.begin(), n.end(), j);
}

void LabeledGraph::add_edge(int i, int j) {
  if (i == j) throw Error("loops are not allowed");
  if (adjacent(i, j)) return;
  auto insert = [](std::vector<int>& v, int x) { v.insert(std::lower_bound(v.begin(), v.end(), x), x); };
  insert(adj_[static_cast<std::size_t>(i - 1)], j);
  insert(adj_[static_cast<std::size_t>(j - 1)], i);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= order_; ++i) {
    for (int j : neighbors(i)) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : adj_) twice += n.size();
  return twice / 2;
}

bool LabeledGraph::is_subgraph_of(const LabeledGraph& other) const {
  if (other.order_ != order_) return false;
  for (auto [i, j] : edges()) {
    if (!other.adjacent(i, j)) return false;
  }
  return true;
}

namespace {
template <class T>
std::string join(std::span<const T> seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += seq[i].to_string();
  }
  return out + ")";
}
}  // namespace

std::string to_string(std::span<const KSubset> seq) { return join(seq); }
std::string to_string(std::span<const FlagTuple> seq) { return join(seq); }

}  // namespace shellkit
