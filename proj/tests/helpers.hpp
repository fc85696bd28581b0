#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "shellkit/shellkit.hpp"

namespace testing {

using shellkit::FlagTuple;
using shellkit::KSubset;

inline KSubset ks(int n, std::string_view digits) { return KSubset::parse(n, digits); }
inline FlagTuple ft(int n, std::string_view digits) { return FlagTuple::parse(n, digits); }

inline std::vector<KSubset> ksv(int n, std::initializer_list<std::string_view> items) {
  std::vector<KSubset> out;
  for (auto s : items) out.push_back(ks(n, s));
  return out;
}

inline std::vector<FlagTuple> ftv(int n, std::initializer_list<std::string_view> items) {
  std::vector<FlagTuple> out;
  for (auto s : items) out.push_back(ft(n, s));
  return out;
}

inline std::set<int> as_set(const KSubset& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

inline std::vector<std::set<int>> as_sets(const std::vector<KSubset>& v) {
  std::vector<std::set<int>> out;
  for (const auto& s : v) out.push_back(as_set(s));
  return out;
}

template <class T>
std::set<T> as_set_of(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

inline const std::vector<KSubset>& bjorner() {
  static const auto c =
      ksv(6, {"123", "125", "126", "234", "235", "134", "136", "145", "246", "356", "456"});
  return c;
}

inline FlagTuple random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(e.begin(), e.end(), rng);
  return FlagTuple(n, e);
}

inline FlagTuple random_tuple(int n, int k, std::mt19937_64& rng) {
  auto e = random_permutation(n, rng).entries();
  e.resize(static_cast<std::size_t>(k));
  return FlagTuple(n, e);
}

inline KSubset random_ksubset(int n, int k, std::mt19937_64& rng) {
  return shellkit::sort_to_ksubset(random_tuple(n, k, rng));
}

}  // namespace testing
