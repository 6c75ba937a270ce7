#pragma once

#include <algorithm>
#include <functional>
#include <map>

#include "vertexloc/partition.hpp"
#include "vertexloc/scalar.hpp"

namespace vertexloc {

// Semi-infinite wedge on raw Maya indices. Coefficients are mpq_class or Gaussian.
template <class C>
using WedgeState = std::map<ChargedPartition, C>;

namespace wedge_detail {

template <class C>
void accumulate(WedgeState<C>& out, const ChargedPartition& k, const C& c) {
  auto it = out.find(k);
  if (it == out.end()) {
    if (!is_zero(c)) out.emplace(k, c);
    return;
  }
  it->second += c;
  if (is_zero(it->second)) out.erase(it);
}

inline int count_above(const WeightSet& s, int j) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [j](int x) { return x > j; }));
}

}  // namespace wedge_detail

template <class C>
WedgeState<C> wedge(int j, const WedgeState<C>& s) {
  WedgeState<C> out;
  for (const auto& [label, c] : s) {
    int floor = std::min(label.m - label.mu.length(), j) - 1;
    WeightSet set = maya_set(label, floor);
    if (std::find(set.begin(), set.end(), j) != set.end()) continue;
    int sign = wedge_detail::count_above(set, j) % 2 ? -1 : 1;
    set.push_back(j);
    wedge_detail::accumulate(out, from_maya(set, floor), sign > 0 ? c : C(-c));
  }
  return out;
}

template <class C>
WedgeState<C> contract(int j, const WedgeState<C>& s) {
  WedgeState<C> out;
  for (const auto& [label, c] : s) {
    int floor = std::min(label.m - label.mu.length(), j) - 1;
    WeightSet set = maya_set(label, floor);
    auto it = std::find(set.begin(), set.end(), j);
    if (it == set.end()) continue;
    int sign = wedge_detail::count_above(set, j) % 2 ? -1 : 1;
    set.erase(it);
    // j was above floor, so the remaining set is still closed below floor
    wedge_detail::accumulate(out, from_maya(set, floor), sign > 0 ? c : C(-c));
  }
  return out;
}

// sum over occupied s of weight(s) * wedge(s - n) contract(s)
template <class C>
WedgeState<C> translate(int n, const std::function<C(int)>& weight, const WedgeState<C>& s) {
  if (n == 0) throw std::invalid_argument("translate(0) needs a normal-ordered rule");
  WedgeState<C> out;
  for (const auto& [label, c] : s) {
    int lo = label.m - label.mu.length() - std::abs(n);
    WeightSet set = maya_set(label, lo);
    for (int x : set) {
      C w = weight(x);
      if (is_zero(w)) continue;
      WedgeState<C> one{{label, c * w}};
      for (const auto& [k, v] : wedge(x - n, contract(x, one))) wedge_detail::accumulate(out, k, v);
    }
  }
  return out;
}

template <class C>
WedgeState<C> add(const WedgeState<C>& a, const WedgeState<C>& b, const C& scale = C(1)) {
  WedgeState<C> out = a;
  for (const auto& [k, v] : b) wedge_detail::accumulate(out, k, C(v * scale));
  return out;
}

}  // namespace vertexloc
