#include "dmm/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace dmm {

namespace {

const char* kDeltaLabels[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

std::vector<std::string> delta_labels(int n) {
  return std::vector<std::string>(kDeltaLabels, kDeltaLabels + n);
}

}  // namespace

bool DeltaFilters::accepts(const DeltaMatroid& d) const {
  if (even && d.is_even() != *even) return false;
  if (matroid && d.is_matroid() != *matroid) return false;
  if (connected && d.is_connected() != *connected) return false;
  if (vf_safe && d.is_vf_safe() != *vf_safe) return false;
  return true;
}

void for_each_delta_matroid(int n, const DeltaFilters& filters,
                            const std::function<void(const DeltaMatroid&)>& fn) {
  if (n < 0 || n > 4)
    throw std::invalid_argument("exhaustive enumeration is limited to 4 elements; "
                                "use the sampled variant beyond that");
  auto labels = delta_labels(n);
  int subsets = 1 << n;
  std::uint64_t family_codes = std::uint64_t{1} << subsets;
  for (std::uint64_t code = 1; code < family_codes; ++code) {
    std::vector<Mask> family;
    for (int s = 0; s < subsets; ++s)
      if ((code >> s) & 1) family.push_back(static_cast<Mask>(s));
    if (find_exchange_failure(family)) continue;
    DeltaMatroid d(labels, std::move(family));
    if (filters.accepts(d)) fn(d);
  }
}

void for_each_delta_matroid_sampled(int n, std::uint64_t samples, std::uint64_t seed,
                                    const DeltaFilters& filters,
                                    const std::function<void(const DeltaMatroid&)>& fn) {
  if (n < 5 || n > 16)
    throw std::invalid_argument("sampled enumeration expects 5 <= n <= 16");
  if (samples == 0) throw std::invalid_argument("sampled enumeration needs a sample budget");
  auto labels = delta_labels(n);
  std::mt19937_64 rng(seed);
  int subsets = 1 << n;
  std::uniform_int_distribution<int> keep(0, 3);
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::vector<Mask> family;
    for (int s = 0; s < subsets; ++s)
      if (keep(rng) == 0) family.push_back(static_cast<Mask>(s));
    if (family.empty() || find_exchange_failure(family)) continue;
    DeltaMatroid d(labels, std::move(family));
    if (filters.accepts(d)) fn(d);
  }
}

void for_each_matroid(int n, const std::function<void(const DeltaMatroid&)>& fn) {
  if (n < 0 || n > 5) throw std::invalid_argument("matroid enumeration is limited to 5 elements");
  auto labels = delta_labels(n);
  for (int r = 0; r <= n; ++r) {
    std::vector<Mask> r_subsets;
    for (Mask s = 0; s < (Mask{1} << n); ++s)
      if (popcount(s) == r) r_subsets.push_back(s);
    std::uint64_t codes = std::uint64_t{1} << r_subsets.size();
    for (std::uint64_t code = 1; code < codes; ++code) {
      std::vector<Mask> family;
      for (std::size_t i = 0; i < r_subsets.size(); ++i)
        if ((code >> i) & 1) family.push_back(r_subsets[i]);
      if (find_exchange_failure(family)) continue;
      fn(DeltaMatroid(labels, std::move(family)));
    }
  }
}

namespace {

void emit_rotations(const std::vector<std::vector<int>>& groups, int v, int index,
                    std::vector<std::vector<int>>& current,
                    const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  if (index == v) {
    fn(current);
    return;
  }
  // Cyclic orders: first assigned half stays put, the tail permutes.
  std::vector<int> tail(groups[index].begin() + 1, groups[index].end());
  std::sort(tail.begin(), tail.end());
  do {
    current[index] = {groups[index][0]};
    current[index].insert(current[index].end(), tail.begin(), tail.end());
    emit_rotations(groups, v, index + 1, current, fn);
  } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace

std::vector<RibbonGraph> enumerate_ribbon_graphs(int max_v, int max_e) {
  if (max_v < 1 || max_v > 3 || max_e < 0 || max_e > 3)
    throw std::invalid_argument("exhaustive ribbon enumeration is limited to 3 vertices and 3 edges");
  const char* names[] = {"e1", "e2", "e3"};
  std::map<std::string, RibbonGraph> seen;

  for (int m = 0; m <= max_e; ++m) {
    std::vector<std::string> labels(names, names + m);
    if (m == 0) {
      seen.emplace(RibbonGraph({}, {}, {{}}).canonical_key(), RibbonGraph({}, {}, {{}}));
      continue;
    }
    for (int v = 1; v <= std::min(max_v, 2 * m); ++v) {
      int halves = 2 * m;
      std::vector<int> assign(halves, 0);
      while (true) {
        std::vector<std::vector<int>> groups(v);
        for (int h = 0; h < halves; ++h) groups[assign[h]].push_back(h);
        bool ok = true;
        for (const auto& g : groups)
          if (g.empty()) ok = false;
        if (ok) {
          std::vector<std::vector<int>> current(v);
          emit_rotations(groups, v, 0, current, [&](const std::vector<std::vector<int>>& rots) {
            for (Mask signs = 0; signs < (Mask{1} << m); ++signs) {
              std::vector<bool> twists(m);
              for (int e = 0; e < m; ++e) twists[e] = has_bit(signs, e);
              RibbonGraph g(labels, twists, rots);
              seen.emplace(g.canonical_key(), g);
            }
          });
        }
        int h = halves - 1;
        while (h >= 0 && assign[h] == v - 1) assign[h--] = 0;
        if (h < 0) break;
        ++assign[h];
      }
    }
  }
  std::vector<RibbonGraph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

}  // namespace dmm
