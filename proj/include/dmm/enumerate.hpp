#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dmm/delta_matroid.hpp"
#include "dmm/ribbon.hpp"

namespace dmm {

struct DeltaFilters {
  std::optional<bool> even;
  std::optional<bool> connected;
  std::optional<bool> vf_safe;
  std::optional<bool> matroid;

  bool accepts(const DeltaMatroid& d) const;
};

// Every delta-matroid on the labeled ground set {a, b, c, d}[0..n), each
// exactly once, in the order induced by the family bitmask encoding.
// Exhaustive mode requires n <= 4.
void for_each_delta_matroid(int n, const DeltaFilters& filters,
                            const std::function<void(const DeltaMatroid&)>& fn);

// Seeded random family draws for n >= 5; draws that fail symmetric exchange
// or the filters are discarded. `samples` counts the draws, not the yields.
void for_each_delta_matroid_sampled(int n, std::uint64_t samples, std::uint64_t seed,
                                    const DeltaFilters& filters,
                                    const std::function<void(const DeltaMatroid&)>& fn);

// Matroids as equicardinal delta-matroids, enumerated rank by rank. This is
// the independent route used to cross-check the filtered enumeration;
// exhaustive up to n = 5.
void for_each_matroid(int n, const std::function<void(const DeltaMatroid&)>& fn);

// Every labeled rotation system with at most max_v vertices and max_e edges
// (both capped at 3), deduplicated up to vertex order, vertex orientation and
// half-edge swaps, in canonical-key order. Edges are labeled e1, e2, e3.
std::vector<RibbonGraph> enumerate_ribbon_graphs(int max_v, int max_e);

}  // namespace dmm
