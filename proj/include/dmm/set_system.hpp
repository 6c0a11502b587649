#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmm/mask.hpp"

namespace dmm {

// First triple (F1, F2, x) violating symmetric exchange: there is no y in
// F1 ^ F2 (y = x allowed) with F1 ^ {x,y} feasible.
struct ExchangeFailure {
  Mask f1 = 0;
  Mask f2 = 0;
  int x = -1;
};

// Scans feasible sets in ascending mask order, x in ascending element order
// within F1 ^ F2, and reports the first failing triple. `feasible` must be
// sorted ascending.
std::optional<ExchangeFailure> find_exchange_failure(std::span<const Mask> feasible);

/// Ground set with a non-empty family of subsets stored as bitmasks.
///
/// This is the raw object underneath a delta-matroid. Twists and loop
/// complementations live here because loop complementation can leave the
/// delta-matroid class; callers that need validity check is_delta_matroid().
class SetSystem {
 public:
  SetSystem(std::vector<std::string> elements, std::vector<Mask> feasible);

  int size() const { return static_cast<int>(elements_.size()); }
  Mask full_mask() const {
    return size() == 0 ? 0 : (bit(size() - 1) << 1) - 1;
  }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<Mask>& feasible() const { return feasible_; }
  const std::string& label(int e) const;
  int index_of(const std::string& label) const;  // throws on unknown label
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  bool feasible_contains(Mask f) const;

  bool is_delta_matroid() const {
    return !find_exchange_failure(feasible_).has_value();
  }

  // F |-> F ^ a for every feasible set.
  SetSystem twisted(Mask a) const;
  // Per element e of a, ascending: family ^= {F | e : F feasible, e not in F}.
  SetSystem loop_complemented(Mask a) const;
  // The composite +A, *A, +A.
  SetSystem bar_star(Mask a) const;

  // Element removal with the loop/coloop conventions: deleting a coloop or
  // contracting a loop falls through to the other operation. The removed
  // element's bit is compacted away.
  SetSystem minor_deleted(int e) const;
  SetSystem minor_contracted(int e) const;
  // Loop complementation at e followed by contraction of e.
  SetSystem minor_twist_contracted(int e) const;

  // All X such that the family is the direct product {F & X} x {F & ~X}.
  // Always contains 0 and full_mask().
  std::vector<Mask> separators() const;
  bool is_separator(Mask x) const;
  bool is_connected() const;

  bool all_sets_same_parity() const;
  bool all_sets_same_size() const;

  // Label-wise equality: same label set, same family after reindexing.
  bool operator==(const SetSystem& other) const;

 private:
  std::vector<std::string> elements_;
  std::vector<Mask> feasible_;  // sorted, unique
};

// Single-element twist / loop complementation on a bare sorted family.
std::vector<Mask> twist_family(const std::vector<Mask>& family, Mask a);
std::vector<Mask> loop_complement_one(const std::vector<Mask>& family, int e);

}  // namespace dmm
