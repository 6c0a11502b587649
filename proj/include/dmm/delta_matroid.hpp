#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmm/set_system.hpp"

namespace dmm {

enum class ElementRole { Loop, Coloop, Ordinary };

const char* to_string(ElementRole role);

/// Elements to remove, split by removal mode. The three masks must be
/// pairwise disjoint.
struct MinorSpec {
  Mask deletions = 0;
  Mask contractions = 0;
  Mask twist_contractions = 0;

  Mask all() const { return deletions | contractions | twist_contractions; }
  bool disjoint() const {
    return (deletions & contractions) == 0 && (deletions & twist_contractions) == 0 &&
           (contractions & twist_contractions) == 0;
  }
};

/// A set system satisfying the symmetric exchange axiom. Validated at
/// construction; immutable afterwards.
class DeltaMatroid {
 public:
  explicit DeltaMatroid(SetSystem system);
  DeltaMatroid(std::vector<std::string> elements, std::vector<Mask> feasible);

  const SetSystem& system() const { return system_; }
  int size() const { return system_.size(); }
  Mask full_mask() const { return system_.full_mask(); }
  const std::vector<std::string>& elements() const { return system_.elements(); }
  const std::vector<Mask>& feasible() const { return system_.feasible(); }
  const std::string& label(int e) const { return system_.label(e); }
  int index_of(const std::string& l) const { return system_.index_of(l); }
  Mask mask_of(const std::vector<std::string>& ls) const { return system_.mask_of(ls); }

  ElementRole element_role(int e) const;

  DeltaMatroid deleted(int e) const;
  DeltaMatroid contracted(int e) const;
  DeltaMatroid twist_contracted(int e) const;
  // Applies all removals in canonical element order; the result does not
  // depend on the order.
  DeltaMatroid apply_minor(const MinorSpec& spec) const;
  // D restricted to A, i.e. delete everything outside A.
  DeltaMatroid restricted(Mask a) const;

  DeltaMatroid twisted(Mask a) const { return DeltaMatroid(system_.twisted(a)); }
  SetSystem loop_complemented(Mask a) const { return system_.loop_complemented(a); }
  SetSystem bar_star(Mask a) const { return system_.bar_star(a); }

  std::vector<Mask> separators() const { return system_.separators(); }
  bool is_connected() const { return system_.is_connected(); }
  bool is_even() const { return system_.all_sets_same_parity(); }
  bool is_matroid() const { return system_.all_sets_same_size(); }

  // Breadth-first closure of the family under single-element twists and loop
  // complementations; true iff every member of the orbit satisfies symmetric
  // exchange. Ground sets larger than 8 elements are rejected.
  bool is_vf_safe() const;

  bool operator==(const DeltaMatroid& other) const { return system_ == other.system_; }

 private:
  SetSystem system_;
};

DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2);

// Exact labeled containment: some assignment of the surplus elements to
// removal modes turns `d` into `target`. has_minor uses deletions and
// contractions; has_3_minor additionally allows twist-contractions.
bool has_minor(const DeltaMatroid& d, const DeltaMatroid& target,
               MinorSpec* witness = nullptr);
bool has_3_minor(const DeltaMatroid& d, const DeltaMatroid& target,
                 MinorSpec* witness = nullptr);

}  // namespace dmm
