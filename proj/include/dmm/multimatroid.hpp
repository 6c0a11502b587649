#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dmm/mask.hpp"

namespace dmm {

/// Partition of a ground set into ordered skew classes. Elements are indexed
/// by their position in the class-major flattening, so each class occupies a
/// contiguous index range. Total ground set size is capped at 18.
class SkewPartition {
 public:
  explicit SkewPartition(std::vector<std::vector<std::string>> classes);

  int element_count() const { return static_cast<int>(labels_.size()); }
  int class_count() const { return static_cast<int>(class_begin_.size()) - 1; }
  int class_size(int c) const { return class_begin_[c + 1] - class_begin_[c]; }
  int class_begin(int c) const { return class_begin_[c]; }
  int class_of(int e) const { return class_of_[e]; }
  Mask class_mask(int c) const { return class_masks_[c]; }
  Mask full_mask() const {
    return element_count() == 0 ? 0 : (bit(element_count() - 1) << 1) - 1;
  }

  const std::string& label(int e) const;
  int index_of(const std::string& label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  std::vector<std::vector<std::string>> class_labels() const;

  bool is_subtransversal(Mask a) const;
  bool is_transversal(Mask a) const;
  // Union of the skew classes that meet a.
  Mask classes_meeting(Mask a) const;

  // Visits every subtransversal once; per class the choices run
  // absent-first, then elements in index order, class 0 outermost.
  void for_each_subtransversal(const std::function<void(Mask)>& fn) const;
  // Visits every transversal of the classes selected by class_set (a bitmask
  // over class indices).
  void for_each_transversal_of(Mask class_set, const std::function<void(Mask)>& fn) const;

  bool operator==(const SkewPartition& other) const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> class_begin_;  // class_count()+1 offsets
  std::vector<int> class_of_;
  std::vector<Mask> class_masks_;
};

struct AxiomViolation {
  int axiom = 0;   // 1..4
  Mask a = 0;      // subtransversal(s) involved
  Mask b = 0;      // second subtransversal (axiom 3)
  int x = -1;      // element(s) involved (axioms 2 and 4)
  int y = -1;
};

// Checks rank axioms (1)-(4) against an arbitrary rank oracle, invoking
// on_violation for each failure. Returns the number of violations found.
// Stops early if on_violation returns false.
int scan_rank_axioms(const SkewPartition& partition,
                     const std::function<int(Mask)>& rank,
                     const std::function<bool(const AxiomViolation&)>& on_violation);

/// Graph on the elements of a basis, joining e and f when e lies in the
/// fundamental circuit of f's skew class.
class FundamentalGraph {
 public:
  FundamentalGraph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int e, int f) const;
  bool connected() const;
  // Vertex sets of the connected components, each sorted.
  std::vector<std::vector<int>> components() const;

 private:
  std::vector<int> vertices_;
  std::vector<std::pair<int, int>> edges_;  // ordered pairs with first < second
};

struct FundamentalCircuitResult {
  Mask circuit = 0;
  bool unique = true;  // false when the instance is not tight and several minimal
                       // dependent sets live in the basis-class region
};

/// Multimatroid backed by its list of bases (the maximal independent sets).
/// The rank of a subtransversal is its largest intersection with a basis.
/// Construction re-checks the rank axioms and that the stored bases are
/// exactly the maximal independent sets, as long as the instance is small
/// enough for the exhaustive scan.
class Multimatroid {
 public:
  Multimatroid(SkewPartition partition, std::vector<Mask> bases);

  const SkewPartition& partition() const { return partition_; }
  const std::vector<Mask>& bases() const { return bases_; }

  int rank(Mask a) const;  // validates that a is a subtransversal
  bool is_independent(Mask a) const;
  bool is_basis(Mask a) const;

  bool is_nondegenerate() const { return nondegenerate_; }
  bool is_tight() const { return tight_; }
  // Elements of rank zero.
  Mask singular_elements() const;

  // Minimal dependent subtransversals, sorted by (size, mask).
  std::vector<Mask> circuits() const;

  // Minor with respect to a subtransversal: the classes meeting `a` are
  // removed and ranks shift by rank(a).
  Multimatroid minor(Mask a) const;

  // Unions of skew classes X with r(A) = r(A & X) + r(A & ~X) for every
  // subtransversal A. Cross-checked against the component structure of a
  // fundamental graph whenever the instance is tight.
  std::vector<Mask> separators() const;
  bool is_connected() const;

  // The circuit contained in basis + skew class. Unique when tight; on
  // non-tight instances the first minimal dependent set found is returned
  // with unique = false.
  FundamentalCircuitResult fundamental_circuit(Mask basis, int skew_class) const;
  FundamentalGraph fundamental_graph(Mask basis) const;

  // Independent set I with e in I and minor(a) == minor(I). Requires a
  // non-degenerate multimatroid and rank({e}) = 1.
  Mask scum_lift(Mask a, int e) const;

  // For connected tight Q with minor(e) disconnected and x a proper separator
  // of minor(e): a circuit C with e in C, C - e inside x.
  Mask circuit_in_separator(int e, Mask x) const;

  bool operator==(const Multimatroid& other) const;

 private:
  int rank_unchecked(Mask a) const;
  void validate();
  bool compute_tight() const;
  std::vector<Mask> circuits_within(Mask region) const;
  Mask scum_recurse(Mask contracted, Mask a, int e) const;

  SkewPartition partition_;
  std::vector<Mask> bases_;
  bool nondegenerate_ = false;
  bool tight_ = false;
};

Multimatroid direct_sum(const Multimatroid& q1, const Multimatroid& q2);

// Labeled minor containment: the classes of `target` must all be classes of
// `q`; looks for a transversal S of the remaining classes with
// q.minor(S) == target.
bool has_minor(const Multimatroid& q, const Multimatroid& target, Mask* witness = nullptr);

// Brute-force search over class and element bijections.
bool is_isomorphic(const Multimatroid& q1, const Multimatroid& q2);

}  // namespace dmm
