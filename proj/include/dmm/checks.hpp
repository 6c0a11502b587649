#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "dmm/bridge.hpp"
#include "dmm/delta_matroid.hpp"
#include "dmm/multimatroid.hpp"
#include "dmm/ribbon.hpp"

namespace dmm {

/// Outcome of one verification run. Witnesses are capped at 100; the
/// violation counter keeps counting past the cap.
struct CheckReport {
  std::string check;
  std::int64_t instances = 0;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;
  std::vector<nlohmann::json> witnesses;
  double ms = 0;
  nlohmann::json data;  // check-specific results (enumeration counts, search outcome)

  void add_violation(nlohmann::json witness);
  void absorb(const CheckReport& other);  // sums counters, concatenates witnesses
  bool passed() const { return violations == 0; }
  nlohmann::json to_json() const;
};

// Rank-axiom verification over an explicit table covering every
// subtransversal. Missing entries are an error; instance size is capped at
// 50000 subtransversals.
CheckReport verify_axioms(const SkewPartition& partition,
                          const std::map<Mask, int>& rank_table);

// Chain theorem on one connected tight multimatroid: in every skew class of
// size k at least k-1 of the single-element minors are connected.
// Precondition failures mark the instance skipped instead of violated.
CheckReport check_chain(const Multimatroid& q);

// Splitter theorem on one (Q, A, e): either Q|e is connected, or for every
// skew partner x of e the minor Q|x is connected with Q|A as a minor.
CheckReport check_splitter(const Multimatroid& q, Mask a, int e);

// The worked four-class example: builds the ground delta-matroid, checks the
// hard exchange pairs, compares the triple extension against the expected 50
// bases, and replays every connectivity/minor/isomorphism claim.
CheckReport run_paper_example();

// The half-twisted theta: 2-connected, its contraction-deletion minor is a
// one-vertex orientable loop, and the deletion side fails to contain that
// minor even though it stays 2-connected.
CheckReport run_counterexample_ribbon();

// Searches connected non-even delta-matroids up to max_n elements for an
// element whose deletion and contraction are both disconnected. The outcome
// (first witness or a certificate of absence per n) lands in report.data.
CheckReport search_nontight_chain_violation(int max_n);

// Tutte's chain theorem and the Brylawski-Seymour splitter theorem over all
// connected matroids with at most max_n elements, run through the
// delta-matroid machinery.
CheckReport check_matroid_specializations(int max_n);

struct CheckOptions {
  int n = -1;             // ground-set bound, check-specific default
  int max_vertices = -1;  // ribbon enumeration bounds
  int max_edges = -1;
  std::string fixtures_dir;  // enables frozen-constant comparison
};

// Aggregate drivers behind the named checks.
CheckReport chain_even_check(int n);
CheckReport chain_vf_check(int n);
CheckReport splitter_even_check(int n);
CheckReport splitter_vf_check(int n);
CheckReport ribbon_compat_check(int max_v, int max_e);
CheckReport dictionary_check(int n_two, int n_three);
CheckReport axiom_suite_check(int n);
CheckReport enum_counts_check(const std::string& fixtures_dir);

std::vector<std::string> check_names();
CheckReport run_check(const std::string& name, const CheckOptions& options);

// The worked example's ground delta-matroid and its expected triple-extension
// bases; shared between the reproduction check and the test suite.
DeltaMatroid paper_example_delta();
Multimatroid paper_example_multimatroid();
RibbonGraph half_twisted_theta();
RibbonGraph plane_theta();

}  // namespace dmm
