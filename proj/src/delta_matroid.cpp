#include "dmm/delta_matroid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace dmm {

const char* to_string(ElementRole role) {
  switch (role) {
    case ElementRole::Loop: return "loop";
    case ElementRole::Coloop: return "coloop";
    case ElementRole::Ordinary: return "ordinary";
  }
  return "?";
}

DeltaMatroid::DeltaMatroid(SetSystem system) : system_(std::move(system)) {
  if (auto failure = find_exchange_failure(system_.feasible())) {
    throw std::invalid_argument(
        "symmetric exchange fails at (F1=" + std::to_string(failure->f1) +
        ", F2=" + std::to_string(failure->f2) + ", x=" + system_.label(failure->x) + ")");
  }
}

DeltaMatroid::DeltaMatroid(std::vector<std::string> elements, std::vector<Mask> feasible)
    : DeltaMatroid(SetSystem(std::move(elements), std::move(feasible))) {}

ElementRole DeltaMatroid::element_role(int e) const {
  system_.label(e);  // bounds check
  bool in_all = true, in_none = true;
  for (Mask f : feasible()) {
    if (has_bit(f, e)) in_none = false;
    else in_all = false;
  }
  if (in_all) return ElementRole::Coloop;
  if (in_none) return ElementRole::Loop;
  return ElementRole::Ordinary;
}

DeltaMatroid DeltaMatroid::deleted(int e) const {
  return DeltaMatroid(system_.minor_deleted(e));
}

DeltaMatroid DeltaMatroid::contracted(int e) const {
  return DeltaMatroid(system_.minor_contracted(e));
}

DeltaMatroid DeltaMatroid::twist_contracted(int e) const {
  return DeltaMatroid(system_.minor_twist_contracted(e));
}

namespace {

// Removal loop shared by apply_minor and the minor searches. Works on the raw
// set system so that twist-contraction intermediates outside the
// delta-matroid class do not abort the computation. Indices are processed in
// descending order, which leaves lower indices stable while bits compact;
// the result does not depend on the processing order.
SetSystem apply_spec_raw(const SetSystem& start, const MinorSpec& spec) {
  SetSystem sys = start;
  for (int e = start.size() - 1; e >= 0; --e) {
    if (has_bit(spec.deletions, e)) sys = sys.minor_deleted(e);
    else if (has_bit(spec.contractions, e)) sys = sys.minor_contracted(e);
    else if (has_bit(spec.twist_contractions, e)) sys = sys.minor_twist_contracted(e);
  }
  return sys;
}

}  // namespace

DeltaMatroid DeltaMatroid::apply_minor(const MinorSpec& spec) const {
  if (!spec.disjoint())
    throw std::invalid_argument("minor spec has overlapping deletion/contraction sets");
  if (spec.all() & ~full_mask())
    throw std::invalid_argument("minor spec refers to unknown elements");
  return DeltaMatroid(apply_spec_raw(system_, spec));
}

DeltaMatroid DeltaMatroid::restricted(Mask a) const {
  if (a & ~full_mask()) throw std::invalid_argument("restriction outside the ground set");
  return apply_minor(MinorSpec{full_mask() & ~a, 0, 0});
}

bool DeltaMatroid::is_vf_safe() const {
  int n = size();
  if (n > 8)
    throw std::invalid_argument("vf-safe closure is limited to ground sets of at most 8 elements");
  std::set<std::vector<Mask>> seen;
  std::deque<std::vector<Mask>> queue;
  seen.insert(feasible());
  queue.push_back(feasible());
  while (!queue.empty()) {
    std::vector<Mask> fam = std::move(queue.front());
    queue.pop_front();
    for (int e = 0; e < n; ++e) {
      for (std::vector<Mask> next :
           {twist_family(fam, bit(e)), loop_complement_one(fam, e)}) {
        if (next.empty()) return false;  // loop complementation emptied the family
        if (seen.insert(next).second) {
          if (find_exchange_failure(next)) return false;
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return true;
}

DeltaMatroid direct_sum(const DeltaMatroid& d1, const DeltaMatroid& d2) {
  std::vector<std::string> labels = d1.elements();
  for (const auto& l : d2.elements()) {
    if (std::find(labels.begin(), labels.end(), l) != labels.end())
      throw std::invalid_argument("direct sum with colliding label: " + l);
    labels.push_back(l);
  }
  int shift = d1.size();
  std::vector<Mask> fam;
  fam.reserve(d1.feasible().size() * d2.feasible().size());
  for (Mask f1 : d1.feasible())
    for (Mask f2 : d2.feasible()) fam.push_back(f1 | (f2 << shift));
  return DeltaMatroid(std::move(labels), std::move(fam));
}

namespace {

bool search_minor(const DeltaMatroid& d, const DeltaMatroid& target, int modes,
                  MinorSpec* witness) {
  Mask remove = 0;
  for (int e = 0; e < d.size(); ++e) {
    const auto& l = d.label(e);
    if (std::find(target.elements().begin(), target.elements().end(), l) ==
        target.elements().end())
      remove |= bit(e);
  }
  for (const auto& l : target.elements())
    d.index_of(l);  // throws on ground-set mismatch
  std::vector<int> removed;
  for_each_bit(remove, [&](int e) { removed.push_back(e); });
  int k = static_cast<int>(removed.size());
  std::vector<int> mode(k, 0);
  while (true) {
    MinorSpec spec;
    for (int i = 0; i < k; ++i) {
      if (mode[i] == 0) spec.deletions |= bit(removed[i]);
      else if (mode[i] == 1) spec.contractions |= bit(removed[i]);
      else spec.twist_contractions |= bit(removed[i]);
    }
    if (apply_spec_raw(d.system(), spec) == target.system()) {
      if (witness) *witness = spec;
      return true;
    }
    int i = 0;
    while (i < k && mode[i] == modes - 1) mode[i++] = 0;
    if (i == k) return false;
    ++mode[i];
  }
}

}  // namespace

bool has_minor(const DeltaMatroid& d, const DeltaMatroid& target, MinorSpec* witness) {
  return search_minor(d, target, 2, witness);
}

bool has_3_minor(const DeltaMatroid& d, const DeltaMatroid& target, MinorSpec* witness) {
  return search_minor(d, target, 3, witness);
}

}  // namespace dmm
