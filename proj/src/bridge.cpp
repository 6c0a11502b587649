#include "dmm/bridge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dmm {

std::string primed(const std::string& label) { return label + "'"; }
std::string double_primed(const std::string& label) { return label + "''"; }

bool satisfies_two_matroid_exchange(const SkewPartition& partition,
                                    const std::vector<Mask>& bases) {
  std::vector<Mask> sorted = bases;
  std::sort(sorted.begin(), sorted.end());
  int k = partition.class_count();
  for (Mask b1 : sorted) {
    for (Mask b2 : sorted) {
      Mask diff = b1 ^ b2;
      for (int c = 0; c < k; ++c) {
        Mask p = partition.class_mask(c);
        if ((diff & p) != p) continue;  // p must lie inside the difference
        bool ok = false;
        for (int d = 0; d < k && !ok; ++d) {
          Mask q = partition.class_mask(d);
          if (std::binary_search(sorted.begin(), sorted.end(), b1 ^ (p | q))) ok = true;
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

namespace {

void reject_label_collisions(const DeltaMatroid& d, bool with_double) {
  std::set<std::string> all(d.elements().begin(), d.elements().end());
  for (const auto& l : d.elements()) {
    if (all.count(primed(l)) || (with_double && all.count(double_primed(l))))
      throw std::invalid_argument("ground set label collides with a primed copy: " + l);
  }
}

}  // namespace

Multimatroid q2_of(const DeltaMatroid& d) {
  reject_label_collisions(d, false);
  std::vector<std::vector<std::string>> classes;
  for (const auto& l : d.elements()) classes.push_back({l, primed(l)});
  SkewPartition partition(std::move(classes));
  std::vector<Mask> bases;
  bases.reserve(d.feasible().size());
  for (Mask f : d.feasible()) {
    Mask b = 0;
    for (int e = 0; e < d.size(); ++e) b |= bit(has_bit(f, e) ? 2 * e : 2 * e + 1);
    bases.push_back(b);
  }
  Multimatroid q(std::move(partition), std::move(bases));
  if (!satisfies_two_matroid_exchange(q.partition(), q.bases()))
    throw std::logic_error("q2 image fails the 2-matroid basis exchange");
  return q;
}

DeltaMatroid section(const Multimatroid& q, Mask transversal) {
  int k = q.partition().class_count();
  for (int c = 0; c < k; ++c)
    if (q.partition().class_size(c) != 2)
      throw std::invalid_argument("section requires a 2-matroid");
  if (!q.partition().is_transversal(transversal))
    throw std::invalid_argument("section requires a transversal");
  std::vector<std::string> labels;
  std::vector<int> picked(k);
  for (int c = 0; c < k; ++c) {
    picked[c] = lowest_bit(transversal & q.partition().class_mask(c));
    labels.push_back(q.partition().label(picked[c]));
  }
  std::vector<Mask> feasible;
  for (Mask b : q.bases()) {
    Mask f = 0;
    for (int c = 0; c < k; ++c)
      if (has_bit(b, picked[c])) f |= bit(c);
    feasible.push_back(f);
  }
  std::sort(feasible.begin(), feasible.end());
  feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
  return DeltaMatroid(std::move(labels), std::move(feasible));
}

Multimatroid q3_of(const DeltaMatroid& d) {
  if (!d.is_vf_safe())
    throw std::invalid_argument("q3 requires a vf-safe delta-matroid");
  reject_label_collisions(d, true);
  int n = d.size();
  std::vector<std::vector<std::string>> classes;
  for (const auto& l : d.elements()) classes.push_back({l, primed(l), double_primed(l)});
  SkewPartition partition(std::move(classes));

  // One bar-star family per double-primed selection.
  std::vector<std::vector<Mask>> twisted(Mask{1} << n);
  for_each_subset(d.full_mask(), [&](Mask a2) {
    twisted[a2] = d.bar_star(a2).feasible();
  });

  std::vector<Mask> bases;
  std::vector<int> digit(n, 0);  // 0 plain, 1 primed, 2 double-primed
  while (true) {
    Mask b = 0, f = 0, a2 = 0;
    for (int e = 0; e < n; ++e) {
      b |= bit(3 * e + digit[e]);
      if (digit[e] == 1) f |= bit(e);
      if (digit[e] == 2) a2 |= bit(e);
    }
    const auto& family = twisted[a2];
    if (std::binary_search(family.begin(), family.end(), f)) bases.push_back(b);
    int e = n - 1;
    while (e >= 0 && digit[e] == 2) digit[e--] = 0;
    if (e < 0) break;
    ++digit[e];
  }
  Multimatroid q(std::move(partition), std::move(bases));
  if (!q.is_tight()) throw std::logic_error("q3 image is not tight");
  return q;
}

DeltaMatroid delta_of_q3(const Multimatroid& q) {
  int k = q.partition().class_count();
  std::vector<std::string> base_labels;
  std::vector<int> plain(k), primed_at(k), double_at(k);
  for (int c = 0; c < k; ++c) {
    if (q.partition().class_size(c) != 3)
      throw std::invalid_argument("triple carrier requires classes of size 3");
    int begin = q.partition().class_begin(c);
    std::map<std::string, int> here;
    for (int e = begin; e < begin + 3; ++e) here[q.partition().label(e)] = e;
    int found = -1;
    for (const auto& [label, e] : here) {
      if (here.count(primed(label)) && here.count(double_primed(label))) {
        found = e;
        plain[c] = e;
        primed_at[c] = here[primed(label)];
        double_at[c] = here[double_primed(label)];
        break;
      }
    }
    if (found < 0)
      throw std::invalid_argument("skew class is not an {x, x', x''} triple");
    base_labels.push_back(q.partition().label(plain[c]));
  }
  if (!q.is_tight())
    throw std::invalid_argument("inverse construction requires a tight 3-matroid");

  std::vector<Mask> feasible;
  for (Mask b : q.bases()) {
    Mask f = 0;
    bool inside = true;
    for (int c = 0; c < k && inside; ++c) {
      if (has_bit(b, double_at[c])) inside = false;
      else if (has_bit(b, primed_at[c])) f |= bit(c);
    }
    if (inside) feasible.push_back(f);
  }
  if (feasible.empty())
    throw std::runtime_error("no basis avoids the double-primed copies");
  std::sort(feasible.begin(), feasible.end());
  feasible.erase(std::unique(feasible.begin(), feasible.end()), feasible.end());
  return DeltaMatroid(std::move(base_labels), std::move(feasible));
}

}  // namespace dmm
