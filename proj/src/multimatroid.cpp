#include "dmm/multimatroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dmm {

namespace {

constexpr double kAxiomPairBudget = 2e6;   // axiom-3 pair enumeration cap
constexpr double kLinearScanBudget = 2e6;  // axioms 1/2/4 cap

}  // namespace

SkewPartition::SkewPartition(std::vector<std::vector<std::string>> classes) {
  class_begin_.push_back(0);
  std::set<std::string> seen;
  for (const auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("empty skew class");
    for (const auto& label : cls) {
      if (label.empty()) throw std::invalid_argument("empty element label");
      if (!seen.insert(label).second)
        throw std::invalid_argument("duplicate element label: " + label);
      labels_.push_back(label);
    }
    class_begin_.push_back(static_cast<int>(labels_.size()));
  }
  if (labels_.size() > 18)
    throw std::invalid_argument("multimatroid ground set larger than 18 elements");
  class_of_.resize(labels_.size());
  for (int c = 0; c < class_count(); ++c) {
    Mask m = 0;
    for (int e = class_begin_[c]; e < class_begin_[c + 1]; ++e) {
      class_of_[e] = c;
      m |= bit(e);
    }
    class_masks_.push_back(m);
  }
}

const std::string& SkewPartition::label(int e) const {
  if (e < 0 || e >= element_count()) throw std::invalid_argument("element index out of range");
  return labels_[e];
}

int SkewPartition::index_of(const std::string& label) const {
  for (int i = 0; i < element_count(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown element label: " + label);
}

Mask SkewPartition::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    Mask b = bit(index_of(l));
    if (m & b) throw std::invalid_argument("repeated element label: " + l);
    m |= b;
  }
  return m;
}

std::vector<std::string> SkewPartition::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(labels_[i]); });
  return out;
}

std::vector<std::vector<std::string>> SkewPartition::class_labels() const {
  std::vector<std::vector<std::string>> out;
  for (int c = 0; c < class_count(); ++c) {
    out.emplace_back(labels_.begin() + class_begin_[c], labels_.begin() + class_begin_[c + 1]);
  }
  return out;
}

bool SkewPartition::is_subtransversal(Mask a) const {
  if (a & ~full_mask()) return false;
  for (Mask cm : class_masks_)
    if (popcount(a & cm) > 1) return false;
  return true;
}

bool SkewPartition::is_transversal(Mask a) const {
  if (a & ~full_mask()) return false;
  for (Mask cm : class_masks_)
    if (popcount(a & cm) != 1) return false;
  return true;
}

Mask SkewPartition::classes_meeting(Mask a) const {
  Mask out = 0;
  for (Mask cm : class_masks_)
    if (cm & a) out |= cm;
  return out;
}

void SkewPartition::for_each_subtransversal(const std::function<void(Mask)>& fn) const {
  int k = class_count();
  std::vector<int> digit(k, 0);  // 0 = absent, i = (i-1)-th element of the class
  while (true) {
    Mask m = 0;
    for (int c = 0; c < k; ++c)
      if (digit[c] > 0) m |= bit(class_begin_[c] + digit[c] - 1);
    fn(m);
    int c = k - 1;
    while (c >= 0 && digit[c] == class_size(c)) digit[c--] = 0;
    if (c < 0) break;
    ++digit[c];
  }
}

void SkewPartition::for_each_transversal_of(Mask class_set,
                                            const std::function<void(Mask)>& fn) const {
  std::vector<int> picked;
  for_each_bit(class_set, [&](int c) { picked.push_back(c); });
  int k = static_cast<int>(picked.size());
  std::vector<int> digit(k, 0);
  while (true) {
    Mask m = 0;
    for (int i = 0; i < k; ++i) m |= bit(class_begin_[picked[i]] + digit[i]);
    fn(m);
    int i = k - 1;
    while (i >= 0 && digit[i] == class_size(picked[i]) - 1) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
}

bool SkewPartition::operator==(const SkewPartition& other) const {
  return labels_ == other.labels_ && class_begin_ == other.class_begin_;
}

int scan_rank_axioms(const SkewPartition& partition, const std::function<int(Mask)>& rank,
                     const std::function<bool(const AxiomViolation&)>& on_violation) {
  int violations = 0;
  bool stop = false;
  auto report = [&](AxiomViolation v) {
    ++violations;
    if (!on_violation(v)) stop = true;
  };

  if (rank(0) != 0) report({1, 0, 0, -1, -1});
  if (stop) return violations;

  partition.for_each_subtransversal([&](Mask a) {
    if (stop) return;
    int ra = rank(a);
    for (int c = 0; c < partition.class_count() && !stop; ++c) {
      if (a & partition.class_mask(c)) continue;
      int begin = partition.class_begin(c);
      int sz = partition.class_size(c);
      std::vector<int> inc(sz);
      for (int i = 0; i < sz; ++i) inc[i] = rank(a | bit(begin + i)) - ra;
      for (int i = 0; i < sz && !stop; ++i)
        if (inc[i] < 0 || inc[i] > 1) report({2, a, 0, begin + i, -1});
      for (int i = 0; i < sz && !stop; ++i)
        for (int j = i + 1; j < sz && !stop; ++j)
          if (inc[i] + inc[j] < 1) report({4, a, 0, begin + i, begin + j});
    }
  });
  if (stop) return violations;

  // Axiom 3 over all pairs with a subtransversal union: per class each side
  // is absent, in A, in B, or in both.
  int k = partition.class_count();
  std::function<void(int, Mask, Mask)> rec = [&](int c, Mask a, Mask b) {
    if (stop) return;
    if (c == k) {
      if (rank(a) + rank(b) < rank(a | b) + rank(a & b)) report({3, a, b, -1, -1});
      return;
    }
    rec(c + 1, a, b);
    int begin = partition.class_begin(c);
    for (int i = 0; i < partition.class_size(c) && !stop; ++i) {
      Mask e = bit(begin + i);
      rec(c + 1, a | e, b);
      rec(c + 1, a, b | e);
      rec(c + 1, a | e, b | e);
    }
  };
  rec(0, 0, 0);
  return violations;
}

FundamentalGraph::FundamentalGraph(std::vector<int> vertices,
                                   std::vector<std::pair<int, int>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (auto& [a, b] : edges_)
    if (a > b) std::swap(a, b);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool FundamentalGraph::has_edge(int e, int f) const {
  if (e > f) std::swap(e, f);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(e, f));
}

std::vector<std::vector<int>> FundamentalGraph::components() const {
  std::map<int, int> comp;
  for (int v : vertices_) comp[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (auto [a, b] : edges_) comp[find(a)] = find(b);
  std::map<int, std::vector<int>> groups;
  for (int v : vertices_) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, vs] : groups) out.push_back(vs);
  return out;
}

bool FundamentalGraph::connected() const { return components().size() <= 1; }

Multimatroid::Multimatroid(SkewPartition partition, std::vector<Mask> bases)
    : partition_(std::move(partition)), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  if (bases_.empty()) throw std::invalid_argument("multimatroid needs at least one basis");
  for (Mask b : bases_)
    if (!partition_.is_subtransversal(b))
      throw std::invalid_argument("basis is not a subtransversal");
  nondegenerate_ = true;
  for (int c = 0; c < partition_.class_count(); ++c)
    if (partition_.class_size(c) < 2) nondegenerate_ = false;
  if (nondegenerate_)
    for (Mask b : bases_)
      if (!partition_.is_transversal(b))
        throw std::invalid_argument("basis of a non-degenerate multimatroid must be a transversal");
  validate();
  tight_ = compute_tight();
}

int Multimatroid::rank_unchecked(Mask a) const {
  int best = 0;
  for (Mask b : bases_) best = std::max(best, popcount(a & b));
  return best;
}

int Multimatroid::rank(Mask a) const {
  if (!partition_.is_subtransversal(a))
    throw std::invalid_argument("rank argument is not a subtransversal");
  return rank_unchecked(a);
}

bool Multimatroid::is_independent(Mask a) const { return rank(a) == popcount(a); }

bool Multimatroid::is_basis(Mask a) const {
  return std::binary_search(bases_.begin(), bases_.end(), a);
}

void Multimatroid::validate() {
  double st_count = 1, pair_count = 1;
  for (int c = 0; c < partition_.class_count(); ++c) {
    st_count *= partition_.class_size(c) + 1;
    pair_count *= 1 + 3.0 * partition_.class_size(c);
  }
  auto rank_fn = [this](Mask m) { return rank_unchecked(m); };
  auto thrower = [this](const AxiomViolation& v) -> bool {
    throw std::invalid_argument("rank axiom (" + std::to_string(v.axiom) +
                                ") fails; derived rank is not a multimatroid rank function");
  };
  if (pair_count <= kAxiomPairBudget) {
    scan_rank_axioms(partition_, rank_fn, thrower);
    std::vector<Mask> maximal;
    partition_.for_each_subtransversal([&](Mask a) {
      if (rank_unchecked(a) != popcount(a)) return;
      for (int c = 0; c < partition_.class_count(); ++c) {
        if (a & partition_.class_mask(c)) continue;
        for (int e = partition_.class_begin(c); e < partition_.class_begin(c) + partition_.class_size(c); ++e)
          if (rank_unchecked(a | bit(e)) == popcount(a) + 1) return;
      }
      maximal.push_back(a);
    });
    std::sort(maximal.begin(), maximal.end());
    if (maximal != bases_)
      throw std::invalid_argument("stored bases are not the maximal independent sets");
  } else if (st_count * partition_.element_count() <= kLinearScanBudget) {
    // Too large for the pairwise submodularity sweep; keep the linear axioms.
    if (rank_unchecked(0) != 0) thrower({1, 0, 0, -1, -1});
    partition_.for_each_subtransversal([&](Mask a) {
      int ra = rank_unchecked(a);
      for (int c = 0; c < partition_.class_count(); ++c) {
        if (a & partition_.class_mask(c)) continue;
        int begin = partition_.class_begin(c);
        int sz = partition_.class_size(c);
        std::vector<int> inc(sz);
        for (int i = 0; i < sz; ++i) inc[i] = rank_unchecked(a | bit(begin + i)) - ra;
        for (int i = 0; i < sz; ++i)
          if (inc[i] < 0 || inc[i] > 1) thrower({2, a, 0, begin + i, -1});
        for (int i = 0; i < sz; ++i)
          for (int j = i + 1; j < sz; ++j)
            if (inc[i] + inc[j] < 1) thrower({4, a, 0, begin + i, begin + j});
      }
    });
  }
}

bool Multimatroid::compute_tight() const {
  if (!nondegenerate_) return false;
  int k = partition_.class_count();
  for (int c = 0; c < k; ++c) {
    Mask others = 0;
    for (int d = 0; d < k; ++d)
      if (d != c) others |= bit(d);
    bool bad = false;
    partition_.for_each_transversal_of(others, [&](Mask a) {
      if (bad) return;
      int ra = rank_unchecked(a);
      int sum = 0;
      for (int e = partition_.class_begin(c); e < partition_.class_begin(c) + partition_.class_size(c); ++e)
        sum += rank_unchecked(a | bit(e)) - ra;
      if (sum != partition_.class_size(c) - 1) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

Mask Multimatroid::singular_elements() const {
  Mask out = 0;
  for (int e = 0; e < partition_.element_count(); ++e)
    if (rank_unchecked(bit(e)) == 0) out |= bit(e);
  return out;
}

std::vector<Mask> Multimatroid::circuits() const {
  return circuits_within(partition_.full_mask());
}

std::vector<Mask> Multimatroid::circuits_within(Mask region) const {
  std::vector<Mask> out;
  int k = partition_.class_count();
  std::vector<std::vector<int>> options(k);
  for (int c = 0; c < k; ++c)
    for_each_bit(partition_.class_mask(c) & region, [&](int e) { options[c].push_back(e); });
  std::function<void(int, Mask)> rec = [&](int c, Mask a) {
    if (c == k) {
      if (a == 0 || rank_unchecked(a) == popcount(a)) return;
      bool minimal = true;
      for_each_bit(a, [&](int x) {
        Mask sub = a & ~bit(x);
        if (rank_unchecked(sub) != popcount(sub)) minimal = false;
      });
      if (minimal) out.push_back(a);
      return;
    }
    rec(c + 1, a);
    for (int e : options[c]) rec(c + 1, a | bit(e));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::make_pair(popcount(a), a) < std::make_pair(popcount(b), b);
  });
  return out;
}

Multimatroid Multimatroid::minor(Mask a) const {
  if (!partition_.is_subtransversal(a))
    throw std::invalid_argument("minor argument is not a subtransversal");
  if (a == 0) return *this;
  std::vector<std::vector<std::string>> kept_classes;
  std::vector<int> new_to_old;
  for (int c = 0; c < partition_.class_count(); ++c) {
    if (partition_.class_mask(c) & a) continue;
    std::vector<std::string> cls;
    for (int e = partition_.class_begin(c); e < partition_.class_begin(c) + partition_.class_size(c); ++e) {
      cls.push_back(partition_.label(e));
      new_to_old.push_back(e);
    }
    kept_classes.push_back(std::move(cls));
  }
  SkewPartition np(std::move(kept_classes));
  int ra = rank_unchecked(a);
  auto lift = [&](Mask x) {
    Mask m = a;
    for_each_bit(x, [&](int i) { m |= bit(new_to_old[i]); });
    return m;
  };
  std::vector<Mask> nb;
  np.for_each_subtransversal([&](Mask x) {
    if (rank_unchecked(lift(x)) - ra != popcount(x)) return;
    for (int c = 0; c < np.class_count(); ++c) {
      if (x & np.class_mask(c)) continue;
      for (int e = np.class_begin(c); e < np.class_begin(c) + np.class_size(c); ++e)
        if (rank_unchecked(lift(x | bit(e))) - ra == popcount(x) + 1) return;
    }
    nb.push_back(x);
  });
  return Multimatroid(std::move(np), std::move(nb));
}

namespace {

bool separator_identity_holds(const Multimatroid& q, Mask x) {
  bool ok = true;
  q.partition().for_each_subtransversal([&](Mask a) {
    if (!ok) return;
    if (q.rank(a) != q.rank(a & x) + q.rank(a & ~x & q.partition().full_mask())) ok = false;
  });
  return ok;
}

}  // namespace

std::vector<Mask> Multimatroid::separators() const {
  int k = partition_.class_count();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    Mask x = 0;
    for_each_bit(s, [&](int c) { x |= partition_.class_mask(c); });
    if (separator_identity_holds(*this, x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());

  if (tight_ && k >= 1) {
    // The separators of a tight multimatroid are exactly the class unions
    // spanned by component unions of any fundamental graph.
    FundamentalGraph g = fundamental_graph(bases_.front());
    auto comps = g.components();
    std::set<Mask> expected;
    for (Mask t = 0; t < (Mask{1} << comps.size()); ++t) {
      Mask x = 0;
      for_each_bit(t, [&](int i) {
        for (int e : comps[i]) x |= partition_.class_mask(partition_.class_of(e));
      });
      expected.insert(x);
    }
    std::set<Mask> actual(out.begin(), out.end());
    if (expected != actual)
      throw std::logic_error("separator list disagrees with the fundamental-graph components");
  }
  return out;
}

bool Multimatroid::is_connected() const {
  int k = partition_.class_count();
  for (Mask s = 1; s + 1 < (Mask{1} << k); ++s) {
    Mask x = 0;
    for_each_bit(s, [&](int c) { x |= partition_.class_mask(c); });
    if (separator_identity_holds(*this, x)) return false;
  }
  return true;
}

FundamentalCircuitResult Multimatroid::fundamental_circuit(Mask basis, int skew_class) const {
  if (!is_basis(basis)) throw std::invalid_argument("fundamental circuit needs a stored basis");
  if (skew_class < 0 || skew_class >= partition_.class_count())
    throw std::invalid_argument("skew class index out of range");
  Mask region = basis | partition_.class_mask(skew_class);
  std::vector<Mask> circs = circuits_within(region);
  if (circs.empty())
    throw std::runtime_error("no fundamental circuit: basis plus skew class is independent");
  if (tight_ && circs.size() > 1)
    throw std::logic_error("tightness violation: several circuits inside basis plus skew class");
  return {circs.front(), circs.size() == 1};
}

FundamentalGraph Multimatroid::fundamental_graph(Mask basis) const {
  if (!tight_) throw std::invalid_argument("fundamental graph requires a tight multimatroid");
  if (!is_basis(basis)) throw std::invalid_argument("fundamental graph needs a stored basis");
  std::vector<int> vertices;
  for_each_bit(basis, [&](int e) { vertices.push_back(e); });
  std::set<std::pair<int, int>> related;  // e ~ f via the circuit of f's class
  for (int f : vertices) {
    Mask circuit = fundamental_circuit(basis, partition_.class_of(f)).circuit;
    for_each_bit(circuit & basis, [&](int e) {
      if (e != f) related.insert({e, f});
    });
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [e, f] : related) {
    if (!related.count({f, e}))
      throw std::logic_error("tightness violation: fundamental relation is not symmetric");
    if (e < f) edges.push_back({e, f});
  }
  return FundamentalGraph(std::move(vertices), std::move(edges));
}

Mask Multimatroid::scum_lift(Mask a, int e) const {
  if (!nondegenerate_)
    throw std::invalid_argument("scum lift requires a non-degenerate multimatroid");
  if (!partition_.is_subtransversal(a) || !has_bit(a, e))
    throw std::invalid_argument("scum lift needs a subtransversal containing e");
  if (rank_unchecked(bit(e)) != 1)
    throw std::invalid_argument("scum lift requires rank({e}) = 1");
  Mask lifted = scum_recurse(0, a, e);
  if (!has_bit(lifted, e) || rank_unchecked(lifted) != popcount(lifted) ||
      !(minor(a) == minor(lifted)))
    throw std::logic_error("scum lift postcondition failed");
  return lifted;
}

Mask Multimatroid::scum_recurse(Mask contracted, Mask a, int e) const {
  // Invariant: e has rank one in the minor by `contracted`.
  if (a == bit(e)) return a;
  int rc = rank_unchecked(contracted);

  // If {e,x} is a circuit of the current minor, x is singular in its minor by
  // e; swap x for a classmate that keeps e at rank one after recursing.
  for_each_bit(a & ~bit(e), [&](int x) {
    int rx = rank_unchecked(contracted | bit(x)) - rc;
    int rex = rank_unchecked(contracted | bit(e) | bit(x)) - rc;
    if (rx == 1 && rex == 1) {
      int cls = partition_.class_of(x);
      for (int y = partition_.class_begin(cls);
           y < partition_.class_begin(cls) + partition_.class_size(cls); ++y) {
        if (y == x) continue;
        if (rank_unchecked(contracted | bit(e) | bit(y)) - rc == 2) {
          a = (a & ~bit(x)) | bit(y);
          return;
        }
      }
      throw std::logic_error("scum lift: skew class without an independent partner");
    }
  });

  int x = lowest_bit(a & ~bit(e));
  Mask inner = scum_recurse(contracted | bit(x), a & ~bit(x), e);
  if (rank_unchecked(contracted | inner | bit(x)) - rc == popcount(inner) + 1)
    return inner | bit(x);
  if (rank_unchecked(contracted | bit(x)) != rc)
    throw std::logic_error("scum lift: dependent extension without a singular class");
  int cls = partition_.class_of(x);
  for (int y = partition_.class_begin(cls);
       y < partition_.class_begin(cls) + partition_.class_size(cls); ++y) {
    if (y == x) continue;
    if (rank_unchecked(contracted | bit(y)) - rc == 1) return inner | bit(y);
  }
  throw std::logic_error("scum lift: singular class without a rank-one partner");
}

Mask Multimatroid::circuit_in_separator(int e, Mask x) const {
  partition_.label(e);  // bounds check
  if (!tight_) throw std::invalid_argument("hypothesis failed: multimatroid is not tight");
  if (!is_connected())
    throw std::invalid_argument("hypothesis failed: multimatroid is not connected");
  if (x == 0) throw std::invalid_argument("hypothesis failed: separator side is empty");
  int ecls = partition_.class_of(e);
  if (x & partition_.class_mask(ecls))
    throw std::invalid_argument("hypothesis failed: separator meets the class of e");
  if (partition_.classes_meeting(x) != x)
    throw std::invalid_argument("hypothesis failed: separator is not a union of skew classes");
  Multimatroid qe = minor(bit(e));

  // Re-index x into the minor and check it really separates.
  Mask xm = qe.partition().mask_of(partition_.labels_of(x));
  if (xm == qe.partition().full_mask())
    throw std::invalid_argument("hypothesis failed: separator side is the whole minor");
  if (!separator_identity_holds(qe, xm))
    throw std::invalid_argument("hypothesis failed: X is not a separator of the minor by e");
  if (qe.is_connected())
    throw std::invalid_argument("hypothesis failed: minor by e is connected");

  Mask basis = 0;
  for (Mask b : bases_)
    if (has_bit(b, e)) {
      basis = b;
      break;
    }
  if (basis == 0) throw std::invalid_argument("hypothesis failed: e lies in no basis");
  FundamentalGraph g = fundamental_graph(basis);
  int attach = -1;
  for_each_bit(basis & x, [&](int f) {
    if (attach < 0 && g.has_edge(e, f)) attach = f;
  });
  if (attach < 0)
    throw std::logic_error("no basis element inside the separator is adjacent to e");
  Mask circuit = fundamental_circuit(basis, partition_.class_of(attach)).circuit;
  if (!has_bit(circuit, e) || (circuit & ~bit(e) & ~x) != 0)
    throw std::logic_error("fundamental circuit escapes the separator");
  return circuit;
}

namespace {

std::pair<std::set<std::vector<std::string>>, std::set<std::vector<std::string>>>
labeled_signature(const Multimatroid& q) {
  std::set<std::vector<std::string>> classes;
  for (auto cls : q.partition().class_labels()) {
    std::sort(cls.begin(), cls.end());
    classes.insert(cls);
  }
  std::set<std::vector<std::string>> bases;
  for (Mask b : q.bases()) {
    auto labels = q.partition().labels_of(b);
    std::sort(labels.begin(), labels.end());
    bases.insert(labels);
  }
  return {std::move(classes), std::move(bases)};
}

}  // namespace

bool Multimatroid::operator==(const Multimatroid& other) const {
  if (partition_ == other.partition_) return bases_ == other.bases_;
  return labeled_signature(*this) == labeled_signature(other);
}

Multimatroid direct_sum(const Multimatroid& q1, const Multimatroid& q2) {
  auto classes = q1.partition().class_labels();
  for (auto& cls : q2.partition().class_labels()) classes.push_back(cls);
  SkewPartition np(std::move(classes));  // rejects label collisions
  int shift = q1.partition().element_count();
  std::vector<Mask> bases;
  for (Mask b1 : q1.bases())
    for (Mask b2 : q2.bases()) bases.push_back(b1 | (b2 << shift));
  return Multimatroid(std::move(np), std::move(bases));
}

bool has_minor(const Multimatroid& q, const Multimatroid& target, Mask* witness) {
  std::set<std::vector<std::string>> target_classes;
  for (auto cls : target.partition().class_labels()) {
    std::sort(cls.begin(), cls.end());
    target_classes.insert(cls);
  }
  Mask missing = 0;
  int matched = 0;
  for (int c = 0; c < q.partition().class_count(); ++c) {
    auto cls = q.partition().class_labels()[c];
    std::sort(cls.begin(), cls.end());
    if (target_classes.count(cls)) ++matched;
    else missing |= bit(c);
  }
  if (matched != static_cast<int>(target_classes.size()))
    throw std::invalid_argument("target classes are not classes of the host multimatroid");
  bool found = false;
  q.partition().for_each_transversal_of(missing, [&](Mask s) {
    if (found) return;
    if (q.minor(s) == target) {
      found = true;
      if (witness) *witness = s;
    }
  });
  return found;
}

bool is_isomorphic(const Multimatroid& q1, const Multimatroid& q2) {
  int k = q1.partition().class_count();
  if (k != q2.partition().class_count()) return false;
  if (q1.bases().size() != q2.bases().size()) return false;
  std::vector<int> sizes1(k), sizes2(k);
  for (int c = 0; c < k; ++c) {
    sizes1[c] = q1.partition().class_size(c);
    sizes2[c] = q2.partition().class_size(c);
  }
  {
    auto s1 = sizes1, s2 = sizes2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  std::vector<Mask> target = q2.bases();

  std::vector<int> class_image(k, -1);
  std::vector<bool> used(k, false);
  std::vector<int> element_image(q1.partition().element_count(), -1);

  std::function<bool(int)> assign_elements;
  std::function<bool(int)> assign_classes = [&](int c) -> bool {
    if (c == k) return assign_elements(0);
    for (int d = 0; d < k; ++d) {
      if (used[d] || sizes2[d] != sizes1[c]) continue;
      used[d] = true;
      class_image[c] = d;
      if (assign_classes(c + 1)) return true;
      used[d] = false;
    }
    return false;
  };

  assign_elements = [&](int c) -> bool {
    if (c == k) {
      std::vector<Mask> mapped;
      mapped.reserve(q1.bases().size());
      for (Mask b : q1.bases()) {
        Mask m = 0;
        for_each_bit(b, [&](int e) { m |= bit(element_image[e]); });
        mapped.push_back(m);
      }
      std::sort(mapped.begin(), mapped.end());
      return mapped == target;
    }
    int b1 = q1.partition().class_begin(c);
    int sz = q1.partition().class_size(c);
    int b2 = q2.partition().class_begin(class_image[c]);
    std::vector<int> perm(sz);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int i = 0; i < sz; ++i) element_image[b1 + i] = b2 + perm[i];
      if (assign_elements(c + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  return assign_classes(0);
}

}  // namespace dmm
