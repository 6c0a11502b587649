#include "dmm/set_system.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace dmm {

std::optional<ExchangeFailure> find_exchange_failure(std::span<const Mask> feasible) {
  for (Mask f1 : feasible) {
    for (Mask f2 : feasible) {
      Mask diff = f1 ^ f2;
      bool failed = false;
      int bad_x = -1;
      for_each_bit(diff, [&](int x) {
        if (failed) return;
        bool ok = false;
        for_each_bit(diff, [&](int y) {
          if (ok) return;
          Mask candidate = f1 ^ (bit(x) | bit(y));
          if (std::binary_search(feasible.begin(), feasible.end(), candidate)) ok = true;
        });
        if (!ok) {
          failed = true;
          bad_x = x;
        }
      });
      if (failed) return ExchangeFailure{f1, f2, bad_x};
    }
  }
  return std::nullopt;
}

SetSystem::SetSystem(std::vector<std::string> elements, std::vector<Mask> feasible)
    : elements_(std::move(elements)), feasible_(std::move(feasible)) {
  if (elements_.size() > 16)
    throw std::invalid_argument("ground set larger than 16 elements");
  std::set<std::string> seen;
  for (const auto& label : elements_) {
    if (label.empty()) throw std::invalid_argument("empty element label");
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate element label: " + label);
  }
  if (feasible_.empty()) throw std::invalid_argument("feasible family is empty");
  std::sort(feasible_.begin(), feasible_.end());
  if (std::adjacent_find(feasible_.begin(), feasible_.end()) != feasible_.end())
    throw std::invalid_argument("duplicate feasible set");
  Mask full = full_mask();
  for (Mask f : feasible_)
    if (f & ~full) throw std::invalid_argument("feasible set refers to unknown elements");
}

const std::string& SetSystem::label(int e) const {
  if (e < 0 || e >= size()) throw std::invalid_argument("element index out of range");
  return elements_[e];
}

int SetSystem::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[i] == label) return i;
  throw std::invalid_argument("unknown element label: " + label);
}

Mask SetSystem::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    Mask b = bit(index_of(l));
    if (m & b) throw std::invalid_argument("repeated element label: " + l);
    m |= b;
  }
  return m;
}

std::vector<std::string> SetSystem::labels_of(Mask m) const {
  std::vector<std::string> out;
  for_each_bit(m, [&](int i) { out.push_back(elements_[i]); });
  return out;
}

bool SetSystem::feasible_contains(Mask f) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), f);
}

std::vector<Mask> twist_family(const std::vector<Mask>& family, Mask a) {
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask f : family) out.push_back(f ^ a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> loop_complement_one(const std::vector<Mask>& family, int e) {
  std::vector<Mask> extended;
  for (Mask f : family)
    if (!has_bit(f, e)) extended.push_back(f | bit(e));
  std::sort(extended.begin(), extended.end());
  std::vector<Mask> out;
  std::set_symmetric_difference(family.begin(), family.end(), extended.begin(),
                                extended.end(), std::back_inserter(out));
  return out;
}

SetSystem SetSystem::twisted(Mask a) const {
  return SetSystem(elements_, twist_family(feasible_, a));
}

SetSystem SetSystem::loop_complemented(Mask a) const {
  std::vector<Mask> fam = feasible_;
  for_each_bit(a, [&](int e) { fam = loop_complement_one(fam, e); });
  return SetSystem(elements_, std::move(fam));
}

SetSystem SetSystem::bar_star(Mask a) const {
  return loop_complemented(a).twisted(a).loop_complemented(a);
}

namespace {

// Drops bit e from a mask, shifting higher bits down by one.
Mask compact_bit(Mask m, int e) {
  Mask low = m & (bit(e) - 1);
  Mask high = (m >> (e + 1)) << e;
  return low | high;
}

std::vector<std::string> erase_label(std::vector<std::string> labels, int e) {
  labels.erase(labels.begin() + e);
  return labels;
}

}  // namespace

SetSystem SetSystem::minor_deleted(int e) const {
  label(e);  // bounds check
  std::vector<Mask> kept;
  for (Mask f : feasible_)
    if (!has_bit(f, e)) kept.push_back(compact_bit(f, e));
  if (kept.empty()) return minor_contracted(e);  // e is a coloop
  return SetSystem(erase_label(elements_, e), std::move(kept));
}

SetSystem SetSystem::minor_contracted(int e) const {
  label(e);
  std::vector<Mask> kept;
  for (Mask f : feasible_)
    if (has_bit(f, e)) kept.push_back(compact_bit(f, e));
  if (kept.empty()) return minor_deleted(e);  // e is a loop
  return SetSystem(erase_label(elements_, e), std::move(kept));
}

SetSystem SetSystem::minor_twist_contracted(int e) const {
  return loop_complemented(bit(e)).minor_contracted(e);
}

bool SetSystem::is_separator(Mask x) const {
  std::vector<Mask> left, right;
  left.reserve(feasible_.size());
  right.reserve(feasible_.size());
  for (Mask f : feasible_) {
    left.push_back(f & x);
    right.push_back(f & ~x);
  }
  auto dedupe = [](std::vector<Mask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(left);
  dedupe(right);
  if (left.size() * right.size() != feasible_.size()) return false;
  for (Mask p : left)
    for (Mask q : right)
      if (!feasible_contains(p | q)) return false;
  return true;
}

std::vector<Mask> SetSystem::separators() const {
  std::vector<Mask> out;
  for_each_subset(full_mask(), [&](Mask x) {
    if (is_separator(x)) out.push_back(x);
  });
  return out;
}

bool SetSystem::is_connected() const {
  Mask full = full_mask();
  bool disconnected = false;
  for_each_subset(full, [&](Mask x) {
    if (disconnected || x == 0 || x == full) return;
    if (is_separator(x)) disconnected = true;
  });
  return !disconnected;
}

bool SetSystem::all_sets_same_parity() const {
  int parity = popcount(feasible_.front()) & 1;
  for (Mask f : feasible_)
    if ((popcount(f) & 1) != parity) return false;
  return true;
}

bool SetSystem::all_sets_same_size() const {
  int k = popcount(feasible_.front());
  for (Mask f : feasible_)
    if (popcount(f) != k) return false;
  return true;
}

bool SetSystem::operator==(const SetSystem& other) const {
  if (elements_ == other.elements_) return feasible_ == other.feasible_;
  if (elements_.size() != other.elements_.size()) return false;
  // Same label set in a different order: remap other's masks into our indexing.
  std::unordered_map<std::string, int> pos;
  for (int i = 0; i < size(); ++i) pos[elements_[i]] = i;
  std::vector<int> remap(other.size());
  for (int j = 0; j < other.size(); ++j) {
    auto it = pos.find(other.elements_[j]);
    if (it == pos.end()) return false;
    remap[j] = it->second;
  }
  std::vector<Mask> mapped;
  mapped.reserve(other.feasible_.size());
  for (Mask f : other.feasible_) {
    Mask g = 0;
    for_each_bit(f, [&](int j) { g |= bit(remap[j]); });
    mapped.push_back(g);
  }
  std::sort(mapped.begin(), mapped.end());
  return feasible_ == mapped;
}

}  // namespace dmm
