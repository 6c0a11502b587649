#include "dmm/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dmm {

namespace {

// Boundary pieces are indexed on "flag points": each half-edge h has the two
// endpoints of its attachment segment, flag(h,0) hit first and flag(h,1) hit
// last when walking the vertex boundary in rotation order.
inline int flag(int half, int side) { return 2 * half + side; }

struct Piece {
  int p = -1, q = -1;      // flag endpoints
  int kind = 0;            // 0 arc, 1 segment, 2 flank
  int ref = -1;            // segment: half id; flank: edge id
  int flank = 0;           // 0 or 1 for flank pieces
};

// The two flanks of edge e (halves h, h2). Flank 0 touches flag(h,0), flank 1
// touches flag(h,1); the far endpoint depends on the twist.
Piece flank_piece(int e, bool twisted, int which) {
  int h = 2 * e, h2 = 2 * e + 1;
  Piece piece;
  piece.kind = 2;
  piece.ref = e;
  piece.flank = which;
  if (which == 0) {
    piece.p = flag(h, 0);
    piece.q = flag(h2, twisted ? 0 : 1);
  } else {
    piece.p = flag(h, 1);
    piece.q = flag(h2, twisted ? 1 : 0);
  }
  return piece;
}

// Direction of a flank traversal consistent with one orientation of the edge
// rectangle's boundary: the forward sense runs flank 1 from flag(h,1) out and
// flank 0 back into flag(h,0).
bool flank_traversed_forward(const Piece& piece, bool twisted, int from) {
  int e = piece.ref;
  int h = 2 * e, h2 = 2 * e + 1;
  if (piece.flank == 1) return from == flag(h, 1);
  return from == flag(h2, twisted ? 0 : 1);
}

}  // namespace

RibbonGraph::RibbonGraph(std::vector<std::string> edge_labels, std::vector<bool> twisted,
                         std::vector<std::vector<int>> rotations)
    : edge_labels_(std::move(edge_labels)),
      twisted_(std::move(twisted)),
      rotations_(std::move(rotations)) {
  int m = edge_count();
  if (m > 8) throw std::invalid_argument("ribbon graph larger than 8 edges");
  if (vertex_count() > 8) throw std::invalid_argument("ribbon graph larger than 8 vertices");
  if (static_cast<int>(twisted_.size()) != m)
    throw std::invalid_argument("twist flags do not match the edge list");
  std::set<std::string> seen;
  for (const auto& l : edge_labels_) {
    if (l.empty()) throw std::invalid_argument("empty edge label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate edge label: " + l);
  }
  std::vector<int> uses(2 * m, 0);
  half_vertex_.assign(2 * m, -1);
  for (int v = 0; v < vertex_count(); ++v) {
    for (int h : rotations_[v]) {
      if (h < 0 || h >= 2 * m) throw std::invalid_argument("rotation names an unknown half-edge");
      ++uses[h];
      half_vertex_[h] = v;
    }
  }
  for (int h = 0; h < 2 * m; ++h)
    if (uses[h] != 1)
      throw std::invalid_argument("every half-edge must appear exactly once in the rotations");
  // Store each rotation starting at its smallest half-edge id.
  for (auto& rot : rotations_) {
    if (rot.empty()) continue;
    auto it = std::min_element(rot.begin(), rot.end());
    std::rotate(rot.begin(), it, rot.end());
  }
}

int RibbonGraph::edge_index(const std::string& label) const {
  for (int e = 0; e < edge_count(); ++e)
    if (edge_labels_[e] == label) return e;
  throw std::invalid_argument("unknown edge label: " + label);
}

Mask RibbonGraph::edge_mask(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    Mask b = bit(edge_index(l));
    if (m & b) throw std::invalid_argument("repeated edge label: " + l);
    m |= b;
  }
  return m;
}

int RibbonGraph::components(Mask edges) const {
  if (edges & ~full_edge_mask()) throw std::invalid_argument("unknown edge in subset");
  std::vector<int> parent(vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for_each_bit(edges, [&](int e) {
    parent[find(half_vertex_[2 * e])] = find(half_vertex_[2 * e + 1]);
  });
  int roots = 0;
  for (int v = 0; v < vertex_count(); ++v)
    if (find(v) == v) ++roots;
  return roots;
}

int RibbonGraph::boundary_components(Mask edges) const {
  if (edges & ~full_edge_mask()) throw std::invalid_argument("unknown edge in subset");
  int m = edge_count();
  std::vector<std::pair<int, int>> links;
  int count = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    std::vector<int> present;
    for (int h : rotations_[v])
      if (has_bit(edges, h / 2)) present.push_back(h);
    if (present.empty()) {
      ++count;  // bare disc
      continue;
    }
    int k = static_cast<int>(present.size());
    for (int i = 0; i < k; ++i)
      links.push_back({flag(present[i], 1), flag(present[(i + 1) % k], 0)});
  }
  for_each_bit(edges, [&](int e) {
    for (int which : {0, 1}) {
      Piece piece = flank_piece(e, twisted_[e], which);
      links.push_back({piece.p, piece.q});
    }
  });
  // Each participating flag point meets exactly two links; the links close up
  // into the boundary curves.
  std::vector<std::vector<int>> at(4 * m);
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    at[links[i].first].push_back(i);
    at[links[i].second].push_back(i);
  }
  std::vector<bool> visited(links.size(), false);
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    if (visited[i]) continue;
    ++count;
    int cur = i, point = links[i].second;
    visited[i] = true;
    while (true) {
      const auto& pair = at[point];
      int next = pair[0] == cur ? pair[1] : pair[0];
      if (visited[next]) break;
      visited[next] = true;
      point = links[next].first == point ? links[next].second : links[next].first;
      cur = next;
    }
  }
  return count;
}

DeltaMatroid RibbonGraph::delta_matroid() const {
  int target = components();
  std::vector<Mask> feasible;
  for_each_subset(full_edge_mask(), [&](Mask sub) {
    if (boundary_components(sub) == target) feasible.push_back(sub);
  });
  return DeltaMatroid(edge_labels_, std::move(feasible));
}

RibbonGraph RibbonGraph::edge_deleted(int e) const {
  edge_index(edge_labels_[e]);  // bounds check via label round-trip
  std::vector<std::string> labels = edge_labels_;
  labels.erase(labels.begin() + e);
  std::vector<bool> twists = twisted_;
  twists.erase(twists.begin() + e);
  std::vector<std::vector<int>> rots(vertex_count());
  for (int v = 0; v < vertex_count(); ++v)
    for (int h : rotations_[v]) {
      if (h / 2 == e) continue;
      rots[v].push_back(h >= 2 * e + 2 ? h - 2 : h);
    }
  return RibbonGraph(std::move(labels), std::move(twists), std::move(rots));
}

RibbonGraph RibbonGraph::half_twisted(Mask a) const {
  if (a & ~full_edge_mask()) throw std::invalid_argument("unknown edge in subset");
  std::vector<bool> twists = twisted_;
  for_each_bit(a, [&](int e) { twists[e] = !twists[e]; });
  return RibbonGraph(edge_labels_, std::move(twists), rotations_);
}

RibbonGraph RibbonGraph::partial_dual(Mask a) const {
  if (a & ~full_edge_mask()) throw std::invalid_argument("unknown edge in subset");
  if (a == 0) return *this;
  int m = edge_count();

  // Boundary pieces of the spanning ribbon subgraph (V, A), keeping the
  // attachment segments of the other edges as recorded pass-throughs. The
  // boundary cycles become the new vertex discs; flanks of A-edges become
  // their new attachment segments.
  std::vector<Piece> pieces;
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& rot = rotations_[v];
    int k = static_cast<int>(rot.size());
    for (int i = 0; i < k; ++i)
      pieces.push_back({flag(rot[i], 1), flag(rot[(i + 1) % k], 0), 0, -1, 0});
  }
  for (int e = 0; e < m; ++e) {
    if (has_bit(a, e)) {
      pieces.push_back(flank_piece(e, twisted_[e], 0));
      pieces.push_back(flank_piece(e, twisted_[e], 1));
    } else {
      for (int h : {2 * e, 2 * e + 1}) pieces.push_back({flag(h, 0), flag(h, 1), 1, h, 0});
    }
  }
  std::vector<std::vector<int>> at(4 * m);
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    at[pieces[i].p].push_back(i);
    at[pieces[i].q].push_back(i);
  }

  struct Record {
    int piece = -1;
    int from = -1;  // flag the traversal entered from
  };
  std::vector<std::vector<Record>> cycles;
  std::vector<bool> visited(pieces.size(), false);
  for (int start_flag = 0; start_flag < 4 * m; ++start_flag) {
    if (at[start_flag].empty()) continue;
    // Prefer leaving through a segment or flank so that the identity dual
    // reproduces the stored rotations.
    int first = at[start_flag][0];
    if (pieces[first].kind == 0 && at[start_flag].size() > 1) first = at[start_flag][1];
    if (visited[first]) continue;
    cycles.emplace_back();
    int cur = first, from = start_flag;
    while (!visited[cur]) {
      visited[cur] = true;
      if (pieces[cur].kind != 0) cycles.back().push_back({cur, from});
      int to = pieces[cur].p == from ? pieces[cur].q : pieces[cur].p;
      const auto& pair = at[to];
      int next = pair[0] == cur ? pair[1] : pair[0];
      cur = next;
      from = to;
    }
  }

  // Isolated discs have no boundary pieces but stay vertices of the dual.
  for (int v = 0; v < vertex_count(); ++v)
    if (rotations_[v].empty()) cycles.emplace_back();

  // Slots for the new halves: non-dual edges keep one slot per segment
  // record, dual edges one per flank record.
  std::vector<std::vector<int>> slot_of_edge(m);            // record ids per edge
  std::vector<std::vector<int>> rots(cycles.size());
  std::vector<std::pair<int, int>> slot_pos;                // (cycle, position)
  std::vector<const Record*> slot_record;
  for (int cyc = 0; cyc < static_cast<int>(cycles.size()); ++cyc) {
    for (const Record& rec : cycles[cyc]) {
      const Piece& piece = pieces[rec.piece];
      int edge = piece.kind == 1 ? piece.ref / 2 : piece.ref;
      int slot = static_cast<int>(slot_record.size());
      slot_record.push_back(&rec);
      slot_pos.push_back({cyc, static_cast<int>(rots[cyc].size())});
      rots[cyc].push_back(slot);  // placeholder, rewritten below
      slot_of_edge[edge].push_back(slot);
    }
  }

  std::vector<bool> twists(m, false);
  std::vector<int> half_of_slot(slot_record.size(), -1);
  for (int e = 0; e < m; ++e) {
    const auto& slots = slot_of_edge[e];
    if (slots.size() != 2) throw std::logic_error("edge lost a boundary slot in the dual walk");
    half_of_slot[slots[0]] = 2 * e;
    half_of_slot[slots[1]] = 2 * e + 1;
    const Record& r0 = *slot_record[slots[0]];
    const Record& r1 = *slot_record[slots[1]];
    if (!has_bit(a, e)) {
      // Pass-through segments: reversed traversals flip the twist parity.
      bool rev0 = r0.from == flag(pieces[r0.piece].ref, 1);
      bool rev1 = r1.from == flag(pieces[r1.piece].ref, 1);
      twists[e] = twisted_[e] ^ rev0 ^ rev1;
    } else {
      bool fwd0 = flank_traversed_forward(pieces[r0.piece], twisted_[e], r0.from);
      bool fwd1 = flank_traversed_forward(pieces[r1.piece], twisted_[e], r1.from);
      twists[e] = fwd0 != fwd1;
    }
  }
  for (auto& rot : rots)
    for (int& entry : rot) entry = half_of_slot[entry];
  return RibbonGraph(edge_labels_, std::move(twists), std::move(rots));
}

RibbonGraph RibbonGraph::contracted(int e) const {
  return partial_dual(bit(e)).edge_deleted(e);
}

RibbonGraph RibbonGraph::twist_contracted(int e) const {
  return half_twisted(bit(e)).contracted(e);
}

bool RibbonGraph::orientable() const {
  // Orientation signs on the vertex discs; a twisted edge wants opposite
  // signs, an untwisted one equal signs. Twisted loops are immediately
  // non-orientable.
  std::vector<int> color(vertex_count(), -1);
  for (int e = 0; e < edge_count(); ++e)
    if (twisted_[e] && half_vertex_[2 * e] == half_vertex_[2 * e + 1]) return false;
  for (int v = 0; v < vertex_count(); ++v) {
    if (color[v] >= 0) continue;
    color[v] = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = 0; e < edge_count(); ++e) {
        int x = half_vertex_[2 * e], y = half_vertex_[2 * e + 1];
        if (x != u && y != u) continue;
        int w = x == u ? y : x;
        if (w == u) continue;
        int want = color[u] ^ (twisted_[e] ? 1 : 0);
        if (color[w] < 0) {
          color[w] = want;
          stack.push_back(w);
        } else if (color[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool RibbonGraph::two_connected() const {
  return connected() && delta_matroid().is_connected();
}

std::string RibbonGraph::canonical_key() const {
  int v = vertex_count();
  std::string best;
  for (Mask flips = 0; flips < (Mask{1} << v); ++flips) {
    std::vector<bool> twists(edge_count());
    for (int e = 0; e < edge_count(); ++e)
      twists[e] = twisted_[e] ^ has_bit(flips, half_vertex_[2 * e]) ^
                  has_bit(flips, half_vertex_[2 * e + 1]);
    std::vector<std::string> vertex_keys;
    for (int u = 0; u < v; ++u) {
      std::vector<int> tokens;
      for (int h : rotations_[u]) tokens.push_back(h / 2);
      if (has_bit(flips, u)) std::reverse(tokens.begin(), tokens.end());
      // least cyclic rotation
      std::vector<int> bestrot = tokens;
      int k = static_cast<int>(tokens.size());
      for (int s = 0; s < k; ++s) {
        std::rotate(tokens.begin(), tokens.begin() + 1, tokens.end());
        if (tokens < bestrot) bestrot = tokens;
      }
      std::ostringstream os;
      for (int t : bestrot) os << t << ',';
      vertex_keys.push_back(os.str());
    }
    std::sort(vertex_keys.begin(), vertex_keys.end());
    std::ostringstream key;
    for (const auto& l : edge_labels_) key << l << ';';
    key << '|';
    for (bool t : twists) key << (t ? '1' : '0');
    key << '|';
    for (const auto& s : vertex_keys) key << s << '/';
    std::string candidate = key.str();
    if (best.empty() || candidate < best) best = candidate;
  }
  if (best.empty()) {
    std::ostringstream key;
    for (const auto& l : edge_labels_) key << l << ';';
    best = key.str();
  }
  return best;
}

}  // namespace dmm
