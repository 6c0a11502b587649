#pragma once

#include <string>
#include <vector>

#include "dmm/delta_matroid.hpp"
#include "dmm/mask.hpp"

namespace dmm {

/// Ribbon graph as a signed rotation system: a cyclic order of half-edges at
/// each vertex plus a twist sign per edge. Edge e owns half-edges 2e and
/// 2e+1. Capped at 8 edges and 8 vertices.
class RibbonGraph {
 public:
  RibbonGraph(std::vector<std::string> edge_labels, std::vector<bool> twisted,
              std::vector<std::vector<int>> rotations);

  int edge_count() const { return static_cast<int>(edge_labels_.size()); }
  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }
  bool edge_twisted(int e) const { return twisted_[e]; }
  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  int edge_index(const std::string& label) const;
  Mask edge_mask(const std::vector<std::string>& labels) const;
  int vertex_of_half(int h) const { return half_vertex_[h]; }
  Mask full_edge_mask() const {
    return edge_count() == 0 ? 0 : (bit(edge_count() - 1) << 1) - 1;
  }

  // Connected components of the spanning subgraph (V, E'); isolated vertices
  // count.
  int components(Mask edges) const;
  int components() const { return components(full_edge_mask()); }
  bool connected() const { return components() <= 1; }

  // Boundary components of the spanning sub-ribbon-graph (V, E'), traced on
  // the signed rotation system.
  int boundary_components(Mask edges) const;

  // Feasible sets are the quasi-trees: edge subsets whose spanning subgraph
  // has as many boundary components as the graph has connected components.
  DeltaMatroid delta_matroid() const;

  RibbonGraph edge_deleted(int e) const;
  RibbonGraph half_twisted(Mask a) const;
  RibbonGraph partial_dual(Mask a) const;
  // Contraction via the partial dual: G/e = (G*e) \ e.
  RibbonGraph contracted(int e) const;
  // Half-twist at e followed by contraction of e.
  RibbonGraph twist_contracted(int e) const;

  bool orientable() const;
  // Connected with a connected quasi-tree delta-matroid.
  bool two_connected() const;

  // Invariant under vertex order, per-vertex orientation reversal, and
  // swapping the two halves of an edge.
  std::string canonical_key() const;
  bool operator==(const RibbonGraph& other) const {
    return canonical_key() == other.canonical_key();
  }

 private:
  std::vector<std::string> edge_labels_;
  std::vector<bool> twisted_;
  std::vector<std::vector<int>> rotations_;
  std::vector<int> half_vertex_;
};

}  // namespace dmm
