#pragma once

#include "eafc/base.hpp"

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace eafc {

class ArtinSystem;

// Sorted set of vertex indices of some ArtinSystem.
struct VertexSubset {
  std::vector<int> idx;  // strictly increasing

  VertexSubset() = default;
  explicit VertexSubset(std::vector<int> indices);
  static VertexSubset of(const ArtinSystem& sys, const std::vector<std::string>& names);
  static VertexSubset full(const ArtinSystem& sys);

  bool contains(int v) const;
  int size() const { return static_cast<int>(idx.size()); }
  bool empty() const { return idx.empty(); }
  bool operator==(const VertexSubset&) const = default;

  VertexSubset intersect(const VertexSubset& o) const;
  VertexSubset unite(const VertexSubset& o) const;
  VertexSubset without(int v) const;
  bool subset_of(const VertexSubset& o) const;

  std::vector<std::string> names(const ArtinSystem& sys) const;
};

struct Edge {
  int u, v;  // u < v
  int m;     // even label >= 2
  bool operator==(const Edge&) const = default;
};

// A finitely generated even Artin system: simplicial labeled graph with even
// labels >= 2. Construction validates the structural invariants (names,
// simplicity, evenness); the FC-type triangle condition is checked separately
// by validate_eafc so that violations can be reported with a witness.
class ArtinSystem {
 public:
  ArtinSystem(std::vector<std::string> vertices,
              std::vector<std::tuple<std::string, std::string, int>> edges);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(int v) const { return names_.at(v); }
  int index_of(const std::string& name) const;  // throws input_error if unknown
  std::optional<int> find_vertex(const std::string& name) const;

  const std::vector<Edge>& edges() const { return edges_; }  // canonical (u,v) order
  bool adjacent(int u, int v) const;
  int label(int u, int v) const;  // throws input_error if not adjacent
  std::optional<int> label_opt(int u, int v) const;
  int edge_index(int u, int v) const;  // position in edges(), throws if absent

  // Induced subsystem on S. Vertices keep their names; indices are compacted
  // in the order of S (which is the ambient canonical order).
  ArtinSystem induced(const VertexSubset& S) const;

  bool operator==(const ArtinSystem&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<int> labels_;  // n*n matrix, 0 = non-adjacent
};

// FC-type check: every triangle must carry at least two label-2 edges.
struct EafcCheck {
  bool ok = true;
  std::array<int, 3> triangle{-1, -1, -1};  // witness when !ok
};
EafcCheck validate_eafc(const ArtinSystem& sys);

// Subgraph with the same vertices and only the label-2 edges.
ArtinSystem gamma_le2(const ArtinSystem& sys);

// Chordality via Lex-BFS + perfect-elimination verification; on failure the
// witness is a chordless cycle of length >= 4 (vertices in cycle order).
struct ChordalityResult {
  bool chordal = true;
  std::vector<int> witness;
};
ChordalityResult is_chordal(const ArtinSystem& sys);

// Coherence of the group: both the graph and its label-2 subgraph must be
// chordal. Requires an FC-type system (throws input_error otherwise).
struct CoherenceResult {
  bool coherent = true;
  bool witness_in_le2 = false;  // false: witness cycle lives in the full graph
  std::vector<int> witness;
};
CoherenceResult is_coherent(const ArtinSystem& sys);

VertexSubset link(const ArtinSystem& sys, int v);
VertexSubset star(const ArtinSystem& sys, int v);  // link + v

// Finest partition of the vertices into direct factors: connected components
// of the auxiliary graph joining pairs that do NOT commute outright (either
// non-adjacent or joined by a label > 2). Parts are canonically ordered.
std::vector<VertexSubset> direct_factor_partition(const ArtinSystem& sys);

bool is_complete(const ArtinSystem& sys);
bool is_connected(const ArtinSystem& sys);
std::vector<VertexSubset> connected_components(const ArtinSystem& sys);

// Whole-group classification: free abelian iff complete with all labels 2;
// everything else in this class is large (certificates live in subgroups.hpp).
struct GroupClass {
  enum Kind { FreeAbelian, Large } kind;
  int rank = 0;  // FreeAbelian only
};
GroupClass classify_group(const ArtinSystem& sys);

}  // namespace eafc
