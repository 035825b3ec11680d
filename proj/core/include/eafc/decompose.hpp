#pragma once

#include "eafc/artin_system.hpp"
#include "eafc/words.hpp"

#include <optional>
#include <vector>

namespace eafc {

// One factor of a complete system: an edge with label > 2 (even dihedral on
// n = m/2) or a lone generator (infinite cyclic).
struct CompleteFactor {
  enum Kind { Dihedral, Cyclic } kind;
  int u = -1, v = -1;  // Dihedral: u < v; Cyclic: u only
  int n = 0;           // Dihedral: half-label
  bool operator==(const CompleteFactor&) const = default;
};

enum class NodeKind { FreeProduct, DirectProduct, CompleteBase, Amalgam };

// Deterministic decomposition tree. Case order per node: disconnected ->
// FreeProduct over components; nontrivial direct-factor partition ->
// DirectProduct; complete -> CompleteBase; otherwise Amalgam along the star
// of a vertex with non-full link minimizing |star| (ties to canonical order),
// amalgamated over its link: children are [star side, everything-but-v].
struct DecompositionNode {
  NodeKind kind;
  VertexSubset vertices;
  std::vector<DecompositionNode> children;
  int apex = -1;     // Amalgam: splitting vertex
  VertexSubset link;  // Amalgam: edge group
  std::vector<CompleteFactor> factors;  // CompleteBase
};

struct DecomposeOptions {
  // Force this vertex as the amalgam apex wherever it is a valid choice
  // (present with non-full link); used for split-independence checks.
  std::optional<std::string> split_vertex;
};

DecompositionNode decompose(const ArtinSystem& sys, const DecomposeOptions& opts = {});

// Greedy factor list of a complete system: label>2 edges in canonical order
// become dihedral factors, remaining vertices cyclic ones.
std::vector<CompleteFactor> complete_factorization(const ArtinSystem& sys);

// Standard Artin presentation: all generators, one relator per edge in
// canonical edge order.
Presentation emit_presentation(const ArtinSystem& sys);

// Graph-of-groups skeleton: vertices/edges carry standard parabolic labels
// (subsets of the ambient system); loops allowed in the general type.
struct GraphOfGroups {
  struct Vertex {
    VertexSubset group;
  };
  struct GEdge {
    int a, b;
    VertexSubset group;
  };
  std::vector<Vertex> vertices;
  std::vector<GEdge> edges;
};

// Amalgam -> two vertices, one edge; FreeProduct -> star over trivial edge
// groups; CompleteBase -> single vertex. DirectProduct has no splitting.
GraphOfGroups to_graph_of_groups(const ArtinSystem& sys, const DecompositionNode& node);

// BFS maximal subtree from the first vertex (edge indices); needs a
// connected graph. Loops are never tree edges.
std::vector<int> maximal_subtree(const GraphOfGroups& gog);

// Betti number of the underlying graph = rank of the free part coming from
// edges outside the maximal subtree.
int underlying_free_rank(const GraphOfGroups& gog);

}  // namespace eafc
