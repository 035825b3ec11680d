#pragma once

// Shared single-step case analysis of an induced subsystem, used by the
// decomposition tree builder and by the word-problem solver. All vertex
// indices refer to the ambient (root) system.

#include "eafc/artin_system.hpp"
#include "eafc/decompose.hpp"

#include <vector>

namespace eafc::detail {

struct CaseInfo {
  NodeKind kind;
  // FreeProduct: connected components; DirectProduct: direct-factor parts.
  std::vector<VertexSubset> parts;
  // CompleteBase factors.
  std::vector<CompleteFactor> factors;
  // Amalgam data: delta = S minus apex, star = link + apex.
  int apex = -1;
  VertexSubset star, link, delta;
};

// Connected components of the subgraph induced on S, each sorted, ordered by
// smallest member.
std::vector<VertexSubset> components_within(const ArtinSystem& sys, const VertexSubset& S);

// Finest direct-factor partition of the subsystem induced on S.
std::vector<VertexSubset> direct_factor_partition_within(const ArtinSystem& sys,
                                                         const VertexSubset& S);

bool complete_within(const ArtinSystem& sys, const VertexSubset& S);

VertexSubset link_within(const ArtinSystem& sys, const VertexSubset& S, int v);

std::vector<CompleteFactor> complete_factorization_within(const ArtinSystem& sys,
                                                          const VertexSubset& S);

CaseInfo analyze_subsystem(const ArtinSystem& sys, const VertexSubset& S,
                           const DecomposeOptions& opts);

}  // namespace eafc::detail
