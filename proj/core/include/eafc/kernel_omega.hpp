#pragma once

#include "eafc/artin_system.hpp"
#include "eafc/words.hpp"

namespace eafc {

// Kernel presentation for a cone system: when the apex x is adjacent to
// every other vertex, the kernel of the height map (x -> 1, all other
// generators -> 0) is again an even FC-type Artin group. Its defining graph
// Omega has a vertex u__j for every neighbour u of x and shift
// 0 <= j < m(x,u)/2, and an edge {u__j, v__k} of label m(u,v) for every
// ambient edge {u,v} away from the apex. The embedding sends
// u__j to x^j u x^-j.
struct OmegaSystem {
  ArtinSystem omega;
  const ArtinSystem* gamma = nullptr;
  int apex = -1;
  struct VertexInfo {
    int orig;   // ambient vertex u
    int shift;  // j
  };
  std::vector<VertexInfo> info;  // per omega vertex index
};

OmegaSystem build_omega(const ArtinSystem& sys, int apex);

// Image of a word over Omega under u__j -> x^j u x^-j, freely reduced.
Word embed(const OmegaSystem& os, const Word& w);

}  // namespace eafc
