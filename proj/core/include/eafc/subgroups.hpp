#pragma once

#include "eafc/artin_system.hpp"
#include "eafc/snf.hpp"
#include "eafc/word_problem.hpp"
#include "eafc/words.hpp"

#include <vector>

namespace eafc {

// Orientation data for the residue maps behind the squared subgroup G_0: for
// every edge e = {u,v} with half-label n_e = m_e/2, one endpoint plays the
// 'b' role and its exponent sum is reduced mod n_e. All residue maps kill
// every even Artin relator (relators are balanced per generator), so any
// orientation yields a homomorphism onto a finite abelian group.
struct G0Map {
  std::vector<int> b_role;  // per canonical edge index: the tracked endpoint
  // Default orientation: the endpoint with the lexicographically larger name.
  static G0Map defaults(const ArtinSystem& sys);
};

// Residue vector of w, one entry per canonical edge, each in [0, n_e)
// (label-2 edges have n_e = 1 and always report 0).
std::vector<int> g0_image(const ArtinSystem& sys, const G0Map& map, const Word& w);

bool in_g0(const ArtinSystem& sys, const G0Map& map, const Word& w);

// Order of the full residue lattice, prod of the half-labels over all edges.
// The joint residue image can be a proper sublattice (roles may coincide
// across edges); reidemeister_schreier_g0 reports the attained index.
Int g0_index(const ArtinSystem& sys);

// Coset enumeration of H ∩ G_0 inside H = <gens>: BFS over the finite
// abelian residue image of H starting from the identity residue, Schreier
// transversal of words in the given generators, Schreier generators
// t_q g (t_{q g})^-1 with tree edges skipped. transversal[0] is the
// identity; index = |residue image of H|, which divides g0_index when the
// joint image is the full lattice and always divides the lattice order.
struct SchreierData {
  Int index;
  std::vector<Word> transversal;
  std::vector<Word> generators;
};
SchreierData reidemeister_schreier_g0(const ArtinSystem& sys, const G0Map& map,
                                      const std::vector<Word>& gens,
                                      long long state_limit = 1 << 20);

// Convenience: H = the whole group (one single-letter generator per vertex).
SchreierData reidemeister_schreier_g0(const ArtinSystem& sys, const G0Map& map,
                                      long long state_limit = 1 << 20);

// Rank of the kernel of the total-exponent map G -> Z for tree systems: the
// kernel is free of rank sum_e (m_e - 1).
long long kernel_phi_rank(const ArtinSystem& sys);

// Largeness evidence. FreeAbelian: the group is Z^n (complete, all labels 2)
// and not large. FreeRetraction: two non-adjacent generators span a free
// retract of rank 2. DihedralRoute: complete graph with an edge of label
// >= 4; the listed generators span a finite-index subgroup (the residue
// kernel of that edge, index n, joined with the remaining generators) and
// the quotient presentation kills the central generator and the other
// factors, leaving a free group of rank n >= 2.
struct LargenessCertificate {
  enum Kind { FreeAbelian, FreeRetraction, DihedralRoute } kind;
  int rank = 0;   // FreeAbelian: rank of Z^n
  int u = -1, v = -1;  // FreeRetraction: the pair; DihedralRoute: the edge
  int n = 0;      // DihedralRoute: half-label = index of the subgroup
  std::vector<Word> subgroup_gens;  // DihedralRoute, hosted by the input system
  Presentation quotient;            // DihedralRoute: claimed free quotient
};

LargenessCertificate largeness_certificate(const ArtinSystem& sys);
bool verify_certificate(const ArtinSystem& sys, const LargenessCertificate& cert);

// Property check inside G_0: commuting conjugate elements coincide. Vacuous
// when x, y, z are not all in G_0 or the premises x y x^-1 = y and
// z x z^-1 = y fail; otherwise Confirmed iff x = y.
enum class EquationOutcome { Vacuous, Confirmed, Violation };
EquationOutcome check_equation_property(const WordProblemSolver& solver, const G0Map& map,
                                        const Word& x, const Word& y, const Word& z);

}  // namespace eafc
