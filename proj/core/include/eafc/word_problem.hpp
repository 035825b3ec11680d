#pragma once

#include "eafc/artin_system.hpp"
#include "eafc/decompose.hpp"
#include "eafc/words.hpp"

#include <memory>
#include <vector>

namespace eafc {

// One piece of the alternating decomposition of a word with respect to the
// amalgam over C = link(apex): A = <star(apex)>, B = <V - apex>. Letters
// equal to the apex go to the star side, letters in C attach to the
// preceding piece (to the following one at the start), everything else to B.
struct SyllablePiece {
  bool side_star;
  std::vector<Syllable> syllables;
  bool operator==(const SyllablePiece&) const = default;
};

std::vector<SyllablePiece> amalgam_syllable_decomposition(const ArtinSystem& sys, int apex,
                                                          const Word& w);

// Decision procedures driven by the decomposition tree. Node analyses are
// memoized per vertex subset; the cache is shared across copies of the
// solver and safe for concurrent queries.
class WordProblemSolver {
 public:
  explicit WordProblemSolver(const ArtinSystem& sys, DecomposeOptions opts = {});

  const ArtinSystem& system() const;

  bool is_trivial(const Word& w) const;
  bool are_equal(const Word& a, const Word& b) const;
  bool in_standard_parabolic(const VertexSubset& S, const Word& w) const;
  // Membership in the conjugate subgroup c <S> c^-1.
  bool in_parabolic(const VertexSubset& S, const Word& conjugator, const Word& w) const;
  // Test g s g^-1 = s for every generator s in S (element-wise fixing of the
  // standard generators of <S>).
  bool in_quasi_centralizer(const VertexSubset& S, const Word& g) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// One-shot conveniences (construct a transient solver).
bool is_trivial(const ArtinSystem& sys, const Word& w);
bool are_equal_words(const ArtinSystem& sys, const Word& a, const Word& b);

// Root closure scan: for n = 1..max_n report whether w^n lies in the
// parabolic c<S>c^-1 and whether w itself does; a row with the power inside
// but the base outside is a closure violation.
struct RootClosureRow {
  int n;
  bool power_in;
  bool base_in;
};
struct RootClosureReport {
  std::vector<RootClosureRow> rows;
  bool violation = false;
};
RootClosureReport check_root_closure(const WordProblemSolver& solver, const VertexSubset& S,
                                     const Word& conjugator, const Word& w, int max_n);

}  // namespace eafc
