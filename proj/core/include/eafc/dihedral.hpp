#pragma once

#include "eafc/words.hpp"

#include <memory>
#include <string>
#include <vector>

namespace eafc {

// Computations in a single even dihedral Artin group <a,b | (ab)^n = (ba)^n>
// (edge label m = 2n). The context owns a two-vertex host system so that all
// inputs/outputs are ordinary words over {a,b}.
class DihedralContext {
 public:
  static DihedralContext make(int n, std::string a = "a", std::string b = "b");

  int n() const { return n_; }
  const ArtinSystem& sys() const { return *sys_; }
  int a() const { return 0; }  // generator indices in sys()
  int b() const { return 1; }

 private:
  DihedralContext(int n, std::shared_ptr<const ArtinSystem> sys)
      : n_(n), sys_(std::move(sys)) {}
  int n_;
  std::shared_ptr<const ArtinSystem> sys_;  // shared so contexts stay copyable
};

// Substitution a -> a, b -> a^-1 x (i.e. x = ab) into the presentation
// <a, x | x^n a = a x^n>; the result is freely reduced over {a, x}.
enum class AxGen { A, X };
struct AxSyllable {
  AxGen gen;
  Int exp;
  bool operator==(const AxSyllable&) const = default;
};
using AxWord = std::vector<AxSyllable>;
AxWord to_ax(const DihedralContext& ctx, const Word& w);

// Image in the central quotient Z * C_n (kill the center <x^n>), as the
// free-product normal form: alternating a-syllables (nonzero integer) and
// x-syllables (class in 1..n-1), plus the x-exponent sum over Z. The element
// is trivial in the dihedral group iff the normal form is empty AND the
// x-exponent sum is zero (the word then lies in <x^n> with power 0).
struct CentralSyllable {
  bool is_x;
  Int a_exp;  // when !is_x
  int x_cls;  // when is_x, in 1..n-1
  bool operator==(const CentralSyllable&) const = default;
};
struct CentralCoords {
  std::vector<CentralSyllable> syllables;
  Int x_exponent_sum;
  bool trivial() const { return syllables.empty() && x_exponent_sum == 0; }
};
CentralCoords central_coords(const DihedralContext& ctx, const AxWord& w);
CentralCoords central_coords(const DihedralContext& ctx, const Word& w);  // to_ax first

bool is_trivial_dihedral(const DihedralContext& ctx, const Word& w);

// Independent second route: split off the fibration over Z given by a -> 0,
// t = b -> 1. The kernel is free with basis a_0..a_{n-1} (a_i = b^i a b^-i);
// out-of-range indices are eliminated with
//   a_{i+n} = (a_{i+1}..a_{i+n-1})^-1 a_i (a_{i+1}..a_{i+n-1})
// and its inverse-direction form. w = kernel_word * b^t_exponent, and w is
// trivial iff both parts vanish.
struct SemidirectCoords {
  std::vector<std::pair<int, Int>> kernel;  // (basis index, exponent), freely reduced
  Int t_exponent;
  bool trivial() const { return kernel.empty() && t_exponent == 0; }
};
SemidirectCoords semidirect_coords(const DihedralContext& ctx, const Word& w);

// Image in the C_n quotient of Z * C_n: exponent sum of b mod n.
int cn_quotient_image(const DihedralContext& ctx, const Word& w);

// Free basis {(ab)^i a (ab)^-i : 0 <= i < n} of the kernel of a -> 0, b -> 1
// (Schreier transversal {(ab)^i}), and the finite-index generating set
// {(ab)^n} + basis used for largeness certificates.
std::vector<Word> kernel_basis(const DihedralContext& ctx);
std::vector<Word> appropriate_gens(const DihedralContext& ctx);

}  // namespace eafc
