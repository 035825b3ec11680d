#pragma once

#include "eafc/base.hpp"
#include "eafc/words.hpp"

#include <vector>

namespace eafc {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static IntMatrix identity(int n);
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix mul(const IntMatrix& A, const IntMatrix& B);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., all
// diagonal entries non-negative.
struct SmithNormalForm {
  IntMatrix U, D, V;
};

SmithNormalForm smith_normal_form(const IntMatrix& A);

// The nonzero diagonal entries of D, in divisibility order.
std::vector<Int> elementary_divisors(const IntMatrix& A);

// Abelianization of a finite presentation: free rank plus the torsion
// divisors (each > 1, forming a divisibility chain).
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const AbelianInvariants&) const = default;
};

// Rows of the relation matrix are relator exponent sums per generator.
IntMatrix relation_matrix(const Presentation& p);

AbelianInvariants abelianization_invariants(const Presentation& p);

}  // namespace eafc
