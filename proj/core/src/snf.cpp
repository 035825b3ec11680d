#include "eafc/snf.hpp"

#include <algorithm>
#include <utility>

namespace eafc {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows) throw input_error("matrix product shape mismatch");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& x = A.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += x * B.at(k, j);
    }
  return C;
}

namespace {

struct Worker {
  IntMatrix D, U, V;

  explicit Worker(const IntMatrix& A)
      : D(A), U(IntMatrix::identity(A.rows)), V(IntMatrix::identity(A.cols)) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
    for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
    for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
  }
  // row i -= q * row t
  void row_sub(int i, int t, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < D.cols; ++c) D.at(i, c) -= q * D.at(t, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) -= q * U.at(t, c);
  }
  // col j -= q * col t
  void col_sub(int j, int t, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < D.rows; ++r) D.at(r, j) -= q * D.at(r, t);
    for (int r = 0; r < V.rows; ++r) V.at(r, j) -= q * V.at(r, t);
  }
  void row_add(int i, int t) {
    for (int c = 0; c < D.cols; ++c) D.at(i, c) += D.at(t, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) += U.at(t, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < D.cols; ++c) D.at(i, c) = -D.at(i, c);
    for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
  }

  // Smallest nonzero absolute value in D[t.., t..], earliest row-major on ties.
  bool find_pivot(int t, int& pi, int& pj) {
    pi = -1;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j) {
        const Int& x = D.at(i, j);
        if (x == 0) continue;
        if (pi == -1 || abs(x) < abs(D.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    return pi != -1;
  }

  void run() {
    const int bound = std::min(D.rows, D.cols);
    for (int t = 0; t < bound; ++t) {
      int pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool restarted = false;
        // Clear the pivot column.
        for (int i = t + 1; i < D.rows && !restarted; ++i) {
          if (D.at(i, t) == 0) continue;
          Int q = D.at(i, t) / D.at(t, t);
          row_sub(i, t, q);
          if (D.at(i, t) != 0) {  // strictly smaller remainder becomes pivot
            swap_rows(t, i);
            restarted = true;
          }
        }
        if (restarted) continue;
        // Clear the pivot row.
        for (int j = t + 1; j < D.cols && !restarted; ++j) {
          if (D.at(t, j) == 0) continue;
          Int q = D.at(t, j) / D.at(t, t);
          col_sub(j, t, q);
          if (D.at(t, j) != 0) {
            swap_cols(t, j);
            restarted = true;
          }
        }
        if (restarted) continue;
        // Enforce divisibility of the remaining block by the pivot.
        int bi = -1, bj = -1;
        for (int i = t + 1; i < D.rows && bi == -1; ++i)
          for (int j = t + 1; j < D.cols && bi == -1; ++j)
            if (D.at(i, j) % D.at(t, t) != 0) {
              bi = i;
              bj = j;
            }
        if (bi != -1) {
          (void)bj;
          row_add(t, bi);  // brings a non-multiple into the pivot row
          continue;
        }
        break;
      }
      if (D.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& A) {
  Worker w(A);
  w.run();
  return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

std::vector<Int> elementary_divisors(const IntMatrix& A) {
  SmithNormalForm s = smith_normal_form(A);
  std::vector<Int> out;
  const int bound = std::min(A.rows, A.cols);
  for (int i = 0; i < bound; ++i)
    if (s.D.at(i, i) != 0) out.push_back(s.D.at(i, i));
  return out;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(static_cast<int>(p.relators.size()), static_cast<int>(p.generators.size()));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& [gen, exp] : p.relators[r]) {
      if (gen < 0 || gen >= m.cols) throw input_error("relator references unknown generator");
      m.at(static_cast<int>(r), gen) += exp;
    }
  return m;
}

AbelianInvariants abelianization_invariants(const Presentation& p) {
  IntMatrix m = relation_matrix(p);
  std::vector<Int> divs = elementary_divisors(m);
  AbelianInvariants inv;
  inv.free_rank = static_cast<int>(p.generators.size()) - static_cast<int>(divs.size());
  for (const Int& d : divs)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

}  // namespace eafc
