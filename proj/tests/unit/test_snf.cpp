#include "eafc/snf.hpp"

#include <doctest.h>

#include "eafc/decompose.hpp"

#include "catalog.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace eafc;

namespace {

IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

void check_snf(const IntMatrix& A) {
  SmithNormalForm snf = smith_normal_form(A);
  REQUIRE(snf.U.rows == A.rows);
  REQUIRE(snf.U.cols == A.rows);
  REQUIRE(snf.V.rows == A.cols);
  REQUIRE(snf.V.cols == A.cols);
  REQUIRE(snf.D.rows == A.rows);
  REQUIRE(snf.D.cols == A.cols);

  CHECK(mul(mul(snf.U, A), snf.V) == snf.D);

  Int du = testkit::naive_determinant(snf.U);
  Int dv = testkit::naive_determinant(snf.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));

  Int prev = 0;
  for (int i = 0; i < snf.D.rows; ++i)
    for (int j = 0; j < snf.D.cols; ++j) {
      if (i == j) continue;
      CHECK(snf.D.at(i, j) == 0);
    }
  int rank_end = std::min(snf.D.rows, snf.D.cols);
  for (int i = 0; i < rank_end; ++i) {
    const Int& d = snf.D.at(i, i);
    CHECK(d >= 0);
    if (prev != 0) {
      if (d != 0)
        CHECK(d % prev == 0);
    } else if (i > 0) {
      CHECK(d == 0);  // zeros only after the last nonzero divisor
    }
    prev = d;
  }

  CHECK(elementary_divisors(A) == testkit::minor_gcd_divisors(A));
}

}  // namespace

TEST_CASE("hand examples") {
  SmithNormalForm d23 = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(d23.D == from_rows({{1, 0}, {0, 6}}));

  CHECK(elementary_divisors(from_rows({{2, -2}})) == std::vector<Int>{2});
  CHECK(elementary_divisors(from_rows({{0, 0}, {0, 0}})).empty());
  CHECK(elementary_divisors(from_rows({{6, 4}, {4, 4}})) == std::vector<Int>{2, 4});

  IntMatrix empty(0, 3);
  SmithNormalForm se = smith_normal_form(empty);
  CHECK(se.D.rows == 0);
  CHECK(se.D.cols == 3);
  CHECK(elementary_divisors(empty).empty());

  check_snf(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
}

TEST_CASE("identity and diagonal fixed points") {
  check_snf(IntMatrix::identity(4));
  CHECK(elementary_divisors(IntMatrix::identity(4)) == std::vector<Int>{1, 1, 1, 1});
  check_snf(from_rows({{5}}));
  CHECK(elementary_divisors(from_rows({{-5}})) == std::vector<Int>{5});
}

TEST_CASE("random matrices satisfy the decomposition contract") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dim(1, 5);
  for (int trial = 0; trial < 250; ++trial) {
    IntMatrix A = testkit::random_matrix(dim(rng), dim(rng), -9, 9, rng);
    check_snf(A);
  }
}

TEST_CASE("matrix product sanity") {
  IntMatrix a = from_rows({{1, 2}, {3, 4}});
  IntMatrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(mul(a, b) == from_rows({{2, 1}, {4, 3}}));
  CHECK(mul(a, IntMatrix::identity(2)) == a);
  CHECK_THROWS_AS(mul(a, from_rows({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})), input_error);
}

TEST_CASE("relation matrix of a presentation") {
  Presentation p;
  p.generators = {"x", "y"};
  p.relators = {{{0, 2}, {1, -2}}};
  IntMatrix m = relation_matrix(p);
  CHECK(m == from_rows({{2, -2}}));

  Presentation free2;
  free2.generators = {"x", "y"};
  IntMatrix f = relation_matrix(free2);
  CHECK(f.rows == 0);
  CHECK(f.cols == 2);
}

TEST_CASE("abelianization invariants") {
  // x^2 = y^2 (Klein-bottle style relator): Z + Z/2.
  Presentation klein;
  klein.generators = {"x", "y"};
  klein.relators = {{{0, 2}, {1, -2}}};
  AbelianInvariants kv = abelianization_invariants(klein);
  CHECK(kv.free_rank == 1);
  CHECK(kv.torsion == std::vector<Int>{2});

  // Trefoil-style relator x^2 = y^3: abelianization Z, no torsion.
  Presentation trefoil;
  trefoil.generators = {"x", "y"};
  trefoil.relators = {{{0, 2}, {1, -3}}};
  AbelianInvariants tv = abelianization_invariants(trefoil);
  CHECK(tv.free_rank == 1);
  CHECK(tv.torsion.empty());

  // Free group: full rank.
  Presentation free3;
  free3.generators = {"a", "b", "c"};
  AbelianInvariants fv = abelianization_invariants(free3);
  CHECK(fv.free_rank == 3);
  CHECK(fv.torsion.empty());

  // Finite cyclic: Z/5.
  Presentation c5;
  c5.generators = {"g"};
  c5.relators = {{{0, 5}}};
  AbelianInvariants cv = abelianization_invariants(c5);
  CHECK(cv.free_rank == 0);
  CHECK(cv.torsion == std::vector<Int>{5});

  // Every even Artin relator abelianizes away: free rank = generator count.
  for (const testkit::CatalogEntry& e : testkit::catalog()) {
    AbelianInvariants inv = abelianization_invariants(emit_presentation(e.sys));
    CHECK(inv.free_rank == e.sys.vertex_count());
    CHECK(inv.torsion.empty());
  }
}
