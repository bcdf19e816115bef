#include "doctest.h"
#include "ncgb/center.hpp"
#include "ncgb/decomp.hpp"

using namespace ncgb;

namespace {

const EnvelopeAlgebra& algebra(int n) {
  static std::map<int, EnvelopeAlgebra> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, EnvelopeAlgebra::build(n)).first;
  return it->second;
}

std::vector<ScalarVec> coords(const std::vector<AlgElement>& xs) {
  std::vector<ScalarVec> out;
  for (const auto& x : xs) out.push_back(x.coords());
  return out;
}

Scalar q(long num, long den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("nullspace basics") {
  LinearSystem identity{3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}}};
  CHECK(nullspace(identity).empty());

  LinearSystem zero{4, {{q(0), q(0), q(0), q(0)}}};
  auto free = nullspace(zero);
  REQUIRE(free.size() == 4);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t c = 0; c < 4; ++c) CHECK(free[k][c] == q(k == c ? 1 : 0));

  LinearSystem complex{2, {{Scalar::i(), q(1)}}};
  auto v = nullspace(complex);
  REQUIRE(v.size() == 1);
  CHECK(Scalar::i() * v[0][0] + v[0][1] == q(0));
}

TEST_CASE("rref is reduced and deterministic") {
  LinearSystem s{3, {{q(0), q(2), q(4)}, {q(1), q(1), q(1)}, {q(2), q(4), q(6)}}};
  Echelon e = rref(s);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.rows[0] == ScalarVec{q(1), q(0), q(-1)});
  CHECK(e.rows[1] == ScalarVec{q(0), q(1), q(2)});
}

TEST_CASE("reduced center system has the four closed-form solutions") {
  // Unknown order: pivot-square coefficient, row_col, col_row, row_pivot_col,
  // fourth-power coefficient, trace, unit, free parameter.
  for (int n : {2, 3, 4, 7}) {
    CAPTURE(n);
    const Scalar nn(static_cast<long>(n));
    LinearSystem s{8,
                   {{q(1), q(-1), q(0), q(1), q(0), q(0), q(0), q(0)},
                    {q(0), q(0), q(1), q(-2), q(0), q(0), q(0), q(0)},
                    {q(0), q(0), q(0), q(0), q(1), nn - q(2), q(0), -(nn - q(2)) / nn},
                    {q(0), q(0), q(0), q(0), q(0), q(-1), q(1), q(2) / nn}}};
    auto solved = nullspace(s);
    CHECK(solved.size() == 4);
    // (zeta, trace, col_row, row_col) set to unit vectors in turn.
    std::vector<ScalarVec> printed = {
        {q(0), q(0), q(0), q(0), (nn - q(2)) / nn, q(0), q(-2) / nn, q(1)},
        {q(0), q(0), q(0), q(0), q(2) - nn, q(1), q(1), q(0)},
        {q(-1, 2), q(0), q(1), q(1, 2), q(0), q(0), q(0), q(0)},
        {q(1), q(1), q(0), q(0), q(0), q(0), q(0), q(0)},
    };
    for (const auto& p : printed)
      for (const auto& row : s.rows) {
        Scalar dot;
        for (std::size_t k = 0; k < 8; ++k) dot += row[k] * p[k];
        REQUIRE(dot.is_zero());
      }
    CHECK(same_span(solved, printed, 8));
  }
}

TEST_CASE("center has dimension five") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    const auto& a = algebra(n);
    auto by_letters = center_basis(a);
    auto by_basis = center_basis(a, CommutantProbe::basis);
    CHECK(by_letters.size() == 5);
    CHECK(by_basis.size() == 5);
    CHECK(same_span(coords(by_letters), coords(by_basis), a.dim()));
    for (const auto& z : by_letters) CHECK(is_central(a, z));

    std::vector<AlgElement> closed;
    for (const auto& p : closed_form_center(n)) closed.push_back(a.from_poly(p));
    for (const auto& z : closed) CHECK(is_central(a, z));
    CHECK(rank(coords(closed), a.dim()) == 5);
    CHECK(same_span(coords(by_letters), coords(closed), a.dim()));
  }
}

TEST_CASE("centrality examples") {
  const auto& a = algebra(2);
  CHECK(is_central(a, a.unit()));
  CHECK(is_central(a, a.generator(1, 1) + a.generator(2, 2)));
  CHECK_FALSE(is_central(a, a.generator(1, 2)));
  CHECK_FALSE(a.commutator(a.generator(1, 2), a.generator(2, 2)).is_zero());
}

TEST_CASE("central elements act as scalars on each block") {
  for (int n : {2, 3}) {
    const auto& a = algebra(n);
    auto families = matrix_units(a);
    for (const auto& z : center_basis(a))
      for (const auto& f : families) REQUIRE(scalar_action(a, z, f.at(1, 1)).has_value());
    // The block idempotents span the center.
    CHECK(same_span(coords(block_idempotents(a, families)), coords(center_basis(a)), a.dim()));
  }
}
