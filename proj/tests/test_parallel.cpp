#include "doctest.h"
#include "ncgb/center.hpp"
#include "ncgb/decomp.hpp"

using namespace ncgb;

// Every parallel kernel against its serial reference.

TEST_CASE("axiom check") {
  TripleSystem t = matrix_ajts(3);
  auto s = check_axioms(t, Exec::serial);
  auto p = check_axioms(t, Exec::parallel);
  CHECK(s.ok() == p.ok());
  CHECK(s.quintuples_checked == p.quintuples_checked);

  auto [idx, value] = t.entries()[5];
  t.set(idx[0], idx[1], idx[2], idx[3], value * Scalar(3));
  auto sb = check_axioms(t, Exec::serial);
  auto pb = check_axioms(t, Exec::parallel);
  REQUIRE_FALSE(sb.ok());
  REQUIRE_FALSE(pb.ok());
  CHECK(sb.violation->tuple == pb.violation->tuple);
}

TEST_CASE("table fill") {
  EnvelopeAlgebra s = EnvelopeAlgebra::build(3), p = EnvelopeAlgebra::build(3);
  s.fill_table(Exec::serial);
  p.fill_table(Exec::parallel);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) REQUIRE(s.entry(i, j) == p.entry(i, j));
}

TEST_CASE("associativity, commutator system, units and representations") {
  EnvelopeAlgebra a = EnvelopeAlgebra::build(2);
  CHECK(check_associativity(a, 0, 1, Exec::serial).ok() == check_associativity(a, 0, 1, Exec::parallel).ok());

  auto cs = commutator_system(a, CommutantProbe::generators, Exec::serial);
  auto cp = commutator_system(a, CommutantProbe::generators, Exec::parallel);
  CHECK(cs.rows == cp.rows);

  auto units = matrix_units(a);
  auto us = verify_unit_relations(a, units, Exec::serial);
  auto up = verify_unit_relations(a, units, Exec::parallel);
  CHECK(us.ok());
  CHECK(up.ok());
  CHECK(us.products_checked == up.products_checked);

  TripleSystem t = matrix_ajts(3);
  Representation plain{"transpose", {}};
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) plain.images.push_back(Matrix::unit(3, j, i));
  auto rs = check_representation(t, plain, Exec::serial);
  auto rp = check_representation(t, plain, Exec::parallel);
  REQUIRE_FALSE(rs.ok());
  REQUIRE_FALSE(rp.ok());
  CHECK(rs.failure->a == rp.failure->a);
  CHECK(rs.failure->b == rp.failure->b);
  CHECK(rs.failure->c == rp.failure->c);
}
