#include "doctest.h"
#include "ncgb/ajts.hpp"

#include <algorithm>

using namespace ncgb;

namespace {

using Dense = std::vector<long>;  // n x n integer matrix, row-major

Dense unit(int n, int i, int j) {
  Dense m(static_cast<std::size_t>(n * n), 0);
  m[i * n + j] = 1;
  return m;
}

Dense mul(const Dense& x, const Dense& y, int n) {
  Dense p(x.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) p[i * n + j] += x[i * n + k] * y[k * n + j];
  return p;
}

TripleVec as_vec(const Dense& m) {
  TripleVec v;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] != 0) v.emplace_back(static_cast<int>(k), Scalar(m[k]));
  return v;
}

}  // namespace

TEST_CASE("matrix triple product values") {
  TripleSystem t = matrix_ajts(2);
  auto E = [](int i, int j) { return (i - 1) * 2 + (j - 1); };
  CHECK(t.product(E(1, 2), E(2, 1), E(1, 1)) == vec_unit(E(1, 1)));
  CHECK(t.product(E(1, 1), E(1, 1), E(1, 1)).empty());
  CHECK(t.product(E(1, 2), E(2, 1), E(2, 2)) == TripleVec{{E(2, 2), Scalar(-1)}});
  CHECK(t.product(E(1, 1), E(2, 2), E(1, 1)).empty());
}

TEST_CASE("matrix triple product agrees with abc - cba") {
  for (int n = 1; n <= 4; ++n) {
    TripleSystem t = matrix_ajts(n);
    REQUIRE(t.dim() == n * n);
    const int m = n * n;
    std::vector<Dense> units;
    for (int k = 0; k < m; ++k) units.push_back(unit(n, k / n, k % n));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          Dense lhs = mul(mul(units[a], units[b], n), units[c], n);
          Dense rhs = mul(mul(units[c], units[b], n), units[a], n);
          for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= rhs[k];
          REQUIRE(t.product(a, b, c) == as_vec(lhs));
        }
  }
}

TEST_CASE("axiom checks") {
  auto rep = check_axioms(matrix_ajts(2));
  CHECK(rep.ok());
  CHECK(rep.quintuples_checked == 1024);
  CHECK_FALSE(rep.sampled);
  CHECK(check_axioms(TripleSystem(2)).ok());

  TripleSystem bad = matrix_ajts(2);
  auto first = bad.entries().front();
  auto [idx, value] = first;
  bad.set(idx[0], idx[1], idx[2], idx[3], -value);
  auto broken = check_axioms(bad);
  REQUIRE_FALSE(broken.ok());
  CHECK_FALSE(broken.violation->lhs == broken.violation->rhs);
}

TEST_CASE("axiom sampling above the threshold") {
  auto rep = check_axioms(matrix_ajts(3), Exec::parallel, 1000, 7);
  CHECK(rep.sampled);
  CHECK(rep.threshold == 1000);
  // Draws are deduplicated.
  CHECK(rep.quintuples_checked <= 1000);
  CHECK(rep.quintuples_checked > 900);
  CHECK(rep.ok());
  CHECK(check_axioms(matrix_ajts(3), Exec::serial, 1000, 7).quintuples_checked == rep.quintuples_checked);
}

TEST_CASE("envelope relations") {
  auto zero = envelope_relations(TripleSystem(2), RelationMode::full);
  Alphabet al = Alphabet::generic(2);
  std::vector<NcPoly> want = {parse_poly("x[1]*x[1]*x[2] - x[2]*x[1]*x[1]", al),
                              parse_poly("x[1]*x[2]*x[2] - x[2]*x[2]*x[1]", al)};
  CHECK(zero.generators.size() == 2);
  for (const auto& w : want)
    CHECK(std::any_of(zero.generators.begin(), zero.generators.end(),
                      [&](const NcPoly& g) { return g == w || g == -w; }));

  auto indexed = envelope_relations(matrix_ajts(2), RelationMode::indexed);
  NcPoly r = parse_poly("e[1,2]*e[2,1]*e[1,1] - e[1,1]*e[2,1]*e[1,2] - e[1,1]", Alphabet::matrix(2));
  CHECK(std::find(indexed.generators.begin(), indexed.generators.end(), r) != indexed.generators.end());

  // a == c only contributes when <aba> != 0.
  TripleSystem t(1);
  t.set(0, 0, 0, 0, Scalar(1));
  CHECK(envelope_relations(t, RelationMode::full).generators.size() == 1);
  CHECK(envelope_relations(TripleSystem(1), RelationMode::full).generators.empty());

  CHECK_THROWS_AS(envelope_relations(TripleSystem(2), RelationMode::indexed), std::invalid_argument);
}

TEST_CASE("triple system JSON") {
  TripleSystem t = matrix_ajts(2);
  auto j = triple_system_to_json(t);
  TripleSystem back = triple_system_from_json(j);
  CHECK(back.entries() == t.entries());
  CHECK(j["gamma"][0][0].get<int>() >= 1);

  using nlohmann::json;
  CHECK_THROWS_AS(triple_system_from_json(json::parse(R"({"gamma": []})")), ParseError);
  CHECK_THROWS_AS(triple_system_from_json(json::parse(R"({"dim": 2, "gamma": [[1,1,1,3,"1"]]})")), ParseError);
  CHECK_THROWS_AS(triple_system_from_json(json::parse(R"({"dim": 2, "gamma": [[1,1,1,1,"x"]]})")), ParseError);
  CHECK_THROWS_AS(triple_system_from_json(json::parse(R"({"dim": 2, "labels": ["a"]})")), ParseError);
}
