#include "doctest.h"
#include "ncgb/ajts.hpp"
#include "support/random.hpp"

using namespace ncgb;

namespace {

struct Letters {
  explicit Letters(int n) : al(Alphabet::matrix(n)) {}
  Word w(std::initializer_list<std::pair<int, int>> ij) const {
    Word out;
    for (auto [i, j] : ij) out.push_back(al.matrix_symbol(i, j));
    return out;
  }
  NcPoly p(std::string_view text) const { return parse_poly(text, al); }
  Alphabet al;
};

}  // namespace

TEST_CASE("deglex comparison") {
  Letters x(3);
  CHECK(deglex_cmp(x.w({{1, 1}}), x.w({{1, 2}})) < 0);
  CHECK(deglex_cmp(x.w({{2, 2}}), x.w({{1, 1}, {1, 1}})) < 0);
  CHECK(deglex_cmp(x.w({{1, 2}, {2, 1}}), x.w({{1, 2}, {1, 1}})) > 0);
  CHECK(deglex_cmp(Word{}, Word{}) == 0);
}

TEST_CASE("polynomial multiplication") {
  Letters x(2);
  NcPoly f = x.p("3*e[1,2] - 1/2*e[2,2]*e[1,1]");
  CHECK(NcPoly::constant(Scalar(1)) * f == f);
  CHECK(x.p("e[1,2]") * x.p("e[2,1]") == NcPoly::monomial(x.w({{1, 2}, {2, 1}})));
  CHECK(x.p("e[1,1] + e[1,2]") * x.p("e[1,1] - e[1,2]") ==
        x.p("e[1,1]*e[1,1] - e[1,1]*e[1,2] + e[1,2]*e[1,1] - e[1,2]*e[1,2]"));
}

TEST_CASE("leading term") {
  Letters x(3);
  NcPoly f = x.p("e[1,2]*e[2,3]*e[3,1] - e[3,1]*e[2,3]*e[1,2] - e[1,1]");
  CHECK(f.leading_word() == x.w({{3, 1}, {2, 3}, {1, 2}}));
  CHECK(f.leading_term().coeff == Scalar(-1));
  NcPoly m = NcPoly::monomial(x.w({{2, 2}}), Scalar(7));
  CHECK(m.leading_term().coeff == Scalar(7));
  CHECK(NcPoly::constant(Scalar(5)).leading_word().empty());
  CHECK_THROWS((void)NcPoly().leading_term());
}

TEST_CASE("transpose anti-automorphism") {
  Letters x(3);
  SymbolMap eta = eta_symbol_map(3);
  CHECK(apply_antihom(x.p("e[1,2]*e[2,1]"), eta) == x.p("e[1,2]*e[2,1]"));
  CHECK(eta[x.al.matrix_symbol(1, 2)] == x.al.matrix_symbol(2, 1));
  CHECK(eta[x.al.matrix_symbol(1, 1)] == x.al.matrix_symbol(1, 1));
  CHECK(eta[x.al.matrix_symbol(3, 2)] == x.al.matrix_symbol(2, 3));
  auto family = [&](int i, int j) {
    return x.p("e[" + std::to_string(i) + ",1]*e[1,1]*e[1," + std::to_string(j) + "] - e[1," + std::to_string(j) +
               "]*e[1,1]*e[" + std::to_string(i) + ",1] - e[" + std::to_string(i) + "," + std::to_string(j) + "]");
  };
  CHECK(apply_antihom(family(2, 3), eta) == family(3, 2));
}

TEST_CASE("polynomial text round trip") {
  Letters x(2);
  NcPoly f = x.p("e[1,1]^5 - e[1,1]");
  CHECK(render(f, x.al) == "e[1,1]^5 - e[1,1]");
  CHECK(render(x.p("e[1,1] + 2*e[2,1]*e[1,2] - 1 + 1*e[2,2]"), x.al) == "2*e[2,1]*e[1,2] + e[2,2] + e[1,1] - 1");
  CHECK(render(x.p("(1/2+1*i)*e[1,2]"), x.al) == render(x.p(render(x.p("(1/2+1*i)*e[1,2]"), x.al)), x.al));
  CHECK(render(NcPoly(), x.al) == "0");
  CHECK_THROWS_AS(x.p("e[3,1]"), ParseError);
  CHECK_THROWS_AS(x.p("e[1,1] +"), ParseError);

  fixture::Random rnd(5);
  for (int k = 0; k < 1000; ++k) {
    NcPoly g = rnd.poly(4, 5, 4);
    REQUIRE(x.p(render(g, x.al)) == g);
  }
}

TEST_CASE("deglex is a total order compatible with concatenation") {
  fixture::Random rnd(21);
  for (int k = 0; k < 10000; ++k) {
    Word u = rnd.word(3, 4), v = rnd.word(3, 4), w = rnd.word(3, 4);
    auto uv = deglex_cmp(u, v);
    REQUIRE((uv < 0) == (deglex_cmp(v, u) > 0));
    REQUIRE((uv == 0) == (u == v));
    if (uv < 0 && deglex_cmp(v, w) < 0) REQUIRE(deglex_cmp(u, w) < 0);
    if (uv < 0) {
      REQUIRE(deglex_cmp(w * u, w * v) < 0);
      REQUIRE(deglex_cmp(u * w, v * w) < 0);
    }
  }
}

TEST_CASE("polynomial multiplication is associative and bilinear") {
  fixture::Random rnd(22);
  for (int k = 0; k < 1000; ++k) {
    NcPoly f = rnd.poly(3, 4, 3), g = rnd.poly(3, 4, 3), h = rnd.poly(3, 4, 3);
    Scalar c = rnd.scalar();
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f * (g + h) == f * g + f * h);
    REQUIRE((f + g) * h == f * h + g * h);
    REQUIRE((c * f) * g == c * (f * g));
    for (const auto& t : (f * g).terms()) REQUIRE(!t.coeff.is_zero());
  }
}

TEST_CASE("anti-homomorphism laws") {
  fixture::Random rnd(23);
  SymbolMap eta = eta_symbol_map(2);
  for (int k = 0; k < 1000; ++k) {
    NcPoly f = rnd.poly(4, 4, 3), g = rnd.poly(4, 4, 3);
    REQUIRE(apply_antihom(f * g, eta) == apply_antihom(g, eta) * apply_antihom(f, eta));
    REQUIRE(apply_antihom(apply_antihom(f, eta), eta) == f);
  }
}
