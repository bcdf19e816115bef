// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "ncgb/center.hpp"
#include "ncgb/decomp.hpp"
#include "ncgb/oracle.hpp"
#include "support/closed_form_basis.hpp"
#include "support/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

using namespace ncgb;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

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

void groebner_reproduction(Outcome& o) {
  auto want = fixture::closed_form_groebner_basis(2);
  std::vector<std::vector<NcPoly>> results;
  for (auto mode : {RelationMode::full, RelationMode::indexed}) {
    auto rel = envelope_relations(matrix_ajts(2), mode);
    auto res = complete(rel.generators, default_max_degree(rel.generators));
    o.require(res.ok(), "completion hit the degree bound");
    o.require(res.system.is_self_reduced(), "basis not self-reduced");
    results.push_back(res.system.elements());
  }
  o.require(results[0] == results[1], "full and index-family bases differ");
  std::set<std::string> got, expected;
  Alphabet al = Alphabet::matrix(2);
  for (const auto& g : results[0]) got.insert(render(g, al));
  for (const auto& g : want) expected.insert(render(g, al));
  o.require(got == expected, "basis differs from the 20 closed-form families");
  o.detail << results[0].size() << " elements";
}

void dimension(Outcome& o) {
  for (int n : {2, 3, 4}) {
    const auto& a = algebra(n);
    o.require(a.dim() == static_cast<std::size_t>(4 * n * n + 1), "dim wrong at n=" + std::to_string(n));
    if (n <= 3) {
      std::set<Word, DeglexLess> got(a.basis().begin(), a.basis().end());
      auto listed = explicit_basis(n);
      std::set<Word, DeglexLess> expected(listed.begin(), listed.end());
      o.require(got == expected, "normal words differ from the listed basis at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail << "dims 17, 37, 65";
}

void oracle_equivalence(Outcome& o) {
  std::size_t pairs = 0, mismatches = 0;
  for (int n : {2, 3}) {
    const auto& a = algebra(n);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        ++pairs;
        NcPoly want = oracle_product(n, a.basis()[i], a.basis()[j]);
        if (a.from_poly(want) != a.entry_element(i, j)) ++mismatches;
      }
  }
  o.require(pairs == 17 * 17 + 37 * 37, "pair count");
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail << pairs << " pairs, 0 mismatches";
}

void center(Outcome& o) {
  for (int n : {2, 3}) {
    const auto& a = algebra(n);
    auto computed = center_basis(a);
    o.require(computed.size() == 5, "nullity " + std::to_string(computed.size()) + " at n=" + std::to_string(n));
    std::vector<AlgElement> closed;
    for (const auto& p : closed_form_center(n)) closed.push_back(a.from_poly(p));
    for (std::size_t k = 0; k < closed.size(); ++k)
      o.require(is_central(a, closed[k]), "z" + std::to_string(k + 1) + " not central at n=" + std::to_string(n));
    o.require(same_span(coords(computed), coords(closed), a.dim()), "span mismatch at n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "nullity 5 at n=2,3";
}

void decomposition(Outcome& o) {
  for (int n : {2, 3}) {
    const auto& a = algebra(n);
    DecompositionReport r = decompose(a);
    const std::string at = " at n=" + std::to_string(n);
    o.require(r.units.ok(), "unit relation fails" + at);
    o.require(r.identity.ok(), "resolution of identity fails" + at);
    o.require(r.unit_rank == a.dim() && r.full_rank, "unit rank " + std::to_string(r.unit_rank) + at);
    o.require(r.blocks == std::vector<int>{1, n, n, n, n}, "block summary" + at);
    auto fs = matrix_units(a);
    auto it = std::find_if(fs.begin(), fs.end(), [](const auto& f) { return f.kind == UnitFamily::a; });
    o.require(it != fs.end() && a.multiply(it->at(1, 1), it->at(1, 1)) == it->at(1, 1), "A not idempotent" + at);
  }
  if (o.pass) o.detail << "blocks [1,n,n,n,n] at n=2,3";
}

void representations(Outcome& o) {
  for (int n : {2, 3}) {
    TripleSystem t = matrix_ajts(n);
    std::vector<Representation> reps;
    for (int k = 1; k <= 4; ++k) {
      reps.push_back(standard_representation(n, k));
      auto r = check_representation(t, reps.back());
      o.require(r.ok() && r.triples_checked == static_cast<std::size_t>(n * n * n * n * n * n),
                reps.back().name + " fails at n=" + std::to_string(n));
    }
    int witnessed = 0;
    for (std::size_t x = 0; x < reps.size(); ++x)
      for (std::size_t y = x + 1; y < reps.size(); ++y) witnessed += check_inequivalence(reps[x], reps[y]) ? 1 : 0;
    o.require(witnessed == 6, std::to_string(witnessed) + " of 6 pairs witnessed at n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "4 homomorphisms, 6 inequivalent pairs at n=2,3";
}

// Words over {a, b} of each length with no obstruction as a factor.
std::vector<std::size_t> brute_force_counts(const std::vector<Word>& obstructions, std::size_t max_len) {
  std::vector<std::size_t> counts(max_len + 1, 0);
  for (std::size_t len = 0; len <= max_len; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word w;
      for (std::size_t k = 0; k < len; ++k) w.push_back(static_cast<Symbol>((bits >> (len - 1 - k)) & 1));
      if (std::none_of(obstructions.begin(), obstructions.end(), [&](const Word& ob) { return w.contains(ob); }))
        ++counts[len];
    }
  return counts;
}

void infinite_counterexample(Outcome& o) {
  TripleSystem zero(2);
  auto rel = envelope_relations(zero, RelationMode::full);
  auto res = complete(rel.generators, default_max_degree(rel.generators));
  o.require(res.ok(), "completion did not finish");
  o.require(res.system.size() == 2, "expected two basis elements");
  o.require(avoidance_graph(res.system, 2).has_cycle(), "avoidance graph acyclic");
  auto words = normal_words(res.system, 2, 10);
  o.require(!words.finite, "verdict finite");
  o.require(words.counts == brute_force_counts(res.system.obstructions(), 10), "counts differ from enumeration");
  if (o.pass) {
    o.detail << "INFINITE, counts";
    for (auto c : words.counts) o.detail << ' ' << c;
  }
}

void property_suites(Outcome& o) {
  fixture::Random rnd(2024);
  const auto& a2 = algebra(2);
  const auto& g = a2.gb();

  std::size_t nf_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    NcPoly f = rnd.poly(4, 6, 6);
    NcPoly nf = normal_form(f, g);
    if (normal_form(nf, g) != nf || normal_form_randomized(f, g, rnd.engine()) != nf) ++nf_failures;
  }
  o.require(nf_failures == 0, "normal form property failed");

  std::size_t order_failures = 0;
  for (int k = 0; k < 10000; ++k) {
    Word u = rnd.word(3, 4), v = rnd.word(3, 4), w = rnd.word(3, 4);
    auto uv = deglex_cmp(u, v);
    bool ok = ((uv < 0) == (deglex_cmp(v, u) > 0)) && ((uv == 0) == (u == v));
    if (uv < 0 && deglex_cmp(v, w) < 0) ok = ok && deglex_cmp(u, w) < 0;
    if (uv < 0) ok = ok && deglex_cmp(w * u, w * v) < 0 && deglex_cmp(u * w, v * w) < 0;
    if (!ok) ++order_failures;
  }
  o.require(order_failures == 0, "deglex law failed");

  SymbolMap flip = eta_symbol_map(2);
  std::size_t antihom_failures = 0;
  for (int k = 0; k < 1000; ++k) {
    NcPoly f = rnd.poly(4, 4, 3), h = rnd.poly(4, 4, 3);
    if (apply_antihom(f * h, flip) != apply_antihom(h, flip) * apply_antihom(f, flip) ||
        apply_antihom(apply_antihom(f, flip), flip) != f)
      ++antihom_failures;
  }
  o.require(antihom_failures == 0, "anti-automorphism law failed");

  o.require(check_associativity(a2).ok(), "associativity fails at n=2");
  auto sampled = check_associativity(algebra(3), 100000, 7);
  o.require(sampled.ok() && sampled.triples_checked >= 100000, "associativity fails at n=3");

  for (int n : {2, 3}) {
    const auto& a = algebra(n);
    TripleSystem t = matrix_ajts(n);
    std::vector<AlgElement> letters;
    for (int k = 0; k < n * n; ++k) letters.push_back(a.generator(k / n + 1, k % n + 1));
    for (int x = 0; x < n * n; ++x)
      for (int y = 0; y < n * n; ++y)
        for (int z = 0; z < n * n; ++z) {
          AlgElement lhs = a.multiply(a.multiply(letters[x], letters[y]), letters[z]) -
                           a.multiply(a.multiply(letters[z], letters[y]), letters[x]);
          if (lhs != a.from_poly(embed(t.product(x, y, z)))) {
            o.require(false, "triple relation fails at n=" + std::to_string(n));
            return;
          }
        }
  }
  if (o.pass) o.detail << "all properties hold";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"groebner basis reproduction", groebner_reproduction},
      {"dimension 4n^2+1", dimension},
      {"closed-form product equivalence", oracle_equivalence},
      {"center", center},
      {"decomposition", decomposition},
      {"representations", representations},
      {"infinite-dimensional counterexample", infinite_counterexample},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("criterion %zu %s: %s (%s) [%.2fs]\n", k + 1, criteria[k].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
