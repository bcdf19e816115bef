#include "ncgb/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace ncgb {

std::string family_name(UnitFamily f) {
  switch (f) {
    case UnitFamily::b0: return "B0";
    case UnitFamily::b1: return "B1";
    case UnitFamily::d0: return "D0";
    case UnitFamily::d1: return "D1";
    case UnitFamily::a: return "A";
  }
  return "?";
}

std::vector<MatrixUnitPolys> matrix_unit_polys(int n) {
  Alphabet al = Alphabet::matrix(n);
  auto e = [&](int i, int j) { return NcPoly::monomial(Word{al.matrix_symbol(i, j)}); };
  const NcPoly e11 = e(1, 1), sq = e11 * e11, cube = sq * e11, fourth = sq * sq;
  const Scalar quarter = Rational(1, 4), half = Rational(1, 2), I = Scalar::i();

  std::vector<MatrixUnitPolys> out;
  for (int k = 0; k < 2; ++k) {
    const Scalar s = k == 0 ? Scalar(1) : Scalar(-1);
    MatrixUnitPolys b{k == 0 ? UnitFamily::b0 : UnitFamily::b1, n, std::vector<NcPoly>(n * n)};
    auto at = [n](MatrixUnitPolys& f, int i, int j) -> NcPoly& { return f.units[(i - 1) * n + (j - 1)]; };
    at(b, 1, 1) = quarter * (fourth + sq + s * (cube + e11));
    for (int i = 2; i <= n; ++i) {
      at(b, 1, i) = e11 * e(1, i) + s * (sq * e(1, i));
      at(b, i, 1) = quarter * (e(i, 1) * e11 + s * (sq * e(i, 1) + e(i, 1)));
      at(b, i, i) = half * (half * (fourth - sq) + e(i, 1) * e(1, i) + s * (e(1, i) * e11 * e(i, 1) + e(i, i)));
      for (int j = 2; j <= n; ++j)
        if (j != i) at(b, i, j) = half * (e(i, 1) * e(1, j) + s * (e(1, j) * e11 * e(i, 1) + e(i, j)));
    }
    out.push_back(std::move(b));
  }
  for (int k = 0; k < 2; ++k) {
    const Scalar s = k == 0 ? Scalar(1) : Scalar(-1);
    const Scalar si = s * I;
    MatrixUnitPolys d{k == 0 ? UnitFamily::d0 : UnitFamily::d1, n, std::vector<NcPoly>(n * n)};
    auto at = [n](MatrixUnitPolys& f, int i, int j) -> NcPoly& { return f.units[(i - 1) * n + (j - 1)]; };
    at(d, 1, 1) = quarter * (fourth - sq + si * (e11 - cube));
    for (int i = 2; i <= n; ++i) {
      at(d, 1, i) = -half * (e11 * e(i, 1) + si * (sq * e(i, 1)));
      at(d, i, 1) = -half * (e(1, i) * e11 + si * (sq * e(1, i) - e(1, i)));
      at(d, i, i) = half * (half * (fourth + sq) - e(1, i) * e(i, 1) - si * (e(1, i) * e11 * e(i, 1)));
      for (int j = 2; j <= n; ++j)
        if (j != i) at(d, i, j) = -half * (e(1, i) * e(j, 1) + si * (e(1, i) * e11 * e(j, 1)));
    }
    out.push_back(std::move(d));
  }
  NcPoly a = NcPoly::constant(Scalar(1)) - Scalar(static_cast<long>(n)) * fourth;
  for (int i = 2; i <= n; ++i) a += e(1, i) * e(i, 1) - e(i, 1) * e(1, i);
  out.push_back({UnitFamily::a, 1, {a}});
  return out;
}

std::vector<MatrixUnitFamily> matrix_units(const EnvelopeAlgebra& a) {
  if (a.n() <= 0) throw std::invalid_argument("matrix units need a matrix envelope");
  std::vector<MatrixUnitFamily> out;
  for (const auto& f : matrix_unit_polys(a.n())) {
    MatrixUnitFamily fam{f.kind, f.size, {}};
    for (const auto& p : f.units) fam.units.push_back(a.from_poly(p));
    out.push_back(std::move(fam));
  }
  return out;
}

namespace {

struct UnitRef {
  std::size_t family;
  int i, j;
};

std::vector<UnitRef> flatten(const std::vector<MatrixUnitFamily>& families) {
  std::vector<UnitRef> refs;
  for (std::size_t f = 0; f < families.size(); ++f)
    for (int i = 1; i <= families[f].size; ++i)
      for (int j = 1; j <= families[f].size; ++j) refs.push_back({f, i, j});
  return refs;
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Runs `fails(q)` for q in [0, count) and returns the smallest failing q.
template <class Fails>
std::size_t first_failure(std::size_t count, Exec exec, Fails fails) {
  if (exec == Exec::serial) {
    for (std::size_t q = 0; q < count; ++q)
      if (fails(q)) return q;
    return kNone;
  }
  std::atomic<std::size_t> best{kNone};
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t sq = 0; sq < total; ++sq) {
    auto q = static_cast<std::size_t>(sq);
    if (q > best.load(std::memory_order_relaxed) || !fails(q)) continue;
    std::size_t cur = best.load();
    while (q < cur && !best.compare_exchange_weak(cur, q)) {
    }
  }
  return best.load();
}

}  // namespace

UnitRelationReport verify_unit_relations(const EnvelopeAlgebra& a, const std::vector<MatrixUnitFamily>& families,
                                         Exec exec) {
  const auto refs = flatten(families);
  const std::size_t u = refs.size();
  const AlgElement zero = a.zero();
  auto unit = [&](const UnitRef& r) -> const AlgElement& { return families[r.family].at(r.i, r.j); };
  auto expected = [&](const UnitRef& x, const UnitRef& y) -> const AlgElement& {
    if (x.family != y.family || x.j != y.i) return zero;
    return families[x.family].at(x.i, y.j);
  };
  if (exec == Exec::parallel) a.fill_table(Exec::parallel);
  std::size_t first = first_failure(u * u, exec, [&](std::size_t q) {
    const auto& x = refs[q / u];
    const auto& y = refs[q % u];
    return !(a.multiply(unit(x), unit(y)) == expected(x, y));
  });
  UnitRelationReport report;
  report.products_checked = u * u;
  if (first != kNone) {
    const auto& x = refs[first / u];
    const auto& y = refs[first % u];
    report.failure = UnitRelationFailure{families[x.family].kind, families[y.family].kind, x.i, x.j, y.i, y.j,
                                         a.multiply(unit(x), unit(y)), expected(x, y)};
  }
  return report;
}

IdentityReport resolution_of_identity(const EnvelopeAlgebra& a, const std::vector<MatrixUnitFamily>& families) {
  IdentityReport report;
  report.defect = a.zero();
  for (const auto& f : families)
    for (int i = 1; i <= f.size; ++i) report.defect += f.at(i, i);
  report.defect -= a.unit();

  auto find = [&](UnitFamily k) -> const MatrixUnitFamily& {
    for (const auto& f : families)
      if (f.kind == k) return f;
    throw std::invalid_argument("missing unit family " + family_name(k));
  };
  const auto& b0 = find(UnitFamily::b0);
  const auto& b1 = find(UnitFamily::b1);
  const auto& d0 = find(UnitFamily::d0);
  const auto& d1 = find(UnitFamily::d1);
  const Scalar I = Scalar::i();
  const int n = a.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      // B-part scale and the transposed D index.
      Scalar scale(1);
      if (i == 1 && j != 1) scale = Rational(1, 2);
      if (i != 1 && j == 1) scale = Scalar(2);
      AlgElement rebuilt = scale * (b0.at(i, j) - b1.at(i, j)) - I * d0.at(j, i) + I * d1.at(j, i);
      if (!(rebuilt == a.generator(i, j))) report.failed_generators.push_back(a.alphabet().name(a.alphabet().matrix_symbol(i, j)));
    }
  return report;
}

std::vector<ScalarVec> unit_coordinates(const std::vector<MatrixUnitFamily>& families) {
  std::vector<ScalarVec> out;
  for (const auto& f : families)
    for (const auto& u : f.units) out.push_back(u.coords());
  return out;
}

std::vector<AlgElement> block_idempotents(const EnvelopeAlgebra& a, const std::vector<MatrixUnitFamily>& families) {
  std::vector<AlgElement> out;
  for (UnitFamily k : {UnitFamily::a, UnitFamily::b0, UnitFamily::b1, UnitFamily::d0, UnitFamily::d1})
    for (const auto& f : families)
      if (f.kind == k) {
        AlgElement s = a.zero();
        for (int i = 1; i <= f.size; ++i) s += f.at(i, i);
        out.push_back(std::move(s));
      }
  return out;
}

std::optional<Scalar> scalar_action(const EnvelopeAlgebra& a, const AlgElement& z, const AlgElement& u) {
  AlgElement zu = a.multiply(z, u);
  std::size_t k = 0;
  while (k < u.dim() && u[k].is_zero()) ++k;
  if (k == u.dim()) return zu.is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
  Scalar c = zu[k] / u[k];
  if (!(zu == c * u)) return std::nullopt;
  return c;
}

DecompositionReport decompose(const EnvelopeAlgebra& a, Exec exec) {
  DecompositionReport r;
  auto families = matrix_units(a);
  for (UnitFamily k : {UnitFamily::a, UnitFamily::b0, UnitFamily::b1, UnitFamily::d0, UnitFamily::d1})
    for (const auto& f : families)
      if (f.kind == k) r.blocks.push_back(f.size);
  r.units = verify_unit_relations(a, families, exec);
  r.identity = resolution_of_identity(a, families);
  r.unit_rank = rank(unit_coordinates(families), a.dim());
  r.full_rank = r.unit_rank == a.dim();

  auto idem = block_idempotents(a, families);
  r.idempotents_orthogonal = true;
  for (std::size_t p = 0; p < idem.size(); ++p)
    for (std::size_t q = 0; q < idem.size(); ++q) {
      AlgElement prod = a.multiply(idem[p], idem[q]);
      if (!(prod == (p == q ? idem[p] : a.zero()))) r.idempotents_orthogonal = false;
    }
  r.idempotents_central =
      std::all_of(idem.begin(), idem.end(), [&](const AlgElement& x) { return is_central(a, x); });
  return r;
}

std::vector<int> wedderburn_summary(const EnvelopeAlgebra& a, Exec exec) {
  DecompositionReport r = decompose(a, exec);
  if (!r.ok()) throw VerificationFailure("matrix-unit decomposition check failed");
  std::size_t total = 0;
  for (int b : r.blocks) total += static_cast<std::size_t>(b * b);
  if (total != a.dim()) throw VerificationFailure("block dimensions do not add up to the algebra dimension");
  return r.blocks;
}

Matrix Matrix::unit(int n, int i, int j) {
  Matrix m = zero(n);
  m(i, j) = Scalar(1);
  return m;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (int i = 1; i <= n; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t = zero(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) t(i, j) = (*this)(j, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : a) x *= c;
  return *this;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  Matrix p = Matrix::zero(x.n);
  for (int i = 1; i <= x.n; ++i)
    for (int k = 1; k <= x.n; ++k) {
      if (x(i, k).is_zero()) continue;
      for (int j = 1; j <= x.n; ++j)
        if (!y(k, j).is_zero()) p(i, j) += x(i, k) * y(k, j);
    }
  return p;
}

Matrix Representation::apply(const TripleVec& x) const {
  Matrix m = Matrix::zero(images.front().n);
  for (const auto& [d, c] : x) m += c * images[static_cast<std::size_t>(d)];
  return m;
}

Representation standard_representation(int n, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("representation index must be 1..4");
  const Scalar factor = k == 1 ? Scalar(1) : k == 2 ? Scalar(-1) : k == 3 ? Scalar::i() : -Scalar::i();
  Representation r{"rho" + std::to_string(k), {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r.images.push_back(factor * (k <= 2 ? Matrix::unit(n, i, j) : Matrix::unit(n, j, i)));
  return r;
}

RepresentationReport check_representation(const TripleSystem& t, const Representation& rho, Exec exec) {
  const auto m = static_cast<std::size_t>(t.dim());
  if (rho.images.size() != m) throw std::invalid_argument("representation size does not match the triple system");
  auto sides = [&](std::size_t q) {
    int a = static_cast<int>(q / (m * m)), b = static_cast<int>(q / m % m), c = static_cast<int>(q % m);
    const auto& ra = rho.images[a];
    const auto& rb = rho.images[b];
    const auto& rc = rho.images[c];
    return std::pair{rho.apply(t.product(a, b, c)), ra * rb * rc - rc * rb * ra};
  };
  std::size_t first = first_failure(m * m * m, exec, [&](std::size_t q) {
    auto [l, r] = sides(q);
    return !(l == r);
  });
  RepresentationReport report;
  report.triples_checked = m * m * m;
  if (first != kNone) {
    auto [l, r] = sides(first);
    report.failure = RepresentationFailure{static_cast<int>(first / (m * m)), static_cast<int>(first / m % m),
                                           static_cast<int>(first % m), std::move(l), std::move(r)};
  }
  return report;
}

std::vector<std::size_t> nonvanishing(const std::vector<NcPoly>& polys, const Alphabet& alphabet,
                                      const Representation& rho) {
  const int n = rho.images.front().n;
  std::vector<std::size_t> bad;
  for (std::size_t p = 0; p < polys.size(); ++p) {
    Matrix value = Matrix::zero(n);
    for (const auto& term : polys[p].terms()) {
      Matrix w = Matrix::zero(n);
      for (int i = 1; i <= n; ++i) w(i, i) = Scalar(1);
      for (std::size_t k = 0; k < term.word.size(); ++k) {
        Symbol s = term.word[k];
        w = w * rho.images[static_cast<std::size_t>((alphabet.row(s) - 1) * alphabet.matrix_n() + alphabet.col(s) - 1)];
      }
      value += term.coeff * w;
    }
    if (!value.is_zero()) bad.push_back(p);
  }
  return bad;
}

std::optional<TraceWitness> check_inequivalence(const Representation& x, const Representation& y) {
  if (x.name == y.name && x.images == y.images)
    throw std::invalid_argument("inequivalence needs two different representations");
  for (std::size_t k = 0; k < x.images.size(); ++k) {
    Scalar tx = x.images[k].trace(), ty = y.images[k].trace();
    if (!(tx == ty)) return TraceWitness{static_cast<int>(k), tx, ty};
  }
  return std::nullopt;
}

}  // namespace ncgb
