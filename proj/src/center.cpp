#include "ncgb/center.hpp"

#include <algorithm>

namespace ncgb {

Echelon rref(const LinearSystem& s) {
  std::vector<ScalarVec> rows = s.rows;
  Echelon e;
  std::size_t top = 0;
  for (std::size_t col = 0; col < s.unknowns && top < rows.size(); ++col) {
    std::size_t pick = top;
    while (pick < rows.size() && rows[pick][col].is_zero()) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[top], rows[pick]);
    Scalar inv = rows[top][col].inv();
    for (std::size_t c = col; c < s.unknowns; ++c)
      if (!rows[top][c].is_zero()) rows[top][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (std::size_t c = col; c < s.unknowns; ++c)
        if (!rows[top][c].is_zero()) rows[r][c] -= f * rows[top][c];
    }
    e.pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  e.rows = std::move(rows);
  return e;
}

std::vector<ScalarVec> nullspace(const LinearSystem& s) {
  Echelon e = rref(s);
  std::vector<bool> is_pivot(s.unknowns, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<ScalarVec> out;
  for (std::size_t f = 0; f < s.unknowns; ++f) {
    if (is_pivot[f]) continue;
    ScalarVec v(s.unknowns);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const std::vector<ScalarVec>& vectors, std::size_t width) {
  return rref(LinearSystem{width, vectors}).rank();
}

bool same_span(const std::vector<ScalarVec>& a, const std::vector<ScalarVec>& b, std::size_t width) {
  std::vector<ScalarVec> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t r = rank(both, width);
  return r == rank(a, width) && r == rank(b, width);
}

LinearSystem commutator_system(const EnvelopeAlgebra& a, CommutantProbe probe, Exec exec) {
  const std::size_t d = a.dim();
  std::vector<AlgElement> probes;
  if (probe == CommutantProbe::generators) {
    const int n = a.n();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) probes.push_back(a.generator(i, j));
  } else {
    for (std::size_t k = 0; k < d; ++k) probes.push_back(a.basis_element(k));
  }

  // Block p holds the d equations coming from probe p; column k is [b_k, g].
  std::vector<std::vector<ScalarVec>> blocks(probes.size(), std::vector<ScalarVec>(d, ScalarVec(d)));
  auto build = [&](std::size_t p) {
    for (std::size_t k = 0; k < d; ++k) {
      AlgElement c = a.commutator(a.basis_element(k), probes[p]);
      for (std::size_t m = 0; m < d; ++m) blocks[p][m][k] = c[m];
    }
  };
  const auto count = static_cast<std::int64_t>(probes.size());
  if (exec == Exec::parallel) {
    a.fill_table(Exec::parallel);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t p = 0; p < count; ++p) build(static_cast<std::size_t>(p));
  } else {
    for (std::int64_t p = 0; p < count; ++p) build(static_cast<std::size_t>(p));
  }

  LinearSystem s{d, {}};
  for (auto& block : blocks)
    for (auto& row : block) {
      bool zero = std::all_of(row.begin(), row.end(), [](const Scalar& x) { return x.is_zero(); });
      if (!zero) s.rows.push_back(std::move(row));
    }
  return s;
}

std::vector<AlgElement> center_basis(const EnvelopeAlgebra& a, CommutantProbe probe, Exec exec) {
  std::vector<AlgElement> out;
  for (auto& v : nullspace(commutator_system(a, probe, exec))) out.emplace_back(std::move(v));
  return out;
}

bool is_central(const EnvelopeAlgebra& a, const AlgElement& x) {
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (!a.commutator(x, a.basis_element(k)).is_zero()) return false;
  return true;
}

std::vector<NcPoly> closed_form_center(int n) {
  Alphabet al = Alphabet::matrix(n);
  auto e = [&](int i, int j) { return NcPoly::monomial(Word{al.matrix_symbol(i, j)}); };
  const NcPoly e11 = e(1, 1);
  const NcPoly sq = e11 * e11;
  const NcPoly cube = sq * e11;
  const NcPoly fourth = sq * sq;
  const Scalar half = Rational(1, 2);
  const Scalar nn(static_cast<long>(n));

  NcPoly row_col, col_row, row_pivot_col, trace;
  for (int i = 2; i <= n; ++i) {
    row_col += e(1, i) * e(i, 1);
    col_row += e(i, 1) * e(1, i);
    row_pivot_col += e(1, i) * e11 * e(i, 1);
  }
  for (int i = 1; i <= n; ++i) trace += e(i, i);

  NcPoly z1 = (Scalar(static_cast<long>(n - 2)) / nn) * sq - (Scalar(2) / nn) * row_col + fourth;
  NcPoly z2 = Scalar(static_cast<long>(2 - n)) * sq + row_col + col_row;
  NcPoly z3 = -half * e11 + half * cube + row_pivot_col;
  return {z1, z2, z3, trace, NcPoly::constant(Scalar(1))};
}

}  // namespace ncgb
