#pragma once

#include "ncgb/freealg.hpp"

#include <set>
#include <string>
#include <vector>

namespace ncgb::fixture {

/// The twenty closed-form families of the reduced Groebner basis of the
/// matrix envelope, instantiated at size n, made monic, duplicates removed,
/// in ascending order of leading word.
inline std::vector<NcPoly> closed_form_groebner_basis(int n) {
  Alphabet al = Alphabet::matrix(n);
  auto e = [&](int i, int j) { return NcPoly::monomial(Word{al.matrix_symbol(i, j)}); };
  const NcPoly e11 = e(1, 1), sq = e11 * e11, cube = sq * e11;
  const Scalar half = Rational(1, 2);
  std::vector<NcPoly> out;
  auto add = [&](const NcPoly& f) { out.push_back(f.monic()); };

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i != 1 && j != 1) add(e(i, 1) * e11 * e(1, j) - e(1, j) * e11 * e(i, 1) - e(i, j));
      for (int k = 1; k <= n; ++k) {
        if (k != i && j != 1) add(e(i, j) * e(j, k) - e(i, 1) * e(1, k));
        if (j != k && i != 1) add(e(i, j) * e(k, i) - e(1, j) * e(k, 1));
        for (int l = 1; l <= n; ++l)
          if (i != l && j != k) add(e(i, j) * e(k, l));
        if (k != j && i != j) add(e(i, 1) * e(1, j) * e(k, 1));
        if (i != j && k != j) add(e(1, i) * e(j, 1) * e(1, k));
      }
      if (i != 1 && j != 1) add(e(i, j) * e(j, i) - e(i, 1) * e(1, i) - e(1, j) * e(j, 1) + sq);
      if (i != 1 && j != i) add(e(i, 1) * e(1, j) * e(j, 1) - sq * e(i, 1) - e(i, 1));
      if (i != 1 && j != 1 && i != j) {
        add(e(j, 1) * e(1, j) * e(i, 1) - sq * e(i, 1));
        add(e(1, i) * e(i, 1) * e(1, j) - sq * e(1, j));
      }
      if (i != j && i != 1) add(e(1, i) * e(j, 1) * e(1, j) - sq * e(1, i) + e(1, i));
    }
  for (int i = 2; i <= n; ++i) {
    add(e(i, 1) * e(1, i) * e(i, 1) - Scalar(2) * sq * e(i, 1) - e(i, 1));
    add(e(1, i) * e(i, 1) * e(1, i) - Scalar(2) * sq * e(1, i) + e(1, i));
    add(e11 * e(1, i) * e(i, 1) - half * cube - half * e11);
    add(e11 * e(i, 1) * e(1, i) - half * cube + half * e11);
    add(e(1, i) * e(i, 1) * e11 - half * cube - half * e11);
    add(e(i, 1) * e(1, i) * e11 - half * cube + half * e11);
    add(cube * e(1, i) - e11 * e(1, i));
    add(cube * e(i, 1) + e11 * e(i, 1));
  }
  add(sq * cube - e11);

  std::sort(out.begin(), out.end(), [](const NcPoly& f, const NcPoly& g) {
    return deglex_cmp(f.leading_term().word, g.leading_term().word) < 0;
  });
  std::vector<NcPoly> unique;
  for (auto& f : out)
    if (unique.empty() || !(unique.back() == f)) unique.push_back(std::move(f));
  return unique;
}

}  // namespace ncgb::fixture
