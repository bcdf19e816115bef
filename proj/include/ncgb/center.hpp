#pragma once

#include "ncgb/envelope.hpp"

#include <vector>

namespace ncgb {

using ScalarVec = std::vector<Scalar>;

/// Homogeneous system rows * x = 0 over Q(i).
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<ScalarVec> rows;
};

struct Echelon {
  std::vector<ScalarVec> rows;  // reduced, one per pivot
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivot: first column with a nonzero entry among the
/// remaining rows, taken from the lowest-index such row.
Echelon rref(const LinearSystem& s);

/// One vector per free column (that column set to 1, other free columns 0),
/// free columns ascending.
std::vector<ScalarVec> nullspace(const LinearSystem& s);

std::size_t rank(const std::vector<ScalarVec>& vectors, std::size_t width);

/// True iff both families span the same subspace.
bool same_span(const std::vector<ScalarVec>& a, const std::vector<ScalarVec>& b, std::size_t width);

enum class CommutantProbe {
  generators,  // the n^2 letters, which generate the algebra
  basis,       // every basis element; slower, used as a cross-check
};

/// Equations x*g - g*x = 0 in the coordinates of x, stacked over the probe set.
LinearSystem commutator_system(const EnvelopeAlgebra& a, CommutantProbe probe = CommutantProbe::generators,
                               Exec exec = Exec::parallel);

std::vector<AlgElement> center_basis(const EnvelopeAlgebra& a, CommutantProbe probe = CommutantProbe::generators,
                                     Exec exec = Exec::parallel);

bool is_central(const EnvelopeAlgebra& a, const AlgElement& x);

/// The five closed-form central elements z1..z5 as polynomials.
std::vector<NcPoly> closed_form_center(int n);

}  // namespace ncgb
