#pragma once

#include "ncgb/ajts.hpp"
#include "ncgb/center.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ncgb {

enum class UnitFamily { b0, b1, d0, d1, a };

std::string family_name(UnitFamily f);

/// Matrix units of one block: size x size elements, row-major, 1-based access.
struct MatrixUnitFamily {
  UnitFamily kind;
  int size = 0;
  std::vector<AlgElement> units;
  [[nodiscard]] const AlgElement& at(int i, int j) const { return units[(i - 1) * size + (j - 1)]; }
};

struct MatrixUnitPolys {
  UnitFamily kind;
  int size = 0;
  std::vector<NcPoly> units;
};

/// Closed-form units B0, B1, D0, D1 (n x n) and A (1 x 1) as polynomials.
std::vector<MatrixUnitPolys> matrix_unit_polys(int n);

/// The same units as elements of the quotient.
std::vector<MatrixUnitFamily> matrix_units(const EnvelopeAlgebra& a);

struct UnitRelationFailure {
  UnitFamily left_family, right_family;
  int i, j, t, l;
  AlgElement product;
  AlgElement expected;
};

struct UnitRelationReport {
  std::size_t products_checked = 0;
  std::optional<UnitRelationFailure> failure;
  [[nodiscard]] bool ok() const { return !failure.has_value(); }
};

/// U_ij V_tl = d(j,t) U_il for U = V, and 0 across families, over every pair
/// of units. The first failure in (left unit, right unit) order is reported.
UnitRelationReport verify_unit_relations(const EnvelopeAlgebra& a, const std::vector<MatrixUnitFamily>& families,
                                         Exec exec = Exec::parallel);

struct IdentityReport {
  AlgElement defect;                        // sum of diagonal units minus 1
  std::vector<std::string> failed_generators;  // letters not reconstructed
  [[nodiscard]] bool ok() const { return defect.is_zero() && failed_generators.empty(); }
};

/// Diagonal units sum to 1, and every letter is recovered from the units.
IdentityReport resolution_of_identity(const EnvelopeAlgebra& a, const std::vector<MatrixUnitFamily>& families);

/// Coordinates of every unit, one vector per unit.
std::vector<ScalarVec> unit_coordinates(const std::vector<MatrixUnitFamily>& families);

/// Block identities A, sum B0_ii, sum B1_ii, sum D0_ii, sum D1_ii.
std::vector<AlgElement> block_idempotents(const EnvelopeAlgebra& a, const std::vector<MatrixUnitFamily>& families);

/// c with z*u = c*u, if any.
std::optional<Scalar> scalar_action(const EnvelopeAlgebra& a, const AlgElement& z, const AlgElement& u);

struct DecompositionReport {
  std::vector<int> blocks;
  UnitRelationReport units;
  IdentityReport identity;
  std::size_t unit_rank = 0;
  bool full_rank = false;
  bool idempotents_orthogonal = false;
  bool idempotents_central = false;
  [[nodiscard]] bool ok() const {
    return units.ok() && identity.ok() && full_rank && idempotents_orthogonal && idempotents_central;
  }
};

DecompositionReport decompose(const EnvelopeAlgebra& a, Exec exec = Exec::parallel);

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Block sizes [1, n, n, n, n]; throws VerificationFailure if any check fails.
std::vector<int> wedderburn_summary(const EnvelopeAlgebra& a, Exec exec = Exec::parallel);

// Representations on plain n x n matrices.

struct Matrix {
  int n = 0;
  std::vector<Scalar> a;
  static Matrix zero(int n) { return {n, std::vector<Scalar>(static_cast<std::size_t>(n * n))}; }
  static Matrix unit(int n, int i, int j);  // 1-based
  Scalar& operator()(int i, int j) { return a[(i - 1) * n + (j - 1)]; }
  [[nodiscard]] const Scalar& operator()(int i, int j) const { return a[(i - 1) * n + (j - 1)]; }
  [[nodiscard]] Scalar trace() const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend Matrix operator*(const Scalar& c, Matrix x) { return x *= c; }
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n == y.n && x.a == y.a; }
};

/// Images of the triple-system basis e_0..e_{m-1}.
struct Representation {
  std::string name;
  std::vector<Matrix> images;
  [[nodiscard]] Matrix apply(const TripleVec& x) const;
};

/// k = 1..4: E, -E, I*E^T, -I*E^T on the matrix system of size n.
Representation standard_representation(int n, int k);

struct RepresentationFailure {
  int a, b, c;  // 0-based basis indices
  Matrix lhs;   // rho(<abc>)
  Matrix rhs;   // rho(a)rho(b)rho(c) - rho(c)rho(b)rho(a)
};

struct RepresentationReport {
  std::size_t triples_checked = 0;
  std::optional<RepresentationFailure> failure;
  [[nodiscard]] bool ok() const { return !failure.has_value(); }
};

RepresentationReport check_representation(const TripleSystem& t, const Representation& rho, Exec exec = Exec::parallel);

/// Evaluates matrix-alphabet polynomials at rho(e[i,j]); indices of the ones that do not vanish.
std::vector<std::size_t> nonvanishing(const std::vector<NcPoly>& polys, const Alphabet& alphabet,
                                      const Representation& rho);

struct TraceWitness {
  int basis_index;  // 0-based
  Scalar left, right;
};

/// First basis element whose images have different traces. Throws
/// std::invalid_argument when both sides are the same representation.
std::optional<TraceWitness> check_inequivalence(const Representation& x, const Representation& y);

}  // namespace ncgb
