#pragma once

#include "ncgb/exec.hpp"
#include "ncgb/freealg.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ncgb {

/// Sparse vector over the basis of a triple system: (0-based index, coeff),
/// ascending index, no zeros.
using TripleVec = std::vector<std::pair<int, Scalar>>;

TripleVec vec_add(const TripleVec& x, const TripleVec& y, const Scalar& c = Scalar(1));
TripleVec vec_unit(int index);

/// Finite-dimensional triple system given by structure constants
/// <e_a, e_b, e_c> = sum_d gamma[a,b,c,d] e_d (all indices 0-based).
class TripleSystem {
 public:
  explicit TripleSystem(int dim, std::vector<std::string> labels = {});

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  /// n when this is the n x n matrix system, else 0.
  [[nodiscard]] int matrix_n() const { return matrix_n_; }
  [[nodiscard]] Alphabet alphabet() const;

  void set(int a, int b, int c, int d, const Scalar& value);
  [[nodiscard]] Scalar gamma(int a, int b, int c, int d) const;

  /// Product of three basis vectors.
  [[nodiscard]] const TripleVec& product(int a, int b, int c) const;
  /// Trilinear extension.
  [[nodiscard]] TripleVec product(const TripleVec& x, const TripleVec& y, const TripleVec& z) const;

  /// Nonzero structure constants in ascending (a,b,c,d) order.
  [[nodiscard]] std::vector<std::pair<std::array<int, 4>, Scalar>> entries() const;

  friend TripleSystem matrix_ajts(int n);

 private:
  int dim_;
  int matrix_n_ = 0;
  std::vector<std::string> labels_;
  std::map<std::array<int, 3>, TripleVec> table_;
};

/// The n x n matrices under <a,b,c> = abc - cba, basis E_ij in row-major order.
TripleSystem matrix_ajts(int n);

/// {"dim": m, "labels": [...], "gamma": [[a,b,c,d,"scalar"], ...]}, 1-based.
TripleSystem triple_system_from_json(const nlohmann::json& j);
nlohmann::json triple_system_to_json(const TripleSystem& t);

struct AxiomViolation {
  enum class Kind { antisymmetry, identity };
  Kind kind;
  std::vector<int> tuple;  // 0-based basis indices
  TripleVec lhs;
  TripleVec rhs;
};

struct AxiomReport {
  bool sampled = false;
  std::size_t threshold = 0;
  std::size_t triples_checked = 0;
  std::size_t quintuples_checked = 0;
  std::optional<AxiomViolation> violation;
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

inline constexpr std::size_t kAxiomSampleThreshold = 10'000'000;

/// Antisymmetry on all triples; the five-term identity on all quintuples, or on
/// `threshold` uniformly sampled quintuples when m^5 exceeds it. The reported
/// violation is the lexicographically first one among those examined.
AxiomReport check_axioms(const TripleSystem& t, Exec exec = Exec::parallel,
                         std::size_t threshold = kAxiomSampleThreshold, std::uint64_t seed = 1);

enum class RelationMode { full, indexed };

struct EnvelopeRelations {
  Alphabet alphabet;
  RelationMode mode;
  std::vector<NcPoly> generators;
};

/// full: x_a x_b x_c - x_c x_b x_a - <abc> for a < c, plus a = c when <aba> != 0.
/// indexed: the six index families of the matrix presentation (matrix systems only).
EnvelopeRelations envelope_relations(const TripleSystem& t, RelationMode mode);

/// Image of a triple-system vector under the inclusion into F<X>.
NcPoly embed(const TripleVec& v);

/// Transposition e[i,j] -> e[j,i].
SymbolMap eta_symbol_map(int n);

}  // namespace ncgb
