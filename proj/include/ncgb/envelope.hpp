#pragma once

#include "ncgb/ajts.hpp"
#include "ncgb/exec.hpp"
#include "ncgb/groebner.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ncgb {

/// Coordinate vector over the normal-word basis of a finite quotient.
class AlgElement {
 public:
  AlgElement() = default;
  explicit AlgElement(std::size_t dim) : coords_(dim) {}
  explicit AlgElement(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  [[nodiscard]] std::size_t dim() const { return coords_.size(); }
  [[nodiscard]] const Scalar& operator[](std::size_t k) const { return coords_[k]; }
  Scalar& operator[](std::size_t k) { return coords_[k]; }
  [[nodiscard]] const std::vector<Scalar>& coords() const { return coords_; }
  [[nodiscard]] bool is_zero() const;

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  AlgElement& operator*=(const Scalar& c);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(const Scalar& c, AlgElement a) { return a *= c; }
  friend bool operator==(const AlgElement& a, const AlgElement& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Scalar> coords_;
};

class DegreeBoundExceeded : public std::runtime_error {
 public:
  DegreeBoundExceeded(std::string what, CompletionResult partial)
      : std::runtime_error(std::move(what)), partial(std::move(partial)) {}
  CompletionResult partial;
};

class InfiniteQuotient : public std::runtime_error {
 public:
  InfiniteQuotient(std::string what, NormalWordReport growth)
      : std::runtime_error(std::move(what)), growth(std::move(growth)) {}
  NormalWordReport growth;
};

struct EnvelopeOptions {
  RelationMode mode = RelationMode::full;
  std::size_t max_degree = 0;  // 0: default bound of the relations
  ProgressFn progress;
};

/// Finite-dimensional quotient F<X>/I with its normal-word basis and a lazily
/// filled multiplication table.
class EnvelopeAlgebra {
 public:
  using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

  static EnvelopeAlgebra build(const TripleSystem& t, const EnvelopeOptions& opts = {});
  static EnvelopeAlgebra build(int n, const EnvelopeOptions& opts = {});

  [[nodiscard]] int n() const { return alphabet_.matrix_n(); }
  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] const RewriteSystem& gb() const { return gb_; }
  [[nodiscard]] const CompletionStats& stats() const { return stats_; }
  [[nodiscard]] const std::vector<Word>& basis() const { return basis_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::optional<std::size_t> index_of(const Word& w) const;

  [[nodiscard]] AlgElement zero() const { return AlgElement(dim()); }
  [[nodiscard]] AlgElement unit() const;
  [[nodiscard]] AlgElement basis_element(std::size_t k) const;
  /// Image of e[i,j] (1-based) for matrix alphabets.
  [[nodiscard]] AlgElement generator(int i, int j) const;
  /// Class of an arbitrary polynomial, via its normal form.
  [[nodiscard]] AlgElement from_poly(const NcPoly& f) const;
  [[nodiscard]] NcPoly to_poly(const AlgElement& x) const;

  /// Product of basis elements i and j; computed on first use.
  [[nodiscard]] const SparseRow& entry(std::size_t i, std::size_t j) const;
  [[nodiscard]] AlgElement entry_element(std::size_t i, std::size_t j) const;
  [[nodiscard]] AlgElement multiply(const AlgElement& x, const AlgElement& y) const;
  [[nodiscard]] AlgElement commutator(const AlgElement& x, const AlgElement& y) const;

  /// Fills every entry in row-major order.
  void fill_table(Exec exec = Exec::parallel) const;
  [[nodiscard]] std::size_t filled_entries() const;

  /// Replaces a table entry; used to exercise failure paths.
  void override_entry(std::size_t i, std::size_t j, const AlgElement& value);

  EnvelopeAlgebra(EnvelopeAlgebra&&) noexcept = default;
  EnvelopeAlgebra& operator=(EnvelopeAlgebra&&) noexcept = default;

 private:
  EnvelopeAlgebra() = default;
  [[nodiscard]] SparseRow compute_entry(std::size_t i, std::size_t j) const;
  [[nodiscard]] SparseRow to_row(const NcPoly& nf) const;

  Alphabet alphabet_ = Alphabet::generic(0);
  RewriteSystem gb_;
  CompletionStats stats_;
  std::vector<Word> basis_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::unique_ptr<SparseRow[]> table_;
  std::unique_ptr<std::once_flag[]> filled_;
  std::unique_ptr<std::atomic<bool>[]> ready_;
};

struct AssociativityFailure {
  std::size_t i, j, k;
  AlgElement left;   // (b_i b_j) b_k
  AlgElement right;  // b_i (b_j b_k)
};

struct AssociativityReport {
  std::size_t triples_checked = 0;
  bool exhaustive = true;
  std::optional<AssociativityFailure> failure;
  [[nodiscard]] bool ok() const { return !failure.has_value(); }
};

/// Exhaustive over all basis triples when `samples` is 0, otherwise that many
/// uniformly drawn triples. Reports the first failure in triple order.
AssociativityReport check_associativity(const EnvelopeAlgebra& a, std::size_t samples = 0, std::uint64_t seed = 1,
                                        Exec exec = Exec::parallel);

}  // namespace ncgb
