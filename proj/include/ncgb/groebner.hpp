#pragma once

#include "ncgb/freealg.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace ncgb {

/// A set of monic polynomials used as rewrite rules LM(g) -> LM(g) - g,
/// keyed by their (unique) leading words in ascending deglex.
class RewriteSystem {
 public:
  using RuleMap = std::map<Word, NcPoly, DeglexLess>;

  RewriteSystem() = default;
  explicit RewriteSystem(const std::vector<NcPoly>& monic_elements);

  /// Adds a monic polynomial whose leading word is not yet present.
  void insert(NcPoly monic);
  bool erase(const Word& lm);

  [[nodiscard]] const RuleMap& rules() const { return rules_; }
  [[nodiscard]] std::vector<NcPoly> elements() const;
  [[nodiscard]] std::size_t size() const { return rules_.size(); }
  [[nodiscard]] bool empty() const { return rules_.empty(); }
  [[nodiscard]] std::vector<Word> obstructions() const;
  [[nodiscard]] std::size_t max_obstruction_length() const;
  [[nodiscard]] bool is_unit_ideal() const;

  [[nodiscard]] const NcPoly* find_exact(const Word& lm) const;

  struct Match {
    const NcPoly* element;
    std::size_t position;
  };
  /// Element with the smallest leading word among those dividing `w`, at
  /// its leftmost occurrence.
  [[nodiscard]] std::optional<Match> find_reducer(const Word& w) const;
  /// Every (element, position) pair with LM(element) occurring in `w`.
  [[nodiscard]] std::vector<Match> all_matches(const Word& w) const;
  /// True if some leading word is a suffix of `w`.
  [[nodiscard]] bool has_obstruction_suffix(const Word& w) const;
  [[nodiscard]] bool is_normal(const Word& w) const { return !find_reducer(w).has_value(); }

  [[nodiscard]] bool is_self_reduced() const;

 private:
  RuleMap rules_;
  std::unordered_map<Word, const NcPoly*, WordHash> index_;
  std::map<std::size_t, std::size_t> length_count_;
};

struct ReductionStep {
  Scalar coeff;
  Word left;
  Word element;  // leading word of the rule applied
  Word right;
};

/// Witness that f - NF(f) = sum coeff * left * g_element * right.
struct ReductionCertificate {
  std::vector<ReductionStep> steps;
};

/// Deterministic normal form: repeatedly rewrites the deglex-greatest
/// reducible word of the support.
NcPoly normal_form(const NcPoly& f, const RewriteSystem& g, ReductionCertificate* cert = nullptr);

/// Same ideal class, but each step rewrites a uniformly chosen reducible
/// word at a uniformly chosen occurrence. Only meaningful for comparing
/// against normal_form on closed systems.
NcPoly normal_form_randomized(const NcPoly& f, const RewriteSystem& g, std::mt19937_64& rng);

bool verify_certificate(const NcPoly& f, const NcPoly& nf, const RewriteSystem& g,
                        const ReductionCertificate& cert);

/// Overlap LM(g)*u = v*LM(h) with `length` shared symbols.
struct Overlap {
  std::size_t length;
  Word u;  // proper right factor of LM(h)
  Word v;  // proper left factor of LM(g)
  Word word;  // LM(g)*u
};

std::vector<Overlap> overlaps(const Word& lm_g, const Word& lm_h);

/// All compositions g*u - v*h. Requires monic g, h whose leading words do
/// not divide each other.
std::vector<NcPoly> compositions(const NcPoly& g, const NcPoly& h);

/// Interreduces `generators` into a monic, self-reduced system generating
/// the same two-sided ideal. A nonzero constant collapses the result to {1}.
RewriteSystem self_reduce(const std::vector<NcPoly>& generators);

struct CompletionStats {
  std::size_t compositions = 0;
  std::size_t zero_reductions = 0;
  std::size_t additions = 0;
  std::size_t interreductions = 0;
};

struct CompletionResult {
  enum class Status { complete, degree_bound_exceeded };
  Status status = Status::complete;
  RewriteSystem system;
  /// Set when the degree bound stopped completion.
  std::optional<NcPoly> offending;
  std::size_t offending_degree = 0;
  CompletionStats stats;

  [[nodiscard]] bool ok() const { return status == Status::complete; }
};

using ProgressFn = std::function<void(const std::string&)>;

/// Diamond-lemma completion. Compositions are processed in ascending
/// deglex of their overlap words; the basis is interreduced after every
/// batch of equal overlap degree.
CompletionResult complete(const std::vector<NcPoly>& generators, std::size_t max_degree,
                          const ProgressFn& progress = {});

std::size_t default_max_degree(const std::vector<NcPoly>& generators);

/// Compositions of `g` (including self-overlaps) whose normal form is
/// nonzero. Empty iff `g` is a Groebner basis.
std::vector<NcPoly> closure_violations(const RewriteSystem& g);

/// Both generating sets span the same ideal: each side's generators reduce
/// to zero modulo the other side's completed basis.
bool same_ideal(const std::vector<NcPoly>& a, const RewriteSystem& gb_a, const std::vector<NcPoly>& b,
                const RewriteSystem& gb_b);

struct NormalWordReport {
  bool finite = false;
  /// counts[d] = number of normal words of degree d.
  std::vector<std::size_t> counts;
  /// All normal words in ascending deglex when finite; empty otherwise.
  std::vector<Word> basis;
  [[nodiscard]] std::size_t total() const;
};

/// Finiteness is decided by cycle detection on the factor-avoidance graph;
/// counts are reported up to `max_degree` when infinite.
NormalWordReport normal_words(const RewriteSystem& g, int alphabet_size, std::size_t max_degree);

/// Factor-avoidance graph: vertices are the normal words of length
/// (max obstruction length - 1), edges the normal one-symbol extensions.
struct AvoidanceGraph {
  std::vector<Word> vertices;
  std::vector<std::vector<std::size_t>> edges;
  [[nodiscard]] bool has_cycle() const;
};

AvoidanceGraph avoidance_graph(const RewriteSystem& g, int alphabet_size);

}  // namespace ncgb
