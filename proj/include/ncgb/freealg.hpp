#pragma once

#include "ncgb/arith.hpp"

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncgb {

using Symbol = std::uint16_t;

/// Generator set X of the free algebra. Either the matrix alphabet
/// {e[i,j]} ordered row-major, or a generic alphabet {x[1..m]}.
class Alphabet {
 public:
  static Alphabet matrix(int n);
  static Alphabet generic(int m, std::vector<std::string> labels = {});

  [[nodiscard]] bool is_matrix() const { return matrix_n_ > 0; }
  [[nodiscard]] int matrix_n() const { return matrix_n_; }
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

  // 1-based indices, as printed.
  [[nodiscard]] Symbol matrix_symbol(int row, int col) const;
  [[nodiscard]] int row(Symbol s) const { return s / matrix_n_ + 1; }
  [[nodiscard]] int col(Symbol s) const { return s % matrix_n_ + 1; }
  [[nodiscard]] Symbol generic_symbol(int id) const;

  [[nodiscard]] std::string name(Symbol s) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.matrix_n_ == b.matrix_n_ && a.size_ == b.size_;
  }

 private:
  int matrix_n_ = 0;
  int size_ = 0;
  std::vector<std::string> labels_;
};

/// Element of the free monoid X*. The empty word is the unit monomial.
class Word {
 public:
  using Storage = boost::container::small_vector<Symbol, 10>;

  Word() = default;
  Word(std::initializer_list<Symbol> s) : s_(s) {}
  explicit Word(std::span<const Symbol> s) : s_(s.begin(), s.end()) {}

  [[nodiscard]] std::size_t degree() const { return s_.size(); }
  [[nodiscard]] std::size_t size() const { return s_.size(); }
  [[nodiscard]] bool empty() const { return s_.empty(); }
  [[nodiscard]] Symbol operator[](std::size_t k) const { return s_[k]; }
  [[nodiscard]] auto begin() const { return s_.begin(); }
  [[nodiscard]] auto end() const { return s_.end(); }
  [[nodiscard]] std::span<const Symbol> view() const { return {s_.data(), s_.size()}; }

  void push_back(Symbol s) { s_.push_back(s); }
  void append(const Word& w) { s_.insert(s_.end(), w.s_.begin(), w.s_.end()); }

  [[nodiscard]] Word sub(std::size_t pos, std::size_t len) const;
  [[nodiscard]] Word prefix(std::size_t len) const { return sub(0, len); }
  [[nodiscard]] Word suffix(std::size_t len) const { return sub(size() - len, len); }

  /// Leftmost position at which `f` occurs as a factor, or npos.
  [[nodiscard]] std::size_t find(const Word& f, std::size_t from = 0) const;
  [[nodiscard]] bool contains(const Word& f) const { return find(f) != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    w.append(b);
    return w;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.s_ == b.s_; }

 private:
  Storage s_;
};

Word concat(const Word& u, const Word& m, const Word& v);

/// Degree first, then left-to-right by symbol.
std::strong_ordering deglex_cmp(const Word& u, const Word& v);

struct DeglexLess {
  bool operator()(const Word& u, const Word& v) const { return deglex_cmp(u, v) < 0; }
};
struct DeglexGreater {
  bool operator()(const Word& u, const Word& v) const { return deglex_cmp(u, v) > 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct Term {
  Word word;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of F<X>. Terms are kept in strictly descending deglex order
/// with no zero coefficients, so the leading term is terms().front().
class NcPoly {
 public:
  NcPoly() = default;
  static NcPoly monomial(Word w, Scalar c = Scalar(1));
  static NcPoly constant(Scalar c) { return monomial(Word{}, std::move(c)); }
  /// Accepts terms in any order, merging duplicates and dropping zeros.
  static NcPoly from_terms(std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static NcPoly from_sorted_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t num_terms() const { return terms_.size(); }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t degree() const { return is_zero() ? 0 : terms_.front().word.degree(); }

  /// Leading (deglex-greatest) term; throws std::domain_error on zero.
  [[nodiscard]] const Term& leading_term() const;
  [[nodiscard]] const Word& leading_word() const { return leading_term().word; }
  [[nodiscard]] Scalar coeff(const Word& w) const;

  [[nodiscard]] NcPoly monic() const;
  [[nodiscard]] bool is_monic() const { return !is_zero() && terms_.front().coeff.is_one(); }

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Scalar(-1); }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& f, const NcPoly& g);

  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<Term> terms_;
};

NcPoly poly_mul(const NcPoly& f, const NcPoly& g);

/// c * u * f * v for words u, v.
NcPoly sandwich(const Scalar& c, const Word& u, const NcPoly& f, const Word& v);

std::pair<Word, Scalar> leading_monomial(const NcPoly& f);

/// Symbol permutation; sigma[s] is the image of symbol s.
using SymbolMap = std::vector<Symbol>;

Word apply_antihom(const Word& w, const SymbolMap& sigma);
/// Reverses every word and maps its symbols through sigma, extended linearly.
NcPoly apply_antihom(const NcPoly& f, const SymbolMap& sigma);

// Text grammar: terms in descending deglex joined by " + " / " - ",
// words as sym*sym with runs written sym^k, `1*` suppressed.
std::string render_word(const Word& w, const Alphabet& a);
std::string render_scalar_factor(const Scalar& c);
std::string render(const NcPoly& f, const Alphabet& a);
NcPoly parse_poly(std::string_view text, const Alphabet& a);
Word parse_word(std::string_view text, const Alphabet& a);

}  // namespace ncgb
