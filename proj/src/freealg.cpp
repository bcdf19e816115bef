#include "ncgb/freealg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncgb {

Alphabet Alphabet::matrix(int n) {
  if (n < 1) throw std::invalid_argument("matrix alphabet needs n >= 1");
  Alphabet a;
  a.matrix_n_ = n;
  a.size_ = n * n;
  return a;
}

Alphabet Alphabet::generic(int m, std::vector<std::string> labels) {
  if (m < 0) throw std::invalid_argument("alphabet size must be non-negative");
  if (!labels.empty() && static_cast<int>(labels.size()) != m)
    throw std::invalid_argument("label count does not match alphabet size");
  Alphabet a;
  a.size_ = m;
  a.labels_ = std::move(labels);
  return a;
}

Symbol Alphabet::matrix_symbol(int row, int col) const {
  if (!is_matrix() || row < 1 || col < 1 || row > matrix_n_ || col > matrix_n_)
    throw std::out_of_range("matrix symbol out of range");
  return static_cast<Symbol>((row - 1) * matrix_n_ + (col - 1));
}

Symbol Alphabet::generic_symbol(int id) const {
  if (is_matrix() || id < 1 || id > size_) throw std::out_of_range("generic symbol out of range");
  return static_cast<Symbol>(id - 1);
}

std::string Alphabet::name(Symbol s) const {
  if (is_matrix()) return "e[" + std::to_string(row(s)) + "," + std::to_string(col(s)) + "]";
  return "x[" + std::to_string(s + 1) + "]";
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  Word w;
  w.s_.assign(s_.begin() + static_cast<std::ptrdiff_t>(pos),
              s_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

std::size_t Word::find(const Word& f, std::size_t from) const {
  if (f.size() > size()) return npos;
  for (std::size_t p = from; p + f.size() <= size(); ++p)
    if (std::equal(f.s_.begin(), f.s_.end(), s_.begin() + static_cast<std::ptrdiff_t>(p))) return p;
  return npos;
}

Word concat(const Word& u, const Word& m, const Word& v) {
  Word w = u;
  w.append(m);
  w.append(v);
  return w;
}

std::strong_ordering deglex_cmp(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t k = 0; k < u.size(); ++k)
    if (u[k] != v[k]) return u[k] <=> v[k];
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull ^ w.size();
  for (Symbol s : w) {
    h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

NcPoly NcPoly::monomial(Word w, Scalar c) {
  NcPoly p;
  if (!c.is_zero()) p.terms_.push_back({std::move(w), std::move(c)});
  return p;
}

NcPoly NcPoly::from_terms(std::vector<Term> terms) {
  std::map<Word, Scalar, DeglexGreater> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.word), t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  NcPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [w, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({w, c});
  return p;
}

NcPoly NcPoly::from_sorted_terms(std::vector<Term> terms) {
  NcPoly p;
  p.terms_ = std::move(terms);
  return p;
}

const Term& NcPoly::leading_term() const {
  if (is_zero()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Word& x) { return deglex_cmp(t.word, x) > 0; });
  if (it != terms_.end() && it->word == w) return it->coeff;
  return Scalar(0);
}

NcPoly NcPoly::monic() const {
  if (is_zero()) return {};
  NcPoly p = *this;
  if (!p.is_monic()) p *= terms_.front().coeff.inv();
  return p;
}

namespace {

// Merge of two descending term lists: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) c = std::strong_ordering::less;
    else if (j == b.size()) c = std::strong_ordering::greater;
    else c = deglex_cmp(a[i].word, b[j].word);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (subtract) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Scalar s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].word, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& f, const NcPoly& g) {
  std::vector<Term> terms;
  terms.reserve(f.num_terms() * g.num_terms());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) terms.push_back({a.word * b.word, a.coeff * b.coeff});
  return NcPoly::from_terms(std::move(terms));
}

NcPoly poly_mul(const NcPoly& f, const NcPoly& g) { return f * g; }

NcPoly sandwich(const Scalar& c, const Word& u, const NcPoly& f, const Word& v) {
  // Left/right multiplication by fixed words preserves deglex order.
  std::vector<Term> terms;
  terms.reserve(f.num_terms());
  if (c.is_zero()) return {};
  for (const auto& t : f.terms()) terms.push_back({concat(u, t.word, v), c * t.coeff});
  return NcPoly::from_sorted_terms(std::move(terms));
}

std::pair<Word, Scalar> leading_monomial(const NcPoly& f) {
  const Term& t = f.leading_term();
  return {t.word, t.coeff};
}

Word apply_antihom(const Word& w, const SymbolMap& sigma) {
  Word out;
  for (std::size_t k = w.size(); k-- > 0;) out.push_back(sigma.at(w[k]));
  return out;
}

NcPoly apply_antihom(const NcPoly& f, const SymbolMap& sigma) {
  std::vector<Term> terms;
  terms.reserve(f.num_terms());
  for (const auto& t : f.terms()) terms.push_back({apply_antihom(t.word, sigma), t.coeff});
  return NcPoly::from_terms(std::move(terms));
}

}  // namespace ncgb
