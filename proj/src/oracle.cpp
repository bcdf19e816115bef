#include "ncgb/oracle.hpp"

#include <algorithm>
#include <utility>

namespace ncgb {

namespace {

struct Sym {
  int row;
  int col;
};

Sym unpack(Symbol s, int n) { return {s / n + 1, s % n + 1}; }

Symbol pack(int row, int col, int n) { return static_cast<Symbol>((row - 1) * n + (col - 1)); }

}  // namespace

std::optional<ShapedWord> classify(const Word& w, int n) {
  std::vector<Sym> s;
  for (Symbol x : w) s.push_back(unpack(x, n));
  auto pivot = [](const Sym& x) { return x.row == 1 && x.col == 1; };
  switch (s.size()) {
    case 0:
      return ShapedWord{Shape::unit};
    case 1:
      return ShapedWord{Shape::letter, s[0].row, s[0].col};
    case 2:
      if (s[0].col == 1 && s[1].row == 1) return ShapedWord{Shape::col_row, s[0].row, s[1].col};
      if (s[0].row == 1 && s[1].col == 1) return ShapedWord{Shape::row_col, s[0].col, s[1].row};
      return std::nullopt;
    case 3:
      if (s[0].row == 1 && pivot(s[1]) && s[2].col == 1 && s[2].row != 1)
        return ShapedWord{Shape::row_pivot_col, s[0].col, s[2].row};
      if (pivot(s[0]) && pivot(s[1]) && s[2].row == 1) return ShapedWord{Shape::pivot_sq_row, 0, s[2].col};
      return std::nullopt;
    case 4:
      if (std::all_of(s.begin(), s.end(), pivot)) return ShapedWord{Shape::pivot_fourth};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Word shaped_word(const ShapedWord& s, int n) {
  const Symbol p = pack(1, 1, n);
  switch (s.shape) {
    case Shape::unit:
      return {};
    case Shape::letter:
      return {pack(s.a, s.b, n)};
    case Shape::col_row:
      return {pack(s.a, 1, n), pack(1, s.b, n)};
    case Shape::row_col:
      return {pack(1, s.a, n), pack(s.b, 1, n)};
    case Shape::row_pivot_col:
      return {pack(1, s.a, n), p, pack(s.b, 1, n)};
    case Shape::pivot_sq_row:
      return {p, p, pack(1, s.b, n)};
    case Shape::pivot_fourth:
      return {p, p, p, p};
  }
  return {};
}

std::vector<Word> explicit_basis(int n) {
  std::vector<ShapedWord> shapes{{Shape::unit}, {Shape::pivot_fourth}};
  for (int a = 1; a <= n; ++a) {
    shapes.push_back({Shape::pivot_sq_row, 0, a});
    for (int b = 1; b <= n; ++b) {
      shapes.push_back({Shape::letter, a, b});
      shapes.push_back({Shape::col_row, a, b});
      if (a != 1 || b != 1) shapes.push_back({Shape::row_col, a, b});
      if (b != 1) shapes.push_back({Shape::row_pivot_col, a, b});
    }
  }
  std::vector<Word> out;
  for (const auto& s : shapes) out.push_back(shaped_word(s, n));
  std::sort(out.begin(), out.end(), DeglexLess{});
  return out;
}

namespace {

Rational d(int a, int b) { return a == b ? 1 : 0; }
Rational dh(int a, int b) { return a == b ? 0 : 1; }
const Rational kHalf(1, 2);

// Accumulates c * word, where the word is given as a list of (row, col).
class Sum {
 public:
  explicit Sum(int n) : n_(n) {}

  Sum& add(const Rational& c, std::initializer_list<std::pair<int, int>> w) {
    if (c.is_zero()) return *this;
    Word word;
    for (auto [r, s] : w) word.push_back(pack(r, s, n_));
    terms_.push_back({std::move(word), Scalar(c)});
    return *this;
  }
  // c * e[1,1]^k
  Sum& pivot(const Rational& c, int k) {
    if (c.is_zero()) return *this;
    Word word;
    for (int t = 0; t < k; ++t) word.push_back(pack(1, 1, n_));
    terms_.push_back({std::move(word), Scalar(c)});
    return *this;
  }
  // c * e[1,1]^2 * e[r,s]
  Sum& pivot_sq(const Rational& c, int r, int s) { return add(c, {{1, 1}, {1, 1}, {r, s}}); }

  NcPoly done() { return NcPoly::from_terms(std::move(terms_)); }

 private:
  int n_;
  std::vector<Term> terms_;
};

using P = std::pair<int, int>;

// Products with a single letter on the left: e[i,j] * v.
NcPoly letter_times(int n, int i, int j, const ShapedWord& v) {
  Sum s(n);
  switch (v.shape) {
    case Shape::letter: {
      int k = v.a, l = v.b;
      Rational djk = d(j, k);
      s.add(djk * d(i, l) * (d(i, 1) + dh(i, 1) * dh(j, 1)), {{1, j}, {j, 1}});
      s.add(djk * d(i, l) * (d(j, 1) * dh(i, 1) + dh(i, 1) * dh(j, 1)), {{i, 1}, {1, i}});
      s.pivot(-(djk * d(i, l) * dh(i, 1) * dh(j, 1)), 2);
      s.add(djk * dh(i, l), {{i, 1}, {1, l}});
      s.add(dh(j, k) * d(i, l), {{1, j}, {k, 1}});
      break;
    }
    case Shape::col_row: {
      int k = v.a, l = v.b;
      Rational di1 = d(i, 1);
      s.pivot(di1 * (d(j, k) * d(l, 1) * (d(l, j) + kHalf * dh(l, j)) + kHalf * dh(j, k) * d(k, l) * d(j, 1)), 3);
      s.pivot_sq(di1 * dh(j, k) * d(k, l) * dh(j, 1), 1, j);
      s.pivot_sq(di1 * d(j, k) * (Rational(2) * d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1))), 1, l);
      s.pivot(di1 * kHalf * (d(l, 1) * d(j, k) * dh(l, j) - dh(j, k) * d(k, l) * d(j, 1)), 1);
      s.add(-(di1 * (d(j, k) * d(l, j) * dh(l, 1) + dh(j, k) * d(k, l) * dh(j, 1))), {{1, j}});
      s.add(dh(i, 1) * d(j, k), {{1, l}, {1, 1}, {i, 1}});
      s.add(dh(i, 1) * d(j, k), {{i, l}});
      break;
    }
    case Shape::row_col: {
      int k = v.a, l = v.b;
      Rational dj1 = d(j, 1);
      s.pivot(dj1 * kHalf * (d(i, k) * d(l, 1) * dh(i, 1) + dh(i, k) * dh(l, 1) * d(k, l) * d(i, 1)), 3);
      s.pivot_sq(dj1 * dh(i, k) * d(k, l) * dh(i, 1) * dh(l, 1), i, 1);
      s.pivot_sq(dj1 * d(i, k) * (d(i, 1) + dh(i, 1) * dh(l, 1) * (Rational(2) * d(i, l) + dh(i, l))), l, 1);
      s.pivot(dj1 * kHalf * (dh(i, k) * dh(l, 1) * d(k, l) * d(i, 1) - d(i, k) * d(l, 1) * dh(i, 1)), 1);
      s.add(dj1 * dh(i, 1) * dh(l, 1) * (d(i, k) * d(i, l) + dh(i, k) * d(k, l)), {{i, 1}});
      Rational tail = dh(j, 1) * d(i, k);
      s.pivot_sq(tail * d(l, 1), 1, j);
      s.add(-(tail * d(l, 1)), {{1, j}});
      s.add(tail * dh(l, 1), {{1, j}, {1, 1}, {l, 1}});
      break;
    }
    case Shape::row_pivot_col: {
      int k = v.a, l = v.b;
      s.add(-d(i, k), {{1, j}, {l, 1}});
      Rational c = d(i, k) * dh(j, 1) * d(j, l) * kHalf;
      s.pivot(c, 4).pivot(c, 2);
      break;
    }
    case Shape::pivot_sq_row: {
      int k = v.b;
      Rational dj1 = d(j, 1);
      s.pivot(dj1 * d(i, 1) * d(k, 1), 4);
      s.add(dj1 * d(i, 1) * dh(k, 1), {{1, 1}, {1, k}});
      Rational c = dj1 * dh(i, 1) * d(i, k) * kHalf;
      s.pivot(c, 4).pivot(-c, 2);
      s.add(dj1 * dh(i, 1), {{i, 1}, {1, k}});
      s.add(-(dh(j, 1) * d(i, 1) * d(k, 1)), {{1, j}, {1, 1}});
      break;
    }
    case Shape::pivot_fourth: {
      Rational dj1 = d(j, 1);
      s.pivot(dj1 * d(i, 1), 1);
      s.pivot_sq(dj1 * dh(i, 1), i, 1);
      s.add(dj1 * dh(i, 1), {{i, 1}});
      Rational c = dh(j, 1) * d(i, 1);
      s.pivot_sq(-c, 1, j);
      s.add(c, {{1, j}});
      break;
    }
    case Shape::unit:
      break;
  }
  return s.done();
}

// e[i,1] e[1,j] * v.
NcPoly col_row_times(int n, int i, int j, const ShapedWord& v) {
  Sum s(n);
  switch (v.shape) {
    case Shape::letter: {
      // Written with u = e[l,1] e[1,k] and v = e[j,i].
      int l = i, k = j;
      int jj = v.a, ii = v.b;
      Rational di1 = d(ii, 1);
      Rational djk = d(jj, k);
      s.pivot(di1 * (djk * d(l, 1) * (d(l, jj) + kHalf * dh(l, jj)) + kHalf * dh(jj, k) * d(k, l) * d(jj, 1)), 3);
      s.pivot_sq(di1 * dh(jj, k) * d(k, l) * dh(jj, 1), jj, 1);
      Rational c = di1 * djk * (Rational(2) * d(l, jj) * dh(l, 1) + dh(l, jj) * (d(jj, 1) + dh(jj, 1) * dh(l, 1)));
      s.pivot_sq(c, l, 1);
      s.add(c, {{l, 1}});
      s.pivot(di1 * kHalf * (d(l, 1) * djk * dh(l, jj) - dh(jj, k) * d(k, l) * d(jj, 1)), 1);
      s.add(-(di1 * djk * d(l, jj) * dh(l, 1)), {{jj, 1}});
      Rational tail = dh(ii, 1) * djk;
      s.pivot_sq(tail * d(l, 1), 1, ii);
      s.add(tail * dh(l, 1), {{1, ii}, {1, 1}, {l, 1}});
      s.add(tail * dh(l, 1), {{l, ii}});
      break;
    }
    case Shape::col_row: {
      int k = v.a, l = v.b;
      Rational djk = d(j, k);
      s.pivot(djk * d(l, 1) * d(l, j) * d(i, 1), 4);
      Rational c = djk * d(l, 1) * kHalf * dh(l, j) * d(i, 1);
      s.pivot(c, 4).pivot(c, 2);
      Rational m = kHalf * (djk * dh(i, 1) * d(i, l) *
                                (Rational(2) * d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1))) +
                            dh(j, k) * d(k, l) * (dh(j, 1) * dh(i, 1) * d(i, j) + d(j, 1) * d(i, 1)));
      s.pivot(m, 4).pivot(-m, 2);
      s.add(djk * (d(l, 1) * dh(i, 1) + d(l, j) * dh(l, 1) + dh(l, j) * (d(j, 1) + dh(j, 1) * dh(l, 1))),
            {{i, 1}, {1, l}});
      break;
    }
    case Shape::row_col: {
      int k = v.a, l = v.b;
      Rational c = d(j, 1) * dh(k, 1) * d(k, l) * kHalf;
      s.pivot(c * d(i, 1), 4).pivot(c * d(i, 1), 2);
      s.add(c * Rational(2) * dh(i, 1), {{i, 1}, {1, 1}});
      s.add(-(d(k, 1) * (d(j, 1) * d(i, 1) + dh(j, 1) * dh(l, 1) * d(i, j))), {{1, 1}, {l, 1}});
      break;
    }
    case Shape::row_pivot_col: {
      int k = v.a, l = v.b;
      s.pivot_sq(-(d(k, 1) * (d(i, 1) * d(j, 1) + dh(j, 1) * d(i, j))), l, 1);
      break;
    }
    case Shape::pivot_sq_row: {
      int k = v.b;
      Rational dj1 = d(j, 1);
      s.pivot(dj1 * d(k, 1) * d(i, 1), 1);
      s.pivot_sq(dj1 * d(k, 1) * dh(i, 1), i, 1);
      s.add(dj1 * d(k, 1) * dh(i, 1), {{i, 1}});
      s.pivot_sq(dj1 * dh(k, 1) * d(i, 1), 1, k);
      s.add(dj1 * dh(k, 1) * dh(i, 1), {{1, k}, {1, 1}, {i, 1}});
      s.add(dj1 * dh(k, 1) * dh(i, 1), {{i, k}});
      Rational c = dh(j, 1) * d(k, 1) * d(i, j) * kHalf;
      s.pivot(-c, 3).pivot(c, 1);
      break;
    }
    case Shape::pivot_fourth: {
      s.add(d(j, 1), {{i, 1}, {1, 1}});
      Rational c = dh(j, 1) * d(j, i) * kHalf;
      s.pivot(c, 2).pivot(-c, 4);
      break;
    }
    case Shape::unit:
      break;
  }
  return s.done();
}

// e[1,i] e[j,1] * v with (i,j) != (1,1).
NcPoly row_col_times(int n, int i, int j, const ShapedWord& v) {
  Sum s(n);
  switch (v.shape) {
    case Shape::letter: {
      // Written with u = e[1,l] e[k,1] and v = e[jj,ii].
      int l = i, k = j;
      int jj = v.a, ii = v.b;
      Rational dj1 = d(jj, 1);
      s.pivot(dj1 * kHalf * (d(ii, k) * d(l, 1) * dh(ii, 1) + dh(ii, k) * dh(l, 1) * d(k, l) * d(ii, 1)), 3);
      s.pivot_sq(dj1 * dh(ii, k) * d(k, l) * dh(ii, 1) * dh(l, 1), 1, ii);
      Rational c = dj1 * d(ii, k) * (d(ii, 1) + dh(ii, 1) * dh(l, 1) * (Rational(2) * d(ii, l) + dh(ii, l)));
      s.pivot_sq(c, 1, l);
      s.add(-c, {{1, l}});
      s.pivot(dj1 * kHalf * (dh(ii, k) * dh(l, 1) * d(k, l) * d(ii, 1) - d(ii, k) * d(l, 1) * dh(ii, 1)), 1);
      s.add(dj1 * dh(ii, 1) * dh(l, 1) * d(ii, k) * d(ii, l), {{1, ii}});
      Rational tail = dh(jj, 1) * d(ii, k);
      s.pivot_sq(tail * d(l, 1), jj, 1);
      s.add(tail * dh(l, 1), {{1, l}, {1, 1}, {jj, 1}});
      break;
    }
    case Shape::col_row:
      throw UncoveredCase("row_col * col_row is evaluated through the transposition");
    case Shape::row_col: {
      int k = v.a, l = v.b;
      Rational djk = d(j, k);
      Rational a = kHalf * d(i, 1) * djk * d(l, 1) * dh(j, 1);
      s.pivot(a, 4).pivot(-a, 2);
      Rational b = kHalf * (djk * dh(i, 1) * d(i, l) * (d(j, 1) + dh(j, 1) * dh(l, 1) * (Rational(2) * d(j, l) + dh(j, l))) +
                            dh(j, k) * dh(l, 1) * d(k, l) * (dh(j, 1) * dh(j, l) * d(i, j) + d(i, 1) * d(j, 1)));
      s.pivot(b, 4).pivot(b, 2);
      s.add(-(djk * (d(j, 1) + dh(j, 1) * (d(l, 1) * dh(i, 1) + dh(l, 1)))), {{1, i}, {l, 1}});
      break;
    }
    case Shape::pivot_sq_row: {
      int k = v.b;
      s.pivot_sq(-d(j, 1) * dh(i, 1) * d(k, 1) + dh(j, 1) * d(i, j) * d(k, i), 1, i);
      s.add(d(j, 1) * d(k, 1) * dh(i, 1), {{1, i}});
      Rational c = d(i, j) * dh(j, 1) * kHalf * d(k, 1);
      s.pivot(c, 3).pivot(c, 1);
      s.pivot_sq(d(i, j) * dh(j, 1) * dh(k, i) * dh(k, 1), 1, k);
      break;
    }
    case Shape::pivot_fourth: {
      s.add(d(j, 1), {{1, i}, {1, 1}});
      Rational c = dh(j, 1) * dh(i, 1) * d(i, j) * kHalf;
      s.pivot(c, 4).pivot(c, 2);
      break;
    }
    case Shape::row_pivot_col: {
      int k = v.a, l = v.b;
      s.add(-d(j, k), {{1, i}, {1, 1}, {l, 1}});
      break;
    }
    case Shape::unit:
      break;
  }
  return s.done();
}

// e[1,k] e[1,1] e[l,1] * v with l != 1.
NcPoly row_pivot_col_times(int n, int k, int l, const ShapedWord& v) {
  Sum s(n);
  switch (v.shape) {
    case Shape::letter: {
      int i = v.a, j = v.b;
      Rational djl = d(j, l);
      s.pivot(djl * kHalf * (d(k, 1) * dh(j, 1) * d(i, 1) + dh(i, 1) * d(i, k)), 4);
      s.pivot(djl * kHalf * (dh(i, 1) * d(i, k) - d(k, 1) * dh(j, 1) * d(i, 1)), 2);
      s.add(-(djl * dh(i, 1) * d(k, 1)), {{1, 1}, {i, 1}});
      s.add(-(djl * dh(k, 1)), {{1, k}, {i, 1}});
      break;
    }
    case Shape::row_col: {
      int i = v.a, j = v.b;
      Rational dil = d(i, l);
      Rational c = dil * d(k, 1) * d(j, 1) * kHalf;
      s.pivot(c, 1).pivot(-c, 3);
      s.pivot_sq(-(dil * d(k, 1) * dh(j, 1)), j, 1);
      s.add(-(dil * dh(k, 1) * dh(j, 1)), {{1, k}, {1, 1}, {j, 1}});
      Rational e = dil * dh(k, 1) * d(j, 1);
      s.pivot_sq(-e, 1, k);
      s.add(e, {{1, k}});
      break;
    }
    case Shape::row_pivot_col: {
      // Written with u = e[1,i] e[1,1] e[j,1] and v = e[1,kk] e[1,1] e[ll,1].
      int i = k, j = l;
      int kk = v.a, ll = v.b;
      Rational djk = d(j, kk);
      s.add(djk, {{1, i}, {ll, 1}});
      Rational c = djk * dh(i, 1) * d(i, ll) * kHalf;
      s.pivot(-c, 4).pivot(-c, 2);
      break;
    }
    case Shape::col_row:
    case Shape::pivot_sq_row:
    case Shape::pivot_fourth:
    case Shape::unit:
      break;
  }
  return s.done();
}

// e[1,1]^2 e[1,k] * v.
NcPoly pivot_sq_row_times(int n, int k, const ShapedWord& v) {
  Sum s(n);
  switch (v.shape) {
    case Shape::letter: {
      int i = v.a, j = v.b;
      Rational dki = d(k, i);
      s.pivot(dki * d(j, 1) * (d(k, 1) + kHalf * dh(k, 1)), 4);
      s.pivot(dki * d(j, 1) * kHalf * dh(k, 1), 2);
      s.add(dki * dh(j, 1), {{1, 1}, {1, j}});
      s.add(-(dh(k, i) * d(j, 1) * d(k, 1)), {{1, 1}, {i, 1}});
      break;
    }
    case Shape::col_row: {
      int i = v.a, j = v.b;
      s.pivot(d(k, i) * d(j, 1) * (d(k, 1) + kHalf * dh(k, 1)) + kHalf * dh(k, i) * d(k, 1) * dh(i, 1) * d(i, j), 1);
      s.pivot(kHalf * (d(k, i) * dh(k, 1) * d(j, 1) - dh(k, i) * d(k, 1) * dh(i, 1) * d(i, j)), 3);
      s.pivot_sq(d(k, 1) * (d(k, i) * dh(j, 1) - dh(k, i) * d(i, 1)) + dh(k, 1) * d(k, i) * dh(j, 1), 1, j);
      break;
    }
    case Shape::row_col: {
      int i = v.a, j = v.b;
      s.pivot_sq(-(d(k, 1) * d(i, 1)), j, 1);
      Rational c = d(k, 1) * dh(i, 1) * d(i, j) * kHalf;
      s.pivot(c, 3).pivot(c, 1);
      break;
    }
    case Shape::row_pivot_col: {
      int j = v.a, l = v.b;
      s.add(d(k, 1) * d(j, 1), {{1, 1}, {l, 1}});
      break;
    }
    case Shape::pivot_sq_row: {
      int j = v.b;
      s.add(d(k, 1), {{1, 1}, {1, j}});
      break;
    }
    case Shape::pivot_fourth:
      s.pivot(d(k, 1), 3);
      break;
    case Shape::unit:
      break;
  }
  return s.done();
}

// e[1,1]^4 * v.
NcPoly pivot_fourth_times(int n, const ShapedWord& v) {
  Sum s(n);
  switch (v.shape) {
    case Shape::letter: {
      int i = v.a, j = v.b;
      s.pivot(d(i, 1) * d(j, 1), 1);
      s.pivot_sq(d(i, 1) * dh(j, 1), 1, j);
      s.pivot_sq(-(dh(i, 1) * d(j, 1)), i, 1);
      break;
    }
    case Shape::row_col: {
      int i = v.a, j = v.b;
      s.add(d(i, 1), {{1, 1}, {j, 1}});
      Rational c = dh(i, 1) * dh(j, 1) * d(i, j) * kHalf;
      s.pivot(c, 4).pivot(c, 2);
      break;
    }
    case Shape::col_row: {
      int i = v.a, j = v.b;
      s.add(d(i, 1), {{1, 1}, {1, j}});
      Rational c = dh(i, 1) * d(i, j) * kHalf;
      s.pivot(c, 2).pivot(-c, 4);
      break;
    }
    case Shape::pivot_sq_row:
      s.pivot_sq(Rational(1), 1, v.b);
      break;
    case Shape::row_pivot_col:
      s.pivot_sq(d(v.a, 1), v.b, 1);
      break;
    case Shape::pivot_fourth:
      s.pivot(Rational(1), 4);
      break;
    case Shape::unit:
      break;
  }
  return s.done();
}

SymbolMap transpose_map(int n) {
  SymbolMap sigma(static_cast<std::size_t>(n * n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) sigma[pack(r, c, n)] = pack(c, r, n);
  return sigma;
}

}  // namespace

NcPoly oracle_product(int n, const Word& u, const Word& v) {
  auto su = classify(u, n);
  auto sv = classify(v, n);
  if (!su || !sv) throw UncoveredCase("oracle_product needs two basis words");
  if (su->shape == Shape::unit) return NcPoly::monomial(v);
  if (sv->shape == Shape::unit) return NcPoly::monomial(u);
  switch (su->shape) {
    case Shape::letter:
      return letter_times(n, su->a, su->b, *sv);
    case Shape::col_row:
      return col_row_times(n, su->a, su->b, *sv);
    case Shape::row_col:
      if (sv->shape == Shape::col_row) {
        // u v = transpose(transpose(v) transpose(u)), and transposition maps
        // col_row(a,b) -> col_row(b,a), row_col(a,b) -> row_col(b,a).
        SymbolMap sigma = transpose_map(n);
        NcPoly swapped = col_row_times(n, sv->b, sv->a, ShapedWord{Shape::row_col, su->b, su->a});
        NcPoly out = apply_antihom(swapped, sigma);
        for (const auto& t : out.terms())
          if (!classify(t.word, n)) throw UncoveredCase("transposed product left the basis");
        return out;
      }
      return row_col_times(n, su->a, su->b, *sv);
    case Shape::row_pivot_col:
      return row_pivot_col_times(n, su->a, su->b, *sv);
    case Shape::pivot_sq_row:
      return pivot_sq_row_times(n, su->b, *sv);
    case Shape::pivot_fourth:
      return pivot_fourth_times(n, *sv);
    case Shape::unit:
      break;
  }
  throw UncoveredCase("unreachable shape");
}

}  // namespace ncgb
