#include "ncgb/freealg.hpp"

#include <cctype>

namespace ncgb {

std::string render_word(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t k = 0;
  while (k < w.size()) {
    std::size_t run = 1;
    while (k + run < w.size() && w[k + run] == w[k]) ++run;
    if (!out.empty()) out += '*';
    out += a.name(w[k]);
    if (run > 1) out += "^" + std::to_string(run);
    k += run;
  }
  return out;
}

namespace {

struct SignedMagnitude {
  bool negative = false;
  std::string text;  // empty means a real magnitude of exactly 1
};

SignedMagnitude split_sign(const Scalar& c) {
  SignedMagnitude m;
  if (c.is_real()) {
    m.negative = c.re().sign() < 0;
    Rational mag = abs(c.re());
    if (!mag.is_one()) m.text = mag.str();
  } else if (c.re().is_zero()) {
    m.negative = c.im().sign() < 0;
    m.text = abs(c.im()).str() + "*i";
  } else {
    m.text = "(" + c.str() + ")";
  }
  return m;
}

}  // namespace

std::string render_scalar_factor(const Scalar& c) {
  SignedMagnitude m = split_sign(c);
  std::string body = m.text.empty() ? "1" : m.text;
  return m.negative ? "-" + body : body;
}

std::string render(const NcPoly& f, const Alphabet& a) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    SignedMagnitude m = split_sign(t.coeff);
    if (first) {
      if (m.negative) out += '-';
    } else {
      out += m.negative ? " - " : " + ";
    }
    first = false;
    if (t.word.empty()) {
      out += m.text.empty() ? "1" : m.text;
    } else {
      if (!m.text.empty()) out += m.text + "*";
      out += render_word(t.word, a);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Alphabet& a) : text_(text), alpha_(a) {}

  NcPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return NcPoly::from_terms(std::move(terms));
  }

  Word word_only() {
    skip_ws();
    Term t = term();
    skip_ws();
    if (!at_end() || !t.coeff.is_one()) fail("expected a single word");
    return t.word;
  }

 private:
  Term term() {
    Term t{Word{}, Scalar(1)};
    for (;;) {
      skip_ws();
      factor(t);
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  void factor(Term& t) {
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      digits();
      if (!at_end() && peek() == '/') {
        ++pos_;
        digits();
      }
      t.coeff *= Scalar(Rational::parse(text_.substr(start, pos_ - start)));
    } else if (c == 'i') {
      ++pos_;
      t.coeff *= Scalar::i();
    } else if (c == '(') {
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced '('");
      std::string inner;
      for (char ch : text_.substr(pos_ + 1, close - pos_ - 1))
        if (!std::isspace(static_cast<unsigned char>(ch))) inner += ch;
      t.coeff *= Scalar::parse(inner);
      pos_ = close + 1;
    } else if (c == 'e' || c == 'x') {
      Symbol s = symbol();
      std::size_t reps = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        reps = static_cast<std::size_t>(integer());
        if (reps == 0) fail("exponent must be positive");
      }
      for (std::size_t k = 0; k < reps; ++k) t.word.push_back(s);
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  Symbol symbol() {
    char kind = text_[pos_++];
    expect('[');
    int first = integer();
    try {
      if (kind == 'e') {
        expect(',');
        int second = integer();
        expect(']');
        if (!alpha_.is_matrix()) fail("e[i,j] symbols need a matrix alphabet");
        return alpha_.matrix_symbol(first, second);
      }
      expect(']');
      if (alpha_.is_matrix()) fail("x[k] symbols need a generic alphabet");
      return alpha_.generic_symbol(first);
    } catch (const std::out_of_range&) {
      fail("symbol index out of range");
    }
    return 0;
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    digits();
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  void digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const Alphabet& alpha_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_poly(std::string_view text, const Alphabet& a) { return PolyParser(text, a).parse(); }

Word parse_word(std::string_view text, const Alphabet& a) { return PolyParser(text, a).word_only(); }

}  // namespace ncgb
