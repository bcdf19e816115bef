#include "ncgb/arith.hpp"

#include <cctype>

namespace ncgb {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  std::string_view body = s;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed rational: '" + std::string(s) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
  if (neg) n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

GaussianRational GaussianRational::parse(std::string_view s) {
  if (s.empty()) throw ParseError("empty scalar");
  bool imaginary = s.size() >= 2 && s.substr(s.size() - 2) == "*i";
  if (!imaginary) return {Rational::parse(s), Rational(0)};
  std::string_view body = s.substr(0, s.size() - 2);
  // A sign after position 0 separates the real and imaginary parts.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), Rational::parse(body)};
  Rational re = Rational::parse(body.substr(0, split));
  std::string_view im_part = body.substr(split + 1);
  if (!im_part.empty() && im_part.front() == '-') throw ParseError("malformed scalar: '" + std::string(s) + "'");
  Rational im = Rational::parse(im_part);
  if (body[split] == '-') im = -im;
  return {re, im};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "*i";
  std::string out = re_.str();
  out += im_.sign() < 0 ? '-' : '+';
  out += abs(im_).str();
  out += "*i";
  return out;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::size_t hash_value(const Scalar& x) {
  std::hash<std::string> h;
  return h(x.str());
}

}  // namespace ncgb
