#include "lagloci/exact_field.hpp"

#include <cctype>
#include <sstream>

namespace lagloci {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Unsigned "p" or "p/q" with digits only.
mpq_class parse_unsigned_rational(std::string_view s, std::string_view original) {
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(original) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(original) + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  bool negative = false;
  std::string_view body(s);
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  mpq_class q = parse_unsigned_rational(body, text);
  if (negative) q = -q;
  return Rational(std::move(q));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussianRational GaussianRational::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
  Rational re;
  Rational im;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view term(s.data() + pos, end - pos);
    if (term.empty()) throw Error(ErrorCode::ParseError, "malformed number '" + std::string(text) + "'");
    bool imaginary = false;
    mpq_class value;
    if (term == "i") {
      imaginary = true;
      value = 1;
    } else if (term.size() > 2 && term.substr(term.size() - 2) == "*i") {
      imaginary = true;
      value = parse_unsigned_rational(term.substr(0, term.size() - 2), text);
    } else {
      value = parse_unsigned_rational(term, text);
    }
    if (negative) value = -value;
    (imaginary ? im : re) += Rational(std::move(value));
    pos = end;
  }
  return {re, im};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  if (!rhs.im_.is_zero()) im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  if (!rhs.im_.is_zero()) im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    if (!im_.is_zero()) im_ *= rhs.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * rhs.im_;
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(i)");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    if (!im_.is_zero()) im_ /= rhs.re_;
    return *this;
  }
  const Rational n = rhs.norm();
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "*i";
  }
  if (re_.is_zero()) return imag;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational gaussian_arith(const GaussianRational& lhs, const GaussianRational& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add: return lhs + rhs;
    case ArithOp::sub: return lhs - rhs;
    case ArithOp::mul: return lhs * rhs;
    case ArithOp::div: return lhs / rhs;
  }
  return {};
}

bool is_positive_real(const GaussianRational& x) { return x.im().is_zero() && x.re().sign() > 0; }

GaussianRational inverse(const GaussianRational& x) { return GaussianRational(1) / x; }

}  // namespace lagloci
