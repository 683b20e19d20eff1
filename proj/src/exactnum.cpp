#include "qcr/exactnum.hpp"

#include <cctype>
#include <ostream>

namespace qcr {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero in Q(i)");
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw UsageError("unknown arithmetic operation");
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool peek_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  /// sign? -> +1 / -1; `required` demands an explicit sign.
  int sign(bool required) {
    if (accept('+')) return 1;
    if (accept('-')) return -1;
    if (required) fail();
    return 1;
  }

  Rational rat() {
    std::string num = digits();
    std::string den = "1";
    if (accept('/')) {
      if (!peek_digit()) fail();
      den = digits();
    }
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator in '" + num + "/" + den + "' of \"" + std::string(text_) + "\"");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail() const {
    std::string token = at_end() ? std::string("end of input") : "'" + std::string(1, text_[pos_]) + "'";
    throw ParseError("malformed number \"" + std::string(text_) + "\": unexpected " + token + " at position " +
                     std::to_string(pos_));
  }

 private:
  std::string digits() {
    size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail();
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Scanner sc(trim(text));
  int s = sc.sign(false);
  Rational q = sc.rat();
  if (!sc.at_end()) sc.fail();
  return s < 0 ? Rational(-q) : q;
}

GaussianRational parse_gaussian(std::string_view text) {
  Scanner sc(trim(text));
  const int lead = sc.sign(false);
  if (sc.accept('i')) {
    if (!sc.at_end()) sc.fail();
    return {Rational(0), Rational(lead)};
  }
  Rational first = sc.rat();
  if (lead < 0) first = -first;
  if (sc.accept('i')) {
    if (!sc.at_end()) sc.fail();
    return {Rational(0), first};
  }
  if (sc.at_end()) return {first, Rational(0)};

  const int s = sc.sign(true);
  Rational im(1);
  if (sc.peek_digit()) im = sc.rat();
  if (!sc.accept('i')) sc.fail();
  if (!sc.at_end()) sc.fail();
  if (s < 0) im = -im;
  return {first, im};
}

std::string to_string(const Rational& q) {
  // mpq_class::get_str already omits "/1" for integers.
  return q.get_str();
}

std::string serialize_gaussian(const GaussianRational& x) {
  const Rational& re = x.re();
  const Rational& im = x.im();
  if (sgn(im) == 0) return to_string(re);

  std::string imag;
  const Rational abs_im = abs(im);
  if (abs_im == 1) {
    imag = "i";
  } else {
    imag = to_string(abs_im) + "i";
  }
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
  return to_string(re) + (sgn(im) < 0 ? "-" : "+") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << serialize_gaussian(x); }

}  // namespace qcr

size_t std::hash<qcr::GaussianRational>::operator()(const qcr::GaussianRational& x) const noexcept {
  return std::hash<std::string>{}(qcr::serialize_gaussian(x));
}
