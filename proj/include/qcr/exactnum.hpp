#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qcr/errors.hpp"

namespace qcr {

/// Arbitrary-precision rational. GMP keeps every value in lowest terms with a
/// positive denominator once canonicalized, so equality is structural.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |x|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational conj(const GaussianRational& a) { return {a.re(), Rational(-a.im())}; }

enum class ArithOp { add, sub, mul, div };

/// Single entry point for the four field operations; throws DomainError on
/// division by zero.
GaussianRational arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

/// Grammar: `sign? rat ( sign rat? "i" )? | sign? rat? "i"`,
/// rat = `digits ("/" digits)?`.
GaussianRational parse_gaussian(std::string_view text);

/// Canonical text: "a/b" with "/1" omitted, "+c/di" / "-c/di" for the
/// imaginary part, "i" / "-i" for unit imaginary coefficients, "0" for zero.
std::string serialize_gaussian(const GaussianRational& x);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace qcr

template <>
struct std::hash<qcr::GaussianRational> {
  size_t operator()(const qcr::GaussianRational& x) const noexcept;
};

namespace Eigen {

template <>
struct NumTraits<qcr::GaussianRational> : GenericNumTraits<qcr::GaussianRational> {
  using Real = qcr::GaussianRational;
  using NonInteger = qcr::GaussianRational;
  using Nested = qcr::GaussianRational;
  using Literal = qcr::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  // Exact type: printing needs no precision hint.
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

}  // namespace Eigen
