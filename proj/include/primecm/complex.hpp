#pragma once

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace primecm {

/// MPFR real with RAII ownership. Precision is fixed at construction and
/// every result takes the larger precision of its operands.
class Real {
 public:
  explicit Real(mpfr_prec_t precision);
  Real(double v, mpfr_prec_t precision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Nearest integer.
  mpz_class round() const;
  std::string to_string(int digits = 20) const;

  static Real pi(mpfr_prec_t precision);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
Real sqrt(const Real& a);
Real abs(const Real& a);
Real from_integer(const mpz_class& z, mpfr_prec_t precision);

/// Complex number over two MPFR reals sharing one precision.
class Complex {
 public:
  explicit Complex(mpfr_prec_t precision);
  Complex(Real re, Real im);
  Complex(double re, double im, mpfr_prec_t precision);

  mpfr_prec_t precision() const noexcept { return re_.precision(); }
  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Real& re() noexcept { return re_; }
  Real& im() noexcept { return im_; }

  Real norm() const;  // |z|^2
  Real abs() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);

  /// exp(i * theta)
  static Complex unit(const Real& theta);

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator-(const Complex& a);
Complex exp(const Complex& z);
Complex pow(const Complex& z, unsigned long n);
/// Principal square root.
Complex sqrt(const Complex& z);

}  // namespace primecm
