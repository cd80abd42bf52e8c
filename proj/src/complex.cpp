#include "primecm/complex.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace primecm {

namespace {

mpfr_prec_t max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Real::Real(mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, mpfr_prec_t precision) {
  mpfr_init2(v_, precision);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  // Steal the limbs; leave `other` as a valid 2-bit zero.
  *v_ = *other.v_;
  mpfr_init2(other.v_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() {
  mpfr_clear(v_);
}

mpz_class Real::round() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

Real Real::pi(mpfr_prec_t precision) {
  Real r(precision);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(max_prec(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

Real from_integer(const mpz_class& z, mpfr_prec_t precision) {
  Real r(precision);
  mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Complex::Complex(mpfr_prec_t precision) : re_(precision), im_(precision) {}

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const auto p = max_prec(re_, im_);
  if (re_.precision() != p) mpfr_prec_round(re_.get(), p, MPFR_RNDN);
  if (im_.precision() != p) mpfr_prec_round(im_.get(), p, MPFR_RNDN);
}

Complex::Complex(double re, double im, mpfr_prec_t precision)
    : re_(re, precision), im_(im, precision) {}

Real Complex::norm() const { return re_ * re_ + im_ * im_; }

Real Complex::abs() const {
  Real r(precision());
  mpfr_hypot(r.get(), re_.get(), im_.get(), MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  mpfr_add(re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_add(im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  mpfr_sub(re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_sub(im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  *this = *this * o;
  return *this;
}

Complex Complex::unit(const Real& theta) {
  Real s(theta.precision());
  Real c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

Complex operator+(const Complex& a, const Complex& b) {
  return Complex(a.re() + b.re(), a.im() + b.im());
}

Complex operator-(const Complex& a, const Complex& b) {
  return Complex(a.re() - b.re(), a.im() - b.im());
}

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re() * b.re() - a.im() * b.im(),
                 a.re() * b.im() + a.im() * b.re());
}

Complex operator*(const Complex& a, const Real& b) {
  return Complex(a.re() * b, a.im() * b);
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.norm();
  return Complex((a.re() * b.re() + a.im() * b.im()) / d,
                 (a.im() * b.re() - a.re() * b.im()) / d);
}

Complex operator-(const Complex& a) { return Complex(-a.re(), -a.im()); }

Complex exp(const Complex& z) {
  Real m(z.precision());
  mpfr_exp(m.get(), z.re().get(), MPFR_RNDN);
  return Complex::unit(z.im()) * m;
}

Complex pow(const Complex& z, unsigned long n) {
  Complex result(1.0, 0.0, z.precision());
  Complex base = z;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Complex sqrt(const Complex& z) {
  // sqrt(z) = sqrt((|z| + x)/2) + i sign(y) sqrt((|z| - x)/2)
  const Real r = z.abs();
  const Real two(2.0, z.precision());
  Real u = sqrt((r + z.re()) / two);
  Real v = sqrt((r - z.re()) / two);
  if (mpfr_sgn(z.im().get()) < 0) v = -v;
  return Complex(std::move(u), std::move(v));
}

}  // namespace primecm
