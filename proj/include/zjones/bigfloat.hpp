#pragma once

#include <mpfr.h>

#include <complex>
#include <utility>

#include "zjones/mpoly.hpp"

namespace zj {

// Owning wrapper around mpfr_t. Binary results take the precision of the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigFloat& operator+=(const BigFloat& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

 private:
  mpfr_t v_;
};

inline BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
inline BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
inline BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
inline BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  BigComplex(std::complex<double> z, mpfr_prec_t prec) : re(z.real(), prec), im(z.imag(), prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return re.prec(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  BigComplex& operator*=(const BigFloat& x) {
    re *= x;
    im *= x;
    return *this;
  }
};

inline BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
inline BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
inline BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat den = b.re * b.re + b.im * b.im;
  BigFloat r = (a.re * b.re + a.im * b.im) / den;
  BigFloat i = (a.im * b.re - a.re * b.im) / den;
  return {std::move(r), std::move(i)};
}

inline BigComplex big_exp(const BigComplex& z) {
  BigFloat m(z.prec()), c(z.prec()), s(z.prec());
  mpfr_exp(m.get(), z.re.get(), MPFR_RNDN);
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return {m * c, m * s};
}

inline double big_abs(const BigComplex& z) { return std::abs(z.to_complex()); }

}  // namespace zj
