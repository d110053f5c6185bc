#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "zjones/mpoly.hpp"

namespace zj {

// Truncated power series sum_{n<=N} c_n h^n with MPoly coefficients.
class HSeries {
 public:
  HSeries(RingPtr ring, int trunc);

  static HSeries constant(const MPoly& c, int trunc);
  static HSeries monomial(const MPoly& c, int power, int trunc);
  static HSeries from_coeffs(std::vector<MPoly> coeffs);  // trunc = size - 1

  const RingPtr& ring() const { return ring_; }
  int trunc() const { return trunc_; }
  // trunc + 1 when the series is zero
  int valuation() const;
  const MPoly& operator[](int n) const { return c_.at(n); }
  const std::vector<MPoly>& coeffs() const { return c_; }
  void set(int n, MPoly c);

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const HSeries& o);
  HSeries& operator*=(const MPoly& p);
  HSeries& operator*=(const Rational& q);
  HSeries operator-() const;

  HSeries truncated(int n) const;
  HSeries mirrored() const;           // h -> -h
  HSeries shifted(int k) const;       // times h^k, k may be negative if the low terms vanish
  HSeries substitute(std::string_view var, const Rational& v) const;
  HSeries compose(const RingPtr& target, const std::map<std::string, MPoly>& subs) const;

  friend bool operator==(const HSeries& a, const HSeries& b);
  friend bool operator!=(const HSeries& a, const HSeries& b) { return !(a == b); }

 private:
  RingPtr ring_;
  int trunc_;
  std::vector<MPoly> c_;
};

HSeries operator+(HSeries a, const HSeries& b);
HSeries operator-(HSeries a, const HSeries& b);
HSeries operator*(HSeries a, const HSeries& b);
HSeries operator*(HSeries a, const MPoly& b);
HSeries operator*(HSeries a, const Rational& q);

// sum_{n<=N} (a / 2^half_shift)^n h^n / n!
HSeries exp_h(const MPoly& a, int half_shift, int N);
HSeries series_div(const HSeries& num, const HSeries& den);
// sum_{j} x^{2j+1} h^{2j+1}/(2j+1)! style helpers live with their callers.

struct NumericValue {
  std::complex<double> value;
  double last_term = 0;  // |c_N(assignment) h0^N|, a heuristic, not a bound
};

NumericValue eval_numeric(const HSeries& f, const std::map<std::string, std::complex<double>>& assignment,
                          std::complex<double> h0, int precision_bits = 128);

}  // namespace zj
