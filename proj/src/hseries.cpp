#include "zjones/hseries.hpp"

#include <algorithm>
#include <cmath>

#include "zjones/bigfloat.hpp"
#include "zjones/error.hpp"

namespace zj {

HSeries::HSeries(RingPtr ring, int trunc) : ring_(std::move(ring)), trunc_(trunc) {
  if (trunc < 0) throw Error(ErrorKind::InvalidOrder, "truncation order must be >= 0");
  c_.assign(trunc + 1, MPoly(ring_));
}

HSeries HSeries::constant(const MPoly& c, int trunc) {
  HSeries s(c.ring(), trunc);
  s.c_[0] = c;
  return s;
}

HSeries HSeries::monomial(const MPoly& c, int power, int trunc) {
  HSeries s(c.ring(), trunc);
  if (power >= 0 && power <= trunc) s.c_[power] = c;
  return s;
}

HSeries HSeries::from_coeffs(std::vector<MPoly> coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidOrder, "empty coefficient list");
  HSeries s(coeffs[0].ring(), static_cast<int>(coeffs.size()) - 1);
  for (size_t n = 0; n < coeffs.size(); ++n) {
    require_same_ring(coeffs[n].ring(), s.ring_);
    s.c_[n] = std::move(coeffs[n]);
  }
  return s;
}

int HSeries::valuation() const {
  for (int n = 0; n <= trunc_; ++n)
    if (!c_[n].is_zero()) return n;
  return trunc_ + 1;
}

void HSeries::set(int n, MPoly c) {
  require_same_ring(c.ring(), ring_);
  c_.at(n) = std::move(c);
}

HSeries& HSeries::operator+=(const HSeries& o) {
  require_same_ring(ring_, o.ring_);
  trunc_ = std::min(trunc_, o.trunc_);
  c_.resize(trunc_ + 1, MPoly(ring_));
  for (int n = 0; n <= trunc_; ++n) c_[n] += o.c_[n];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  require_same_ring(ring_, o.ring_);
  trunc_ = std::min(trunc_, o.trunc_);
  c_.resize(trunc_ + 1, MPoly(ring_));
  for (int n = 0; n <= trunc_; ++n) c_[n] -= o.c_[n];
  return *this;
}

HSeries& HSeries::operator*=(const HSeries& o) {
  require_same_ring(ring_, o.ring_);
  int N = std::min(trunc_, o.trunc_);
  int va = valuation(), vb = o.valuation();
  std::vector<MPoly> out(N + 1, MPoly(ring_));
  for (int n = 0; n <= N; ++n)
    for (int i = va; i <= n - vb; ++i) {
      if (c_[i].is_zero() || o.c_[n - i].is_zero()) continue;
      out[n] += c_[i] * o.c_[n - i];
    }
  trunc_ = N;
  c_ = std::move(out);
  return *this;
}

HSeries& HSeries::operator*=(const MPoly& p) {
  require_same_ring(ring_, p.ring());
  for (auto& c : c_) c *= p;
  return *this;
}

HSeries& HSeries::operator*=(const Rational& q) {
  for (auto& c : c_) c *= q;
  return *this;
}

HSeries HSeries::operator-() const {
  HSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

HSeries HSeries::truncated(int n) const {
  if (n < 0) throw Error(ErrorKind::InvalidOrder, "truncation order must be >= 0");
  HSeries r(ring_, std::min(n, trunc_));
  for (int k = 0; k <= r.trunc_; ++k) r.c_[k] = c_[k];
  return r;
}

HSeries HSeries::mirrored() const {
  HSeries r = *this;
  for (int n = 1; n <= trunc_; n += 2) r.c_[n] = -r.c_[n];
  return r;
}

HSeries HSeries::shifted(int k) const {
  if (k < 0 && valuation() < -k) throw Error(ErrorKind::Pole, "shift would create a negative power of h");
  if (trunc_ + k < 0) throw Error(ErrorKind::InvalidOrder, "shift leaves no known coefficients");
  HSeries r(ring_, trunc_ + k);
  for (int n = 0; n <= r.trunc_; ++n) {
    int src = n - k;
    if (src >= 0 && src <= trunc_) r.c_[n] = c_[src];
  }
  return r;
}

HSeries HSeries::substitute(std::string_view var, const Rational& v) const {
  HSeries r = *this;
  for (auto& c : r.c_) c = c.substitute(var, v);
  return r;
}

HSeries HSeries::compose(const RingPtr& target, const std::map<std::string, MPoly>& subs) const {
  HSeries r(target, trunc_);
  for (int n = 0; n <= trunc_; ++n) r.c_[n] = c_[n].compose(target, subs);
  return r;
}

bool operator==(const HSeries& a, const HSeries& b) {
  return a.ring_ == b.ring_ && a.trunc_ == b.trunc_ && a.c_ == b.c_;
}

HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
HSeries operator*(HSeries a, const HSeries& b) { return a *= b; }
HSeries operator*(HSeries a, const MPoly& b) { return a *= b; }
HSeries operator*(HSeries a, const Rational& q) { return a *= q; }

HSeries exp_h(const MPoly& a, int half_shift, int N) {
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "exp_h: N must be >= 0");
  if (half_shift < 0) throw Error(ErrorKind::InvalidOrder, "exp_h: half_shift must be >= 0");
  HSeries r(a.ring(), N);
  Rational step(1);
  mpz_mul_2exp(step.get_den_mpz_t(), step.get_den_mpz_t(), half_shift);
  MPoly term = MPoly::constant(a.ring(), 1);
  MPoly x = a * step;
  for (int n = 0; n <= N; ++n) {
    r.set(n, term);
    term *= x;
    term *= Rational(1, n + 1);
  }
  return r;
}

HSeries series_div(const HSeries& num, const HSeries& den) {
  require_same_ring(num.ring(), den.ring());
  int vd = den.valuation();
  if (vd > den.trunc()) throw Error(ErrorKind::DivisionByZero, "series_div: zero denominator");
  int vn = num.valuation();
  if (vn <= num.trunc() && vd > vn) throw Error(ErrorKind::Pole, "series_div: quotient has a pole at h = 0");
  if (!den[vd].is_constant()) throw Error(ErrorKind::Domain, "series_div: leading coefficient not invertible");
  int N = std::min(num.trunc() - vd, den.trunc() + std::min(vn, num.trunc()) - 2 * vd);
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "series_div: no coefficients survive");
  Rational inv = 1 / den[vd].constant_term();
  HSeries q(num.ring(), N);
  int q0 = std::max(0, vn - vd);
  for (int k = q0; k <= N; ++k) {
    MPoly acc = num[k + vd];
    for (int j = 1; j <= k - q0; ++j) {
      const MPoly& d = den[vd + j];
      if (d.is_zero() || q[k - j].is_zero()) continue;
      acc -= d * q[k - j];
    }
    acc *= inv;
    q.set(k, std::move(acc));
  }
  return q;
}

NumericValue eval_numeric(const HSeries& f, const std::map<std::string, std::complex<double>>& assignment,
                          std::complex<double> h0, int precision_bits) {
  if (precision_bits < 16) throw Error(ErrorKind::PrecisionBudget, "precision below 16 bits");
  const RingPtr& ring = f.ring();
  std::vector<BigComplex> vals;
  for (const auto& name : ring->names()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      bool used = false;
      int i = ring->index(name);
      for (const auto& c : f.coeffs())
        for (const auto& t : c.terms()) used = used || exponent_of(t.first, i) > 0;
      if (used) throw Error(ErrorKind::UnassignedVariable, "unassigned variable " + name);
      vals.emplace_back(std::complex<double>(0), precision_bits);
    } else {
      vals.emplace_back(it->second, precision_bits);
    }
  }
  BigComplex hp(std::complex<double>(1), precision_bits), h(h0, precision_bits), total(precision_bits);
  double last = 0;
  for (int n = 0; n <= f.trunc(); ++n) {
    BigComplex cn(precision_bits);
    for (const auto& t : f[n].terms()) {
      BigComplex term(BigFloat(t.second, precision_bits), BigFloat(precision_bits));
      for (int i = 0; i < ring->size(); ++i)
        for (unsigned e = 0; e < exponent_of(t.first, i); ++e) term *= vals[i];
      cn += term;
    }
    BigComplex contrib = cn * hp;
    total += contrib;
    last = big_abs(contrib);
    hp *= h;
  }
  return {total.to_complex(), last};
}

}  // namespace zj
