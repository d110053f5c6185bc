#pragma once

#include "zjones/hseries.hpp"

namespace zj::testhelp {

inline HSeries one(const RingPtr& R, int N) { return HSeries::constant(MPoly::constant(R, 1), N); }

inline HSeries reflect_s(const HSeries& f) {
  HSeries r(f.ring(), f.trunc());
  for (int n = 0; n <= f.trunc(); ++n) r.set(n, f[n].reflect("s"));
  return r;
}

// u-series of Delta(e^u) = sum_j a_j e^{ju}: coefficient of u^n is sum_j a_j j^n / n!
inline std::vector<Rational> alexander_expansion(const std::map<int, int>& coeffs, int N) {
  std::vector<Rational> out(N + 1);
  for (int n = 0; n <= N; ++n) {
    Rational acc(0);
    for (const auto& [j, a] : coeffs) {
      mpz_class p;
      mpz_pow_ui(p.get_mpz_t(), mpz_class(j).get_mpz_t(), n);
      if (n == 0) p = 1;
      acc += Rational(a) * Rational(p);
    }
    out[n] = acc / factorial(n);
  }
  return out;
}

inline std::vector<Rational> cauchy(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  size_t N = std::min(a.size(), b.size());
  std::vector<Rational> out(N);
  for (size_t n = 0; n < N; ++n)
    for (size_t i = 0; i <= n; ++i) out[n] += a[i] * b[n - i];
  return out;
}

}  // namespace zj::testhelp
