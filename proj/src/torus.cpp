#include "zjones/torus.hpp"

#include <cmath>
#include <numeric>

#include "zjones/bigfloat.hpp"
#include "zjones/error.hpp"
#include "zjones/kernel.hpp"

namespace zj {

TorusParams::TorusParams(int m_, int p_) : m(m_), p(p_) {
  if (m < 2 || p < 2) throw Error(ErrorKind::InvalidTorus, "torus parameters must be >= 2");
  if (std::gcd(m, p) != 1) throw Error(ErrorKind::InvalidTorus, "torus parameters must be coprime");
}

Rational TorusParams::c() const { return Rational(m, p) + Rational(p, m); }

Rational gaussian_moment(int k) {
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  Rational g = factorial(2 * k) * 2 / (Rational(four_k) * factorial(k));
  g.canonicalize();
  return g;
}

std::vector<MPoly> f_coeffs(const TorusParams& tp, int N, const MPoly& colour) {
  if (N < 1) throw Error(ErrorKind::InvalidOrder, "f_coeffs: N must be >= 1");
  const RingPtr& R = colour.ring();
  // work in y = x^2; every factor is even in x
  const Rational mp = tp.mp();
  const Rational up = tp.c() + 2, um = tp.c() - 2;
  HSeries num(R, N), den(R, N), phi(R, N);
  MPoly s2 = colour * colour, s2j = MPoly::constant(R, 1);
  Rational mpj(1), upj(1), umj(1);
  for (int j = 0; j <= N; ++j) {
    Rational inv = Rational(1) / factorial(2 * j + 1);
    num.set(j, s2j * (mpj * inv));
    den.set(j, MPoly::constant(R, mpj * inv));
    if (j > 0) phi.set(j, MPoly::constant(R, (upj - umj) / (factorial(2 * j) * 2)));
    s2j *= s2;
    mpj *= mp;
    upj *= up;
    umj *= um;
  }
  // the j = 0 slot of phi is empty, so up^0 - um^0 never enters
  HSeries q = series_div(num, den) * phi;
  std::vector<MPoly> out(N + 1, MPoly(R));
  for (int k = 1; k <= N; ++k) out[k] = q[k];
  return out;
}

HSeries torus_prefactor(const TorusParams& tp, int N) {
  RingPtr E = Ring::empty();
  // (h/2)/sinh(h/2) = 1 / sum (h/2)^{2j}/(2j+1)!
  HSeries sh(E, N);
  for (int j = 0; 2 * j <= N; ++j) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * j);
    sh.set(2 * j, MPoly::constant(E, Rational(1) / (factorial(2 * j + 1) * Rational(p2))));
  }
  HSeries ratio = series_div(HSeries::constant(MPoly::constant(E, 1), N), sh);
  HSeries pre = exp_h(MPoly::constant(E, -tp.c()), 2, N) * ratio;
  return pre.shifted(1).truncated(N);
}

JonesSeries jones_torus(const TorusParams& tp, int N, const MPoly& colour) {
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "jones_torus: N must be >= 0");
  const RingPtr& R = colour.ring();
  std::vector<MPoly> q = f_coeffs(tp, N + 1, colour);
  // T(h)/h = sum_k sigma_k h^{k-1}
  HSeries t(R, N);
  for (int k = 1; k <= N + 1; ++k) t.set(k - 1, q[k] * gaussian_moment(k));
  HSeries pre = torus_prefactor(tp, N + 1).shifted(-1);  // e^{-ch/4} (h/2)/sinh(h/2)
  HSeries pre_r(R, N);
  for (int n = 0; n <= N; ++n) pre_r.set(n, MPoly::constant(R, pre[n].constant_term()));
  return {pre_r * t, KnotSpec::torus(tp.m, tp.p, torus_native_framing(tp.m, tp.p)), false, {}};
}

std::complex<double> kashaev_closed(const TorusParams& tp, long n, std::complex<double> h, int bits) {
  if (n == 0) throw Error(ErrorKind::Domain, "kashaev_closed: colour must be a nonzero integer");
  const double two_pi = 2 * M_PI;
  if (h == 0.0 || (h.real() == 0 && std::abs(std::remainder(h.imag(), two_pi)) < 1e-12))
    throw Error(ErrorKind::SingularPrefactor, "kashaev_closed: sinh(h/2) vanishes");
  const long an = std::labs(n);
  const long m = tp.m, p = tp.p;
  // exponent (in units of h) -> integer weight
  std::map<Rational, long> terms;
  for (long j = 0; j < an; ++j) {
    long k = an - 1 - 2 * j;
    for (int sg : {1, -1}) {
      terms[Rational(k * k * m * p + sg * 2 * k * (m + p) + 2, 4)] += 1;
      terms[Rational(k * k * m * p + sg * 2 * k * (m - p) - 2, 4)] -= 1;
    }
  }
  double emax = 0;
  for (const auto& [e, w] : terms) emax = std::max(emax, std::abs(e.get_d()));
  if (bits <= 0) bits = 96 + static_cast<int>(2 * emax * std::abs(h) * 1.4427);
  if (bits > 1 << 16) throw Error(ErrorKind::PrecisionBudget, "kashaev_closed: precision budget exceeded");
  BigComplex hb(h, bits), sum(bits);
  for (const auto& [e, w] : terms) {
    if (w == 0) continue;
    BigFloat ef(e, bits);
    BigComplex arg = hb;
    arg *= ef;
    BigComplex t = big_exp(arg);
    t *= BigFloat(static_cast<double>(w), bits);
    sum += t;
  }
  BigComplex half = hb;
  half *= BigFloat(0.5, bits);
  BigComplex neg(bits);
  neg -= half;
  BigComplex sh = big_exp(half) - big_exp(neg);  // 2 sinh(h/2)
  sh *= BigFloat(static_cast<double>(2 * an), bits);
  return (sum / sh).to_complex();
}

QuadResult kashaev_quadrature(const TorusParams& tp, std::complex<double> s0, std::complex<double> h,
                              const QuadConfig& cfg) {
  if (std::abs(cfg.contour_angle) >= M_PI / 4)
    throw Error(ErrorKind::Domain, "kashaev_quadrature: contour angle must satisfy |angle| < pi/4");
  if (h == 0.0) throw Error(ErrorKind::SingularPrefactor, "kashaev_quadrature: h = 0");
  TorusKernel kernel(tp, s0);
  const cplx dir = std::polar(1.0, cfg.contour_angle);
  const cplx rh = std::sqrt(h);
  if (!kernel.integer_colour()) {
    if (h.real() <= 0 && cfg.contour_angle == 0)
      throw Error(ErrorKind::ContourPole, "kashaev_quadrature: Re(h) <= 0 needs a rotated contour");
    if (std::abs(std::cos(std::arg(rh * dir))) < 1e-3)
      throw Error(ErrorKind::ContourPole, "kashaev_quadrature: contour runs through the poles of F");
  }
  const double cos2 = std::cos(2 * cfg.contour_angle);
  const double C = (std::abs(s0.real()) + 2) * std::sqrt(double(tp.m * tp.p)) * std::abs(rh);
  const double logt = std::log(100.0 / cfg.tol);
  const double L = (C + std::sqrt(C * C + 4 * cos2 * logt)) / (2 * cos2);
  auto integrand = [&](cplx t) {
    cplx x = t * dir;
    return std::exp(-x * x) * kernel.F(rh * x) * dir;
  };
  QuadResult r;
  r.cutoff = L;
  int panels = 4;
  cplx prev = 2.0 * integrate_segment(integrand, 0.0, L, panels, cfg.order);
  while (true) {
    cplx next = 2.0 * integrate_segment(integrand, 0.0, L, 2 * panels, cfg.order);
    r.error = std::abs(next - prev);
    prev = next;
    panels *= 2;
    if (r.error <= cfg.tol * std::max(1.0, std::abs(next)) || panels >= cfg.max_panels) break;
  }
  r.panels = panels;
  const double tail = 2 * std::exp(-cos2 * L * L + C * L);
  cplx pre = std::exp(-tp.c().get_d() * h / 4.0) / std::sinh(h / 2.0) / std::sqrt(M_PI);
  r.value = pre * prev;
  r.error = (r.error + tail) * std::abs(pre);
  r.converged = r.error <= cfg.tol * std::max(1.0, std::abs(r.value)) * 10;
  return r;
}

}  // namespace zj
