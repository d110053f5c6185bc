#pragma once

#include <complex>
#include <vector>

#include "zjones/knot.hpp"

namespace zj {

struct TorusParams {
  int m, p;
  TorusParams(int m, int p);
  Rational mp() const { return Rational(m * p); }
  Rational c() const;  // m/p + p/m
};

// Q[0..N] with Q[0] = 0: F(sqrt(h) x) = sum_k Q[k] h^k x^{2k}
std::vector<MPoly> f_coeffs(const TorusParams& tp, int N, const MPoly& colour = colour_s());

// 2 (2k)! / (4^k k!) = (2/sqrt(pi)) Gamma(k + 1/2)
Rational gaussian_moment(int k);

// Series in the framing 2mp native to the Gaussian-integral formula.
JonesSeries jones_torus(const TorusParams& tp, int N, const MPoly& colour = colour_s());

// h * e^{-ch/4} (h/2) / sinh(h/2), rational coefficients (constant polynomials of ring {}).
// Index n+1 holds the h^n coefficient of the prefactor.
HSeries torus_prefactor(const TorusParams& tp, int N);

// Closed form for colour n = 2z+1 in Z\{0}; bits = 0 picks a working precision from |h|.
std::complex<double> kashaev_closed(const TorusParams& tp, long n, std::complex<double> h, int bits = 0);

struct QuadConfig {
  double tol = 1e-12;
  int order = 20;          // Gauss-Legendre points per panel
  int max_panels = 4096;
  double contour_angle = 0;  // x runs over e^{i angle} R, |angle| < pi/4
};

struct QuadResult {
  std::complex<double> value;
  double error = 0;
  bool converged = false;
  double cutoff = 0;
  int panels = 0;
};

QuadResult kashaev_quadrature(const TorusParams& tp, std::complex<double> s0, std::complex<double> h,
                              const QuadConfig& cfg = {});

}  // namespace zj
