#pragma once

#include <complex>
#include <vector>

#include "zjones/torus.hpp"

namespace zj {

using cplx = std::complex<double>;

// F(y) = sinh(s A y) sinh(a y) sinh(b y) / (s sinh(A y)),  A = sqrt(mp), a = sqrt(m/p), b = sqrt(p/m)
class TorusKernel {
 public:
  TorusKernel(const TorusParams& tp, cplx s);

  cplx F(cplx y) const;
  cplx dF_over_y(cplx y) const;

  const TorusParams& params() const { return tp_; }
  cplx colour() const { return s_; }
  bool integer_colour() const { return n_ != 0; }
  // nearest Borel-plane singularity sits at -pi^2/(mp)
  double cut_start() const;
  const std::vector<cplx>& taylor() const { return q_; }

 private:
  cplx G(cplx y) const;
  cplx dG(cplx y) const;

  TorusParams tp_;
  cplx s_;
  long n_ = 0;
  double A_, a_, b_;
  std::vector<cplx> q_;  // Q[k] at s, k = 0..kTaylor
};

const std::vector<double>& gl_nodes(int order);
const std::vector<double>& gl_weights(int order);

// Composite Gauss-Legendre on the straight segment [a, b] of the complex plane.
template <class Fn>
cplx integrate_segment(Fn&& f, cplx a, cplx b, int panels, int order) {
  const auto& x = gl_nodes(order);
  const auto& w = gl_weights(order);
  cplx total = 0, step = (b - a) / double(panels);
  for (int p = 0; p < panels; ++p) {
    cplx lo = a + step * double(p), mid = lo + step * 0.5;
    cplx acc = 0;
    for (int i = 0; i < order; ++i) acc += w[i] * f(mid + step * 0.5 * x[i]);
    total += acc * step * 0.5;
  }
  return total;
}

}  // namespace zj
