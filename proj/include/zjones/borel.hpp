#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "zjones/hseries.hpp"
#include "zjones/json_io.hpp"
#include "zjones/kernel.hpp"

namespace zj {

// b_n = a_n / n! for the series sum a_n h^{n+1}; the delta term never appears.
struct BorelCoefficients {
  std::vector<MPoly> b;
  int source_order = 0;
};

BorelCoefficients formal_borel(const HSeries& a);
std::vector<double> formal_borel(const std::vector<double>& a);
// Termwise Laplace transform xi^n -> n! h^{n+1}, returned as the h-series of a.
HSeries laplace_termwise(const BorelCoefficients& b, const RingPtr& ring);

// Numeric values of the coefficients of f at s = s0 (exact substitution first).
std::vector<double> coefficients_at(const HSeries& f, const Rational& s0);

struct GevreyRow {
  int n;
  double a, b, root, residual;
};

struct GevreyReport {
  double C_fit = 0, alpha = 0, beta = 0;
  double radius_estimate = 0;  // Cauchy-Hadamard over the tail window; infinity if superconvergent
  double ratio_estimate = 0;
  bool superconvergent = false;
  double trend_slope = 0;  // slope of log(root_n / C_fit) over the tail window
  std::vector<GevreyRow> rows;
  json to_json() const;
};

GevreyReport gevrey_diagnose(const std::vector<double>& a);

// Borel transform H of h e^{-ch/4} / (2 sinh(h/2)) (its h^1 coefficient is 1), or its derivative
// of the given order, summed from the exact Taylor coefficients.
struct PrefactorBorel {
  explicit PrefactorBorel(const TorusParams& tp, int derivative = 0) : tp(tp), derivative(derivative) {}
  cplx operator()(cplx xi, double* err = nullptr, int precision_bits = 0) const;
  TorusParams tp;
  int derivative;
};

cplx H_eval(const TorusParams& tp, cplx xi, int precision_bits = 0);

// side = 0 rejects points on the cut; side = +1 / -1 gives the limit from Im x > 0 / Im x < 0.
// I(x) = (1/sqrt(pi)) int_0^{pi/2} F(sqrt(x) sin phi) dphi
cplx I_eval(const TorusKernel& k, cplx x, int side = 0, double tol = 1e-13);
cplx I_eval(const TorusParams& tp, cplx s0, cplx x, int side = 0);
// The Borel transform of sum_k sigma_k h^k: (2/pi) int_0^{pi/2} sin^2 phi F'(y)/y dphi, y = sqrt(x) sin phi.
// It equals (4/sqrt(pi)) I'(x).
cplx borel_kernel_eval(const TorusKernel& k, cplx x, int side = 0, double tol = 1e-13);

struct BorelValue {
  cplx value;
  double error = 0;
};

// B(hJ) = d/dxi (H * K) = K + H' * K, K = borel_kernel_eval.
BorelValue borel_eval(const TorusKernel& k, cplx xi, double tol = 1e-12);
cplx borel_eval(const TorusParams& tp, cplx s0, cplx xi);

struct ResumConfig {
  double theta = 0;
  double R = 0;     // 0 picks R from the tail bound
  int nodes = 0;    // Chebyshev table size; 0 doubles from 64 until converged
  double tol = 1e-9;
};

struct ResumResult {
  cplx value;
  double error_estimate = 0;
  int branch_id = 0;
  double theta = 0, R = 0, tail_bound = 0, growth_A = 0;
  int nodes = 0;
  json to_json() const;
};

// True when e^{i theta} lies in D(h) = {w : Re(w/h) > 1/pi, w != -1}.
bool direction_in_domain(cplx h, double theta);
// Midpoint directions of the connected components of D(h); the first has Im w > 0 when there are two.
std::vector<double> domain_components(cplx h);

ResumResult resum(const TorusParams& tp, cplx s0, cplx h, const ResumConfig& cfg = {});
std::vector<ResumResult> branch_scan(const TorusParams& tp, cplx s0, cplx h, const ResumConfig& cfg = {});

// (1/h) int_0^{length e^{i theta}} e^{-xi/h} sum b_n xi^n dxi with b = formal_borel(a).
cplx incomplete_resum(const std::vector<double>& a, double length, double theta, cplx h);

}  // namespace zj
