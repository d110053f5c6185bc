#include "zjones/borel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "zjones/bigfloat.hpp"
#include "zjones/error.hpp"

namespace zj {

BorelCoefficients formal_borel(const HSeries& a) {
  BorelCoefficients out;
  out.source_order = a.trunc();
  Rational fact(1);
  for (int n = 0; n <= a.trunc(); ++n) {
    if (n > 0) fact *= n;
    out.b.push_back(a[n] * (Rational(1) / fact));
  }
  return out;
}

std::vector<double> formal_borel(const std::vector<double>& a) {
  std::vector<double> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0) continue;
    double mag = std::exp(std::log(std::abs(a[n])) - std::lgamma(double(n) + 1));
    b[n] = a[n] < 0 ? -mag : mag;
  }
  return b;
}

HSeries laplace_termwise(const BorelCoefficients& b, const RingPtr& ring) {
  HSeries out(ring, static_cast<int>(b.b.size()) - 1);
  Rational fact(1);
  for (std::size_t n = 0; n < b.b.size(); ++n) {
    if (n > 0) fact *= static_cast<long>(n);
    out.set(static_cast<int>(n), b.b[n] * fact);
  }
  return out;
}

std::vector<double> coefficients_at(const HSeries& f, const Rational& s0) {
  HSeries g = f.ring()->index("s") >= 0 ? f.substitute("s", s0) : f;
  std::vector<double> out;
  for (int n = 0; n <= g.trunc(); ++n) out.push_back(g[n].constant_term().get_d());
  return out;
}

// ---------------------------------------------------------------- Gevrey diagnostics

namespace {

// least squares for y ~ X beta with a handful of columns
std::vector<double> least_squares(const std::vector<std::vector<double>>& X, const std::vector<double>& y) {
  const std::size_t k = X.front().size();
  std::vector<std::vector<double>> M(k, std::vector<double>(k + 1, 0));
  for (std::size_t r = 0; r < X.size(); ++r)
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) M[i][j] += X[r][i] * X[r][j];
      M[i][k] += X[r][i] * y[r];
    }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
    std::swap(M[c], M[piv]);
    if (std::abs(M[c][c]) < 1e-300) throw Error(ErrorKind::UndefinedFit, "singular least-squares system");
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      double f = M[r][c] / M[c][c];
      for (std::size_t j = c; j <= k; ++j) M[r][j] -= f * M[c][j];
    }
  }
  std::vector<double> beta(k);
  for (std::size_t i = 0; i < k; ++i) beta[i] = M[i][k] / M[i][i];
  return beta;
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::vector<double>> X;
  for (double v : x) X.push_back({v, 1.0});
  return least_squares(X, y)[0];
}

}  // namespace

json GevreyReport::to_json() const {
  json rj = json::array();
  for (const auto& r : rows)
    rj.push_back({{"n", r.n}, {"a", round15(r.a)}, {"b", round15(r.b)}, {"root", round15(r.root)},
                  {"residual", round15(r.residual)}});
  json j;
  j["C_fit"] = round15(C_fit);
  j["alpha"] = round15(alpha);
  j["beta"] = round15(beta);
  if (std::isfinite(radius_estimate)) j["radius_estimate"] = round15(radius_estimate);
  else j["radius_estimate"] = "inf";
  j["ratio_estimate"] = std::isfinite(ratio_estimate) ? json(round15(ratio_estimate)) : json("inf");
  j["superconvergent"] = superconvergent;
  j["trend_slope"] = round15(trend_slope);
  j["rows"] = rj;
  return j;
}

GevreyReport gevrey_diagnose(const std::vector<double>& a) {
  if (a.size() < 10) throw Error(ErrorKind::InvalidOrder, "gevrey_diagnose needs at least 10 coefficients");
  const int N = static_cast<int>(a.size()) - 1;
  std::vector<double> b = formal_borel(a);
  GevreyReport rep;
  std::vector<int> ns;
  std::vector<double> logb;
  for (int n = 1; n <= N; ++n)
    if (a[n] != 0 && std::isfinite(a[n])) {
      ns.push_back(n);
      logb.push_back(std::log(std::abs(a[n])) - std::lgamma(double(n) + 1));
    }
  if (ns.size() < 3) throw Error(ErrorKind::UndefinedFit, "fewer than three nonzero coefficients");

  std::vector<std::vector<double>> X;
  for (int n : ns) X.push_back({double(n), std::log(double(n)), 1.0});
  std::vector<double> beta = least_squares(X, logb);
  rep.C_fit = std::exp(beta[0]);
  rep.alpha = beta[1];
  rep.beta = beta[2];

  for (int n = 0; n <= N; ++n) {
    GevreyRow row{n, a[n], b[n], 0, 0};
    if (n > 0 && a[n] != 0) {
      double lb = std::log(std::abs(a[n])) - std::lgamma(double(n) + 1);
      row.root = std::exp(lb / n);
      row.residual = lb - (beta[0] * n + beta[1] * std::log(double(n)) + beta[2]);
    }
    rep.rows.push_back(row);
  }

  // tail window [N/2, N]
  std::vector<double> tn, tlogn, troot, tdev;
  double root_max = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < N / 2) continue;
    double lr = logb[i] / ns[i];
    root_max = std::max(root_max, std::exp(lr));
    tn.push_back(ns[i]);
    tlogn.push_back(std::log(double(ns[i])));
    troot.push_back(lr);
    tdev.push_back(lr - beta[0]);
  }
  if (tn.size() < 2) throw Error(ErrorKind::UndefinedFit, "too few nonzero coefficients in the tail window");
  rep.superconvergent = slope(tlogn, troot) < -0.5;
  rep.radius_estimate = rep.superconvergent ? std::numeric_limits<double>::infinity() : 1 / root_max;
  rep.trend_slope = slope(tn, tdev);
  const std::size_t last = ns.size() - 1;
  const int gap = ns[last] - ns[last - 1];
  double ratio = std::exp((logb[last - 1] - logb[last]) / gap);
  rep.ratio_estimate = rep.superconvergent ? std::numeric_limits<double>::infinity() : ratio;
  return rep;
}

// ---------------------------------------------------------------- H

namespace {

struct PrefactorCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<Rational>> coeffs;  // [h^{n+1}] / n!

  std::vector<Rational> get(const TorusParams& tp, int need) {
    std::lock_guard<std::mutex> lock(mu);
    auto& c = coeffs[{tp.m, tp.p}];
    if (static_cast<int>(c.size()) < need) {
      int N = std::max(need, 2 * static_cast<int>(c.size())) + 1;
      HSeries pre = torus_prefactor(tp, N);
      c.clear();
      Rational fact(1);
      for (int n = 0; n + 1 <= N; ++n) {
        if (n > 0) fact *= n;
        c.push_back(pre[n + 1].constant_term() / fact);
      }
    }
    return c;
  }
};

PrefactorCache& prefactor_cache() {
  static PrefactorCache cache;
  return cache;
}

constexpr int kMaxBits = 1 << 15;

}  // namespace

cplx PrefactorBorel::operator()(cplx xi, double* err, int precision_bits) const {
  const double r = std::abs(xi);
  int bits = precision_bits > 0 ? precision_bits : static_cast<int>(2 * (r * M_LOG2E / M_PI + 64));
  if (bits > kMaxBits) throw Error(ErrorKind::PrecisionBudget, "H_eval: precision budget exceeded");
  int need = static_cast<int>(3 * r) + 40 + derivative;
  for (;;) {
    std::vector<Rational> c = prefactor_cache().get(tp, need);
    // d-th derivative: coefficient n is c[n+d] (n+d)!/n!
    for (int d = 0; d < derivative; ++d) {
      for (std::size_t n = 0; n + 1 < c.size(); ++n) c[n] = c[n + 1] * static_cast<long>(n + 1);
      c.pop_back();
    }
    BigComplex acc(bits), power(cplx(1.0), bits);
    BigComplex x(xi, bits);
    double max_term = 0, last = 0;
    int small_run = 0;
    bool done = false;
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (n > 0) power *= x;
      BigComplex term = power;
      term *= BigFloat(c[n], bits);
      acc += term;
      double t = big_abs(term);
      max_term = std::max(max_term, t);
      last = t;
      if (double(n) > r && t <= 1e-40 * std::max(max_term, 1e-300)) {
        if (++small_run >= 3) {
          done = true;
          break;
        }
      } else {
        small_run = 0;
      }
    }
    if (done) {
      if (err) *err = max_term * std::ldexp(double(c.size()), 1 - bits) + last;
      return acc.to_complex();
    }
    need = 2 * static_cast<int>(c.size()) + derivative;
    if (need > 20000) throw Error(ErrorKind::PrecisionBudget, "H_eval: Taylor series did not settle");
  }
}

cplx H_eval(const TorusParams& tp, cplx xi, int precision_bits) {
  return PrefactorBorel(tp)(xi, nullptr, precision_bits);
}

// ---------------------------------------------------------------- I and its Borel kernel

namespace {

constexpr double kDeform = 0.3;
constexpr int kMaxTrapezoid = 1 << 16;

// Resolves which way the phi contour must bend. 0 means the straight path is safe.
int contour_side(const TorusKernel& k, cplx x, int side) {
  if (k.integer_colour() || x.real() >= 0) return 0;
  if (x.imag() == 0) {
    if (x.real() > k.cut_start()) return 0;
    if (side == 0)
      throw Error(ErrorKind::BranchCut, "point lies on the cut (-inf, " + std::to_string(k.cut_start()) +
                                            "]; request a one-sided limit");
    return side > 0 ? 1 : -1;
  }
  return x.imag() > 0 ? 1 : -1;
}

// Trapezoid rule on t in [0, pi/2] for an even, pi-periodic integrand; exponentially convergent.
template <class Fn>
cplx periodic_trapezoid(Fn&& g, double tol) {
  const double L = M_PI / 2;
  int n = 8;
  cplx g0 = g(0.0), gL = g(L);
  cplx ends = 0.5 * (g0 + gL), interior = 0;
  double mass = 0.5 * (std::abs(g0) + std::abs(gL));  // sum of |g|, sets the roundoff floor
  for (int i = 1; i < n; ++i) {
    cplx v = g(L * i / n);
    interior += v;
    mass += std::abs(v);
  }
  cplx prev = (ends + interior) * (L / n);
  while (n < kMaxTrapezoid) {
    for (int i = 0; i < n; ++i) {
      cplx v = g(L * (2 * i + 1) / (2.0 * n));
      interior += v;
      mass += std::abs(v);
    }
    n *= 2;
    cplx cur = (ends + interior) * (L / n);
    double floor = 1e3 * std::numeric_limits<double>::epsilon() * mass * (L / n);
    if (n >= 32 && std::abs(cur - prev) <= std::max(tol * std::max(1.0, std::abs(cur)), floor)) return cur;
    prev = cur;
  }
  throw Error(ErrorKind::PrecisionBudget, "angular quadrature did not converge (point too close to the branch point)");
}

}  // namespace

cplx I_eval(const TorusKernel& k, cplx x, int side, double tol) {
  if (x == 0.0) return 0;
  const int dir = contour_side(k, x, side);
  const cplx sx = std::sqrt(x);
  auto g = [&](double t) {
    cplx phi(t, -dir * kDeform * std::sin(2 * t));
    cplx dphi(1, -2 * dir * kDeform * std::cos(2 * t));
    return k.F(sx * std::sin(phi)) * dphi;
  };
  return periodic_trapezoid(g, tol) / std::sqrt(M_PI);
}

cplx I_eval(const TorusParams& tp, cplx s0, cplx x, int side) { return I_eval(TorusKernel(tp, s0), x, side); }

cplx borel_kernel_eval(const TorusKernel& k, cplx x, int side, double tol) {
  const int dir = contour_side(k, x, side);
  const cplx sx = std::sqrt(x);
  auto g = [&](double t) {
    cplx phi(t, -dir * kDeform * std::sin(2 * t));
    cplx dphi(1, -2 * dir * kDeform * std::cos(2 * t));
    cplx sp = std::sin(phi);
    return sp * sp * k.dF_over_y(sx * sp) * dphi;
  };
  return periodic_trapezoid(g, tol) * (2 / M_PI);
}

// ---------------------------------------------------------------- B(hJ)

namespace {

// Composite rule on [0, 1] with panels shrinking geometrically towards t0.
template <class Fn>
cplx graded_unit_integral(Fn&& f, double t0, double min_scale, int order) {
  std::vector<double> cuts{0.0, 1.0, t0};
  for (double scale = 0.5; scale > min_scale; scale *= 0.5) {
    if (t0 - scale * t0 > 0) cuts.push_back(t0 - scale * t0);
    if (t0 + scale * (1 - t0) < 1) cuts.push_back(t0 + scale * (1 - t0));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cplx total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate_segment(f, cuts[i], cuts[i + 1], 1, order);
  return total;
}

}  // namespace

BorelValue borel_eval(const TorusKernel& k, cplx xi, double tol) {
  if (!k.integer_colour() && xi.imag() == 0 && xi.real() <= k.cut_start())
    throw Error(ErrorKind::BranchCut, "segment [0, xi] meets the cut");
  PrefactorBorel H(k.params(), 1);
  const cplx base = borel_kernel_eval(k, xi);
  if (xi == 0.0) return {base, 0};
  auto integrand = [&](cplx t) { return H((1.0 - t) * xi) * borel_kernel_eval(k, t * xi); };
  // the branch point of K near the segment forces graded panels
  const double x0 = k.cut_start();
  const double t0 = std::clamp((x0 * std::conj(xi)).real() / std::norm(xi), 0.0, 1.0);
  if (!k.integer_colour() && std::abs(t0 * xi - x0) < 0.25 * std::abs(x0) && t0 > 0) {
    // no point grading below the closest approach to the branch point
    const double min_scale = std::max(1e-13, 0.25 * std::abs(t0 * xi - x0) / std::abs(xi));
    cplx lo = graded_unit_integral(integrand, t0, min_scale, 20) * xi;
    cplx hi = graded_unit_integral(integrand, t0, min_scale, 30) * xi;
    double diff = std::abs(hi - lo);
    if (diff > std::max(tol, 1e-9) * std::max(1.0, std::abs(hi)))
      throw Error(ErrorKind::Tolerance, "convolution quadrature near the branch point did not converge");
    return {base + hi, diff};
  }
  int panels = std::max(1, static_cast<int>(std::ceil(std::abs(xi))));
  cplx prev = integrate_segment(integrand, 0.0, 1.0, panels, 20) * xi;
  for (int iter = 0; iter < 8; ++iter) {
    panels *= 2;
    cplx cur = integrate_segment(integrand, 0.0, 1.0, panels, 20) * xi;
    double diff = std::abs(cur - prev);
    if (diff <= tol * std::max(1.0, std::abs(cur))) return {base + cur, diff};
    prev = cur;
  }
  throw Error(ErrorKind::Tolerance, "convolution quadrature did not converge");
}

cplx borel_eval(const TorusParams& tp, cplx s0, cplx xi) { return borel_eval(TorusKernel(tp, s0), xi).value; }

}  // namespace zj
