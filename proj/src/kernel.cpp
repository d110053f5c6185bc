#include "zjones/kernel.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace zj {

namespace {

constexpr int kTaylor = 12;
constexpr double kTaylorRadius = 0.04;

struct GaussLegendre {
  std::vector<double> x, w;
};

const GaussLegendre& rule(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussLegendre g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5)), dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (z * p1 - p0) / (z * z - 1);
      double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    g.x[i] = z;
    g.w[i] = 2 / ((1 - z * z) * dp * dp);
  }
  return cache.emplace(n, std::move(g)).first->second;
}

// sinh(s t)/s, finite at s = 0
cplx shs(cplx s, cplx t) {
  cplx st = s * t;
  if (std::abs(st) < 1e-3) {
    cplx z2 = st * st;
    return t * (1.0 + z2 / 6.0 * (1.0 + z2 / 20.0 * (1.0 + z2 / 42.0)));
  }
  return std::sinh(st) / s;
}

}  // namespace

const std::vector<double>& gl_nodes(int order) { return rule(order).x; }
const std::vector<double>& gl_weights(int order) { return rule(order).w; }

TorusKernel::TorusKernel(const TorusParams& tp, cplx s) : tp_(tp), s_(s) {
  A_ = std::sqrt(double(tp.m) * tp.p);
  a_ = std::sqrt(double(tp.m) / tp.p);
  b_ = std::sqrt(double(tp.p) / tp.m);
  if (s.imag() == 0 && s.real() != 0 && std::round(s.real()) == s.real()) n_ = std::lround(s.real());
  std::vector<MPoly> q = f_coeffs(tp, kTaylor);
  q_.resize(kTaylor + 1);
  for (int k = 1; k <= kTaylor; ++k) q_[k] = q[k].eval({{"s", s}});
}

double TorusKernel::cut_start() const { return -M_PI * M_PI / (double(tp_.m) * tp_.p); }

cplx TorusKernel::G(cplx y) const {
  cplx t = A_ * y;
  if (n_ != 0) {
    long an = std::labs(n_);
    cplx acc = 0;
    for (long j = 0; j < an; ++j) acc += std::exp(double(an - 1 - 2 * j) * t);
    return acc / double(an);
  }
  return shs(s_, t) / std::sinh(t);
}

cplx TorusKernel::dG(cplx y) const {
  cplx t = A_ * y;
  if (n_ != 0) {
    long an = std::labs(n_);
    cplx acc = 0;
    for (long j = 0; j < an; ++j) {
      double k = double(an - 1 - 2 * j);
      acc += k * std::exp(k * t);
    }
    return A_ * acc / double(an);
  }
  cplx sh = std::sinh(t);
  return A_ * (std::cosh(s_ * t) / sh - shs(s_, t) * std::cosh(t) / (sh * sh));
}

cplx TorusKernel::F(cplx y) const {
  if (std::abs(y) < kTaylorRadius) {
    cplx y2 = y * y, acc = 0;
    for (int k = kTaylor; k >= 1; --k) acc = (acc + q_[k]) * y2;
    return acc;
  }
  return G(y) * std::sinh(a_ * y) * std::sinh(b_ * y);
}

cplx TorusKernel::dF_over_y(cplx y) const {
  if (std::abs(y) < kTaylorRadius) {
    cplx y2 = y * y, acc = 0;
    for (int k = kTaylor; k >= 1; --k) acc = acc * y2 + 2.0 * double(k) * q_[k];
    return acc;
  }
  cplx sa = std::sinh(a_ * y), sb = std::sinh(b_ * y);
  cplx dS = a_ * std::cosh(a_ * y) * sb + b_ * sa * std::cosh(b_ * y);
  return (dG(y) * sa * sb + G(y) * dS) / y;
}

}  // namespace zj
