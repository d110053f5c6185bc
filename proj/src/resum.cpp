#include <algorithm>
#include <cmath>

#include "zjones/borel.hpp"
#include "zjones/error.hpp"
#include "zjones/parallel.hpp"

namespace zj {

namespace {

// Chebyshev points of the second kind on [0, R] with barycentric interpolation.
class ChebTable {
 public:
  ChebTable(double R, int n) : R_(R), x_(n + 1), w_(n + 1), f_(n + 1) {
    for (int j = 0; j <= n; ++j) {
      x_[j] = 0.5 * R * (1 - std::cos(M_PI * j / n));
      w_[j] = (j % 2 ? -1.0 : 1.0) * (j == 0 || j == n ? 0.5 : 1.0);
    }
  }
  int size() const { return static_cast<int>(x_.size()); }
  double node(int j) const { return x_[j]; }
  cplx& value(int j) { return f_[j]; }
  cplx value(int j) const { return f_[j]; }

  cplx operator()(double r) const {
    cplx num = 0;
    double den = 0;
    for (std::size_t j = 0; j < x_.size(); ++j) {
      double d = r - x_[j];
      if (d == 0) return f_[j];
      double c = w_[j] / d;
      num += c * f_[j];
      den += c;
    }
    return num / den;
  }

 private:
  double R_;
  std::vector<double> x_, w_;
  std::vector<cplx> f_;
};

constexpr int kOrder = 20;

struct RayValue {
  cplx value;
  double growth_A;
};

// (w/h) int_0^R e^{-r w/h} B(r w) dr on an n-node table.
RayValue ray_integral(const TorusKernel& k, const PrefactorBorel& H, cplx w, cplx h, double R, int n) {
  ChebTable K(R, n), Hs(R, n), B(R, n);
  parallel_for(static_cast<std::size_t>(K.size()), [&](std::size_t j) {
    cplx xi = K.node(j) * w;
    K.value(j) = borel_kernel_eval(k, xi);
    Hs.value(j) = H(xi);
  });
  parallel_for(static_cast<std::size_t>(B.size()), [&](std::size_t j) {
    double r = B.node(j);
    cplx conv = 0;
    if (r > 0) {
      int panels = std::max(1, static_cast<int>(std::ceil(16 * r / R)));
      conv = w * integrate_segment([&](cplx t) { return Hs(r - t.real()) * K(t.real()); }, 0.0, r, panels, kOrder);
    }
    B.value(j) = K.value(j) + conv;
  });
  double A = 0;
  for (int j = 0; j < B.size(); ++j) A = std::max(A, std::abs(B.value(j)) * std::exp(-B.node(j) / M_PI));
  const cplx wh = w / h;
  cplx outer = integrate_segment([&](cplx r) { return std::exp(-r.real() * wh) * B(r.real()); }, 0.0, R, 32, kOrder);
  return {wh * outer, A};
}

int branch_of(cplx h, double theta) {
  return domain_components(h).size() == 2 && std::sin(theta) < 0 ? 1 : 0;
}

}  // namespace

json ResumResult::to_json() const {
  json j;
  j["value"] = complex_json(value);
  j["branch"] = branch_id;
  j["err"] = round15(error_estimate);
  j["theta"] = round15(theta);
  j["R"] = round15(R);
  j["tail_bound"] = round15(tail_bound);
  j["growth_A"] = round15(growth_A);
  j["nodes"] = nodes;
  return j;
}

bool direction_in_domain(cplx h, double theta) {
  cplx w = std::polar(1.0, theta);
  return std::abs(w + 1.0) > 1e-12 && (w / h).real() > 1 / M_PI;
}

std::vector<double> domain_components(cplx h) {
  if (h == 0.0 || std::abs(h) >= M_PI) throw Error(ErrorKind::Domain, "need 0 < |h| < pi");
  const double alpha = std::acos(std::abs(h) / M_PI);
  double psi = std::arg(h);
  if ((-1.0 / h).real() <= 1 / M_PI) return {psi};
  if (psi < 0) psi += 2 * M_PI;
  double upper = 0.5 * (psi - alpha + M_PI), lower = 0.5 * (M_PI + psi + alpha) - 2 * M_PI;
  return {upper, lower};
}

ResumResult resum(const TorusParams& tp, cplx s0, cplx h, const ResumConfig& cfg) {
  if (h == 0.0 || std::abs(h) >= M_PI) throw Error(ErrorKind::Domain, "resum needs 0 < |h| < pi");
  if (!direction_in_domain(h, cfg.theta))
    throw Error(ErrorKind::DirectionOutsideDomain, "direction e^{i theta} is not in D(h)");
  if (cfg.R < 0 || cfg.tol <= 0) throw Error(ErrorKind::Domain, "resum needs R >= 0 and tol > 0");
  const TorusKernel k(tp, s0);
  const PrefactorBorel H(tp, 1);
  const cplx w = std::polar(1.0, cfg.theta);
  const double delta = (w / h).real() - 1 / M_PI;
  const double habs = std::abs(h);

  ResumResult res;
  res.theta = cfg.theta;
  res.branch_id = branch_of(h, cfg.theta);
  double R = cfg.R > 0 ? cfg.R : std::max(2.0, (std::log(1 / cfg.tol) + std::log(1 / (habs * delta)) + 5) / delta);
  for (int attempt = 0;; ++attempt) {
    RayValue v{}, prev{};
    double diff = 0;
    int n = cfg.nodes > 0 ? cfg.nodes / 2 : 32;
    prev = ray_integral(k, H, w, h, R, n);
    for (;;) {
      n *= 2;
      v = ray_integral(k, H, w, h, R, n);
      diff = std::abs(v.value - prev.value);
      if (cfg.nodes > 0 || diff <= cfg.tol / 2 || n >= 512) break;
      prev = v;
    }
    const double A = std::max(v.growth_A, prev.growth_A);
    const double tail = A * std::exp(-R * delta) / (habs * delta);
    res.value = v.value;
    res.R = R;
    res.nodes = n;
    res.growth_A = A;
    res.tail_bound = tail;
    res.error_estimate = diff + tail;
    if (tail <= cfg.tol / 2 || cfg.R > 0) break;
    if (attempt >= 5) throw Error(ErrorKind::TailBound, "tail bound above tolerance after enlarging R");
    R += (std::log(std::max(A, 1.0)) + std::log(2 * tail / cfg.tol)) / delta + 1;
  }
  if (cfg.R > 0 && res.tail_bound > cfg.tol)
    throw Error(ErrorKind::TailBound, "tail bound " + std::to_string(res.tail_bound) + " exceeds tolerance at R");
  return res;
}

std::vector<ResumResult> branch_scan(const TorusParams& tp, cplx s0, cplx h, const ResumConfig& cfg) {
  std::vector<ResumResult> out;
  for (double theta : domain_components(h)) {
    ResumConfig c = cfg;
    c.theta = theta;
    out.push_back(resum(tp, s0, h, c));
  }
  return out;
}

cplx incomplete_resum(const std::vector<double>& a, double length, double theta, cplx h) {
  if (length < 0) throw Error(ErrorKind::Domain, "integration length must be >= 0");
  if (h == 0.0) throw Error(ErrorKind::Domain, "h must be nonzero");
  const cplx w = std::polar(1.0, theta);
  if ((w / h).real() <= 0) throw Error(ErrorKind::DirectionOutsideDomain, "need Re(e^{i theta}/h) > 0");
  if (length == 0) return 0;
  const GevreyReport rep = gevrey_diagnose(a);
  if (length >= rep.radius_estimate)
    throw Error(ErrorKind::DivergentTaylor, "integration length reaches the estimated Borel radius " +
                                                std::to_string(rep.radius_estimate));
  const std::vector<double> b = formal_borel(a);
  auto poly = [&](cplx xi) {
    cplx acc = 0;
    for (std::size_t n = b.size(); n-- > 0;) acc = acc * xi + b[n];
    return acc;
  };
  const cplx wh = w / h;
  int panels = std::max(4, static_cast<int>(std::ceil(2 * length * std::abs(wh))));
  cplx integral = integrate_segment([&](cplx r) { return std::exp(-r.real() * wh) * poly(r.real() * w); }, 0.0, length,
                                    panels, kOrder);
  return wh * integral;
}

}  // namespace zj
