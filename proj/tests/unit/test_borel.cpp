#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "zjones/borel.hpp"
#include "zjones/error.hpp"

using namespace zj;

namespace {

const TorusParams T23(2, 3);

std::vector<double> torus_coefficients(const TorusParams& tp, const Rational& s0, int N) {
  RingPtr S = Ring::of("s");
  return coefficients_at(jones_torus(tp, N, MPoly::constant(S, s0)).series, s0);
}

cplx taylor(const std::vector<double>& b, cplx xi) {
  cplx acc = 0;
  for (std::size_t n = b.size(); n-- > 0;) acc = acc * xi + b[n];
  return acc;
}

// exact Laplace integral of an entire function along [0, inf) for Re(1/h) large enough
template <class Fn>
cplx laplace(Fn&& f, double h, double L) {
  return integrate_segment([&](cplx x) { return std::exp(-x / h) * f(x); }, 0.0, L, 64, 20);
}

}  // namespace

TEST_CASE("formal Borel transform") {
  RingPtr S = Ring::of("s");
  HSeries one = HSeries::constant(MPoly::constant(S, 1), 5);
  BorelCoefficients b = formal_borel(one);
  CHECK(b.b[0] == MPoly::constant(S, 1));
  for (int n = 1; n <= 5; ++n) CHECK(b.b[n].is_zero());
  std::vector<double> fact{1, 1, 2, 6, 24, 120, 720};
  for (double v : formal_borel(fact)) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    HSeries a = testgen::random_series(rng, S, 8);
    CHECK(laplace_termwise(formal_borel(a), S) == a);
  }
}

TEST_CASE("Gevrey diagnostics on synthetic series") {
  std::vector<double> a;
  for (int n = 0; n <= 40; ++n) a.push_back(std::exp(std::lgamma(n + 1.0) + n * std::log(3.0)));
  GevreyReport g = gevrey_diagnose(a);
  CHECK(std::abs(g.C_fit - 3) < 0.15);
  CHECK(std::abs(g.radius_estimate - 1.0 / 3) < 1.0 / 60);
  CHECK(!g.superconvergent);
  CHECK(g.rows.size() == 41);

  std::vector<double> inv;
  for (int n = 0; n <= 40; ++n) inv.push_back(std::exp(-std::lgamma(n + 1.0)));
  GevreyReport s = gevrey_diagnose(inv);
  CHECK(s.superconvergent);
  CHECK(std::isinf(s.radius_estimate));

  CHECK_THROWS_AS(gevrey_diagnose(std::vector<double>(20, 0.0)), Error);
  CHECK_THROWS_AS(gevrey_diagnose(std::vector<double>(5, 1.0)), Error);
}

TEST_CASE("Borel radius of torus series") {
  GevreyReport g = gevrey_diagnose(torus_coefficients(T23, Rational(1, 2), 60));
  CHECK(std::abs(g.radius_estimate / (M_PI * M_PI / 6) - 1) < 0.15);
  GevreyReport g5 = gevrey_diagnose(torus_coefficients(TorusParams(2, 5), Rational(1, 2), 60));
  CHECK(std::abs(g5.radius_estimate / (M_PI * M_PI / 10) - 1) < 0.15);
  // singularity on the negative axis: b_k alternate in sign for large k
  std::vector<double> b = formal_borel(torus_coefficients(T23, Rational(1, 2), 40));
  for (int n = 30; n < 40; ++n) CHECK(b[n] * b[n + 1] < 0);
}

TEST_CASE("prefactor Borel transform H") {
  CHECK(std::abs(H_eval(T23, 0.0) - 1.0) < 1e-15);
  // Laplace round trip: L(H)(h) = h * h e^{-ch/4} / (2 sinh(h/2))
  const double h = 0.3, c = 13.0 / 6;
  cplx lh = laplace([](cplx x) { return H_eval(T23, x); }, h, 20);
  CHECK(std::abs(lh - h * h * std::exp(-c * h / 4) / (2 * std::sinh(h / 2))) < 1e-8);
  // growth along rays
  for (double R : {10.0, 20.0, 30.0})
    for (double theta : {0.0, 1.0, 2.0, M_PI, -2.5})
      CHECK(std::log(std::abs(H_eval(T23, std::polar(R, theta)))) / R <= 1 / M_PI + 0.05);
  double err = 1;
  PrefactorBorel H(T23);
  H(cplx(25, 5), &err);
  CHECK(err < 1e-20);
  CHECK_THROWS_AS(H_eval(T23, 1e5), Error);
  // derivative order agrees with a central difference
  PrefactorBorel dH(T23, 1);
  cplx x(1.3, 0.4), d = 1e-5;
  CHECK(std::abs((H(x + d) - H(x - d)) / (2.0 * d) - dH(x)) < 1e-8);
}

TEST_CASE("I matches its convolution Taylor series") {
  TorusKernel k(T23, 0.5);
  CHECK(I_eval(k, 0.0) == cplx(0));
  std::vector<MPoly> q = f_coeffs(T23, 14, MPoly::constant(Ring::of("s"), Rational(1, 2)));
  for (cplx x : {cplx(0.1), cplx(-0.08, 0.05), cplx(0, 0.1), cplx(0.03, -0.02)}) {
    cplx series = 0;
    for (int j = 1; j <= 14; ++j)
      series += q[j].constant_term().get_d() * std::tgamma(j + 0.5) / (2 * std::tgamma(j + 1.0)) * std::pow(x, j);
    CHECK(std::abs(I_eval(k, x) - series) < 1e-10);
  }
}

TEST_CASE("Borel kernel is a scaled derivative of I") {
  for (cplx s0 : {cplx(0.5), cplx(2.0), cplx(0.3, 0.7)}) {
    TorusKernel k(T23, s0);
    for (cplx x : {cplx(0.5, 0.1), cplx(-1.0, 0.8), cplx(3.0)}) {
      cplx d = 1e-4;
      cplx deriv = (I_eval(k, x + d) - I_eval(k, x - d)) / (2.0 * d);
      CHECK(std::abs(borel_kernel_eval(k, x) - 4 / std::sqrt(M_PI) * deriv) < 1e-6);
    }
  }
}

TEST_CASE("cut handling") {
  TorusKernel half(T23, 0.5), two(T23, 2.0);
  CHECK_NOTHROW(I_eval(two, -5.0));
  CHECK_THROWS_AS(I_eval(half, -5.0), Error);
  CHECK_NOTHROW(I_eval(half, -1.0));  // between 0 and the branch point
  cplx up = I_eval(half, -5.0, +1), down = I_eval(half, -5.0, -1);
  CHECK(std::abs(up - std::conj(down)) < 1e-10);
  CHECK(std::abs(up.imag()) > 1e-3);
  CHECK(std::abs(I_eval(half, cplx(-5.0, 1e-7)) - up) < 1e-5);
  CHECK(std::abs(I_eval(half, cplx(-5.0, -1e-7)) - down) < 1e-5);
  CHECK_THROWS_AS(borel_eval(T23, 0.5, -5.0), Error);
}

TEST_CASE("Borel transform agrees with the formal Borel Taylor series") {
  std::vector<double> b = formal_borel(torus_coefficients(T23, Rational(1, 2), 40));
  for (cplx xi : {cplx(0.3), cplx(-0.3), cplx(0.1, 0.2), cplx(0, -0.3), cplx(-0.2, 0.2)})
    CHECK(std::abs(borel_eval(T23, 0.5, xi) - taylor(b, xi)) < 1e-8);
  std::vector<double> b2 = formal_borel(torus_coefficients(TorusParams(3, 4), Rational(2), 40));
  CHECK(std::abs(borel_eval(TorusParams(3, 4), 2.0, 0.2) - taylor(b2, 0.2)) < 1e-8);
}

TEST_CASE("Borel transform growth and integer-colour entirety") {
  cplx big = borel_eval(T23, 0.5, 10.0);
  CHECK(std::isfinite(big.real()));
  CHECK(std::abs(big) <= 50 * std::exp(10 / M_PI));
  auto jump = [](cplx s0, double eps) {
    return std::abs(borel_eval(T23, s0, cplx(-5, eps)) - borel_eval(T23, s0, cplx(-5, -eps)));
  };
  double j1 = jump(2.0, 1e-2), j2 = jump(2.0, 1e-3);
  CHECK(j2 < 0.2 * j1);
  CHECK(std::abs(borel_eval(T23, 2.0, cplx(-5, 1e-3)) - borel_eval(T23, 2.0, -5.0)) < 1e-2);
  CHECK(jump(0.5, 1e-3) > 100 * j2);
}

TEST_CASE("Laplace transform turns convolution into a product") {
  auto f = [](cplx x) { return std::exp(0.3 * x); };
  auto g = [](cplx x) { return std::cos(x); };
  auto conv = [&](cplx x) {
    return integrate_segment([&](cplx u) { return f(x - u) * g(u); }, 0.0, x, 4, 20);
  };
  const double h = 0.25;
  cplx lhs = laplace(conv, h, 30), rhs = laplace(f, h, 30) * laplace(g, h, 30);
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("domain of directions") {
  CHECK(domain_components(0.2).size() == 1);
  CHECK(domain_components(cplx(0.1, 0.2)).size() == 1);
  std::vector<double> two = domain_components(-0.15);
  REQUIRE(two.size() == 2);
  CHECK(std::sin(two[0]) > 0);
  CHECK(std::sin(two[1]) < 0);
  for (double t : two) CHECK(direction_in_domain(-0.15, t));
  CHECK(!direction_in_domain(-0.15, M_PI));
  CHECK(!direction_in_domain(0.2, 1.6));
  CHECK_THROWS_AS(domain_components(4.0), Error);
}

TEST_CASE("resummation") {
  ResumResult r2 = resum(T23, 2.0, 0.2);
  CHECK(std::abs(r2.value - kashaev_closed(T23, 2, 0.2)) < 1e-5);
  CHECK(r2.error_estimate >= 0);
  CHECK(r2.branch_id == 0);
  ResumResult rh = resum(T23, 0.5, 0.2);
  CHECK(std::abs(rh.value - kashaev_quadrature(T23, 0.5, 0.2).value) < 1e-4);
  ResumConfig tilted;
  tilted.theta = 0.6;
  CHECK(std::abs(resum(T23, 0.5, 0.2, tilted).value - rh.value) < 1e-6);
  ResumResult rc = resum(T23, 0.5, cplx(0.1, 0.15));
  QuadConfig qc;
  CHECK(std::abs(rc.value - kashaev_quadrature(T23, 0.5, cplx(0.1, 0.15), qc).value) < 1e-6);

  ResumConfig bad;
  bad.theta = 1.6;
  CHECK_THROWS_AS(resum(T23, 0.5, 0.2, bad), Error);
  CHECK_THROWS_AS(resum(T23, 0.5, 3.5), Error);
  ResumConfig shortR;
  shortR.R = 0.5;
  CHECK_THROWS_AS(resum(T23, 0.5, 0.2, shortR), Error);
}

TEST_CASE("branch scan") {
  std::vector<ResumResult> one = branch_scan(T23, 0.5, 0.2);
  CHECK(one.size() == 1);
  std::vector<ResumResult> half = branch_scan(T23, 0.5, -0.15);
  REQUIRE(half.size() == 2);
  CHECK(half[0].branch_id == 0);
  CHECK(half[1].branch_id == 1);
  CHECK(std::abs(half[0].value - std::conj(half[1].value)) < 1e-5);
  CHECK(std::abs(half[0].value.imag()) > 1e-6);
  std::vector<ResumResult> whole = branch_scan(T23, 2.0, -0.15);
  CHECK(std::abs(whole[0].value - whole[1].value) < 1e-6);
  CHECK(std::abs(whole[0].value - kashaev_closed(T23, 2, -0.15)) < 1e-6);
  // imaginary colour also gives conjugate branches
  std::vector<ResumResult> imag = branch_scan(T23, cplx(0, 0.7), -0.15);
  CHECK(std::abs(imag[0].value - std::conj(imag[1].value)) < 1e-5);
}

TEST_CASE("incomplete Laplace transform") {
  std::vector<double> a = torus_coefficients(T23, Rational(1, 2), 150);
  const double len = 0.8 * M_PI * M_PI / 6;
  CHECK(incomplete_resum(a, 0, 0, 0.2) == cplx(0));
  CHECK_THROWS_AS(incomplete_resum(a, 2.0, 0, 0.2), Error);
  std::vector<double> xs, ys;
  for (double h : {0.2, 0.1, 0.05}) {
    ResumConfig cfg;
    cfg.tol = 1e-14;
    double gap = std::abs(incomplete_resum(a, len, 0, h) - resum(T23, 0.5, h, cfg).value);
    CHECK(gap <= 10 * std::exp(-len / h));
    xs.push_back(1 / h);
    ys.push_back(std::log(gap));
  }
  double slope = (ys[2] - ys[0]) / (xs[2] - xs[0]);
  CHECK(std::abs(slope / -len - 1) < 0.15);
}
