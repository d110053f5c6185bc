#include <doctest.h>

#include <cmath>

#include "series_helpers.hpp"
#include "zjones/error.hpp"
#include "zjones/kernel.hpp"
#include "zjones/torus.hpp"

using namespace zj;
using namespace zj::testhelp;

namespace {
RingPtr S() { return Ring::of("s"); }
MPoly s_var() { return MPoly::variable(S(), "s"); }
MPoly cst(const Rational& q) { return MPoly::constant(S(), q); }

double partial_sum(const HSeries& f, double h, int upto) {
  double acc = 0, hp = 1;
  for (int n = 0; n <= upto; ++n, hp *= h) acc += f[n].constant_term().get_d() * hp;
  return acc;
}
}  // namespace

TEST_CASE("torus parameter validation") {
  CHECK_THROWS_AS(TorusParams(2, 4), Error);
  CHECK_THROWS_AS(TorusParams(1, 5), Error);
  CHECK_NOTHROW(TorusParams(3, 4));
}

TEST_CASE("Q table") {
  auto q = f_coeffs(TorusParams(2, 3), 6);
  CHECK(q[1] == cst(1));
  CHECK(q[2] == s_var() * s_var() - cst(Rational(23, 36)));
  for (int m = 2; m <= 5; ++m)
    for (int p = m + 1; p <= 7; ++p) {
      if (std::gcd(m, p) != 1) continue;
      auto t = f_coeffs(TorusParams(m, p), 8);
      CHECK(t[1] == cst(1));
      for (int k = 1; k <= 8; ++k) {
        CHECK(t[k].is_even_in("s"));
        CHECK(t[k].degree("s") <= 2 * k - 2);
      }
    }
}

TEST_CASE("Q table at s = 1 is the product of two sinh") {
  // sinh(ax) sinh(bx) with ab = 1: coefficient of x^{2k} is ((a+b)^{2k} - (a-b)^{2k}) / (2 (2k)!)
  TorusParams tp(2, 5);
  auto q = f_coeffs(tp, 7);
  Rational up = tp.c() + 2, um = tp.c() - 2, upk = up, umk = um;
  for (int k = 1; k <= 7; ++k) {
    CHECK(q[k].substitute("s", 1) == cst((upk - umk) / (2 * factorial(2 * k))));
    upk *= up;
    umk *= um;
  }
}

TEST_CASE("gaussian moments") {
  CHECK(gaussian_moment(1) == 1);
  CHECK(gaussian_moment(2) == Rational(3, 2));
  CHECK(gaussian_moment(3) == Rational(15, 4));
}

TEST_CASE("torus series normalization") {
  for (auto [m, p] : {std::pair{2, 3}, {2, 5}, {3, 4}, {3, 5}}) {
    JonesSeries j = jones_torus(TorusParams(m, p), 14);
    CHECK(j.series.substitute("s", 1) == one(S(), 14));
    CHECK(j.series[0] == cst(1));
    CHECK(j.knot.framing == 2 * m * p);
  }
}

TEST_CASE("torus (2,3) is the framed Habiro trefoil") {
  JonesSeries t = jones_torus(TorusParams(2, 3), 12);
  HSeries h = jones_habiro(KnotSpec::trefoil(), 12).series;
  if (frozen::kTrefoilTorusMirror) h = h.mirrored();
  CHECK(t.series == h * framing_factor(frozen::kTrefoilTorusFraming, 12));
}

TEST_CASE("closed form") {
  for (auto [m, p] : {std::pair{2, 3}, {3, 4}})
    for (std::complex<double> h : {std::complex<double>(0.3), {0.1, 0.2}, {-0.5, 1.0}})
      CHECK(std::abs(kashaev_closed(TorusParams(m, p), 1, h) - 1.0) < 1e-14);
  TorusParams tp(2, 3);
  CHECK(std::abs(kashaev_closed(tp, 3, 0.2) - kashaev_closed(tp, -3, 0.2)) < 1e-15);
  CHECK_THROWS_AS(kashaev_closed(tp, 2, 0.0), Error);
  CHECK_THROWS_AS(kashaev_closed(tp, 2, {0.0, 2 * M_PI}), Error);
  CHECK_THROWS_AS(kashaev_closed(tp, 0, 0.2), Error);
}

TEST_CASE("integer colour series converges to the closed form") {
  TorusParams tp(2, 3);
  for (int s : {2, 3}) {
    HSeries f = jones_torus(tp, 40, cst(s)).series;
    double exact = kashaev_closed(tp, s, 0.2).real();
    CHECK(std::abs(partial_sum(f, 0.2, 40) - exact) < 1e-8);
    // geometric tail: errors shrink with the order
    CHECK(std::abs(partial_sum(f, 0.2, 30) - exact) < std::abs(partial_sum(f, 0.2, 15) - exact));
  }
}

TEST_CASE("quadrature") {
  TorusParams tp(2, 3);
  QuadResult r = kashaev_quadrature(tp, 2.0, 0.2);
  CHECK(r.converged);
  CHECK(std::abs(r.value - kashaev_closed(tp, 2, 0.2)) < 1e-10);
  for (std::complex<double> h : {std::complex<double>(0.2), {0.5, 0.3}})
    CHECK(std::abs(kashaev_quadrature(TorusParams(2, 5), 1.0, h).value - 1.0) < 1e-10);
  QuadResult half = kashaev_quadrature(tp, 0.5, 0.2);
  CHECK(std::isfinite(half.value.real()));
  CHECK(std::abs(half.value.real() - 0.81527241872092329) < 1e-10);
  CHECK_THROWS_AS(kashaev_quadrature(tp, 0.5, -0.2), Error);
  QuadConfig rotated;
  rotated.contour_angle = 0.9;
  CHECK_THROWS_AS(kashaev_quadrature(tp, 0.5, 0.2, rotated), Error);
  rotated.contour_angle = 0.5;
  CHECK(std::abs(kashaev_quadrature(tp, 1.0, -0.2, rotated).value - 1.0) < 1e-10);
  CHECK(std::isfinite(kashaev_quadrature(tp, 0.5, -0.2, rotated).value.real()));
  rotated.contour_angle = 0.2;
  QuadResult rot = kashaev_quadrature(tp, 2.0, {0.2, 0.1}, rotated);
  CHECK(std::abs(rot.value - kashaev_closed(tp, 2, {0.2, 0.1})) < 1e-9);
}

TEST_CASE("kernel Taylor branch agrees with the closed expression") {
  TorusKernel k(TorusParams(2, 3), {0.5, 0.25});
  for (double r : {0.039, 0.041}) {
    std::complex<double> y(r, 0.01);
    CHECK(std::abs(k.F(y) - k.F(y * (1 + 1e-9))) < 1e-9);
  }
  // integer colour takes the exponential-sum branch; compare with a non-integer neighbour
  TorusKernel k2(TorusParams(2, 3), 2.0), k2n(TorusParams(2, 3), {2.0, 1e-9});
  for (std::complex<double> y : {std::complex<double>(0.7, 0.2), {0.1, -1.0}}) {
    CHECK(std::abs(k2.F(y) - k2n.F(y)) < 1e-7);
    CHECK(std::abs(k2.dF_over_y(y) - k2n.dF_over_y(y)) < 1e-7);
  }
  // derivative against a central difference
  std::complex<double> y(0.6, 0.3), d = 1e-5;
  CHECK(std::abs((k.F(y + d) - k.F(y - d)) / (2.0 * d) / y - k.dF_over_y(y)) < 1e-7);
}
