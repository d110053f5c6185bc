#pragma once

#include <complex>
#include <string>
#include <vector>

#include "zjones/json_io.hpp"
#include "zjones/torus.hpp"

namespace zj {

// Ring {s1, s2} with s1 = 2z+1, s2 = 2w+1.
RingPtr lorentz_ring();

struct LorentzSeries {
  HSeries series;
  KnotSpec knot;
};

// J_K(s1, h) * J_K(s2, -h)
LorentzSeries lorentz_series(const KnotSpec& k, int N, const Conventions& conv = {});

// W(2a, 2b) / pi = int_0^{2 pi} cos^{2a} sin^{2b} / pi = 2 (2a-1)!! (2b-1)!! / (2a+2b)!!
Rational trig_moment_over_pi(int a, int b);

struct GExpansion {
  // P[k] / pi, k = 0..N+2; P[k] = sum_{a+b=k} Q1[a] Q2[b] (-1)^b W(2a, 2b)
  std::vector<MPoly> P_over_pi;
  // sum_k (P[k] / 2 pi) k! h^k / (sinh(h/2) sinh(-h/2)), truncated at N
  HSeries factorial_series;
};

GExpansion g_expansion(const TorusParams& tp, int N, const MPoly& s1, const MPoly& s2);
GExpansion g_expansion(const TorusParams& tp, int N);

// "0.5", "2i", "-i", "1+2i", "1-0.5i"
std::complex<double> parse_complex(const std::string& text);

struct RepLabel {
  enum class Group { SL2R, SL2C };
  enum class Series { Principal, DiscretePos, DiscreteNeg };
  Group group = Group::SL2R;
  Series series = Series::Principal;
  std::complex<double> s;  // SL2R principal
  int eps = 0;             // SL2R principal
  long m = 0;              // discrete, SL2C
  double rho = 0;          // SL2C

  // "sl2r:principal:s=2i:eps=0", "sl2r:discrete:m=-3", "sl2c:principal:m=1:rho=0.5"
  static RepLabel parse(const std::string& text);
  std::string str() const;
};

// One colour value 2z+1 for SL2R, the pair (2z+1, 2w+1) for SL2C.
struct ColourAssignment {
  std::vector<std::complex<double>> values;
  json to_json() const;
};

ColourAssignment rep_to_color(const RepLabel& r);

}  // namespace zj
