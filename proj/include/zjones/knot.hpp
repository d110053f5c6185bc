#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zjones/conventions.hpp"
#include "zjones/hseries.hpp"
#include "zjones/json_io.hpp"

namespace zj {

struct KnotSpec {
  enum class Kind { Unknot, Trefoil, FigureEight, Torus, Mirror };

  Kind kind = Kind::Unknot;
  int m = 0, p = 0;                       // Torus only
  std::shared_ptr<const KnotSpec> inner;  // Mirror only
  int framing = 0;

  static KnotSpec unknot(int framing = 0);
  static KnotSpec trefoil(int framing = 0);
  static KnotSpec figure_eight(int framing = 0);
  static KnotSpec torus(int m, int p, int framing = 0);
  static KnotSpec mirror(const KnotSpec& k, int framing = 0);

  // "trefoil@0", "fig8@0", "torus(2,5)@-3", "mirror(torus(2,3))@0"; the @F suffix is optional.
  static KnotSpec parse(const std::string& text);
  std::string str() const;
};

struct JonesSeries {
  HSeries series;
  KnotSpec knot;
  bool normalized = false;
  std::vector<std::string> warnings;
};

// Default colour: the variable s of ring {s}.
MPoly colour_s();

// Laurent polynomial in q^{1/2}: key k stands for q^{k/2}.
using HalfLaurent = std::map<int, Rational>;

// prod_{k=1}^n ({s}^2 - {k}^2), {x} = q^{x/2} - q^{-x/2}
HSeries habiro_D(int n, int N, const MPoly& colour = colour_s());
// {x}^2 = 2cosh(xh) - 2 for a polynomial colour x
HSeries bracket_sq(const MPoly& x, int N);

HSeries qdim_series(int N, const MPoly& colour = colour_s());
HSeries half_laurent_series(const HalfLaurent& f, const RingPtr& ring, int N);

JonesSeries jones_habiro(const KnotSpec& k, int N, const MPoly& colour = colour_s(), const Conventions& conv = {});
JonesSeries jones_habiro_custom(const std::vector<HalfLaurent>& f, int framing, int N,
                                const MPoly& colour = colour_s(), const Conventions& conv = {});
// Any built-in knot, including torus knots and mirrors.
JonesSeries jones_series(const KnotSpec& k, int N, const MPoly& colour = colour_s(), const Conventions& conv = {});

JonesSeries normalize_by_unknot(const JonesSeries& j, const MPoly& colour = colour_s());
JonesSeries mirror_and_frame(const JonesSeries& j, bool mirror, int dF, const MPoly& colour = colour_s());
// exp(dF (s^2-1) h / 8)
HSeries framing_factor(int dF, int N, const MPoly& colour = colour_s());

struct MMRow {
  int n = 0;
  int s_degree = -1;
  bool even = true;
  bool degree_ok = true;  // s-degree <= 2n
  std::vector<Rational> j_z;  // coefficients of z^k after s = 2z+1
};

struct MMReport {
  bool normalized = false;
  bool all_even = true;
  bool all_degree_ok = true;
  std::vector<MMRow> rows;
  std::vector<Rational> top_line;  // u^n coefficient: [s^n] c_n
  json to_json() const;
};

MMReport mm_report(const JonesSeries& j);

struct PlanarDiagram {
  std::vector<std::array<int, 4>> crossings;
  std::optional<int> writhe;

  static PlanarDiagram from_json(const json& j);
  static PlanarDiagram trefoil();
  static PlanarDiagram figure_eight();
  static PlanarDiagram unknot();
  std::vector<int> crossing_signs() const;
  int components() const;
};

// Laurent polynomial in A with integer coefficients.
using LaurentA = std::map<int, mpz_class>;

LaurentA kauffman_bracket(const PlanarDiagram& pd);
// Jones series at s = 2 in the quantum-dimension normalization (or divided by it).
HSeries kauffman_jones_oracle(const PlanarDiagram& pd, int N, bool normalized = false,
                              bool mirror = frozen::kBracketMirror);

}  // namespace zj
