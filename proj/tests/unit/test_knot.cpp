#include <doctest.h>

#include "series_helpers.hpp"
#include "zjones/error.hpp"
#include "zjones/knot.hpp"

using namespace zj;
using namespace zj::testhelp;

namespace {
RingPtr S() { return Ring::of("s"); }
MPoly s_var() { return MPoly::variable(S(), "s"); }
MPoly cst(const Rational& q) { return MPoly::constant(S(), q); }
}  // namespace

TEST_CASE("knot text form") {
  CHECK(KnotSpec::parse("trefoil@0").str() == "trefoil@0");
  CHECK(KnotSpec::parse("fig8@0").kind == KnotSpec::Kind::FigureEight);
  KnotSpec t = KnotSpec::parse("torus(2,5)@-3");
  CHECK(t.m == 2);
  CHECK(t.p == 5);
  CHECK(t.framing == -3);
  CHECK(KnotSpec::parse("mirror(torus(2,3))@0").str() == "mirror(torus(2,3)@0)@0");
  CHECK(KnotSpec::parse("unknot").framing == 0);
  CHECK_THROWS_AS(KnotSpec::parse("torus(2,4)@0"), Error);
  CHECK_THROWS_AS(KnotSpec::parse("torus(1,3)"), Error);
  CHECK_THROWS_AS(KnotSpec::parse("5_2"), Error);
}

TEST_CASE("habiro_D") {
  CHECK(habiro_D(0, 6) == one(S(), 6));
  // one factor: {s}^2 - {1}^2 with {x} = 2 sinh(xh/2)
  HSeries unsquared = (exp_h(s_var(), 1, 5) - exp_h(-s_var(), 1, 5)) - (exp_h(cst(1), 1, 5) - exp_h(cst(-1), 1, 5));
  HSeries plus = (exp_h(s_var(), 1, 5) - exp_h(-s_var(), 1, 5)) + (exp_h(cst(1), 1, 5) - exp_h(cst(-1), 1, 5));
  CHECK(unsquared[1] == s_var() - cst(1));
  CHECK(unsquared[3] == (s_var().pow(3) - cst(1)) * Rational(1, 24));
  CHECK(habiro_D(1, 5) == unsquared * plus);
  for (int n = 1; n <= 5; ++n) {
    HSeries d = habiro_D(n, 12);
    CHECK(d.valuation() == std::min(2 * n, 13));
    CHECK(d.substitute("s", 1) == HSeries(S(), 12));
  }
}

TEST_CASE("quantum dimension") {
  HSeries q = qdim_series(10);
  CHECK(q[0] == cst(1));
  CHECK(q[1].is_zero());
  CHECK(q[2] == (s_var() * s_var() - cst(1)) * Rational(1, 24));
  CHECK(q.substitute("s", 1) == one(S(), 10));
  JonesSeries u = jones_series(KnotSpec::unknot(), 10);
  CHECK(normalize_by_unknot(u).series == one(S(), 10));
}

TEST_CASE("trefoil and figure-eight basics") {
  const int N = 12;
  JonesSeries t = jones_habiro(KnotSpec::trefoil(), N);
  CHECK(t.series.substitute("s", 1) == one(S(), N));
  JonesSeries f = jones_habiro(KnotSpec::figure_eight(), N);
  CHECK(f.series[0] == cst(1));
  CHECK(reflect_s(f.series) == f.series);
  CHECK(reflect_s(t.series) == t.series);
  CHECK(f.series.mirrored() == f.series);
  CHECK(t.series.mirrored() != t.series);
}

TEST_CASE("mirror and framing are inverse operations") {
  JonesSeries t = jones_series(KnotSpec::torus(2, 5), 10);
  CHECK(mirror_and_frame(mirror_and_frame(t, true, 0), true, 0).series == t.series);
  CHECK(mirror_and_frame(mirror_and_frame(t, false, 1), false, -1).series == t.series);
  CHECK(mirror_and_frame(t, false, 3).knot.framing == 3);
  CHECK(jones_series(KnotSpec::parse("mirror(trefoil)@0"), 10).series == jones_habiro(KnotSpec::trefoil(), 10).series.mirrored());
}

TEST_CASE("framing factor matches the one-chord weight") {
  // exp(F (s^2-1) h / 8): its h coefficient is F times the value on a single chord
  HSeries f = framing_factor(5, 3);
  CHECK(f[1] == (s_var() * s_var() - cst(1)) * Rational(5, 8));
}

TEST_CASE("parity and degree bound for built-ins") {
  for (const char* k : {"trefoil@0", "fig8@0", "torus(2,3)@0", "torus(2,5)@0", "torus(3,4)@0", "unknot@0"}) {
    JonesSeries j = jones_series(KnotSpec::parse(k), 10);
    CHECK_MESSAGE(reflect_s(j.series) == j.series, k);
    MMReport rep = mm_report(j);
    CHECK_MESSAGE(rep.all_even, k);
    CHECK_MESSAGE(rep.all_degree_ok, k);
  }
}

TEST_CASE("mm_report flags violations") {
  HSeries bad = qdim_series(6);
  bad.set(3, s_var());
  MMReport rep = mm_report({bad, KnotSpec::unknot(), false, {}});
  CHECK(!rep.all_even);
  CHECK(!rep.rows[3].even);
  HSeries high = qdim_series(6);
  high.set(1, s_var().pow(4));
  CHECK(!mm_report({high, KnotSpec::unknot(), false, {}}).all_degree_ok);
}

TEST_CASE("unknot top line") {
  MMReport rep = mm_report(jones_series(KnotSpec::unknot(), 12));
  for (int n = 0; n <= 12; ++n) {
    Rational expected(0);
    if (n % 2 == 0) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), 4, n / 2);
      expected = Rational(1) / (Rational(p) * factorial(n + 1));
    }
    CHECK(rep.top_line[n] == expected);
  }
  // J_{n,k}: s = 2z+1 keeps the total value at z = 0 equal to s = 1
  CHECK(rep.rows[2].j_z[0] == 0);
}

TEST_CASE("Melvin-Morton-Rozansky top line inverts the Alexander polynomial") {
  const int N = 11;
  struct Case {
    const char* knot;
    std::map<int, int> delta;
  };
  for (const Case& c : {Case{"trefoil@0", {{1, 1}, {0, -1}, {-1, 1}}}, Case{"fig8@0", {{1, -1}, {0, 3}, {-1, -1}}},
                        Case{"torus(2,5)@0", {{2, 1}, {1, -1}, {0, 1}, {-1, -1}, {-2, 1}}}}) {
    JonesSeries j = normalize_by_unknot(jones_series(KnotSpec::parse(c.knot), N));
    MMReport rep = mm_report(j);
    std::vector<Rational> prod = cauchy(rep.top_line, alexander_expansion(c.delta, N));
    for (int n = 0; n <= N; ++n) CHECK_MESSAGE(prod[n] == (n == 0 ? 1 : 0), c.knot << " u^" << n);
  }
}

TEST_CASE("custom f-lists warn when short") {
  JonesSeries j = jones_habiro_custom({{{0, Rational(1)}}}, 0, 8);
  CHECK(j.warnings.size() == 1);
  JonesSeries full = jones_habiro_custom(std::vector<HalfLaurent>(5, {{0, Rational(1)}}), 0, 8);
  CHECK(full.warnings.empty());
  CHECK(full.series == jones_habiro(KnotSpec::figure_eight(), 8).series);
}

TEST_CASE("Kauffman bracket oracle") {
  const int N = 12;
  HSeries unknot = kauffman_jones_oracle(PlanarDiagram::unknot(), N);
  CHECK(unknot == qdim_series(N).substitute("s", 2));
  CHECK(kauffman_jones_oracle(PlanarDiagram::unknot(), N, true) == one(S(), N));
  HSeries tref = kauffman_jones_oracle(PlanarDiagram::trefoil(), N);
  CHECK(tref == jones_habiro(KnotSpec::trefoil(), N).series.substitute("s", 2));
  CHECK(tref != jones_habiro(KnotSpec::trefoil(), N).series.substitute("s", 2).mirrored());
  HSeries fig8 = kauffman_jones_oracle(PlanarDiagram::figure_eight(), N);
  CHECK(fig8 == jones_habiro(KnotSpec::figure_eight(), N).series.substitute("s", 2));
}

TEST_CASE("Kauffman bracket values") {
  // <trefoil> = A^7 - A^3 - A^-5 for this left-handed diagram
  LaurentA b = kauffman_bracket(PlanarDiagram::trefoil());
  CHECK(b == LaurentA{{7, 1}, {3, -1}, {-5, -1}});
  CHECK(PlanarDiagram::trefoil().crossing_signs() == std::vector<int>{-1, -1, -1});
  CHECK(PlanarDiagram::figure_eight().crossing_signs() == std::vector<int>{1, 1, -1, -1});
}

TEST_CASE("planar diagram validation") {
  PlanarDiagram hopf{{{1, 3, 2, 4}, {3, 1, 4, 2}}, std::nullopt};
  CHECK(hopf.components() == 2);
  CHECK_THROWS_AS(kauffman_jones_oracle(hopf, 4), Error);
  PlanarDiagram wrong = PlanarDiagram::trefoil();
  wrong.writhe = 3;
  CHECK_THROWS_AS(kauffman_jones_oracle(wrong, 4), Error);
  CHECK_THROWS_AS(PlanarDiagram::from_json(json::parse(R"({"crossings":[[1,2,3]]})")), Error);
  CHECK_THROWS_AS(PlanarDiagram::from_json(json::parse(R"({"crossings":[[1,1,1,2]]})")), Error);
  PlanarDiagram parsed = PlanarDiagram::from_json(json::parse(R"({"crossings":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"writhe":-3})"));
  CHECK(parsed.crossings.size() == 3);
}

TEST_CASE("integer colours give convergent partial sums") {
  for (int s : {1, 2, 3}) {
    HSeries f = jones_habiro(KnotSpec::trefoil(), 24).series.substitute("s", s);
    double prev = 1e300;
    for (int n = 8; n <= 24; ++n) {
      double term = std::abs(f[n].constant_term().get_d()) * std::pow(0.1, n);
      CHECK(term <= std::max(prev, 1e-30));
      prev = term;
    }
  }
}
