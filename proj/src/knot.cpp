#include "zjones/knot.hpp"

#include <cctype>

#include "zjones/error.hpp"
#include "zjones/torus.hpp"

namespace zj {

KnotSpec KnotSpec::unknot(int framing) {
  KnotSpec k;
  k.framing = framing;
  return k;
}

KnotSpec KnotSpec::trefoil(int framing) {
  KnotSpec k;
  k.kind = Kind::Trefoil;
  k.framing = framing;
  return k;
}

KnotSpec KnotSpec::figure_eight(int framing) {
  KnotSpec k;
  k.kind = Kind::FigureEight;
  k.framing = framing;
  return k;
}

KnotSpec KnotSpec::torus(int m, int p, int framing) {
  TorusParams tp(m, p);  // validates
  KnotSpec k;
  k.kind = Kind::Torus;
  k.m = tp.m;
  k.p = tp.p;
  k.framing = framing;
  return k;
}

KnotSpec KnotSpec::mirror(const KnotSpec& inner, int framing) {
  KnotSpec k;
  k.kind = Kind::Mirror;
  k.inner = std::make_shared<const KnotSpec>(inner);
  k.framing = framing;
  return k;
}

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(strip(s), &used);
    if (used != strip(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad integer in " + what + ": '" + s + "'");
  }
}

KnotSpec parse_body(const std::string& body) {
  std::string b = strip(body);
  std::string lower;
  for (char ch : b) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "unknot" || lower == "0_1") return KnotSpec::unknot();
  if (lower == "trefoil" || lower == "3_1") return KnotSpec::trefoil();
  if (lower == "fig8" || lower == "figure-eight" || lower == "figure_eight" || lower == "4_1")
    return KnotSpec::figure_eight();
  if (lower.rfind("torus(", 0) == 0 && lower.back() == ')') {
    std::string args = b.substr(6, b.size() - 7);
    auto comma = args.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "torus needs two parameters: " + body);
    return KnotSpec::torus(parse_int(args.substr(0, comma), body), parse_int(args.substr(comma + 1), body));
  }
  if (lower.rfind("mirror(", 0) == 0 && lower.back() == ')') return KnotSpec::mirror(KnotSpec::parse(b.substr(7, b.size() - 8)));
  throw Error(ErrorKind::Parse, "unknown knot: " + body);
}

}  // namespace

KnotSpec KnotSpec::parse(const std::string& text) {
  std::string t = strip(text);
  int depth = 0;
  size_t at = std::string::npos;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] == '(') ++depth;
    else if (t[i] == ')') --depth;
    else if (t[i] == '@' && depth == 0) at = i;
  }
  KnotSpec k = parse_body(at == std::string::npos ? t : t.substr(0, at));
  if (at != std::string::npos) k.framing = parse_int(t.substr(at + 1), text);
  return k;
}

std::string KnotSpec::str() const {
  std::string body;
  switch (kind) {
    case Kind::Unknot: body = "unknot"; break;
    case Kind::Trefoil: body = "trefoil"; break;
    case Kind::FigureEight: body = "fig8"; break;
    case Kind::Torus: body = "torus(" + std::to_string(m) + "," + std::to_string(p) + ")"; break;
    case Kind::Mirror: {
      std::string in = inner->str();
      body = "mirror(" + in + ")";
      break;
    }
  }
  return body + "@" + std::to_string(framing);
}

MPoly colour_s() { return MPoly::variable(Ring::of("s"), "s"); }

HSeries bracket_sq(const MPoly& x, int N) {
  HSeries f(x.ring(), N);
  MPoly x2 = x * x, xp = x2;
  for (int j = 1; 2 * j <= N; ++j) {
    f.set(2 * j, xp * (Rational(2) / factorial(2 * j)));
    xp *= x2;
  }
  return f;
}

HSeries habiro_D(int n, int N, const MPoly& colour) {
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "habiro_D: N must be >= 0");
  if (n < 0) throw Error(ErrorKind::InvalidOrder, "habiro_D: n must be >= 0");
  const RingPtr& R = colour.ring();
  HSeries d = HSeries::constant(MPoly::constant(R, 1), N);
  HSeries sq = bracket_sq(colour, N);
  for (int k = 1; k <= n; ++k) {
    if (d.valuation() > N) break;
    d *= sq - bracket_sq(MPoly::constant(R, k), N);
  }
  if (d.valuation() < std::min(2 * n, N + 1)) throw Error(ErrorKind::Domain, "habiro_D: valuation below 2n");
  return d;
}

HSeries qdim_series(int N, const MPoly& colour) {
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "qdim_series: N must be >= 0");
  const RingPtr& R = colour.ring();
  HSeries num(R, N + 1), den(R, N + 1);
  MPoly x2 = colour * colour, xp = MPoly::constant(R, 1);
  for (int j = 0; 2 * j + 1 <= N + 1; ++j) {
    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * j + 1);
    Rational w = Rational(1) / (factorial(2 * j + 1) * Rational(p2));
    num.set(2 * j + 1, xp * w);
    den.set(2 * j + 1, MPoly::constant(R, w));
    xp *= x2;
  }
  return series_div(num.shifted(-1), den.shifted(-1));
}

HSeries half_laurent_series(const HalfLaurent& f, const RingPtr& ring, int N) {
  HSeries out(ring, N);
  for (const auto& [k, c] : f) out += exp_h(MPoly::constant(ring, k), 1, N) * c;
  return out;
}

HSeries framing_factor(int dF, int N, const MPoly& colour) {
  const RingPtr& R = colour.ring();
  return exp_h((colour * colour - MPoly::constant(R, 1)) * Rational(dF), 3, N);
}

JonesSeries jones_habiro_custom(const std::vector<HalfLaurent>& f, int framing, int N, const MPoly& colour,
                                const Conventions& conv) {
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "jones_habiro: N must be >= 0");
  const RingPtr& R = colour.ring();
  const int needed = N / 2;
  JonesSeries out{HSeries(R, N), KnotSpec::unknot(framing), false, {}};
  if (static_cast<int>(f.size()) < needed + 1)
    out.warnings.push_back("f-list has " + std::to_string(f.size()) + " terms but order " + std::to_string(N) +
                           " needs " + std::to_string(needed + 1) + "; missing terms treated as zero");
  HSeries sum(R, N);
  for (int n = 0; n <= needed && n < static_cast<int>(f.size()); ++n) {
    HSeries d = habiro_D(n, N, colour);
    if (d.valuation() > N) break;
    sum += half_laurent_series(f[n], R, N) * d;
  }
  HSeries j = qdim_series(N, colour) * sum * framing_factor(framing, N, colour);
  out.series = conv.kappa_sign < 0 ? j.mirrored() : j;
  return out;
}

JonesSeries jones_habiro(const KnotSpec& k, int N, const MPoly& colour, const Conventions& conv) {
  std::vector<HalfLaurent> f;
  const int count = N / 2 + 1;
  switch (k.kind) {
    case KnotSpec::Kind::Trefoil:
      for (int n = 0; n < count; ++n) f.push_back({{-n * (n + 3), Rational(n % 2 ? -1 : 1)}});
      break;
    case KnotSpec::Kind::FigureEight:
      for (int n = 0; n < count; ++n) f.push_back({{0, Rational(1)}});
      break;
    case KnotSpec::Kind::Unknot:
      f.push_back({{0, Rational(1)}});
      break;
    default:
      throw Error(ErrorKind::Unsupported, "no Habiro coefficients for " + k.str());
  }
  JonesSeries j = jones_habiro_custom(f, k.framing, N, colour, conv);
  j.warnings.clear();
  j.knot = k;
  return j;
}

JonesSeries jones_series(const KnotSpec& k, int N, const MPoly& colour, const Conventions& conv) {
  switch (k.kind) {
    case KnotSpec::Kind::Unknot: {
      JonesSeries j{qdim_series(N, colour) * framing_factor(k.framing, N, colour), k, false, {}};
      return j;
    }
    case KnotSpec::Kind::Trefoil:
    case KnotSpec::Kind::FigureEight:
      return jones_habiro(k, N, colour, conv);
    case KnotSpec::Kind::Torus: {
      TorusParams tp(k.m, k.p);
      JonesSeries j = jones_torus(tp, N, colour);
      j.series *= framing_factor(k.framing - torus_native_framing(k.m, k.p), N, colour);
      j.knot = k;
      return j;
    }
    case KnotSpec::Kind::Mirror: {
      KnotSpec inner = *k.inner;
      int inner_framing = inner.framing;
      inner.framing = 0;
      JonesSeries j = jones_series(inner, N, colour, conv);
      j.series = j.series.mirrored() * framing_factor(k.framing - inner_framing, N, colour);
      j.knot = k;
      return j;
    }
  }
  throw Error(ErrorKind::Unsupported, "unknown knot kind");
}

JonesSeries normalize_by_unknot(const JonesSeries& j, const MPoly& colour) {
  if (j.normalized) return j;
  JonesSeries out = j;
  out.series = series_div(j.series, qdim_series(j.series.trunc(), colour));
  out.normalized = true;
  return out;
}

JonesSeries mirror_and_frame(const JonesSeries& j, bool mirror, int dF, const MPoly& colour) {
  JonesSeries out = j;
  if (mirror) {
    out.series = out.series.mirrored();
    if (j.knot.kind == KnotSpec::Kind::Mirror) {
      KnotSpec inner = *j.knot.inner;
      inner.framing = -j.knot.framing;
      out.knot = inner;
    } else {
      out.knot = KnotSpec::mirror(j.knot, -j.knot.framing);
    }
  }
  if (dF != 0) {
    out.series = out.series * framing_factor(dF, out.series.trunc(), colour);
    out.knot.framing += dF;
  }
  return out;
}

MMReport mm_report(const JonesSeries& j) {
  MMReport rep;
  rep.normalized = j.normalized;
  const HSeries& f = j.series;
  RingPtr Z = Ring::of("z");
  MPoly s_of_z = MPoly::variable(Z, "z") * Rational(2) + MPoly::constant(Z, 1);
  for (int n = 0; n <= f.trunc(); ++n) {
    MMRow row;
    row.n = n;
    const MPoly& c = f[n];
    row.s_degree = c.degree("s");
    row.even = c.is_even_in("s");
    row.degree_ok = row.s_degree <= 2 * n;
    MPoly cz = f.ring()->index("s") >= 0 ? c.compose(Z, {{"s", s_of_z}}) : c.compose(Z, {});
    for (int k = 0; k <= std::max(0, cz.degree("z")); ++k) row.j_z.push_back(cz.coeff({static_cast<unsigned>(k)}));
    std::vector<unsigned> top(f.ring()->size(), 0);
    int si = f.ring()->index("s");
    if (si >= 0) top[si] = n;
    rep.top_line.push_back(si >= 0 || n == 0 ? c.coeff(top) : Rational(0));
    rep.all_even = rep.all_even && row.even;
    rep.all_degree_ok = rep.all_degree_ok && row.degree_ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

json MMReport::to_json() const {
  json rows_j = json::array();
  for (const auto& r : rows) {
    json jz = json::array();
    for (const auto& q : r.j_z) jz.push_back(rational_str(q));
    rows_j.push_back({{"n", r.n}, {"s_degree", r.s_degree}, {"even", r.even}, {"degree_ok", r.degree_ok}, {"J_z", jz}});
  }
  json top = json::array();
  for (const auto& q : top_line) top.push_back(rational_str(q));
  return {{"normalized", normalized}, {"all_even", all_even}, {"all_degree_ok", all_degree_ok},
          {"top_line", top}, {"rows", rows_j}};
}

}  // namespace zj
