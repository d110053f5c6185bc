#include "zjones/lorentz.hpp"

#include <cmath>
#include <sstream>

#include "zjones/error.hpp"

namespace zj {

RingPtr lorentz_ring() { return Ring::make({"s1", "s2"}); }

LorentzSeries lorentz_series(const KnotSpec& k, int N, const Conventions& conv) {
  RingPtr R = lorentz_ring();
  HSeries a = jones_series(k, N, MPoly::variable(R, "s1"), conv).series;
  HSeries b = jones_series(k, N, MPoly::variable(R, "s2"), conv).series.mirrored();
  return {a * b, k};
}

namespace {

Rational double_factorial(int n) {
  Rational r(1);
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

Rational trig_moment_over_pi(int a, int b) {
  return 2 * double_factorial(2 * a - 1) * double_factorial(2 * b - 1) / double_factorial(2 * a + 2 * b);
}

GExpansion g_expansion(const TorusParams& tp, int N, const MPoly& s1, const MPoly& s2) {
  if (N < 0) throw Error(ErrorKind::InvalidOrder, "g_expansion: N must be >= 0");
  require_same_ring(s1.ring(), s2.ring());
  const RingPtr& R = s1.ring();
  const int K = N + 2;
  std::vector<MPoly> q1 = f_coeffs(tp, K, s1), q2 = f_coeffs(tp, K, s2);
  GExpansion g{std::vector<MPoly>(K + 1, MPoly::constant(R, 0)), HSeries(R, N)};
  for (int k = 2; k <= K; ++k)
    for (int a = 1; a < k; ++a) {
      const int b = k - a;
      Rational w = trig_moment_over_pi(a, b) * (b % 2 ? -1 : 1);
      g.P_over_pi[k] += q1[a] * q2[b] * w;
    }
  // sum_k (P[k]/2pi) k! h^{k-2}, then divide by sinh(h/2) sinh(-h/2) / h^2 = -sum (h/2)^{2j} ... squared
  HSeries num(R, N);
  Rational fact(2);
  for (int k = 2; k <= K; ++k) {
    if (k > 2) fact *= k;
    num.set(k - 2, g.P_over_pi[k] * (fact / 2));
  }
  HSeries sh(R, N);  // sinh(h/2) / h
  mpz_class p2;
  for (int j = 0; 2 * j <= N; ++j) {
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, 2 * j + 1);
    sh.set(2 * j, MPoly::constant(R, Rational(1) / (factorial(2 * j + 1) * Rational(p2))));
  }
  g.factorial_series = series_div(num, -(sh * sh));
  return g;
}

GExpansion g_expansion(const TorusParams& tp, int N) {
  RingPtr R = lorentz_ring();
  return g_expansion(tp, N, MPoly::variable(R, "s1"), MPoly::variable(R, "s2"));
}

// ---------------------------------------------------------------- representations

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

double parse_real(const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw Error(ErrorKind::Parse, "not a real number: '" + v + "'");
  return d;
}

}  // namespace

std::complex<double> parse_complex(const std::string& v) {
  if (v.empty()) throw Error(ErrorKind::Parse, "empty complex value");
  if (v.back() != 'i') return parse_real(v);
  std::string body = v.substr(0, v.size() - 1);
  std::size_t split_at = std::string::npos;
  for (std::size_t i = 1; i < body.size(); ++i)
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') split_at = i;
  std::string re = split_at == std::string::npos ? "" : body.substr(0, split_at);
  std::string im = split_at == std::string::npos ? body : body.substr(split_at);
  double imv = im.empty() || im == "+" ? 1.0 : im == "-" ? -1.0 : parse_real(im);
  return {re.empty() ? 0.0 : parse_real(re), imv};
}

namespace {

long parse_integer(const std::string& v) {
  double d = parse_real(v);
  if (d != std::round(d)) throw Error(ErrorKind::Domain, "expected an integer, got '" + v + "'");
  return std::lround(d);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << round15(x);
  return os.str();
}

std::string fmt_complex(std::complex<double> z) {
  if (z.imag() == 0) return fmt(z.real());
  std::string im = fmt(z.imag()) + "i";
  if (z.real() == 0) return im;
  return fmt(z.real()) + (z.imag() > 0 ? "+" : "") + im;
}

}  // namespace

RepLabel RepLabel::parse(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  if (parts.size() < 3) throw Error(ErrorKind::Parse, "representation label needs group:series:params");
  RepLabel r;
  if (parts[0] == "sl2r") r.group = Group::SL2R;
  else if (parts[0] == "sl2c") r.group = Group::SL2C;
  else throw Error(ErrorKind::Parse, "unknown group '" + parts[0] + "'");
  if (parts[1] == "principal") r.series = Series::Principal;
  else if (parts[1] == "discrete" || parts[1] == "discrete_neg") r.series = Series::DiscreteNeg;
  else if (parts[1] == "discrete_pos") r.series = Series::DiscretePos;
  else throw Error(ErrorKind::Parse, "unknown series '" + parts[1] + "'");
  std::map<std::string, std::string> kv;
  for (std::size_t i = 2; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected key=value, got '" + parts[i] + "'");
    kv[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  auto take = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorKind::Parse, "missing parameter '" + key + "'");
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  if (r.group == Group::SL2C) {
    if (r.series != Series::Principal) throw Error(ErrorKind::Unsupported, "only the SL2C principal series is modelled");
    r.m = parse_integer(take("m"));
    r.rho = parse_real(take("rho"));
  } else if (r.series == Series::Principal) {
    r.s = parse_complex(take("s"));
    r.eps = kv.count("eps") ? static_cast<int>(parse_integer(take("eps"))) : 0;
    if (r.eps != 0 && r.eps != 1) throw Error(ErrorKind::Domain, "eps must be 0 or 1");
    if (r.s.real() != 0) throw Error(ErrorKind::Domain, "principal series needs s on the imaginary axis");
    if (r.s == 0.0 && r.eps == 1) throw Error(ErrorKind::Domain, "s = 0 with eps = 1 is reducible");
  } else {
    r.m = parse_integer(take("m"));
    if (r.m >= 0) throw Error(ErrorKind::Domain, "discrete series label needs m a negative integer");
  }
  if (!kv.empty()) throw Error(ErrorKind::Parse, "unexpected parameter '" + kv.begin()->first + "'");
  return r;
}

std::string RepLabel::str() const {
  if (group == Group::SL2C) return "sl2c:principal:m=" + std::to_string(m) + ":rho=" + fmt(rho);
  if (series == Series::Principal) return "sl2r:principal:s=" + fmt_complex(s) + ":eps=" + std::to_string(eps);
  return std::string("sl2r:") + (series == Series::DiscretePos ? "discrete_pos" : "discrete") +
         ":m=" + std::to_string(m);
}

ColourAssignment rep_to_color(const RepLabel& r) {
  using C = std::complex<double>;
  if (r.group == RepLabel::Group::SL2C) {
    // z - w = m, z + w + 1 = i rho
    return {{C(double(r.m), r.rho), C(-double(r.m), r.rho)}};
  }
  if (r.series == RepLabel::Series::Principal) {
    if (r.s.real() != 0) throw Error(ErrorKind::Domain, "principal series needs s on the imaginary axis");
    return {{r.s}};
  }
  if (r.m >= 0) throw Error(ErrorKind::Domain, "discrete series label needs m a negative integer");
  return {{C(double(r.m), 0)}};
}

json ColourAssignment::to_json() const {
  json arr = json::array();
  for (auto v : values) arr.push_back(complex_json(v));
  return arr;
}

}  // namespace zj
