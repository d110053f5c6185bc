#include "zjones/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <set>

#include "zjones/error.hpp"

namespace zj {

json to_json(const MPoly& p) {
  json monos = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (int i = 0; i < p.ring()->size(); ++i)
      if (unsigned e = exponent_of(m, i)) exps[p.ring()->names()[i]] = e;
    monos.push_back({{"exps", exps}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return {{"monomials", monos}};
}

json to_json(const HSeries& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  json vars = json::array();
  for (const auto& v : f.ring()->names()) vars.push_back(v);
  return {{"var", "h"}, {"trunc", f.trunc()}, {"ring", vars}, {"coeffs", coeffs}};
}

MPoly mpoly_from_json(const json& j, const RingPtr& ring) {
  MPoly p(ring);
  try {
    for (const auto& mono : j.at("monomials")) {
      std::vector<unsigned> exps(ring->size(), 0);
      for (const auto& [name, e] : mono.at("exps").items()) {
        int i = ring->index(name);
        if (i < 0) throw Error(ErrorKind::RingMismatch, "unknown variable " + name);
        exps[i] = e.get<unsigned>();
      }
      Rational c(mpz_class(mono.at("num").get<std::string>()), mpz_class(mono.at("den").get<std::string>()));
      if (c.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator");
      c.canonicalize();
      p += MPoly::monomial(ring, exps, c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("polynomial json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Parse, "polynomial json: bad integer");
  }
  return p;
}

HSeries hseries_from_json(const json& j, RingPtr ring) {
  try {
    if (j.at("var").get<std::string>() != "h") throw Error(ErrorKind::Parse, "series variable must be h");
    if (!ring) {
      if (j.contains("ring")) {
        ring = Ring::make(j.at("ring").get<std::vector<std::string>>());
      } else {
        std::set<std::string> names;
        for (const auto& c : j.at("coeffs"))
          for (const auto& mono : c.at("monomials"))
            for (const auto& [name, e] : mono.at("exps").items()) names.insert(name);
        ring = Ring::make(std::vector<std::string>(names.begin(), names.end()));
      }
    }
    int N = j.at("trunc").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != N + 1) throw Error(ErrorKind::Parse, "coefficient count != trunc + 1");
    HSeries f(ring, N);
    for (int n = 0; n <= N; ++n) f.set(n, mpoly_from_json(coeffs[n], ring));
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("series json: ") + e.what());
  }
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

json complex_json(std::complex<double> z) { return {{"re", round15(z.real())}, {"im", round15(z.imag())}}; }

}  // namespace zj
