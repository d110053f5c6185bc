#include "zjones/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "zjones/error.hpp"

namespace zj {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::RingMismatch: return "ring-mismatch";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::UnassignedVariable: return "unassigned-variable";
    case ErrorKind::MalformedDiagram: return "malformed-diagram";
    case ErrorKind::InvalidPositions: return "invalid-positions";
    case ErrorKind::ResourceBound: return "resource-bound";
    case ErrorKind::InvalidTorus: return "invalid-torus";
    case ErrorKind::SingularPrefactor: return "singular-prefactor";
    case ErrorKind::ContourPole: return "contour-pole";
    case ErrorKind::BranchCut: return "branch-cut";
    case ErrorKind::PrecisionBudget: return "precision-budget";
    case ErrorKind::UndefinedFit: return "undefined-fit";
    case ErrorKind::DivergentTaylor: return "divergent-taylor";
    case ErrorKind::DirectionOutsideDomain: return "direction-outside-domain";
    case ErrorKind::TailBound: return "tail-bound";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Tolerance: return "tolerance";
  }
  return "unknown";
}

Rational parse_rational(std::string_view text) {
  std::string t(text);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
  if (t.empty()) throw Error(ErrorKind::Parse, "empty rational");
  if (t.front() == '+') t.erase(0, 1);
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    // finite decimal, e.g. "0.25" or "-1.5"
    bool neg = !t.empty() && t[0] == '-';
    std::string digits = t.substr(neg ? 1 : 0);
    dot = digits.find('.');
    std::string ip = digits.substr(0, dot), fp = digits.substr(dot + 1);
    if ((ip + fp).empty() || (ip + fp).find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::Parse, "bad rational: " + std::string(text));
    mpz_class num(ip.empty() && fp.empty() ? "0" : (ip + fp), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  Rational q;
  if (q.set_str(t, 10) != 0 || q.get_den() == 0) throw Error(ErrorKind::Parse, "bad rational: " + std::string(text));
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

double to_double(const Rational& q) { return q.get_d(); }

RingPtr Ring::make(std::vector<std::string> names) {
  static std::mutex mu;
  static std::map<std::vector<std::string>, RingPtr> interned;
  if (static_cast<int>(names.size()) > kMaxVars) throw Error(ErrorKind::RingMismatch, "too many variables");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error(ErrorKind::RingMismatch, "duplicate variable " + names[i]);
  std::lock_guard<std::mutex> lock(mu);
  auto it = interned.find(names);
  if (it != interned.end()) return it->second;
  auto r = std::make_shared<const Ring>(names);
  interned.emplace(std::move(names), r);
  return r;
}

RingPtr Ring::of(std::string_view single) { return make({std::string(single)}); }
RingPtr Ring::empty() { return make({}); }

int Ring::index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

std::string Ring::str() const {
  std::string out = "{";
  for (int i = 0; i < size(); ++i) out += (i ? "," : "") + names_[i];
  return out + "}";
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b) throw Error(ErrorKind::RingMismatch, "ring mismatch: " + a->str() + " vs " + b->str());
}

void MPoly::check_ring(const MPoly& o) const { require_same_ring(ring_, o.ring_); }

MPoly MPoly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  MPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

MPoly MPoly::constant(RingPtr ring, const Rational& c) {
  MPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(0, c);
  return p;
}

MPoly MPoly::variable(RingPtr ring, std::string_view name) {
  int i = ring->index(name);
  if (i < 0) throw Error(ErrorKind::UnassignedVariable, "variable not in ring: " + std::string(name));
  MPoly p(std::move(ring));
  p.terms_.emplace_back(Monomial{1} << (16 * i), Rational(1));
  return p;
}

MPoly MPoly::monomial(RingPtr ring, const std::vector<unsigned>& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != ring->size()) throw Error(ErrorKind::RingMismatch, "exponent vector length");
  Monomial m = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0xffffu) throw Error(ErrorKind::ResourceBound, "exponent too large");
    m |= Monomial{exps[i]} << (16 * i);
  }
  MPoly p(std::move(ring));
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return Rational(0);
}

std::vector<unsigned> MPoly::exponents(Monomial m) const {
  std::vector<unsigned> e(ring_->size());
  for (int i = 0; i < ring_->size(); ++i) e[i] = exponent_of(m, i);
  return e;
}

Rational MPoly::coeff(const std::vector<unsigned>& exps) const {
  Monomial m = 0;
  for (size_t i = 0; i < exps.size(); ++i) m |= Monomial{exps[i]} << (16 * i);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int MPoly::degree(std::string_view var) const {
  if (terms_.empty()) return -1;
  int i = ring_->index(var);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(exponent_of(t.first, i)));
  return d;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int i = 0; i < ring_->size(); ++i) s += exponent_of(t.first, i);
    d = std::max(d, s);
  }
  return d;
}

namespace {

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b, bool subtract) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_ring(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  check_ring(o);
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.is_constant()) return *this *= o.terms_[0].second;
  if (is_constant()) {
    Rational c = terms_[0].second;
    terms_ = o.terms_;
    return *this *= c;
  }
  std::map<Monomial, Rational> acc;
  Rational tmp;
  for (const auto& x : terms_)
    for (const auto& y : o.terms_) {
      tmp = x.second * y.second;
      auto [it, fresh] = acc.try_emplace(x.first + y.first, tmp);
      if (!fresh) it->second += tmp;
    }
  terms_.clear();
  for (auto& [m, c] : acc)
    if (c != 0) terms_.emplace_back(m, std::move(c));
  return *this;
}

MPoly& MPoly::operator*=(const Rational& q) {
  if (q == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= q;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

MPoly MPoly::substitute(std::string_view var, const Rational& value) const {
  int i = ring_->index(var);
  if (i < 0) return *this;
  std::map<Monomial, Rational> acc;
  for (const auto& t : terms_) {
    unsigned e = exponent_of(t.first, i);
    Rational v;
    mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), e);
    mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), e);
    Rational c = t.second * v;
    if (c == 0) continue;
    Monomial m = t.first & ~(Monomial{0xffff} << (16 * i));
    acc[m] += c;
  }
  MPoly r(ring_);
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

MPoly MPoly::compose(const RingPtr& target, const std::map<std::string, MPoly>& subs) const {
  for (const auto& [name, val] : subs) require_same_ring(val.ring(), target);
  std::vector<int> dest(ring_->size(), -1);
  std::vector<const MPoly*> sub(ring_->size(), nullptr);
  for (int i = 0; i < ring_->size(); ++i) {
    auto it = subs.find(ring_->names()[i]);
    if (it != subs.end()) {
      sub[i] = &it->second;
    } else {
      dest[i] = target->index(ring_->names()[i]);
      if (dest[i] < 0) throw Error(ErrorKind::RingMismatch, "no image for variable " + ring_->names()[i]);
    }
  }
  std::vector<std::map<unsigned, MPoly>> powers(ring_->size());
  auto power = [&](int i, unsigned e) -> const MPoly& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    return powers[i].emplace(e, sub[i]->pow(e)).first->second;
  };
  MPoly out(target);
  for (const auto& t : terms_) {
    std::vector<unsigned> exps(target->size(), 0);
    for (int i = 0; i < ring_->size(); ++i)
      if (dest[i] >= 0) exps[dest[i]] += exponent_of(t.first, i);
    MPoly term = monomial(target, exps, t.second);
    for (int i = 0; i < ring_->size(); ++i)
      if (sub[i] && exponent_of(t.first, i) > 0) term *= power(i, exponent_of(t.first, i));
    out += term;
  }
  return out;
}

MPoly MPoly::reflect(std::string_view var) const {
  int i = ring_->index(var);
  MPoly r = *this;
  if (i < 0) return r;
  for (auto& t : r.terms_)
    if (exponent_of(t.first, i) % 2) t.second = -t.second;
  return r;
}

bool MPoly::is_even_in(std::string_view var) const {
  int i = ring_->index(var);
  if (i < 0) return true;
  for (const auto& t : terms_)
    if (exponent_of(t.first, i) % 2) return false;
  return true;
}

std::complex<double> MPoly::eval(const std::map<std::string, std::complex<double>>& values) const {
  std::vector<std::complex<double>> v(ring_->size());
  for (int i = 0; i < ring_->size(); ++i) {
    auto it = values.find(ring_->names()[i]);
    if (it == values.end()) {
      bool used = false;
      for (const auto& t : terms_) used = used || exponent_of(t.first, i) > 0;
      if (used) throw Error(ErrorKind::UnassignedVariable, "unassigned variable " + ring_->names()[i]);
    } else {
      v[i] = it->second;
    }
  }
  std::complex<double> sum = 0;
  for (const auto& t : terms_) {
    std::complex<double> x = to_double(t.second);
    for (int i = 0; i < ring_->size(); ++i) {
      unsigned e = exponent_of(t.first, i);
      for (unsigned k = 0; k < e; ++k) x *= v[i];
    }
    sum += x;
  }
  return sum;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    std::string mono;
    for (int i = 0; i < ring_->size(); ++i) {
      unsigned e = exponent_of(it->first, i);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names()[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) os << rational_str(c);
    else if (c == 1) os << mono;
    else os << rational_str(c) << "*" << mono;
  }
  return os.str();
}

bool operator==(const MPoly& a, const MPoly& b) { return a.ring_ == b.ring_ && a.terms_ == b.terms_; }

MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r *= b;
  return r;
}
MPoly operator*(const Rational& q, MPoly a) { return a *= q; }
MPoly operator*(MPoly a, const Rational& q) { return a *= q; }

}  // namespace zj
