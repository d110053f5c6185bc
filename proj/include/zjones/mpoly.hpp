#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zj {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string rational_str(const Rational& q);
Rational factorial(unsigned n);
double to_double(const Rational& q);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Ordered set of at most four variable names. Rings are interned, so two
// rings with the same names share one pointer.
class Ring {
 public:
  static constexpr int kMaxVars = 4;

  static RingPtr make(std::vector<std::string> names);
  static RingPtr of(std::string_view single);
  static RingPtr empty();

  const std::vector<std::string>& names() const { return names_; }
  int index(std::string_view name) const;
  int size() const { return static_cast<int>(names_.size()); }
  std::string str() const;

  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

 private:
  std::vector<std::string> names_;
};

// Exponent vector packed into 16-bit fields; multiplying monomials is adding words.
using Monomial = std::uint64_t;

inline unsigned exponent_of(Monomial m, int i) { return static_cast<unsigned>((m >> (16 * i)) & 0xffffu); }

class MPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MPoly() : MPoly(Ring::empty()) {}
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MPoly constant(RingPtr ring, const Rational& c);
  static MPoly variable(RingPtr ring, std::string_view name);
  static MPoly monomial(RingPtr ring, const std::vector<unsigned>& exps, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const std::vector<unsigned>& exps) const;
  std::vector<unsigned> exponents(Monomial m) const;

  // -1 for the zero polynomial.
  int degree(std::string_view var) const;
  int total_degree() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& q);
  MPoly operator-() const;
  MPoly pow(unsigned e) const;

  MPoly substitute(std::string_view var, const Rational& value) const;
  // Rewrites into `target`: variables with an entry in `subs` are replaced by
  // that polynomial, the rest must exist in `target` under the same name.
  MPoly compose(const RingPtr& target, const std::map<std::string, MPoly>& subs) const;
  MPoly reflect(std::string_view var) const;
  bool is_even_in(std::string_view var) const;

  std::complex<double> eval(const std::map<std::string, std::complex<double>>& values) const;
  std::string str() const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  static MPoly from_sorted(RingPtr ring, std::vector<Term> terms);
  void check_ring(const MPoly& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;  // sorted by monomial, no zero coefficients
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rational& q, MPoly a);
MPoly operator*(MPoly a, const Rational& q);

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace zj
