#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vertexloc {

// {t} or {t1,t2,c1}
enum class VarSet { T, THilb };

const std::vector<std::string>& var_names(VarSet vs);
int var_index(VarSet vs, std::string_view name);  // -1 if absent

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

// Q(i)
struct Gaussian {
  mpq_class re, im;
  Gaussian() = default;
  Gaussian(long v) : re(v), im(0) {}
  Gaussian(const mpq_class& r) : re(r), im(0) {}
  Gaussian(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
  Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
  Gaussian& operator*=(const Gaussian& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    mpq_class n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    mpq_class r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

// num/den reduced; den may be negative
inline mpq_class make_q(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline bool is_zero(const mpq_class& c) { return sgn(c) == 0; }
inline bool is_zero(const Gaussian& c) { return sgn(c.re) == 0 && sgn(c.im) == 0; }
inline mpq_class conj(const mpq_class& c) { return c; }
inline Gaussian conj(const Gaussian& c) { return {c.re, -c.im}; }
std::string coeff_text(const mpq_class& c);
std::string coeff_text(const Gaussian& c);

using Mono = std::array<int, 3>;

inline int mono_degree(const Mono& m) { return m[0] + m[1] + m[2]; }

// graded lex, descending
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <class C>
class Poly {
 public:
  using Term = std::pair<Mono, C>;

  Poly() = default;
  static Poly constant(const C& c) { return monomial(c, {0, 0, 0}); }
  static Poly monomial(const C& c, const Mono& e) {
    Poly p;
    if (!is_zero(c)) p.terms_.push_back({e, c});
    return p;
  }
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].first) == 0); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& lead() const { return terms_.front(); }
  C constant_term() const;
  int degree(int var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const C& c) const;
  Poly shifted(const Mono& e, int sign = 1) const;  // multiply (or divide, sign -1) by monomial
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // exact division, nullopt if o does not divide *this
  std::optional<Poly> divide_exact(const Poly& o) const;
  // univariate in variable 0
  void divmod(const Poly& o, Poly& q, Poly& r) const;
  Mono min_exponents() const;

 private:
  std::vector<Term> terms_;
};

template <class C>
Poly<C> poly_gcd_univariate(Poly<C> a, Poly<C> b);

template <class C>
class RationalFunction {
 public:
  using Coeff = C;

  explicit RationalFunction(VarSet vs = VarSet::T) : vs_(vs), den_(Poly<C>::constant(C(1))) {}
  RationalFunction(VarSet vs, const C& c) : vs_(vs), num_(Poly<C>::constant(c)), den_(Poly<C>::constant(C(1))) {}
  RationalFunction(VarSet vs, Poly<C> num, Poly<C> den);

  static RationalFunction constant(const C& c, VarSet vs = VarSet::T) { return RationalFunction(vs, c); }
  static RationalFunction variable(VarSet vs, std::string_view name);
  // c * t^k, k may be negative
  static RationalFunction t_power(const C& c, int k);
  static RationalFunction monomial(VarSet vs, const C& c, const Mono& e);

  VarSet vars() const { return vs_; }
  const Poly<C>& num() const { return num_; }
  const Poly<C>& den() const { return den_; }
  bool is_zero() const { return num_.zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  RationalFunction scaled(const C& c) const;
  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void canonicalize();
  VarSet join(const RationalFunction& o) const;

  VarSet vs_;
  Poly<C> num_;
  Poly<C> den_;
};

using Scalar = RationalFunction<mpq_class>;
using GScalar = RationalFunction<Gaussian>;

template <class C>
std::string to_text(const Poly<C>& p, VarSet vs);

Scalar parse_scalar(std::string_view text, VarSet vs);
GScalar parse_gscalar(std::string_view text);

// t -> -t, coefficients conjugated; {t} only
Scalar conjugate(const Scalar& s);
GScalar conjugate(const GScalar& s);

// unbound variables are kept if the target set has them
Scalar specialize(const Scalar& s, VarSet target, const std::map<std::string, Scalar>& bindings);
GScalar specialize_gaussian(const Scalar& s, const std::map<std::string, GScalar>& bindings);
GScalar to_gaussian(const Scalar& s);

// the t = sqrt(-1) evaluation
GScalar at_imaginary_unit(const Scalar& s);

template <class C>
std::ostream& operator<<(std::ostream& os, const RationalFunction<C>& s) {
  return os << s.str();
}

extern template class Poly<mpq_class>;
extern template class Poly<Gaussian>;
extern template class RationalFunction<mpq_class>;
extern template class RationalFunction<Gaussian>;

}  // namespace vertexloc
