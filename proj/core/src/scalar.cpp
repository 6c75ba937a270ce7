#include "vertexloc/scalar.hpp"

#include <algorithm>
#include <cctype>

namespace vertexloc {

const std::vector<std::string>& var_names(VarSet vs) {
  static const std::vector<std::string> t{"t"};
  static const std::vector<std::string> hilb{"t1", "t2", "c1"};
  return vs == VarSet::T ? t : hilb;
}

int var_index(VarSet vs, std::string_view name) {
  const auto& names = var_names(vs);
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::string frac(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

std::string coeff_text(const mpq_class& c) { return "(" + frac(c) + ")"; }

std::string coeff_text(const Gaussian& c) {
  mpq_class im = c.im;
  char sign = '+';
  if (sgn(im) < 0) {
    sign = '-';
    im = -im;
  }
  return "(" + frac(c.re) + sign + frac(im) + "*i)";
}

// ---- Poly

template <class C>
Poly<C> Poly<C>::from_terms(std::vector<Term> terms) {
  std::map<Mono, C, GrlexGreater> acc;
  for (auto& [e, c] : terms) {
    auto it = acc.find(e);
    if (it == acc.end())
      acc.emplace(e, std::move(c));
    else
      it->second += c;
  }
  Poly p;
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!is_zero(c)) p.terms_.push_back({e, std::move(c)});
  return p;
}

template <class C>
C Poly<C>::constant_term() const {
  if (!terms_.empty() && mono_degree(terms_.back().first) == 0) return terms_.back().second;
  return C(0);
}

template <class C>
int Poly<C>::degree(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

template <class C>
Poly<C> Poly<C>::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

template <class C>
Poly<C> Poly<C>::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  GrlexGreater gt;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && gt(terms_[i].first, o.terms_[j].first))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || gt(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      C c = terms_[i].second + o.terms_[j].second;
      if (!is_zero(c)) r.terms_.push_back({terms_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class C>
Poly<C> Poly<C>::operator-(const Poly& o) const {
  return *this + (-o);
}

template <class C>
Poly<C> Poly<C>::operator*(const Poly& o) const {
  if (zero() || o.zero()) return Poly();
  if (o.terms_.size() == 1) return shifted(o.terms_[0].first).scaled(o.terms_[0].second);
  if (terms_.size() == 1) return o.shifted(terms_[0].first).scaled(terms_[0].second);
  std::vector<Term> out;
  out.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      out.push_back({Mono{a.first[0] + b.first[0], a.first[1] + b.first[1], a.first[2] + b.first[2]},
                     a.second * b.second});
  return from_terms(std::move(out));
}

template <class C>
Poly<C> Poly<C>::scaled(const C& c) const {
  if (is_zero(c)) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

template <class C>
Poly<C> Poly<C>::shifted(const Mono& e, int sign) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (int k = 0; k < 3; ++k) t.first[k] += sign * e[k];
  return r;
}

template <class C>
Mono Poly<C>::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Mono m = terms_[0].first;
  for (const auto& t : terms_)
    for (int k = 0; k < 3; ++k) m[k] = std::min(m[k], t.first[k]);
  return m;
}

template <class C>
std::optional<Poly<C>> Poly<C>::divide_exact(const Poly& o) const {
  if (o.zero()) throw std::domain_error("division by zero polynomial");
  Poly r = *this;
  std::vector<Term> q;
  const auto& [le, lc] = o.lead();
  while (!r.zero()) {
    const auto& [re, rc] = r.lead();
    Mono e{re[0] - le[0], re[1] - le[1], re[2] - le[2]};
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) return std::nullopt;
    C c = rc / lc;
    q.push_back({e, c});
    r = r - o.shifted(e).scaled(c);
  }
  return from_terms(std::move(q));
}

template <class C>
void Poly<C>::divmod(const Poly& o, Poly& q, Poly& r) const {
  if (o.zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Term> qt;
  r = *this;
  int od = o.lead().first[0];
  const C& lc = o.lead().second;
  while (!r.zero() && r.lead().first[0] >= od) {
    Mono e{r.lead().first[0] - od, 0, 0};
    C c = r.lead().second / lc;
    qt.push_back({e, c});
    r = r - o.shifted(e).scaled(c);
  }
  q = from_terms(std::move(qt));
}

template <class C>
Poly<C> poly_gcd_univariate(Poly<C> a, Poly<C> b) {
  while (!b.zero()) {
    Poly<C> q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.zero()) return a;
  return a.scaled(C(1) / a.lead().second);
}

template Poly<mpq_class> poly_gcd_univariate(Poly<mpq_class>, Poly<mpq_class>);
template Poly<Gaussian> poly_gcd_univariate(Poly<Gaussian>, Poly<Gaussian>);

template <class C>
std::string to_text(const Poly<C>& p, VarSet vs) {
  if (p.zero()) return "0";
  const auto& names = var_names(vs);
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += coeff_text(c);
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (e[k] == 0) continue;
      out += "*" + names[k];
      if (e[k] != 1) out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

template std::string to_text(const Poly<mpq_class>&, VarSet);
template std::string to_text(const Poly<Gaussian>&, VarSet);

// ---- RationalFunction

template <class C>
RationalFunction<C>::RationalFunction(VarSet vs, Poly<C> num, Poly<C> den)
    : vs_(vs), num_(std::move(num)), den_(std::move(den)) {
  if (den_.zero()) throw PoleError("zero denominator");
  canonicalize();
}

template <class C>
RationalFunction<C> RationalFunction<C>::variable(VarSet vs, std::string_view name) {
  int k = var_index(vs, name);
  if (k < 0) throw std::invalid_argument("unknown variable " + std::string(name));
  Mono e{0, 0, 0};
  e[k] = 1;
  return monomial(vs, C(1), e);
}

template <class C>
RationalFunction<C> RationalFunction<C>::monomial(VarSet vs, const C& c, const Mono& e) {
  RationalFunction r(vs);
  if (vertexloc::is_zero(c)) return r;
  Mono pos{std::max(e[0], 0), std::max(e[1], 0), std::max(e[2], 0)};
  Mono neg{std::max(-e[0], 0), std::max(-e[1], 0), std::max(-e[2], 0)};
  r.num_ = Poly<C>::monomial(c, pos);
  r.den_ = Poly<C>::monomial(C(1), neg);
  return r;
}

template <class C>
RationalFunction<C> RationalFunction<C>::t_power(const C& c, int k) {
  return monomial(VarSet::T, c, Mono{k, 0, 0});
}

template <class C>
void RationalFunction<C>::canonicalize() {
  if (num_.zero()) {
    den_ = Poly<C>::constant(C(1));
    return;
  }
  if (!den_.is_monomial()) {
    Mono g = num_.min_exponents();
    Mono h = den_.min_exponents();
    Mono s{std::min(g[0], h[0]), std::min(g[1], h[1]), std::min(g[2], h[2])};
    if (s != Mono{0, 0, 0}) {
      num_ = num_.shifted(s, -1);
      den_ = den_.shifted(s, -1);
    }
    if (vs_ == VarSet::T) {
      Poly<C> d = poly_gcd_univariate(num_, den_);
      if (!d.is_constant()) {
        num_ = *num_.divide_exact(d);
        den_ = *den_.divide_exact(d);
      }
    } else if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Poly<C>::constant(C(1));
    }
  } else {
    Mono g = num_.min_exponents();
    const Mono& h = den_.lead().first;
    Mono s{std::min(g[0], h[0]), std::min(g[1], h[1]), std::min(g[2], h[2])};
    if (s != Mono{0, 0, 0}) {
      num_ = num_.shifted(s, -1);
      den_ = den_.shifted(s, -1);
    }
  }
  C lc = den_.lead().second;
  if (!(lc == C(1))) {
    C inv = C(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

template <class C>
VarSet RationalFunction<C>::join(const RationalFunction& o) const {
  if (vs_ == o.vs_) return vs_;
  if (is_constant()) return o.vs_;
  if (o.is_constant()) return vs_;
  throw std::invalid_argument("mixed variable sets");
}

template <class C>
RationalFunction<C> RationalFunction<C>::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

template <class C>
RationalFunction<C> RationalFunction<C>::operator+(const RationalFunction& o) const {
  VarSet vs = join(o);
  if (o.is_zero()) {
    RationalFunction r = *this;
    r.vs_ = vs;
    return r;
  }
  if (is_zero()) {
    RationalFunction r = o;
    r.vs_ = vs;
    return r;
  }
  if (den_ == o.den_) return RationalFunction(vs, num_ + o.num_, den_);
  return RationalFunction(vs, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

template <class C>
RationalFunction<C> RationalFunction<C>::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

template <class C>
RationalFunction<C> RationalFunction<C>::operator*(const RationalFunction& o) const {
  VarSet vs = join(o);
  if (is_zero() || o.is_zero()) return RationalFunction(vs);
  return RationalFunction(vs, num_ * o.num_, den_ * o.den_);
}

template <class C>
RationalFunction<C> RationalFunction<C>::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

template <class C>
RationalFunction<C> RationalFunction<C>::scaled(const C& c) const {
  if (vertexloc::is_zero(c)) return RationalFunction(vs_);
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(c);
  return r;
}

template <class C>
RationalFunction<C> RationalFunction<C>::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(vs_, den_, num_);
}

template <class C>
RationalFunction<C> RationalFunction<C>::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction r(vs_, C(1)), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

template <class C>
bool RationalFunction<C>::operator==(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (vs_ != o.vs_ && !(is_constant() && o.is_constant())) return false;
  if (den_ == o.den_) return num_ == o.num_;
  if (vs_ == VarSet::T) return false;
  return num_ * o.den_ == o.num_ * den_;
}

template <class C>
std::string RationalFunction<C>::str() const {
  if (den_.is_constant()) return to_text(num_, vs_);
  return "(" + to_text(num_, vs_) + ")/(" + to_text(den_, vs_) + ")";
}

template class Poly<mpq_class>;
template class Poly<Gaussian>;
template class RationalFunction<mpq_class>;
template class RationalFunction<Gaussian>;

// ---- parsing

namespace {

template <class C>
class Parser {
 public:
  Parser(std::string_view s, VarSet vs) : s_(s), vs_(vs) {}

  RationalFunction<C> scalar() {
    RationalFunction<C> r(vs_);
    skip();
    if (peek() == '(' && looks_like_quotient()) {
      expect('(');
      Poly<C> n = poly();
      expect(')');
      expect('/');
      expect('(');
      Poly<C> d = poly();
      expect(')');
      r = RationalFunction<C>(vs_, n, d);
    } else {
      r = RationalFunction<C>(vs_, poly(), Poly<C>::constant(C(1)));
    }
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  // "(" followed by a term list and ")/(" rather than a coefficient
  bool looks_like_quotient() const {
    int depth = 0;
    for (std::size_t i = pos_; i < s_.size(); ++i) {
      if (s_[i] == '(') ++depth;
      if (s_[i] == ')' && --depth == 0) return i + 1 < s_.size() && s_[i + 1] == '/';
    }
    return false;
  }

  Poly<C> poly() {
    skip();
    if (peek() == '0') {
      ++pos_;
      return Poly<C>();
    }
    std::vector<typename Poly<C>::Term> terms;
    terms.push_back(term());
    skip();
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
      skip();
    }
    return Poly<C>::from_terms(std::move(terms));
  }

  typename Poly<C>::Term term() {
    skip();
    expect('(');
    C c = coeff();
    expect(')');
    Mono e{0, 0, 0};
    while (peek() == '*') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      int k = var_index(vs_, s_.substr(start, pos_ - start));
      if (k < 0) fail("unknown variable", start);
      int p = 1;
      if (peek() == '^') {
        ++pos_;
        p = static_cast<int>(integer().get_si());
      }
      e[k] += p;
    }
    return {e, c};
  }

  C coeff();

  mpq_class rational() {
    mpz_class n = integer();
    expect('/');
    mpz_class d = integer();
    if (d == 0) fail("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer", start);
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what, std::size_t at = std::string::npos) const {
    throw ParseError(what, at == std::string::npos ? pos_ : at);
  }

  std::string_view s_;
  VarSet vs_;
  std::size_t pos_ = 0;
};

template <>
mpq_class Parser<mpq_class>::coeff() {
  return rational();
}

template <>
Gaussian Parser<Gaussian>::coeff() {
  mpq_class re = rational();
  char sign = peek();
  if (sign != '+' && sign != '-') fail("expected sign of imaginary part");
  ++pos_;
  mpq_class im = rational();
  expect('*');
  expect('i');
  return {re, sign == '-' ? mpq_class(-im) : im};
}

}  // namespace

Scalar parse_scalar(std::string_view text, VarSet vs) { return Parser<mpq_class>(text, vs).scalar(); }

GScalar parse_gscalar(std::string_view text) { return Parser<Gaussian>(text, VarSet::T).scalar(); }

// ---- conjugation and specialization

namespace {

template <class C>
Poly<C> conj_poly(const Poly<C>& p) {
  std::vector<typename Poly<C>::Term> out;
  for (const auto& [e, c] : p.terms()) out.push_back({e, e[0] % 2 ? C(-conj(c)) : conj(c)});
  return Poly<C>::from_terms(std::move(out));
}

template <class C>
RationalFunction<C> conj_rf(const RationalFunction<C>& s) {
  if (s.vars() != VarSet::T) throw std::invalid_argument("conjugate needs variable set {t}");
  return RationalFunction<C>(VarSet::T, conj_poly(s.num()), conj_poly(s.den()));
}

template <class D, class C, class Lift>
D eval_poly(const Poly<C>& p, const std::vector<std::optional<D>>& vals, VarSet src, VarSet target,
            const Lift& lift) {
  const auto& names = var_names(src);
  std::vector<std::optional<D>> base(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (vals[k])
      base[k] = *vals[k];
    else if (var_index(target, names[k]) >= 0)
      base[k] = D::variable(target, names[k]);
  }
  std::vector<std::map<int, D>> powers(names.size());
  auto power = [&](std::size_t k, int e) -> const D& {
    if (!base[k]) throw std::invalid_argument("unbound variable " + names[k]);
    auto it = powers[k].find(e);
    if (it == powers[k].end()) it = powers[k].emplace(e, base[k]->pow(e)).first;
    return it->second;
  };
  D acc(target);
  for (const auto& [e, c] : p.terms()) {
    D term(target, lift(c));
    for (std::size_t k = 0; k < names.size(); ++k)
      if (e[k]) term *= power(k, e[k]);
    acc += term;
  }
  return acc;
}

template <class D, class Lift>
D specialize_impl(const Scalar& s, VarSet target, const std::map<std::string, D>& bindings, const Lift& lift) {
  const auto& names = var_names(s.vars());
  std::vector<std::optional<D>> vals(names.size());
  for (const auto& [name, v] : bindings) {
    int k = var_index(s.vars(), name);
    if (k < 0) continue;
    vals[k] = v;
  }
  D n = eval_poly<D>(s.num(), vals, s.vars(), target, lift);
  D d = eval_poly<D>(s.den(), vals, s.vars(), target, lift);
  if (d.is_zero()) throw PoleError("specialization makes the denominator vanish");
  return n / d;
}

}  // namespace

Scalar conjugate(const Scalar& s) { return conj_rf(s); }
GScalar conjugate(const GScalar& s) { return conj_rf(s); }

Scalar specialize(const Scalar& s, VarSet target, const std::map<std::string, Scalar>& bindings) {
  return specialize_impl<Scalar>(s, target, bindings, [](const mpq_class& c) { return c; });
}

GScalar specialize_gaussian(const Scalar& s, const std::map<std::string, GScalar>& bindings) {
  return specialize_impl<GScalar>(s, VarSet::T, bindings, [](const mpq_class& c) { return Gaussian(c); });
}

GScalar to_gaussian(const Scalar& s) { return specialize_gaussian(s, {}); }

GScalar at_imaginary_unit(const Scalar& s) {
  return specialize_gaussian(s, {{"t", GScalar(VarSet::T, Gaussian(mpq_class(0), mpq_class(1)))}});
}

}  // namespace vertexloc
