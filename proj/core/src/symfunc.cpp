#include "vertexloc/symfunc.hpp"

#include <algorithm>
#include <cctype>

namespace vertexloc {

SymFunc SymFunc::constant(long c) {
  SymFunc f;
  f.add({}, c);
  return f;
}

SymFunc SymFunc::e(int k) {
  if (k < 0) throw std::invalid_argument("e_k needs k >= 0");
  SymFunc f;
  f.add(k ? std::vector<int>{k} : std::vector<int>{}, 1);
  return f;
}

void SymFunc::add(std::vector<int> kappa, const mpz_class& c) {
  std::sort(kappa.begin(), kappa.end(), std::greater<>());
  kappa.erase(std::remove(kappa.begin(), kappa.end(), 0), kappa.end());
  mpz_class& slot = terms_[kappa];
  slot += c;
  if (slot == 0) terms_.erase(kappa);
}

int SymFunc::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int x : k) s += x;
    d = std::max(d, s);
  }
  return d;
}

int SymFunc::monomial_length() const {
  if (terms_.size() != 1) return -1;
  return static_cast<int>(terms_.begin()->first.size());
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  SymFunc r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  SymFunc r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      std::vector<int> k = a;
      k.insert(k.end(), b.begin(), b.end());
      r.add(std::move(k), ca * cb);
    }
  return r;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  // degree, then kappa
  std::vector<std::pair<int, const std::vector<int>*>> order;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int x : k) s += x;
    order.push_back({s, &k});
  }
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : *x.second > *y.second;
  });
  std::string out;
  for (const auto& [deg, k] : order) {
    const mpz_class& c = terms_.at(*k);
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int x : *k) mono += (mono.empty() ? "" : "*") + std::string("e") + std::to_string(x);
    if (mono.empty())
      out += c.get_str();
    else if (c == 1)
      out += mono;
    else
      out += c.get_str() + "*" + mono;
  }
  return out;
}

namespace {

class SymParser {
 public:
  explicit SymParser(std::string_view s) : s_(s) {}

  SymFunc run() {
    SymFunc f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character", pos_);
    return f;
  }

 private:
  SymFunc expr() {
    SymFunc f = term();
    while (skip(), peek() == '+') {
      ++pos_;
      f = f + term();
    }
    return f;
  }
  SymFunc term() {
    SymFunc f = factor();
    while (skip(), peek() == '*') {
      ++pos_;
      f = f * factor();
    }
    return f;
  }
  SymFunc factor() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      SymFunc f = expr();
      skip();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (c == 'e') {
      ++pos_;
      if (peek() == '-') throw ParseError("negative e index", pos_);
      long k = number();
      return SymFunc::e(static_cast<int>(k));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SymFunc::constant(number());
    throw ParseError("expected factor", pos_);
  }
  long number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SymFunc SymFunc::parse(std::string_view text) { return SymParser(text).run(); }

std::vector<mpz_class> elementary(const WeightSet& roots, int max_degree) {
  std::vector<mpz_class> e(max_degree + 1, 0);
  e[0] = 1;
  for (int r : roots)
    for (int k = max_degree; k >= 1; --k) e[k] += e[k - 1] * r;
  return e;
}

mpz_class chern_eval_int(const SymFunc& f, const WeightSet& roots) {
  int maxk = 0;
  for (const auto& [k, c] : f.terms())
    for (int x : k) maxk = std::max(maxk, x);
  auto e = elementary(roots, maxk);
  mpz_class acc = 0;
  for (const auto& [k, c] : f.terms()) {
    mpz_class term = c;
    for (int x : k) term *= e[x];
    acc += term;
  }
  return acc;
}

Scalar chern_eval(const SymFunc& f, const WeightSet& roots) {
  int maxk = 0;
  for (const auto& [k, c] : f.terms())
    for (int x : k) maxk = std::max(maxk, x);
  auto e = elementary(roots, maxk);
  Scalar acc(VarSet::T);
  for (const auto& [k, c] : f.terms()) {
    mpz_class term = c;
    int deg = 0;
    for (int x : k) {
      term *= e[x];
      deg += x;
    }
    if (term != 0) acc += Scalar::t_power(mpq_class(term), deg);
  }
  return acc;
}

}  // namespace vertexloc
