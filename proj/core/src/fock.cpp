#include "vertexloc/fock.hpp"

#include <memory>
#include <mutex>
#include <tuple>

namespace vertexloc {

FockVector FockVector::basis(const ChargedPartition& p, const Scalar& c) {
  FockVector v;
  v.add(p, c);
  return v;
}

Scalar FockVector::coeff(const ChargedPartition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(VarSet::T) : it->second;
}

void FockVector::add(const ChargedPartition& p, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

FockVector FockVector::scaled(const Scalar& c) const {
  FockVector r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

bool FockVector::operator==(const FockVector& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.str() + "]v" + k.str();
  }
  return s;
}

Scalar hook_norm(const Partition& mu) {
  mpz_class h = hook_product(mu);
  mpq_class c(h * h);
  if (mu.size() % 2) c = -c;
  return Scalar::t_power(c, 2 * mu.size());
}

Scalar hook_pairing(const FockVector& u, const FockVector& v) {
  Scalar acc(VarSet::T);
  for (const auto& [k, c] : u.terms()) {
    auto it = v.terms().find(k);
    if (it != v.terms().end()) acc += c * it->second * hook_norm(k.mu);
  }
  return acc;
}

Scalar hermitian_pairing(const FockVector& u, const FockVector& v) {
  Scalar acc(VarSet::T);
  for (const auto& [k, c] : u.terms()) {
    auto it = v.terms().find(k);
    if (it != v.terms().end()) acc += conjugate(c) * it->second * hook_norm(k.mu);
  }
  return acc;
}

Scalar e_normalize(const ChargedPartition& p) {
  return Scalar::t_power(make_q(1, hook_product(p.mu)), -p.mu.size());
}

FockVector apply_Q(int power, const FockVector& v) {
  FockVector out;
  for (const auto& [k, c] : v.terms()) out.add({k.mu, k.m + power}, c);
  return out;
}

Scalar oracle_to_v(const Partition& mu) {
  mpq_class c(hook_product(mu));
  if (mu.size() % 2) c = -c;
  return Scalar::t_power(c, mu.size());
}

FockVector transport_oracle(const FockVector& v,
                            const std::function<WedgeState<mpq_class>(const WedgeState<mpq_class>&)>& op) {
  FockVector out;
  for (const auto& [k, c] : v.terms()) {
    Scalar src = c * oracle_to_v(k.mu);
    for (const auto& [tk, tc] : op(WedgeState<mpq_class>{{k, mpq_class(1)}}))
      out.add(tk, src.scaled(tc) / oracle_to_v(tk.mu));
  }
  return out;
}

namespace {

// images of basis vectors under translate-type operators, keyed by (kind, n, label)
FockVector cached_translate(int kind, int n, const ChargedPartition& p) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, ChargedPartition>, FockVector> cache;
  auto key = std::make_tuple(kind, n, p);
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::function<mpq_class(int)> w;
  if (kind == 0)
    w = [](int) { return mpq_class(1); };
  else
    w = [n](int s) { return mpq_class(s - n - 1); };  // landing index minus one
  FockVector img = transport_oracle(FockVector::basis(p),
                                    [&](const WedgeState<mpq_class>& s) { return translate(n, w, s); });
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(img)).first->second;
}

FockVector apply_cached(int kind, int n, const FockVector& v) {
  FockVector out;
  for (const auto& [k, c] : v.terms()) out += cached_translate(kind, n, k).scaled(c);
  return out;
}

}  // namespace

FockVector apply_alpha(int n, const FockVector& v) {
  if (n == 0) {
    FockVector out;
    for (const auto& [k, c] : v.terms()) out.add(k, c.scaled(mpq_class(k.m)));
    return out;
  }
  return apply_cached(0, n, v);
}

int virasoro_zero_eigenvalue(const ChargedPartition& p) { return p.mu.size() + p.m * (p.m - 1) / 2; }

FockVector apply_virasoro(int n, const FockVector& v) {
  if (n == 0) {
    FockVector out;
    for (const auto& [k, c] : v.terms()) out.add(k, c.scaled(mpq_class(virasoro_zero_eigenvalue(k))));
    return out;
  }
  return apply_cached(1, n, v);
}

std::vector<ChargedPartition> TestWindow::labels() const {
  std::vector<ChargedPartition> out;
  for (int m = min_charge; m <= max_charge; ++m)
    for (const auto& mu : enumerate_partitions(max_degree)) out.push_back({mu, m});
  return out;
}

FockVector GradedOperator::apply(const FockVector& v) const {
  FockVector out;
  for (const auto& [k, c] : v.terms()) out += rule(k).scaled(c);
  return out;
}

GradedOperator alpha_operator(int n) {
  return {"alpha_" + std::to_string(n), 0, std::max(-n, 0),
          [n](const ChargedPartition& p) { return apply_alpha(n, FockVector::basis(p)); }};
}

GradedOperator virasoro_operator(int n) {
  return {"L_" + std::to_string(n), 0, std::max(-n, 0),
          [n](const ChargedPartition& p) { return apply_virasoro(n, FockVector::basis(p)); }};
}

GradedOperator identity_operator() {
  return {"id", 0, 0, [](const ChargedPartition& p) { return FockVector::basis(p); }};
}

GradedOperator bracket(const GradedOperator& A, const GradedOperator& B, int sign, const TestWindow& w) {
  if (w.max_degree + A.max_raise + B.max_raise > w.guard_degree)
    throw GuardBandError("window degree " + std::to_string(w.max_degree) + " plus shifts exceeds guard " +
                         std::to_string(w.guard_degree));
  auto table = std::make_shared<std::map<ChargedPartition, FockVector>>();
  for (const auto& p : w.labels()) {
    FockVector e = FockVector::basis(p);
    FockVector ab = A.apply(B.apply(e));
    FockVector ba = B.apply(A.apply(e));
    (*table)[p] = sign < 0 ? ab - ba : ab + ba;
  }
  std::string name = (sign < 0 ? "[" : "{") + A.name + "," + B.name + (sign < 0 ? "]" : "}");
  return {name, A.charge_shift + B.charge_shift, A.max_raise + B.max_raise,
          [table, name](const ChargedPartition& p) {
            auto it = table->find(p);
            if (it == table->end()) throw GuardBandError(name + " evaluated outside its window at " + p.str());
            return it->second;
          }};
}

std::vector<ChargedPartition> disagreement(const GradedOperator& A, const GradedOperator& B, const TestWindow& w) {
  std::vector<ChargedPartition> bad;
  for (const auto& p : w.labels())
    if (A.rule(p) != B.rule(p)) bad.push_back(p);
  return bad;
}

}  // namespace vertexloc
