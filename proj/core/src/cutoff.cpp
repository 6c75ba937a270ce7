#include "vertexloc/cutoff.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vertexloc {

void CutoffConfig::validate() const {
  if (M > 0 || N <= 0) throw std::invalid_argument("cutoff needs M <= 0 < N");
}

WeightSet CutoffConfig::weights() const {
  WeightSet w;
  for (int k = -M; k >= -(N - 1); --k) w.push_back(k);
  return w;
}

WeightSet truncated_maya(const ChargedPartition& p, const CutoffConfig& cfg) {
  cfg.validate();
  int r = p.m + cfg.N;
  if (r < 0 || r > cfg.dim()) throw CutoffTooSmall("charge outside the cutoff");
  if (r < p.mu.length()) throw CutoffTooSmall("cutoff N too small for " + p.str());
  if (r > 0 && p.m + p.mu.part(1) > -cfg.M) throw CutoffTooSmall("cutoff M too small for " + p.str());
  WeightSet s;
  for (int i = 1; i <= r; ++i) s.push_back(p.m + p.mu.part(i) - i + 1);
  return s;
}

std::vector<WeightSet> enumerate_fixed_points(const CutoffConfig& cfg, int m) {
  cfg.validate();
  int rows = m + cfg.N, cols = -cfg.M - m;
  if (rows < 0 || cols < 0) throw std::out_of_range("charge out of range for the cutoff");
  std::vector<WeightSet> out;
  for (const auto& mu : enumerate_partitions(rows * cols, std::make_pair(rows, cols)))
    out.push_back(truncated_maya({mu, m}, cfg));
  return out;
}

bool is_subset(const WeightSet& U, const WeightSet& V) {
  return std::includes(V.begin(), V.end(), U.begin(), U.end(), std::greater<>());
}

WeightSet set_minus(const WeightSet& A, const WeightSet& B) {
  WeightSet out;
  std::set_difference(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out), std::greater<>());
  return out;
}

WeightSet set_union(const WeightSet& A, const WeightSet& B) {
  WeightSet out;
  std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out), std::greater<>());
  return out;
}

WeightSet set_intersection(const WeightSet& A, const WeightSet& B) {
  WeightSet out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out), std::greater<>());
  return out;
}

WeightSet complement(const CutoffConfig& cfg, const WeightSet& V) { return set_minus(cfg.weights(), V); }

int weight_sum(const WeightSet& U) {
  int s = 0;
  for (int k : U) s += k;
  return s;
}

mpz_class euler_hom_int(const WeightSet& U, const WeightSet& V) {
  mpz_class r = 1;
  for (int k : U)
    for (int kk : V) {
      if (kk == k) return 0;
      r *= kk - k;
    }
  return r;
}

Scalar euler_hom(const WeightSet& U, const WeightSet& V) {
  return Scalar::t_power(mpq_class(euler_hom_int(U, V)), static_cast<int>(U.size() * V.size()));
}

FlagValue raw_flag_pairing(const CutoffConfig& cfg, const SymFunc& f, const WeightSet& U, const WeightSet& V) {
  if (!is_subset(U, V)) return {Scalar(VarSet::T), 0};
  WeightSet diff = set_minus(V, U);
  return {euler_hom(U, complement(cfg, V)) * chern_eval(f, diff), weight_sum(diff)};
}

Scalar norm_c(const Partition& mu, int m, int M) {
  mpz_class c = 1;
  for (Box b : boxes(mu)) c *= -M - m + b.i - b.j;
  return Scalar::t_power(mpq_class(c), mu.size());
}

Scalar norm_cprime(const Partition& nu, int n, int N) {
  mpz_class c = 1;
  for (Box b : boxes(nu)) c *= N + n - b.i + b.j;
  return Scalar::t_power(mpq_class(c), nu.size());
}

Scalar norm_cdouble(int m, int n, int M, int N) {
  mpz_class c = 1;
  for (int i = -(N - 1); i <= m; ++i)
    for (int j = n + 1; j <= -M; ++j) c *= j - i;
  return Scalar::t_power(mpq_class(c), (m + N) * (-n - M));
}

FlagValue normalized_flag_pairing(const CutoffConfig& cfg, const SymFunc& f, const ChargedPartition& p,
                                  const ChargedPartition& q) {
  WeightSet U = truncated_maya(p, cfg);
  WeightSet V = truncated_maya(q, cfg);
  FlagValue raw = raw_flag_pairing(cfg, f, U, V);
  if (raw.value.is_zero()) return raw;
  Scalar scale = norm_c(p.mu, p.m, cfg.M) * norm_cprime(q.mu, q.m, cfg.N) / norm_cdouble(p.m, q.m, cfg.M, cfg.N);
  return {scale * raw.value, raw.z_exponent};
}

namespace {

std::string flag_text(const FlagValue& v) {
  if (v.value.is_zero()) return "0";
  return v.value.str() + " z^" + std::to_string(v.z_exponent);
}

}  // namespace

Stabilization stabilize(const SymFunc& f, const ChargedPartition& p, const ChargedPartition& q, int N_max) {
  Stabilization out;
  std::optional<FlagValue> prev;
  int prevN = -1;
  for (int N = 1; N <= N_max; ++N) {
    CutoffConfig cfg{-N, N};
    FlagValue v;
    try {
      v = normalized_flag_pairing(cfg, f, p, q);
    } catch (const CutoffTooSmall&) {
      continue;
    }
    bool stable = prev && prevN == N - 1 && *prev == v;
    out.rows.push_back({N, -N, flag_text(v), stable});
    if (stable) {
      out.value = v;
      out.threshold_N = prevN;
      break;
    }
    prev = v;
    prevN = N;
  }
  return out;
}

std::string to_csv(const Stabilization& s) {
  std::ostringstream os;
  os << "N,M,value,stable\n";
  for (const auto& r : s.rows) os << r.N << "," << r.M << ",\"" << r.value << "\"," << (r.stable ? "true" : "false") << "\n";
  return os.str();
}

// ---- F and H

CharClass chern_class(const SymFunc& f) {
  return [f](const WeightSet& V) { return chern_eval(f, V); };
}

CharClass euler_class_against(const WeightSet& S) {
  return [S](const WeightSet& V) { return euler_hom(V, S); };
}

namespace {

void for_each_subset(const WeightSet& pool, int d, const std::function<void(const WeightSet&)>& fn) {
  if (d < 0 || d > static_cast<int>(pool.size())) return;
  std::vector<int> idx(d);
  for (int k = 0; k < d; ++k) idx[k] = k;
  const int n = static_cast<int>(pool.size());
  while (true) {
    WeightSet V;
    for (int k : idx) V.push_back(pool[k]);
    fn(V);
    int k = d - 1;
    while (k >= 0 && idx[k] == n - d + k) --k;
    if (k < 0) return;
    ++idx[k];
    for (int r = k + 1; r < d; ++r) idx[r] = idx[r - 1] + 1;
  }
}

LaurentWindow from_map(const std::map<std::vector<int>, Scalar>& m, std::vector<std::string> vars) {
  std::vector<std::pair<int, int>> bounds(vars.size(), {0, 0});
  bool first = true;
  for (const auto& [e, c] : m) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (first || e[k] < bounds[k].first) bounds[k].first = e[k];
      if (first || e[k] > bounds[k].second) bounds[k].second = e[k];
    }
    first = false;
  }
  LaurentWindow w(std::move(vars), bounds);
  for (const auto& [e, c] : m) w.add(e, c);
  return w;
}

std::map<std::vector<int>, Scalar> to_map(const LaurentWindow& w) { return w.coeffs(); }

void accumulate(std::map<std::vector<int>, Scalar>& m, const std::vector<int>& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

LaurentWindow combine(const LaurentWindow& a, const LaurentWindow& b, const Scalar& s, int shift = 0) {
  auto m = to_map(a);
  for (const auto& [e, c] : b.coeffs()) {
    auto e2 = e;
    e2[0] += shift;
    accumulate(m, e2, c * s);
  }
  return from_map(m, a.vars().empty() ? b.vars() : a.vars());
}

LaurentWindow scaled_shifted(const LaurentWindow& b, const Scalar& s, int shift) {
  return combine(LaurentWindow({"z"}, {{0, 0}}), b, s, shift);
}

Scalar sign_scalar(int parity_source) {
  return Scalar(VarSet::T, mpq_class(parity_source % 2 ? -1 : 1));
}

}  // namespace

LaurentWindow F_function(const WeightSet& Yperp, const WeightSet& X, const CharClass& c, int d) {
  std::map<std::vector<int>, Scalar> acc;
  WeightSet Z = set_union(X, Yperp);
  for_each_subset(Yperp, d, [&](const WeightSet& V) {
    Scalar cv = c(V);
    if (cv.is_zero()) return;
    accumulate(acc, {weight_sum(V)}, cv / euler_hom(V, set_minus(Z, V)));
  });
  return from_map(acc, {"z"});
}

LaurentWindow H_function(const WeightSet& Yperp, const WeightSet& X, const CharClass& c, int d) {
  return combine(F_function(Yperp, X, c, d), F_function(X, Yperp, c, d), -sign_scalar(d));
}

FH FH_eval(const WeightSet& Yperp, const WeightSet& X, const SymFunc& f, int d) {
  if (d > static_cast<int>(Yperp.size())) throw std::invalid_argument("d exceeds |Yperp|");
  auto c = chern_class(f);
  return {F_function(Yperp, X, c, d), H_function(Yperp, X, c, d)};
}

namespace {

struct RecursionParts {
  WeightSet Yk, Xk, Sk, Zk;
};

RecursionParts split(const WeightSet& Yperp, const WeightSet& X, const WeightSet& S, int d, int k) {
  if (std::find(Yperp.begin(), Yperp.end(), k) == Yperp.end()) throw std::invalid_argument("k must lie in Yperp");
  if (d < 1) throw std::invalid_argument("recursion needs d >= 1");
  RecursionParts r;
  r.Yk = set_minus(Yperp, {k});
  r.Xk = set_union(X, {k});
  r.Sk = set_union(S, {k});
  r.Zk = set_union(X, r.Yk);
  return r;
}

}  // namespace

IdentityCheck fh_recursion(const WeightSet& Yperp, const WeightSet& X, const WeightSet& S, int d, int k) {
  auto r = split(Yperp, X, S, d, k);
  auto cS = euler_class_against(S);
  LaurentWindow lhs = combine(H_function(Yperp, X, cS, d), H_function(r.Yk, r.Xk, cS, d),
                              Scalar(VarSet::T, mpq_class(-1)));
  Scalar coef = sign_scalar(d - 1) * euler_hom({k}, S) / euler_hom({k}, r.Zk);
  LaurentWindow rhs = scaled_shifted(H_function(r.Yk, X, euler_class_against(r.Sk), d - 1), coef, k);
  return {lhs, rhs};
}

IdentityCheck fh_recursion_uncorrected(const WeightSet& Yperp, const WeightSet& X, const WeightSet& S, int d,
                                       int k) {
  auto r = split(Yperp, X, S, d, k);
  auto cS = euler_class_against(S);
  LaurentWindow lhs = combine(H_function(Yperp, X, cS, d), H_function(r.Yk, r.Xk, cS, d), -sign_scalar(d));
  Scalar coef = euler_hom({k}, S) / euler_hom(r.Zk, {k});
  LaurentWindow rhs = scaled_shifted(H_function(r.Yk, X, euler_class_against(r.Sk), d - 1), coef, k);
  return {lhs, rhs};
}

namespace {

mpz_class falling(long e, int j) {
  mpz_class r = 1;
  for (int i = 0; i < j; ++i) r *= e - i;
  return r;
}

}  // namespace

int vanishing_order_at_one(const LaurentWindow& F) {
  if (F.zero()) return 1 << 20;
  int lo = F.coeffs().begin()->first[0];
  for (int j = 0;; ++j) {
    Scalar acc(VarSet::T);
    for (const auto& [e, c] : F.coeffs()) acc += c.scaled(mpq_class(falling(e[0] - lo, j)));
    if (!acc.is_zero()) return j;
  }
}

// ---- lemma sums at t = 1

std::optional<std::pair<mpq_class, int>> directed_pairing(const CutoffConfig& cfg, const SymFunc& f,
                                                          const WeightSet& U, int degU, const WeightSet& V,
                                                          int degV) {
  if (degV >= degU) {
    if (!is_subset(U, V)) return std::nullopt;
    WeightSet D = set_minus(V, U);
    mpz_class c = euler_hom_int(U, complement(cfg, V)) * chern_eval_int(f, D);
    if (c == 0) return std::nullopt;
    return std::make_pair(mpq_class(c), weight_sum(D));
  }
  if (!is_subset(V, U)) return std::nullopt;
  WeightSet D = set_minus(U, V);
  mpz_class c = euler_hom_int(V, complement(cfg, U)) * chern_eval_int(f, D);
  if ((static_cast<long>(degU) * (degV - degU)) % 2) c = -c;
  if (c == 0) return std::nullopt;
  return std::make_pair(mpq_class(c), -weight_sum(D));
}

LaurentWindow lemma_B(const CutoffConfig& cfg, const WeightSet& U, int l, const WeightSet& W, int n, int a,
                      const SymFunc& f, const SymFunc& g) {
  const int m = l + a, b = n - m, mp = l + n - m;
  const int sign = (a * b) % 2 ? -1 : 1;
  std::map<std::vector<int>, Scalar> acc;
  auto charge_ok = [&](int c) { return c + cfg.N >= 0 && c + cfg.N <= cfg.dim(); };
  if (charge_ok(m)) {
    for (const auto& V : enumerate_fixed_points(cfg, m)) {
      auto p1 = directed_pairing(cfg, f, U, l, V, m);
      if (!p1) continue;
      auto p2 = directed_pairing(cfg, g, V, m, W, n);
      if (!p2) continue;
      mpq_class c = p1->first * p2->first / mpq_class(euler_hom_int(V, complement(cfg, V)));
      accumulate(acc, {p1->second, p2->second}, Scalar(VarSet::T, c));
    }
  }
  if (charge_ok(mp)) {
    for (const auto& V : enumerate_fixed_points(cfg, mp)) {
      auto p1 = directed_pairing(cfg, g, U, l, V, mp);
      if (!p1) continue;
      auto p2 = directed_pairing(cfg, f, V, mp, W, n);
      if (!p2) continue;
      mpq_class c = p1->first * p2->first / mpq_class(euler_hom_int(V, complement(cfg, V)));
      if (sign > 0) c = -c;
      accumulate(acc, {p2->second, p1->second}, Scalar(VarSet::T, c));
    }
  }
  return from_map(acc, {"z", "w"});
}

std::optional<int> lemma_bound(const CutoffConfig& cfg, const WeightSet& U, int l, const WeightSet& W, int a,
                               const SymFunc& f, const SymFunc& g) {
  WeightSet X = set_intersection(U, W), Y = set_union(U, W);
  int Z = static_cast<int>(X.size()) + cfg.dim() - static_cast<int>(Y.size());
  int d = l + a + cfg.N - static_cast<int>(Y.size());
  if (d <= 0) return std::nullopt;
  int lf = std::max(f.monomial_length(), 0), lg = std::max(g.monomial_length(), 0);
  int K = 1 << 20;
  for (int j = 1; j <= d; ++j) K = std::min(K, j * (Z + j - 2 * d - lf - lg));
  return K;
}

int divisibility_order(const LaurentWindow& grid, int sign) {
  if (grid.zero()) return -1;
  int plo = grid.coeffs().begin()->first[0], qlo = grid.coeffs().begin()->first[1];
  int pmax = plo;
  for (const auto& [e, c] : grid.coeffs()) {
    plo = std::min(plo, e[0]);
    qlo = std::min(qlo, e[1]);
    pmax = std::max(pmax, e[0]);
  }
  for (int j = 0; j <= pmax - plo + 1; ++j) {
    std::map<int, Scalar> byw;
    for (const auto& [e, c] : grid.coeffs()) {
      int p = e[0] - plo, q = e[1] - qlo;
      if (p < j) continue;
      mpz_class k = falling(p, j);
      if (sign < 0 && (p - j) % 2) k = -k;
      auto it = byw.emplace(p + q - j, Scalar(VarSet::T)).first;
      it->second += c.scaled(mpq_class(k));
    }
    for (const auto& [w, c] : byw)
      if (!c.is_zero()) return j;
  }
  return pmax - plo + 1;
}

IdentityCheck fermicom_B(const CutoffConfig& cfg, const WeightSet& U, const WeightSet& W) {
  cfg.validate();
  if (!is_subset(U, W)) throw std::invalid_argument("fermicom needs U inside W");
  const int l = static_cast<int>(U.size()) - cfg.N, n = static_cast<int>(W.size()) - cfg.N;
  LaurentWindow lhs = lemma_B(cfg, U, l, W, n, -1, SymFunc::constant(1), SymFunc::constant(1));

  const int K = cfg.N - cfg.M - 1;
  mpz_class fact = 1;
  for (int i = 2; i <= K; ++i) fact *= i;
  WeightSet D = set_minus(W, U);
  mpz_class A = euler_hom_int(U, complement(cfg, W));
  const int shift = weight_sum(D);
  std::map<std::vector<int>, Scalar> acc;
  for (int r = 0; r <= K; ++r) {
    int ez = cfg.M + r, ew = -(cfg.N - 1) + K - r;
    mpz_class bc;
    mpz_bin_uiui(bc.get_mpz_t(), K, r);
    mpz_class c = bc * A;
    for (int k : D) c *= k + ez;
    // w -> -w, then the w^{sum(W/U)} character of W/U
    if (ew % 2) c = -c;
    mpq_class q(c, fact);
    q.canonicalize();
    accumulate(acc, {ez, ew + shift}, Scalar(VarSet::T, q));
  }
  return {lhs, from_map(acc, {"z", "w"})};
}

mpq_class normalization_ratio(const Partition& mu, int m, int N, bool prime) {
  mpq_class r = 1;
  for (Box b : boxes(mu)) {
    int x = prime ? m - b.i + b.j : -m + b.i - b.j;
    r *= make_q(N + x, N);
  }
  r.canonicalize();
  return r;
}

Asymptotics normalization_asymptotics(const Partition& mu, int m, bool prime, int N_max) {
  Asymptotics out;
  int N0 = 1;
  for (Box b : boxes(mu)) {
    int x = prime ? m - b.i + b.j : -m + b.i - b.j;
    N0 = std::max(N0, 1 - x);
  }
  out.first_N = N0;
  std::optional<mpq_class> prev;
  for (int N = N0; N <= N_max; ++N) {
    mpq_class dev = abs(normalization_ratio(mu, m, N, prime) - 1);
    if (prev && dev > *prev) {
      out.monotone = false;
      out.violation_N = N;
      return out;
    }
    prev = dev;
  }
  return out;
}

mpq_class euler_characteristic_sum(const std::vector<int>& ks, int n, int power) {
  mpq_class total = 0;
  for (std::size_t a = 0; a < ks.size(); ++a) {
    mpq_class term = 1;
    for (int p = 0; p < power; ++p) term *= ks[a];
    for (std::size_t b = 0; b < ks.size(); ++b)
      if (a != b) term *= make_q(ks[b] - ks[a] - n, ks[b] - ks[a]);
    total += term;
  }
  total.canonicalize();
  return total;
}

}  // namespace vertexloc
