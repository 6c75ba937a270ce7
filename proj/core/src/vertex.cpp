#include "vertexloc/vertex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace vertexloc {

std::string to_string(NegativeChargeRule r) { return r == NegativeChargeRule::kReflect ? "reflect" : "plain"; }

namespace {

// the integer part of the hook-type product
mpz_class hook_type_product(int a, const Partition& mu, const Partition& nu) {
  mpz_class c = 1;
  for (Box b : boxes(mu)) {
    c *= a + arm(nu, b) + leg(mu, b) + 1;
    if (c == 0) return c;
  }
  for (Box b : boxes(nu)) {
    c *= a - arm(mu, b) - leg(nu, b) - 1;
    if (c == 0) return c;
  }
  return c;
}

int tri(int n) { return n * (n + 1) / 2; }

}  // namespace

std::optional<VertexElement> matrix_element_W(int a, const SymFunc& f, const ChargedPartition& src,
                                              const ChargedPartition& tgt, NegativeChargeRule rule) {
  if (tgt.m - src.m != a) throw std::invalid_argument("charge difference must equal a");
  const bool up = a >= 0;
  if (up ? !maya_contains(src, tgt) : !maya_contains(tgt, src)) return std::nullopt;
  mpz_class c = hook_type_product(a, src.mu, tgt.mu);
  if (c == 0) return std::nullopt;
  WeightSet roots = up ? maya_difference(tgt, src) : maya_difference(src, tgt);
  Scalar cf = chern_eval(f, roots);
  if (cf.is_zero()) return std::nullopt;
  int k = tgt.mu.size() + tri(tgt.m) - src.mu.size() - tri(src.m);
  int z = k - a * (a + 1) / 2;
  if (!up && rule == NegativeChargeRule::kPlain && (z % 2)) c = -c;
  Scalar coeff = Scalar::t_power(mpq_class(c), src.mu.size() + tgt.mu.size()) * cf;
  return VertexElement{src, tgt, z, coeff};
}

namespace {

FockVector field_mode_basis(int a, const SymFunc& f, int d, const ChargedPartition& p, NegativeChargeRule rule) {
  static std::mutex mu;
  static std::map<std::tuple<int, std::string, int, ChargedPartition, int>, FockVector> cache;
  auto key = std::make_tuple(a, f.str(), d, p, static_cast<int>(rule));
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  FockVector out;
  // z exponent is |nu| - |mu| + m a
  int s = d + p.mu.size() - p.m * a;
  if (s >= 0)
    for (const auto& nu : partitions_of(s)) {
      ChargedPartition q{nu, p.m + a};
      auto el = matrix_element_W(a, f, p, q, rule);
      if (el) out.add(q, el->coeff / hook_norm(nu));
    }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

FockVector field_mode(int a, const SymFunc& f, int d, const FockVector& v, NegativeChargeRule rule) {
  FockVector out;
  for (const auto& [p, c] : v.terms()) out += field_mode_basis(a, f, d, p, rule).scaled(c);
  return out;
}

FockVector psi_mode(int j, const FockVector& v, NegativeChargeRule rule) {
  return field_mode(1, SymFunc::constant(1), -j - 1, v, rule);
}

FockVector psi_star_mode(int j, const FockVector& v, NegativeChargeRule rule) {
  return field_mode(-1, SymFunc::constant(1), -j, v, rule);
}

int bosonized_required_cap(int a, int d, const FockVector& v) {
  int cap = 0;
  for (const auto& [p, c] : v.terms()) cap = std::max({cap, p.mu.size(), d - a * p.m + p.mu.size()});
  return cap;
}

namespace {

// coefficients E_0..E_cap of exp(sign * a * sum_n alpha_{sign' n} x^n / n) applied to v
std::vector<FockVector> exponential_series(int a, bool creation, const FockVector& v, int cap) {
  std::vector<FockVector> E{v};
  for (int q = 1; q <= cap; ++q) {
    FockVector acc;
    for (int n = 1; n <= q; ++n) acc += apply_alpha(creation ? -n : n, E[q - n]);
    mpq_class scale = make_q(creation ? a : -a, q);
    E.push_back(acc.scaled(Scalar(VarSet::T, scale)));
  }
  return E;
}

}  // namespace

FockVector bosonized_mode(int a, int d, const FockVector& v, int degree_cap) {
  int need = bosonized_required_cap(a, d, v);
  if (degree_cap < need)
    throw GuardBandError("degree cap " + std::to_string(degree_cap) + " below required " + std::to_string(need));
  FockVector out;
  if (a == 0) {
    // Q^0 z^0 and empty exponentials
    return d == 0 ? v : out;
  }
  for (const auto& [p, c] : v.terms()) {
    FockVector one = FockVector::basis(p, c);
    auto lower = exponential_series(a, false, one, p.mu.size());
    for (int q = 0; q <= p.mu.size(); ++q) {
      int e = d - a * p.m + q;
      if (e < 0 || lower[q].zero()) continue;
      auto upper = exponential_series(a, true, lower[q], e);
      out += apply_Q(a, upper[e]);
    }
  }
  return out;
}

LaurentWindow supercommutator_window(int a, int b, const SymFunc& f, const SymFunc& g, const ChargedPartition& src,
                                     const ChargedPartition& tgt, const GridBounds& win, int guard_degree,
                                     NegativeChargeRule rule) {
  if (tgt.m - src.m != a + b) throw std::invalid_argument("charge difference must equal a + b");
  LaurentWindow grid({"z", "w"}, {{win.z_lo, win.z_hi}, {win.w_lo, win.w_hi}});
  const FockVector v = FockVector::basis(src);
  const int sign = (a * b) % 2 ? -1 : 1;
  auto guard = [&](int s) {
    if (s > guard_degree)
      throw GuardBandError("intermediate degree " + std::to_string(s) + " exceeds guard " +
                           std::to_string(guard_degree));
  };
  // Y(a,f,z) Y(b,g,w)
  for (int ew = win.w_lo; ew <= win.w_hi; ++ew) {
    int s = ew + src.mu.size() - src.m * b;
    if (s < 0) continue;
    guard(s);
    int ez = tgt.mu.size() - s + (src.m + b) * a;
    if (ez < win.z_lo || ez > win.z_hi) continue;
    FockVector mid = field_mode(b, g, ew, v, rule);
    Scalar c = field_mode(a, f, ez, mid, rule).coeff(tgt);
    grid.add({ez, ew}, c);
  }
  // Y(b,g,w) Y(a,f,z)
  for (int ez = win.z_lo; ez <= win.z_hi; ++ez) {
    int s = ez + src.mu.size() - src.m * a;
    if (s < 0) continue;
    guard(s);
    int ew = tgt.mu.size() - s + (src.m + a) * b;
    if (ew < win.w_lo || ew > win.w_hi) continue;
    FockVector mid = field_mode(a, f, ez, v, rule);
    Scalar c = field_mode(b, g, ew, mid, rule).coeff(tgt);
    grid.add({ez, ew}, sign > 0 ? -c : c);
  }
  return grid;
}

std::optional<int> annihilation_order(const LaurentWindow& grid, int K_max) {
  if (grid.vars().size() != 2) throw std::invalid_argument("annihilation_order needs a (z,w) grid");
  auto [z_lo, z_hi] = grid.bounds()[0];
  auto [w_lo, w_hi] = grid.bounds()[1];
  for (int K = 0; K <= K_max; ++K) {
    if (z_lo + K > z_hi || w_lo + K > w_hi) return std::nullopt;
    std::vector<mpz_class> binom(K + 1);
    for (int r = 0; r <= K; ++r) {
      mpz_class bc;
      mpz_bin_uiui(bc.get_mpz_t(), K, r);
      binom[r] = r % 2 ? mpz_class(-bc) : bc;
    }
    bool ok = true;
    for (int p = z_lo + K; p <= z_hi && ok; ++p)
      for (int q = w_lo + K; q <= w_hi && ok; ++q) {
        Scalar acc(VarSet::T);
        for (int r = 0; r <= K; ++r) {
          Scalar g = grid.get({p - K + r, q - r});
          if (!g.is_zero()) acc += g.scaled(mpq_class(binom[r]));
        }
        ok = acc.is_zero();
      }
    if (ok) return K;
  }
  return std::nullopt;
}

}  // namespace vertexloc
