#include "vertexloc/hilbert.hpp"

#include <algorithm>

namespace vertexloc {

void BiCharacter::add(Exp e, long c) {
  if (!in_box(e) || c == 0) return;
  long& slot = c_[e];
  slot += c;
  if (slot == 0) c_.erase(e);
}

long BiCharacter::get(Exp e) const {
  auto it = c_.find(e);
  return it == c_.end() ? 0 : it->second;
}

BiCharacter BiCharacter::restricted(Exp lo, Exp hi) const {
  BiCharacter r(lo, hi);
  for (const auto& [e, c] : c_) r.add(e, c);
  return r;
}

std::string BiCharacter::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : c_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*z1^" + std::to_string(e.first) + "*z2^" + std::to_string(e.second);
  }
  return s;
}

BiCharacter ideal_character(const Partition& mu, int depth) {
  if (depth < std::max(mu.part(1), mu.length()) + 1) throw std::invalid_argument("truncation box too small");
  BiCharacter ch({1 - depth, 1 - depth}, {0, 0});
  for (int i = 1; i <= depth; ++i)
    for (int j = 1; j <= depth; ++j)
      if (!mu.contains_box(i, j)) ch.add({1 - j, 1 - i}, 1);
  return ch;
}

BiCharacter eclass_character(const Partition& mu, const Partition& nu, BiCharacter::Exp L) {
  const int big = 1 << 20;
  BiCharacter ch({-big, -big}, {big, big});
  for (Box b : boxes(mu)) ch.add({arm(mu, b) + 1 + L.first, -leg(nu, b) + L.second}, 1);
  for (Box b : boxes(nu)) ch.add({-arm(nu, b) + L.first, leg(mu, b) + 1 + L.second}, 1);
  return ch;
}

namespace {

// P = (1 - z1)(1 - z2) conj(ch H0(I_mu)) on [0,B]^2, then P ch H0(I_nu) on [-R,B]^2
BiCharacter chi_product(const Partition& mu, const Partition& nu, int B, int R) {
  BiCharacter conj_ch({0, 0}, {B, B});
  for (int i = 1; i <= B + 1; ++i)
    for (int j = 1; j <= B + 1; ++j)
      if (!mu.contains_box(i, j)) conj_ch.add({j - 1, i - 1}, 1);
  BiCharacter step({0, 0}, {B, B});
  for (const auto& [e, c] : conj_ch.coeffs()) {
    step.add(e, c);
    step.add({e.first + 1, e.second}, -c);
  }
  BiCharacter P({0, 0}, {B, B});
  for (const auto& [e, c] : step.coeffs()) {
    P.add(e, c);
    P.add({e.first, e.second + 1}, -c);
  }
  BiCharacter ch = ideal_character(nu, R + B + 1);
  BiCharacter out({-R, -R}, {B, B});
  for (int x = -R; x <= B; ++x)
    for (int y = -R; y <= B; ++y) {
      long acc = 0;
      for (const auto& [p, c] : P.coeffs()) acc += c * ch.get({x - p.first, y - p.second});
      out.add({x, y}, acc);
    }
  return out;
}

}  // namespace

BiCharacter series_oracle(const Partition& mu, const Partition& nu, BiCharacter::Exp L, int margin) {
  int B = margin >= 0 ? margin : mu.size() + nu.size() + 2;
  B = std::max(B, std::max({mu.part(1), mu.length(), nu.part(1), nu.length()}) + 1);
  BiCharacter oo = chi_product(Partition(), Partition(), B, B);
  BiCharacter ii = chi_product(mu, nu, B, B);
  BiCharacter out({-B + L.first, -B + L.second}, {B + L.first, B + L.second});
  for (const auto& [e, c] : oo.coeffs()) out.add({e.first + L.first, e.second + L.second}, c);
  for (const auto& [e, c] : ii.coeffs()) out.add({e.first + L.first, e.second + L.second}, -c);
  return out;
}

std::string to_string(WhooksPrefactor p) { return p == WhooksPrefactor::kOne ? "1" : "t^(|mu|+|nu|)"; }

HilbElement whooks_element(const Partition& mu, const Partition& nu, WhooksPrefactor prefactor) {
  using P = Poly<mpq_class>;
  P acc = P::constant(1);
  auto linear = [](int c1, int t1, int t2) {
    return P::from_terms({{Mono{0, 0, 1}, mpq_class(c1)}, {Mono{1, 0, 0}, mpq_class(t1)}, {Mono{0, 1, 0}, mpq_class(t2)}});
  };
  for (Box b : boxes(mu)) acc = acc * linear(1, arm(mu, b) + 1, -leg(nu, b));
  for (Box b : boxes(nu)) acc = acc * linear(1, -arm(nu, b), leg(mu, b) + 1);
  return {mu, nu, nu.size() - mu.size(), Scalar(VarSet::THilb, acc, P::constant(1)), prefactor};
}

SpecializedElement specialize_element(const HilbElement& h, int a) {
  Scalar t = Scalar::variable(VarSet::T, "t");
  Scalar v = specialize(h.coeff, VarSet::T, {{"t1", t}, {"t2", -t}, {"c1", t.scaled(mpq_class(a))}});
  if (h.prefactor == WhooksPrefactor::kTPower) v *= Scalar::t_power(mpq_class(1), h.mu.size() + h.nu.size());
  return {v, h.z_exponent};
}

CorrespondenceReport correspondence_check(int a, int m, int degree_cap, WhooksPrefactor prefactor) {
  CorrespondenceReport rep{prefactor, {}, true};
  const SymFunc one = SymFunc::constant(1);
  auto parts = enumerate_partitions(degree_cap);
  for (const auto& mu : parts)
    for (const auto& nu : parts) {
      CorrespondenceCase cs{mu, nu, a, m, "", "", 0, 0, false};
      auto h = specialize_element(whooks_element(mu, nu, prefactor), a);
      auto w = matrix_element_W(a, one, {mu.transpose(), m}, {nu.transpose(), m + a});
      Scalar wv = w ? w->coeff : Scalar(VarSet::T);
      cs.hilbert = h.coeff.str();
      cs.vertex = wv.str();
      cs.hilbert_z = h.z_exponent;
      cs.vertex_z = w ? w->z_exponent - m * a : h.z_exponent;
      cs.pass = h.coeff == wv && (wv.is_zero() || cs.hilbert_z == cs.vertex_z);
      rep.all_pass = rep.all_pass && cs.pass;
      rep.cases.push_back(std::move(cs));
    }
  return rep;
}

}  // namespace vertexloc
