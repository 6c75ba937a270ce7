#include "vertexloc/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vertexloc/cutoff.hpp"

namespace vertexloc {

using ojson = nlohmann::ordered_json;

namespace {

struct Defaults {
  int degree;
  std::pair<int, int> charges;
  int modes;
  int N_max;
  std::vector<int> a, b;
  std::vector<std::string> f, g;
  int samples;
};

const std::map<std::string, Defaults>& defaults() {
  static const std::map<std::string, Defaults> d = {
      {"clifford", {8, {-1, 1}, 5, 0, {}, {}, {}, {}, 0}},
      {"heisenberg", {10, {-2, 2}, 5, 0, {}, {}, {}, {}, 0}},
      {"bosonization", {6, {-1, 1}, 6, 0, {-2, -1, 1, 2}, {}, {}, {}, 0}},
      {"virasoro", {4, {-1, 1}, 3, 0, {-1, 1, 2}, {}, {}, {}, 0}},
      {"locality", {2, {-1, 1}, 6, 0, {1, -1}, {1, -1}, {"1", "e1", "e2"}, {"1", "e1", "e2"}, 0}},
      {"cutoff-converge", {5, {0, 0}, 0, 14, {0, 1, 2}, {}, {"1", "e1", "e2", "e1*e1"}, {}, 0}},
      {"lemma-FH", {4, {0, 0}, 0, 0, {}, {}, {}, {}, 300}},
      {"fermicom", {2, {0, 0}, 0, 3, {}, {}, {}, {}, 0}},
      {"hilbert-echar", {6, {0, 0}, 0, 0, {}, {}, {}, {}, 0}},
      {"hilbert-correspond", {6, {-1, 1}, 0, 0, {-2, -1, 0, 1, 2}, {}, {}, {}, 0}},
      {"euler-char", {7, {0, 0}, 6, 0, {}, {}, {}, {}, 100}},
      {"asymptotics", {4, {-1, 1}, 0, 50, {}, {}, {}, {}, 0}},
      {"oracle", {6, {-1, 1}, 5, 0, {}, {}, {}, {}, 0}},
  };
  return d;
}

ojson conventions(const SuiteConfig& cfg) {
  return {{"negative_charge_rule", to_string(cfg.neg_rule)},
          {"psi", "psi_j = wedge(-j), psi*_j = contract(j)"},
          {"oracle_basis", "(-1)^|mu| e_{mu,m}"},
          {"alpha", "alpha_n = sum_s wedge(s-n) contract(s), alpha_0 = m"},
          {"virasoro", "L_n = sum_s (s-n-1) wedge(s-n) contract(s), L_0 = |mu| + m(m-1)/2"},
          {"field_normalization", "Y v_mu = sum_nu W(mu,nu) / (v_nu,v_nu) v_nu"},
          {"whooks_prefactor", to_string(cfg.prefactor)},
          {"bracket", "sign -1 commutator, sign +1 anticommutator"}};
}

ojson config_json(const SuiteConfig& c) {
  ojson j;
  j["suite"] = c.suite;
  j["degree"] = *c.degree;
  j["charges"] = {c.charges->first, c.charges->second};
  j["modes"] = *c.modes;
  j["N_max"] = *c.N_max;
  j["a"] = *c.a;
  j["b"] = *c.b;
  j["f"] = *c.f;
  j["g"] = *c.g;
  j["seed"] = c.seed;
  j["samples"] = *c.samples;
  return j;
}

// collects cases and the pass flag
struct Collector {
  ojson cases = ojson::array();
  ojson observations = ojson::object();
  long failed = 0;

  void add(ojson c, bool pass) {
    c["pass"] = pass;
    if (!pass) ++failed;
    cases.push_back(std::move(c));
  }
};

std::vector<ChargedPartition> labels(const SuiteConfig& c) {
  return TestWindow{*c.degree, c.charges->first, c.charges->second, 0}.labels();
}

SymFunc sym(const std::string& s) { return SymFunc::parse(s); }

// identity of two operators checked label by label
void operator_case(Collector& col, ojson inputs, const std::vector<ChargedPartition>& ls,
                   const std::function<std::pair<FockVector, FockVector>(const ChargedPartition&)>& sides) {
  ojson bad = ojson::array();
  std::optional<ojson> sample;
  for (const auto& p : ls) {
    auto [lhs, rhs] = sides(p);
    bool ok = lhs == rhs;
    if (!ok && bad.size() < 3) bad.push_back({{"label", p.str()}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
    if (!sample && !lhs.zero()) sample = ojson{{"label", p.str()}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
    if (!ok && bad.size() == 3) break;
  }
  inputs["labels"] = ls.size();
  if (!sample && !ls.empty()) sample = ojson{{"label", ls.front().str()}, {"lhs", "0"}, {"rhs", "0"}};
  if (sample) inputs["sample"] = *sample;
  bool pass = bad.empty();
  if (!pass) inputs["mismatches"] = bad;
  col.add(std::move(inputs), pass);
}

FockVector delta_id(bool on, const ChargedPartition& p) { return on ? FockVector::basis(p) : FockVector(); }

void suite_clifford(const SuiteConfig& c, Collector& col) {
  auto ls = labels(c);
  const int J = *c.modes;
  auto psi = [&](int j, const FockVector& v) { return psi_mode(j, v, c.neg_rule); };
  auto psis = [&](int j, const FockVector& v) { return psi_star_mode(j, v, c.neg_rule); };
  for (int i = -J; i <= J; ++i)
    for (int j = -J; j <= J; ++j) {
      operator_case(col, {{"bracket", "{psi_i,psi*_j}"}, {"i", i}, {"j", j}}, ls, [&](const ChargedPartition& p) {
        FockVector v = FockVector::basis(p);
        return std::make_pair(psi(i, psis(j, v)) + psis(j, psi(i, v)), delta_id(i + j == 0, p));
      });
      if (i > j) continue;
      operator_case(col, {{"bracket", "{psi_i,psi_j}"}, {"i", i}, {"j", j}}, ls, [&](const ChargedPartition& p) {
        FockVector v = FockVector::basis(p);
        return std::make_pair(psi(i, psi(j, v)) + psi(j, psi(i, v)), FockVector());
      });
      operator_case(col, {{"bracket", "{psi*_i,psi*_j}"}, {"i", i}, {"j", j}}, ls, [&](const ChargedPartition& p) {
        FockVector v = FockVector::basis(p);
        return std::make_pair(psis(i, psis(j, v)) + psis(j, psis(i, v)), FockVector());
      });
    }
}

void suite_heisenberg(const SuiteConfig& c, Collector& col) {
  const int J = *c.modes;
  TestWindow w{*c.degree, c.charges->first, c.charges->second, *c.degree + 2 * J};
  auto ls = w.labels();
  for (int i = -J; i <= J; ++i)
    for (int j = -J; j <= J; ++j) {
      GradedOperator br = bracket(alpha_operator(i), alpha_operator(j), -1, w);
      operator_case(col, {{"bracket", "[alpha_i,alpha_j]"}, {"i", i}, {"j", j}}, ls, [&](const ChargedPartition& p) {
        FockVector rhs = i + j == 0 ? FockVector::basis(p, Scalar(VarSet::T, mpq_class(i))) : FockVector();
        return std::make_pair(br.rule(p), rhs);
      });
    }
  operator_case(col, {{"operator", "alpha_0"}}, ls, [&](const ChargedPartition& p) {
    return std::make_pair(apply_alpha(0, FockVector::basis(p)), FockVector::basis(p, Scalar(VarSet::T, mpq_class(p.m))));
  });
}

void suite_bosonization(const SuiteConfig& c, Collector& col) {
  auto ls = labels(c);
  const SymFunc one = SymFunc::constant(1);
  for (int a : *c.a)
    for (int d = -*c.modes; d <= *c.modes; ++d)
      operator_case(col, {{"a", a}, {"d", d}}, ls, [&](const ChargedPartition& p) {
        FockVector v = FockVector::basis(p);
        return std::make_pair(field_mode(a, one, d, v, c.neg_rule),
                              bosonized_mode(a, d, v, bosonized_required_cap(a, d, v)));
      });
}

void suite_virasoro(const SuiteConfig& c, Collector& col) {
  auto ls = labels(c);
  const SymFunc one = SymFunc::constant(1);
  for (int a : *c.a) {
    const int h2 = a * (a - 1);  // twice the weight
    for (int n = -2; n <= 2; ++n)
      for (int e = -*c.modes; e <= *c.modes; ++e)
        operator_case(col, {{"identity", "[L_n,Y_e]"}, {"a", a}, {"n", n}, {"e", e}}, ls,
                      [&](const ChargedPartition& p) {
                        FockVector v = FockVector::basis(p);
                        FockVector lhs = apply_virasoro(n, field_mode(a, one, e, v, c.neg_rule)) -
                                         field_mode(a, one, e, apply_virasoro(n, v), c.neg_rule);
                        mpq_class k = mpq_class(e - n) + make_q(h2 * (n + 1), 2);
                        return std::make_pair(lhs, field_mode(a, one, e - n, v, c.neg_rule).scaled(Scalar(VarSet::T, k)));
                      });
    for (int e = -*c.modes; e <= *c.modes; ++e)
      operator_case(col, {{"identity", "[T,Y_e]"}, {"a", a}, {"e", e}}, ls, [&](const ChargedPartition& p) {
        FockVector v = FockVector::basis(p);
        FockVector lhs = apply_virasoro(-1, field_mode(a, one, e, v, c.neg_rule)) -
                         field_mode(a, one, e, apply_virasoro(-1, v), c.neg_rule);
        return std::make_pair(lhs, field_mode(a, one, e + 1, v, c.neg_rule).scaled(Scalar(VarSet::T, mpq_class(e + 1))));
      });
  }
  ChargedPartition vac{Partition(), 0};
  for (int n = 1; n <= 3; ++n) {
    FockVector v = FockVector::basis(vac);
    FockVector br = apply_virasoro(n, apply_virasoro(-n, v)) - apply_virasoro(-n, apply_virasoro(n, v));
    col.observations["[L_" + std::to_string(n) + ",L_-" + std::to_string(n) + "] v(;0)"] = br.str();
  }
}

void suite_locality(const SuiteConfig& c, Collector& col) {
  const int W = *c.modes;
  GridBounds win{-W, W, -W, W};
  auto srcs = labels(c);
  auto parts = enumerate_partitions(*c.degree);
  for (int a : *c.a)
    for (int b : *c.b)
      for (const auto& fs : *c.f)
        for (const auto& gs : *c.g) {
          SymFunc f = sym(fs), g = sym(gs);
          ojson in{{"a", a}, {"b", b}, {"f", f.str()}, {"g", g.str()}};
          long pairs = 0, nonzero = 0;
          int Kmax = 0;
          bool finite = true;
          std::optional<ojson> sample, bad;
          for (const auto& p : srcs)
            for (const auto& nu : parts) {
              ChargedPartition q{nu, p.m + a + b};
              LaurentWindow grid = supercommutator_window(a, b, f, g, p, q, win, 2 * W + 2 * *c.degree + 4, c.neg_rule);
              ++pairs;
              if (!grid.zero()) ++nonzero;
              if (a * b > 0) {
                if (!grid.zero() && !bad) bad = ojson{{"src", p.str()}, {"tgt", q.str()}, {"grid", grid.str()}};
                continue;
              }
              auto K = annihilation_order(grid, 2 * W);
              if (!K) {
                finite = false;
                if (!bad) bad = ojson{{"src", p.str()}, {"tgt", q.str()}, {"grid", grid.str()}};
                continue;
              }
              if (*K > Kmax || (!sample && !grid.zero())) {
                Kmax = std::max(Kmax, *K);
                sample = ojson{{"src", p.str()}, {"tgt", q.str()}, {"K", *K}, {"grid", grid.str()}};
              }
            }
          in["pairs"] = pairs;
          in["nonzero_grids"] = nonzero;
          bool pass;
          if (a * b > 0) {
            in["expected"] = "0";
            pass = !bad;
          } else {
            in["K"] = finite ? ojson(Kmax) : ojson(nullptr);
            bool unit = f == SymFunc::constant(1) && g == SymFunc::constant(1) && std::abs(a) == 1 && std::abs(b) == 1;
            if (unit) in["expected_K"] = 1;
            pass = finite && (!unit || Kmax == 1);
          }
          if (sample) in["sample"] = *sample;
          if (bad) in["mismatch"] = *bad;
          col.add(std::move(in), pass);
        }
}

std::string flag_text(const std::optional<FlagValue>& v) {
  if (!v || v->value.is_zero()) return "0";
  return v->value.str() + " z^" + std::to_string(v->z_exponent);
}

void suite_cutoff(const SuiteConfig& c, Collector& col) {
  auto parts = enumerate_partitions(*c.degree);
  long exact_at_first = 0, total = 0;
  for (int a : *c.a)
    for (const auto& fs : *c.f) {
      SymFunc f = sym(fs);
      for (int m = c.charges->first; m <= c.charges->second; ++m)
        for (const auto& mu : parts)
          for (const auto& nu : parts) {
            ChargedPartition p{mu, m}, q{nu, m + a};
            Stabilization st = stabilize(f, p, q, *c.N_max);
            auto w = matrix_element_W(a, f, p, q, c.neg_rule);
            std::optional<FlagValue> expect;
            // the pairing carries z^k; the field mode drops z^{a(a+1)/2}
            if (w) expect = FlagValue{w->coeff, w->z_exponent + a * (a + 1) / 2};
            bool pass = st.value.has_value() &&
                        (expect ? *st.value == *expect : st.value->value.is_zero());
            ojson in{{"a", a}, {"f", f.str()}, {"src", p.str()}, {"tgt", q.str()}, {"N0", st.threshold_N},
                     {"stable", flag_text(st.value)}, {"W", flag_text(expect)}};
            if (a == 0 && f == SymFunc::constant(1) && mu == nu) {
              Scalar hn = hook_norm(mu);
              in["hook_norm"] = hn.str();
              pass = pass && st.value && st.value->value == hn;
            }
            ++total;
            if (st.rows.size() == 2 && st.rows[1].stable) ++exact_at_first;
            col.add(std::move(in), pass);
          }
    }
  col.observations["stable_from_first_valid_cutoff"] = std::to_string(exact_at_first) + "/" + std::to_string(total);
}

// random distinct integers from [lo, hi], descending
WeightSet random_set(std::mt19937_64& rng, int size, int lo, int hi) {
  std::set<int> s;
  while (static_cast<int>(s.size()) < size) s.insert(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)));
  return WeightSet(s.rbegin(), s.rend());
}

int rand_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string set_text(const WeightSet& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

void suite_fh(const SuiteConfig& c, Collector& col) {
  std::mt19937_64 rng(c.seed);
  long literal_fail = 0;
  for (int trial = 0; trial < *c.samples; ++trial) {
    int pool_size = rand_in(rng, 2, 8);
    WeightSet pool = random_set(rng, pool_size, -6, 6);
    std::shuffle(pool.begin(), pool.end(), rng);
    int ny = rand_in(rng, 1, std::min(*c.degree, pool_size - 1));
    WeightSet Y(pool.begin(), pool.begin() + ny), rest(pool.begin() + ny, pool.end());
    int nx = rand_in(rng, 0, static_cast<int>(rest.size()));
    WeightSet X(rest.begin(), rest.begin() + nx), S(rest.begin() + nx, rest.end());
    for (auto* s : {&Y, &X, &S}) std::sort(s->rbegin(), s->rend());
    int d = rand_in(rng, 1, ny);
    int k = Y[rand_in(rng, 0, ny - 1)];
    IdentityCheck chk = fh_recursion(Y, X, S, d, k);
    if (!fh_recursion_uncorrected(Y, X, S, d, k).holds()) ++literal_fail;
    col.add({{"Yperp", set_text(Y)}, {"X", set_text(X)}, {"S", set_text(S)}, {"d", d}, {"k", k},
             {"lhs", chk.lhs.str()}, {"rhs", chk.rhs.str()}},
            chk.holds());
  }
  col.observations["literal_sign_arrangement_failures"] = literal_fail;
}

void for_each_subset(const WeightSet& pool, std::size_t size, const std::function<void(const WeightSet&)>& fn) {
  if (size > pool.size()) return;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
  do {
    WeightSet s;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) s.push_back(pool[i]);
    fn(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

void suite_fermicom(const SuiteConfig& c, Collector& col) {
  for (int N = 1; N <= *c.N_max; ++N)
    for (int M = -N; M <= -1; ++M) {
      CutoffConfig cfg{M, N};
      WeightSet win = cfg.weights();
      for (int wsize = 0; wsize <= cfg.dim(); ++wsize)
        for_each_subset(win, wsize, [&](const WeightSet& W) {
          for (int gap = 0; gap <= std::min(*c.degree, wsize); ++gap)
            for_each_subset(W, wsize - gap, [&](const WeightSet& U) {
              IdentityCheck chk = fermicom_B(cfg, U, W);
              col.add({{"M", M}, {"N", N}, {"U", set_text(U)}, {"W", set_text(W)}, {"lhs", chk.lhs.str()},
                       {"rhs", chk.rhs.str()}},
                      chk.holds());
            });
        });
    }
}

void suite_echar(const SuiteConfig& c, Collector& col) {
  auto parts = enumerate_partitions(*c.degree);
  for (const auto& mu : parts)
    for (const auto& nu : parts) {
      BiCharacter e = eclass_character(mu, nu);
      BiCharacter s = series_oracle(mu, nu);
      col.add({{"mu", mu.str()}, {"nu", nu.str()}, {"eclass", e.str()}, {"series", s.str()}}, e == s);
    }
  Partition one({1});
  BiCharacter s = series_oracle(one, one);
  BiCharacter expect({0, 0}, {1, 1});
  expect.add({1, 0}, 1);
  expect.add({0, 1}, 1);
  col.add({{"mu", "1"}, {"nu", "1"}, {"series", s.str()}, {"expected", expect.str()}}, s == expect);
}

void suite_correspond(const SuiteConfig& c, Collector& col) {
  auto other = c.prefactor == WhooksPrefactor::kOne ? WhooksPrefactor::kTPower : WhooksPrefactor::kOne;
  long other_fail = 0;
  for (int a : *c.a)
    for (int m = c.charges->first; m <= c.charges->second; ++m) {
      CorrespondenceReport rep = correspondence_check(a, m, *c.degree, c.prefactor);
      for (const auto& cs : rep.cases)
        col.add({{"a", a}, {"m", m}, {"mu", cs.mu.str()}, {"nu", cs.nu.str()}, {"hilbert", cs.hilbert},
                 {"vertex", cs.vertex}, {"hilbert_z", cs.hilbert_z}, {"vertex_z", cs.vertex_z}},
                cs.pass);
      for (const auto& cs : correspondence_check(a, m, *c.degree, other).cases)
        if (!cs.pass) ++other_fail;
    }
  col.observations["prefactor_" + to_string(other) + "_failures"] = other_fail;
}

void suite_euler(const SuiteConfig& c, Collector& col) {
  std::mt19937_64 rng(c.seed);
  for (int trial = 0; trial < *c.samples; ++trial) {
    int size = rand_in(rng, 1, *c.degree);
    WeightSet ks = random_set(rng, size, -12, 12);
    int n = rand_in(rng, -*c.modes, *c.modes);
    mpq_class chi = euler_characteristic_sum(ks, n, 0);
    mpq_class c1 = euler_characteristic_sum(ks, n, 1);
    mpq_class expect = std::accumulate(ks.begin(), ks.end(), 0) + make_q(size * (size - 1) * n, 2);
    col.add({{"weights", set_text(ks)}, {"n", n}, {"chi", chi.get_str()}, {"expected_chi", size},
             {"c1", c1.get_str()}, {"expected_c1", expect.get_str()}},
            chi == size && c1 == expect);
  }
}

void suite_asymptotics(const SuiteConfig& c, Collector& col) {
  for (const auto& mu : enumerate_partitions(*c.degree))
    for (int m = c.charges->first; m <= c.charges->second; ++m)
      for (bool prime : {false, true}) {
        Asymptotics as = normalization_asymptotics(mu, m, prime, *c.N_max);
        mpq_class last = normalization_ratio(mu, m, *c.N_max, prime);
        col.add({{"mu", mu.str()}, {"m", m}, {"constant", prime ? "c'" : "c"}, {"first_N", as.first_N},
                 {"ratio_at_N_max", last.get_str()}, {"violation_N", as.violation_N}},
                as.monotone);
      }
}

void suite_oracle(const SuiteConfig& c, Collector& col) {
  auto ls = labels(c);
  for (bool star : {false, true})
    for (int j = -*c.modes; j <= *c.modes; ++j) {
      ojson bad = ojson::array();
      for (const auto& p : ls) {
        FockVector v = FockVector::basis(p);
        FockVector img = star ? psi_star_mode(j, v, c.neg_rule) : psi_mode(j, v, c.neg_rule);
        WedgeState<Gaussian> got;
        for (const auto& [q, coeff] : img.terms()) {
          GScalar g = at_imaginary_unit(coeff * oracle_to_v(q.mu) / oracle_to_v(p.mu));
          if (!g.is_constant()) throw std::logic_error("non-constant oracle coefficient");
          got.emplace(q, g.num().constant_term() / g.den().constant_term());
        }
        WedgeState<Gaussian> src{{p, Gaussian(1)}};
        WedgeState<Gaussian> want = star ? contract(j, src) : wedge(-j, src);
        if (got != want && bad.size() < 3) bad.push_back({{"label", p.str()}, {"mode", img.str()}});
      }
      ojson in{{"mode", star ? "psi*" : "psi"}, {"j", j}, {"labels", ls.size()},
               {"oracle", star ? "contract(j)" : "wedge(-j)"}};
      bool pass = bad.empty();
      if (!pass) in["mismatches"] = bad;
      col.add(std::move(in), pass);
    }
}

const std::map<std::string, std::function<void(const SuiteConfig&, Collector&)>>& runners() {
  static const std::map<std::string, std::function<void(const SuiteConfig&, Collector&)>> r = {
      {"clifford", suite_clifford},     {"heisenberg", suite_heisenberg},
      {"bosonization", suite_bosonization}, {"virasoro", suite_virasoro},
      {"locality", suite_locality},     {"cutoff-converge", suite_cutoff},
      {"lemma-FH", suite_fh},           {"fermicom", suite_fermicom},
      {"hilbert-echar", suite_echar},   {"hilbert-correspond", suite_correspond},
      {"euler-char", suite_euler},      {"asymptotics", suite_asymptotics},
      {"oracle", suite_oracle},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, _] : defaults()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteConfig resolve(const SuiteConfig& cfg) {
  auto it = defaults().find(cfg.suite);
  if (it == defaults().end()) throw std::invalid_argument("unknown suite '" + cfg.suite + "'");
  const Defaults& d = it->second;
  SuiteConfig r = cfg;
  if (!r.degree) r.degree = d.degree;
  if (!r.charges) r.charges = d.charges;
  if (!r.modes) r.modes = d.modes;
  if (!r.N_max) r.N_max = d.N_max;
  if (!r.a) r.a = d.a;
  if (!r.b) r.b = d.b;
  if (!r.f) r.f = d.f;
  if (!r.g) r.g = d.g;
  if (!r.samples) r.samples = d.samples;
  if (*r.degree < 0 || *r.modes < 0 || *r.N_max < 0 || *r.samples < 0) throw std::invalid_argument("caps must be >= 0");
  if (r.charges->first > r.charges->second) throw std::invalid_argument("empty charge range");
  auto need = [](bool empty, bool want, const char* what) {
    if (want && empty) throw std::invalid_argument(std::string("empty ") + what + " list");
  };
  need(r.a->empty(), !d.a.empty(), "a");
  need(r.b->empty(), !d.b.empty(), "b");
  need(r.f->empty(), !d.f.empty(), "f");
  need(r.g->empty(), !d.g.empty(), "g");
  for (const auto& s : *r.f) SymFunc::parse(s);
  for (const auto& s : *r.g) SymFunc::parse(s);
  if (r.suite == "lemma-FH" && *r.degree < 1) throw std::invalid_argument("lemma-FH needs degree >= 1");
  if (r.suite == "euler-char" && *r.degree < 1) throw std::invalid_argument("euler-char needs degree >= 1");
  return r;
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteConfig c = resolve(cfg);
  auto start = std::chrono::steady_clock::now();
  Collector col;
  runners().at(c.suite)(c, col);
  SuiteResult res;
  res.pass = col.failed == 0;
  ojson& r = res.report;
  r["schema"] = kReportSchema;
  r["suite"] = c.suite;
  r["config"] = config_json(c);
  r["conventions"] = conventions(c);
  r["summary"] = {{"cases", col.cases.size()}, {"failed", col.failed}, {"pass", res.pass}, {"exit_status", res.exit_code()}};
  if (!col.observations.empty()) r["observations"] = col.observations;
  if (c.timing)
    r["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  r["cases"] = std::move(col.cases);
  return res;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) {
    if (ch == '"') r += '"';
    r += ch;
  }
  return r + "\"";
}

std::string render(const ojson& doc, const std::vector<std::string>& columns, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format != "csv") throw std::invalid_argument("format must be json or csv");
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : doc["rows"]) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto& v = row[columns[i]];
      os << (i ? "," : "") << csv_field(v.is_string() ? v.get<std::string>() : v.dump());
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_matrix(const MatrixRequest& req, const std::string& format) {
  ojson doc;
  doc["schema"] = kReportSchema;
  doc["kind"] = std::string(1, req.kind);
  ojson rows = ojson::array();
  std::vector<std::string> cols;
  if (req.kind == 'Y') {
    SymFunc f = SymFunc::parse(req.f);
    doc["params"] = {{"a", req.a}, {"f", f.str()}, {"src", req.src.str()}, {"cap", req.cap},
                     {"negative_charge_rule", to_string(req.neg_rule)}};
    for (const auto& nu : enumerate_partitions(req.cap)) {
      ChargedPartition q{nu, req.src.m + req.a};
      auto w = matrix_element_W(req.a, f, req.src, q, req.neg_rule);
      if (!w) continue;
      rows.push_back({{"src", req.src.str()}, {"tgt", q.str()}, {"z_exponent", w->z_exponent},
                      {"pairing", w->coeff.str()}, {"coefficient", (w->coeff / hook_norm(nu)).str()}});
    }
    cols = {"src", "tgt", "z_exponent", "pairing", "coefficient"};
  } else if (req.kind == 'W') {
    doc["params"] = {{"mu", req.src.mu.str()}, {"cap", req.cap}};
    for (const auto& nu : enumerate_partitions(req.cap)) {
      HilbElement h = whooks_element(req.src.mu, nu);
      if (h.coeff.is_zero()) continue;
      rows.push_back({{"mu", req.src.mu.str()}, {"nu", nu.str()}, {"z_exponent", h.z_exponent},
                      {"coefficient", h.coeff.str()}});
    }
    cols = {"mu", "nu", "z_exponent", "coefficient"};
  } else {
    throw std::invalid_argument("matrix kind must be Y or W");
  }
  doc["rows"] = std::move(rows);
  return render(doc, cols, format);
}

std::string emit_stabilization(const std::string& fs, const ChargedPartition& p, const ChargedPartition& q, int N_max,
                               const std::string& format) {
  SymFunc f = SymFunc::parse(fs);
  Stabilization st = stabilize(f, p, q, N_max);
  ojson doc;
  doc["schema"] = kReportSchema;
  doc["params"] = {{"f", f.str()}, {"src", p.str()}, {"tgt", q.str()}, {"N_max", N_max}};
  doc["stable"] = flag_text(st.value);
  doc["threshold_N"] = st.threshold_N;
  ojson rows = ojson::array();
  for (const auto& r : st.rows) rows.push_back({{"N", r.N}, {"M", r.M}, {"value", r.value}, {"stable", r.stable}});
  doc["rows"] = std::move(rows);
  return render(doc, {"N", "M", "value", "stable"}, format);
}

}  // namespace vertexloc
