#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vertexloc/laurent.hpp"
#include "vertexloc/partition.hpp"
#include "vertexloc/symfunc.hpp"

namespace vertexloc {

// weights -(N-1) .. -M; x^j has weight -j
struct CutoffConfig {
  int M = -1;
  int N = 1;

  void validate() const;
  int dim() const { return N - M; }
  WeightSet weights() const;  // descending
};

struct CutoffTooSmall : std::out_of_range {
  using std::out_of_range::out_of_range;
};

std::vector<WeightSet> enumerate_fixed_points(const CutoffConfig& cfg, int m);
// first m+N elements of S(p); throws CutoffTooSmall unless they represent p inside the window
WeightSet truncated_maya(const ChargedPartition& p, const CutoffConfig& cfg);
WeightSet complement(const CutoffConfig& cfg, const WeightSet& V);
bool is_subset(const WeightSet& U, const WeightSet& V);
WeightSet set_minus(const WeightSet& A, const WeightSet& B);
WeightSet set_union(const WeightSet& A, const WeightSet& B);
WeightSet set_intersection(const WeightSet& A, const WeightSet& B);
int weight_sum(const WeightSet& U);

// t^{|U||V|} prod (k' - k)
Scalar euler_hom(const WeightSet& U, const WeightSet& V);
mpz_class euler_hom_int(const WeightSet& U, const WeightSet& V);

struct FlagValue {
  Scalar value;
  int z_exponent = 0;
  bool operator==(const FlagValue& o) const {
    return value == o.value && (value.is_zero() || z_exponent == o.z_exponent);
  }
};

inline std::ostream& operator<<(std::ostream& os, const FlagValue& v) {
  return os << v.value.str() << " z^" << v.z_exponent;
}

FlagValue raw_flag_pairing(const CutoffConfig& cfg, const SymFunc& f, const WeightSet& U, const WeightSet& V);

Scalar norm_c(const Partition& mu, int m, int M);
Scalar norm_cprime(const Partition& nu, int n, int N);
Scalar norm_cdouble(int m, int n, int M, int N);

FlagValue normalized_flag_pairing(const CutoffConfig& cfg, const SymFunc& f, const ChargedPartition& p,
                                  const ChargedPartition& q);

struct StabilizationRow {
  int N, M;
  std::string value;
  bool stable;
};

struct Stabilization {
  std::vector<StabilizationRow> rows;
  std::optional<FlagValue> value;  // first value repeated at two consecutive cutoffs
  int threshold_N = -1;            // smallest N from which it holds
};

// M = -N, N from the first valid cutoff up to N_max
Stabilization stabilize(const SymFunc& f, const ChargedPartition& p, const ChargedPartition& q, int N_max);
std::string to_csv(const Stabilization& s);

// ---- locality lemma

using CharClass = std::function<Scalar(const WeightSet&)>;
CharClass chern_class(const SymFunc& f);
CharClass euler_class_against(const WeightSet& S);  // V -> alpha(V, S)

// sum over d-subsets V of Yperp of z^{sum V} c(V) / alpha(V, (X u Yperp) \ V)
LaurentWindow F_function(const WeightSet& Yperp, const WeightSet& X, const CharClass& c, int d);
LaurentWindow H_function(const WeightSet& Yperp, const WeightSet& X, const CharClass& c, int d);

struct FH {
  LaurentWindow F, H;
};
FH FH_eval(const WeightSet& Yperp, const WeightSet& X, const SymFunc& f, int d);

struct IdentityCheck {
  LaurentWindow lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

// H(Y,X,c_S,d) - H(Y\k, X+k, c_S, d) = (-1)^{d-1} alpha(k,S) z^k / alpha(k, X+Y\k) H(Y\k, X, c_{S+k}, d-1)
IdentityCheck fh_recursion(const WeightSet& Yperp, const WeightSet& X, const WeightSet& S, int d, int k);
// the sign arrangement without the correction
IdentityCheck fh_recursion_uncorrected(const WeightSet& Yperp, const WeightSet& X, const WeightSet& S, int d, int k);

// order of vanishing at z = 1 of a one-variable window (large when zero)
int vanishing_order_at_one(const LaurentWindow& F);

// pairing between fixed points of different Grassmannians, t = 1
std::optional<std::pair<mpq_class, int>> directed_pairing(const CutoffConfig& cfg, const SymFunc& f,
                                                          const WeightSet& U, int degU, const WeightSet& V,
                                                          int degV);

// fixed-point sum B for {Y(a,f,z), Y(b,g,w)} between U (charge l) and W (charge n), t = 1
LaurentWindow lemma_B(const CutoffConfig& cfg, const WeightSet& U, int l, const WeightSet& W, int n, int a,
                      const SymFunc& f, const SymFunc& g);
// min_j j(|Z| + j - 2d - len(kappa) - len(kappa')); nullopt when d <= 0
std::optional<int> lemma_bound(const CutoffConfig& cfg, const WeightSet& U, int l, const WeightSet& W, int a,
                               const SymFunc& f, const SymFunc& g);
// largest K with (z - sign*w)^K dividing the grid; -1 for the zero grid
int divisibility_order(const LaurentWindow& grid, int sign);

// both sides of the closed form for a = -1, f = g = 1, t = 1
IdentityCheck fermicom_B(const CutoffConfig& cfg, const WeightSet& U, const WeightSet& W);

// c_{mu,m,-N}/(t N)^{|mu|} and c'_{mu,m,N}/(t N)^{|mu|}
mpq_class normalization_ratio(const Partition& mu, int m, int N, bool prime);
struct Asymptotics {
  bool monotone = true;
  int first_N = 0;
  int violation_N = -1;
};
Asymptotics normalization_asymptotics(const Partition& mu, int m, bool prime, int N_max);

// sum over k of prod_{k' != k} (k' - k - n)/(k' - k), times k^power
mpq_class euler_characteristic_sum(const std::vector<int>& ks, int n, int power);

}  // namespace vertexloc
