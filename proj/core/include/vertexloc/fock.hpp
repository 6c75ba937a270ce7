#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vertexloc/partition.hpp"
#include "vertexloc/scalar.hpp"
#include "vertexloc/wedge.hpp"

namespace vertexloc {

// sparse combination of v_{mu,m} over Q(t)
class FockVector {
 public:
  FockVector() = default;
  static FockVector basis(const ChargedPartition& p, const Scalar& c = Scalar(VarSet::T, mpq_class(1)));

  const std::map<ChargedPartition, Scalar>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  Scalar coeff(const ChargedPartition& p) const;

  void add(const ChargedPartition& p, const Scalar& c);
  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector operator+(const FockVector& o) const { return FockVector(*this) += o; }
  FockVector operator-(const FockVector& o) const { return FockVector(*this) -= o; }
  FockVector scaled(const Scalar& c) const;
  bool operator==(const FockVector& o) const;
  bool operator!=(const FockVector& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<ChargedPartition, Scalar> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const FockVector& v) { return os << v.str(); }

// (v_mu, v_mu) = (-1)^|mu| t^{2|mu|} prod h^2
Scalar hook_norm(const Partition& mu);
Scalar hook_pairing(const FockVector& u, const FockVector& v);
// <u,v> with the conjugation t -> -t on the left argument
Scalar hermitian_pairing(const FockVector& u, const FockVector& v);
// e_{mu,m} = coeff * v_{mu,m}
Scalar e_normalize(const ChargedPartition& p);

FockVector apply_Q(int power, const FockVector& v);
FockVector apply_alpha(int n, const FockVector& v);
FockVector apply_virasoro(int n, const FockVector& v);
int virasoro_zero_eigenvalue(const ChargedPartition& p);

// Convention tying the oracle to the v-basis: oracle label (mu,m) is
// (-1)^|mu| e_{mu,m}, so v_mu = (-t)^|mu| H_mu * oracle(mu).
Scalar oracle_to_v(const Partition& mu);  // v-coefficient of one oracle vector
FockVector transport_oracle(const FockVector& v, const std::function<WedgeState<mpq_class>(const WedgeState<mpq_class>&)>& op);

struct GuardBandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TestWindow {
  int max_degree = 6;
  int min_charge = 0;
  int max_charge = 0;
  int guard_degree = 16;  // intermediate labels may not exceed this size
  std::vector<ChargedPartition> labels() const;
};

struct GradedOperator {
  std::string name;
  int charge_shift = 0;
  int max_raise = 0;  // |mu| may grow by at most this much
  std::function<FockVector(const ChargedPartition&)> rule;

  FockVector apply(const FockVector& v) const;
};

GradedOperator alpha_operator(int n);
GradedOperator virasoro_operator(int n);
GradedOperator identity_operator();

// sign -1: AB - BA, sign +1: AB + BA; tabulated on every label of the window
GradedOperator bracket(const GradedOperator& A, const GradedOperator& B, int sign, const TestWindow& w);

// labels of the window where A and B differ
std::vector<ChargedPartition> disagreement(const GradedOperator& A, const GradedOperator& B, const TestWindow& w);

}  // namespace vertexloc
