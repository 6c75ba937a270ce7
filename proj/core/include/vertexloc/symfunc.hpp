#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "vertexloc/partition.hpp"
#include "vertexloc/scalar.hpp"

namespace vertexloc {

// integer polynomial in e_1, e_2, ...; keys are e-monomials e_kappa, kappa descending
class SymFunc {
 public:
  SymFunc() = default;
  static SymFunc constant(long c);
  static SymFunc e(int k);
  static SymFunc parse(std::string_view text);

  const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }
  int degree() const;
  // number of factors when f is a single e-monomial, -1 otherwise
  int monomial_length() const;

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  void add(std::vector<int> kappa, const mpz_class& c);
  std::map<std::vector<int>, mpz_class> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }

// elementary symmetric polynomials of integer roots, e_0 .. e_max
std::vector<mpz_class> elementary(const WeightSet& roots, int max_degree);

// f at Chern roots k*t
Scalar chern_eval(const SymFunc& f, const WeightSet& roots);
// same at t = 1
mpz_class chern_eval_int(const SymFunc& f, const WeightSet& roots);

}  // namespace vertexloc
