#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vertexloc/scalar.hpp"

namespace vertexloc {

// finite grid of coefficients of a Laurent series in one or two variables
class LaurentWindow {
 public:
  using Exps = std::vector<int>;

  LaurentWindow() = default;
  LaurentWindow(std::vector<std::string> vars, std::vector<std::pair<int, int>> bounds);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::pair<int, int>>& bounds() const { return bounds_; }
  const std::map<Exps, Scalar>& coeffs() const { return coeffs_; }

  bool in_bounds(const Exps& e) const;
  void add(const Exps& e, const Scalar& c);  // throws outside the bounds
  Scalar get(const Exps& e) const;
  bool zero() const { return coeffs_.empty(); }

  // coefficients compared, bounds ignored
  bool operator==(const LaurentWindow& o) const;
  bool operator!=(const LaurentWindow& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::vector<std::pair<int, int>> bounds_;
  std::map<Exps, Scalar> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentWindow& w) { return os << w.str(); }

}  // namespace vertexloc
