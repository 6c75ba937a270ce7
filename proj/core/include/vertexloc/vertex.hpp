#pragma once

#include <optional>
#include <string>

#include "vertexloc/fock.hpp"
#include "vertexloc/laurent.hpp"
#include "vertexloc/symfunc.hpp"

namespace vertexloc {

// a < 0 readings of the sign rule. kReflect is the one the Clifford and
// bosonization identities accept; kPlain is kept as a negative control.
enum class NegativeChargeRule { kReflect, kPlain };

std::string to_string(NegativeChargeRule r);

struct VertexElement {
  ChargedPartition src, tgt;
  int z_exponent = 0;
  Scalar coeff;
};

// (Y(a,f,z) v_src, v_tgt); nullopt when the element vanishes
std::optional<VertexElement> matrix_element_W(int a, const SymFunc& f, const ChargedPartition& src,
                                              const ChargedPartition& tgt,
                                              NegativeChargeRule rule = NegativeChargeRule::kReflect);

// coefficient of z^d in Y(a,f,z) v
FockVector field_mode(int a, const SymFunc& f, int d, const FockVector& v,
                      NegativeChargeRule rule = NegativeChargeRule::kReflect);

// psi(z) = sum psi_j z^{-j-1}, psi*(z) = sum psi*_j z^{-j}
FockVector psi_mode(int j, const FockVector& v, NegativeChargeRule rule = NegativeChargeRule::kReflect);
FockVector psi_star_mode(int j, const FockVector& v, NegativeChargeRule rule = NegativeChargeRule::kReflect);

// smallest exponential truncation that reproduces the z^d coefficient on v
int bosonized_required_cap(int a, int d, const FockVector& v);
FockVector bosonized_mode(int a, int d, const FockVector& v, int degree_cap);

struct GridBounds {
  int z_lo, z_hi, w_lo, w_hi;
};

// coefficient of v_tgt in {Y(a,f,z), Y(b,g,w)} v_src on the window
LaurentWindow supercommutator_window(int a, int b, const SymFunc& f, const SymFunc& g, const ChargedPartition& src,
                                     const ChargedPartition& tgt, const GridBounds& window, int guard_degree = 20,
                                     NegativeChargeRule rule = NegativeChargeRule::kReflect);

// least K <= K_max with (z-w)^K grid = 0 on the interior sub-window
std::optional<int> annihilation_order(const LaurentWindow& grid, int K_max);

}  // namespace vertexloc
