#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vertexloc/partition.hpp"
#include "vertexloc/scalar.hpp"
#include "vertexloc/vertex.hpp"

namespace vertexloc {

// truncated Laurent series in z1, z2 with integer coefficients
class BiCharacter {
 public:
  using Exp = std::pair<int, int>;

  BiCharacter() = default;
  BiCharacter(Exp lo, Exp hi) : lo_(lo), hi_(hi) {}

  Exp lo() const { return lo_; }
  Exp hi() const { return hi_; }
  bool in_box(Exp e) const {
    return e.first >= lo_.first && e.first <= hi_.first && e.second >= lo_.second && e.second <= hi_.second;
  }
  void add(Exp e, long c);  // dropped outside the box
  long get(Exp e) const;
  const std::map<Exp, long>& coeffs() const { return c_; }
  std::size_t terms() const { return c_.size(); }
  // coefficients inside the given box only
  BiCharacter restricted(Exp lo, Exp hi) const;
  bool operator==(const BiCharacter& o) const { return c_ == o.c_; }
  std::string str() const;

 private:
  Exp lo_{0, 0}, hi_{0, 0};
  std::map<Exp, long> c_;
};

inline std::ostream& operator<<(std::ostream& os, const BiCharacter& c) { return os << c.str(); }

// sum over boxes (i,j) not in mu, i,j <= depth, of z1^{1-j} z2^{1-i}
BiCharacter ideal_character(const Partition& mu, int depth);
BiCharacter eclass_character(const Partition& mu, const Partition& nu, BiCharacter::Exp L = {0, 0});
// chi(O,O) - chi(I_mu, I_nu), times ch L, by truncated left-to-right multiplication
BiCharacter series_oracle(const Partition& mu, const Partition& nu, BiCharacter::Exp L = {0, 0}, int margin = -1);

enum class WhooksPrefactor { kOne, kTPower };
std::string to_string(WhooksPrefactor p);

struct HilbElement {
  Partition mu, nu;
  int z_exponent = 0;
  Scalar coeff;  // in t1, t2, c1; the prefactor is applied on specialization
  WhooksPrefactor prefactor = WhooksPrefactor::kOne;
};

HilbElement whooks_element(const Partition& mu, const Partition& nu, WhooksPrefactor prefactor = WhooksPrefactor::kOne);

struct SpecializedElement {
  Scalar coeff;
  int z_exponent = 0;
};

// (t1, t2) = (t, -t), c1 = a t
SpecializedElement specialize_element(const HilbElement& h, int a);

struct CorrespondenceCase {
  Partition mu, nu;
  int a = 0, m = 0;
  std::string hilbert, vertex;
  int hilbert_z = 0, vertex_z = 0;
  bool pass = false;
};

struct CorrespondenceReport {
  WhooksPrefactor prefactor;
  std::vector<CorrespondenceCase> cases;
  bool all_pass = true;
};

CorrespondenceReport correspondence_check(int a, int m, int degree_cap,
                                          WhooksPrefactor prefactor = WhooksPrefactor::kOne);

}  // namespace vertexloc
