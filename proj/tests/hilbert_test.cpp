#include <gtest/gtest.h>

#include "vertexloc/hilbert.hpp"

using namespace vertexloc;

namespace {

Scalar H(const char* s) { return parse_scalar(s, VarSet::THilb); }

long total(const BiCharacter& c) {
  long s = 0;
  for (const auto& [e, v] : c.coeffs()) s += v;
  return s;
}

}  // namespace

TEST(Echar, Examples) {
  EXPECT_EQ(eclass_character(Partition(), Partition()).terms(), 0u);
  BiCharacter one = eclass_character(Partition({1}), Partition({1}));
  EXPECT_EQ(one.terms(), 2u);
  EXPECT_EQ(one.get({1, 0}), 1);
  EXPECT_EQ(one.get({0, 1}), 1);
  BiCharacter shifted = eclass_character(Partition({1}), Partition({1}), {2, -1});
  EXPECT_EQ(shifted.get({3, -1}), 1);
}

TEST(Echar, TermCount) {
  for (const auto& mu : enumerate_partitions(4))
    for (const auto& nu : enumerate_partitions(4)) EXPECT_EQ(total(eclass_character(mu, nu)), mu.size() + nu.size());
}

TEST(Echar, DiagonalTransposeSymmetry) {
  for (const auto& mu : enumerate_partitions(6)) {
    BiCharacter a = eclass_character(mu, mu);
    BiCharacter b = eclass_character(mu.transpose(), mu.transpose());
    for (const auto& [e, c] : a.coeffs()) EXPECT_EQ(b.get({e.second, e.first}), c) << mu.str();
    EXPECT_EQ(a.terms(), b.terms());
  }
}

TEST(SeriesOracle, MatchesSmall) {
  for (const auto& mu : enumerate_partitions(3))
    for (const auto& nu : enumerate_partitions(3))
      EXPECT_EQ(series_oracle(mu, nu), eclass_character(mu, nu)) << mu.str() << " | " << nu.str();
  EXPECT_EQ(series_oracle(Partition({2}), Partition({1}), {1, 1}), eclass_character(Partition({2}), Partition({1}), {1, 1}));
}

TEST(SeriesOracle, TangentSpace) {
  BiCharacter s = series_oracle(Partition({1}), Partition({1}));
  EXPECT_EQ(s.terms(), 2u);
  EXPECT_EQ(s.get({1, 0}), 1);
  EXPECT_EQ(s.get({0, 1}), 1);
  EXPECT_TRUE(series_oracle(Partition(), Partition()).coeffs().empty());
}

TEST(IdealCharacter, DepthGuard) {
  EXPECT_THROW(ideal_character(Partition({3}), 2), std::invalid_argument);
  BiCharacter c = ideal_character(Partition({1}), 3);
  EXPECT_EQ(c.get({0, 0}), 0);
  EXPECT_EQ(c.get({-1, 0}), 1);
}

TEST(Whooks, Examples) {
  HilbElement e = whooks_element(Partition(), Partition());
  EXPECT_EQ(e.coeff, Scalar(VarSet::THilb, mpq_class(1)));
  EXPECT_EQ(e.z_exponent, 0);
  HilbElement f = whooks_element(Partition(), Partition({1}));
  EXPECT_EQ(f.coeff, Scalar::variable(VarSet::THilb, "c1"));
  EXPECT_EQ(f.z_exponent, 1);
}

TEST(Whooks, Specialize) {
  Scalar t = Scalar::variable(VarSet::T, "t");
  SpecializedElement d = specialize_element(whooks_element(Partition({1}), Partition({1})), 0);
  EXPECT_EQ(d.coeff, -t.pow(2));
  SpecializedElement u = specialize_element(whooks_element(Partition(), Partition({1})), 1);
  EXPECT_EQ(u.coeff, t);
  EXPECT_EQ(u.z_exponent, 1);
  SpecializedElement v = specialize_element(whooks_element(Partition(), Partition(), WhooksPrefactor::kTPower), 0);
  EXPECT_EQ(v.coeff, Scalar(VarSet::T, mpq_class(1)));
  SpecializedElement w = specialize_element(whooks_element(Partition({1}), Partition({1}), WhooksPrefactor::kTPower), 0);
  EXPECT_EQ(w.coeff, -t.pow(4));
}

TEST(Correspondence, SmallWindow) {
  for (int a = -2; a <= 2; ++a) EXPECT_TRUE(correspondence_check(a, 0, 3).all_pass) << a;
  EXPECT_FALSE(correspondence_check(1, 0, 2, WhooksPrefactor::kTPower).all_pass);
}
