#include <gtest/gtest.h>

#include "vertexloc/vertex.hpp"

using namespace vertexloc;

namespace {

Scalar num(long n) { return Scalar(VarSet::T, mpq_class(n)); }
Scalar tp(long c, int k) { return Scalar::t_power(mpq_class(c), k); }
ChargedPartition cp(std::vector<int> parts, int m) { return {Partition(std::move(parts)), m}; }
const SymFunc one = SymFunc::constant(1);

}  // namespace

TEST(SymFunc, Parse) {
  EXPECT_EQ(SymFunc::parse("e1"), SymFunc::e(1));
  EXPECT_EQ(SymFunc::parse("2*e2 + e1*e1"), SymFunc::e(2) + SymFunc::e(2) + SymFunc::e(1) * SymFunc::e(1));
  EXPECT_EQ(SymFunc::parse("e0"), one);
  EXPECT_EQ(SymFunc::parse("(e1 + 1)*e2").str(), SymFunc::parse("e2 + e2*e1").str());
  try {
    SymFunc::parse("e1 +");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.offset, 4u);
  }
  EXPECT_THROW(SymFunc::parse("e-1"), ParseError);
}

TEST(SymFunc, ChernEval) {
  EXPECT_EQ(chern_eval(SymFunc::e(1), {1, 2}), tp(3, 1));
  EXPECT_EQ(chern_eval(SymFunc::e(2), {1, 2}), tp(2, 2));
  EXPECT_TRUE(chern_eval(SymFunc::e(3), {1, 2}).is_zero());
}

TEST(MatrixElementW, Examples) {
  auto d = matrix_element_W(0, one, cp({1}, 0), cp({1}, 0));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->z_exponent, 0);
  EXPECT_EQ(d->coeff, tp(-1, 2));
  auto u = matrix_element_W(1, one, cp({}, 0), cp({1}, 1));
  ASSERT_TRUE(u);
  EXPECT_EQ(u->z_exponent, 1);
  EXPECT_EQ(u->coeff, tp(1, 1));
  EXPECT_FALSE(matrix_element_W(1, one, cp({1}, 0), cp({2}, 1)));
  EXPECT_THROW(matrix_element_W(1, one, cp({}, 0), cp({}, 0)), std::invalid_argument);
}

TEST(MatrixElementW, DiagonalIsHookNorm) {
  for (int m = -1; m <= 1; ++m)
    for (const auto& mu : enumerate_partitions(6)) {
      auto d = matrix_element_W(0, one, {mu, m}, {mu, m});
      ASSERT_TRUE(d);
      EXPECT_EQ(d->coeff, hook_pairing(FockVector::basis({mu, m}), FockVector::basis({mu, m})));
    }
}

TEST(FieldMode, Examples) {
  FockVector vac = FockVector::basis(cp({}, 0));
  EXPECT_EQ(field_mode(1, one, 0, vac), FockVector::basis(cp({}, 1)));
  // Y is normalized through the hook pairing: t / (-t^2)
  EXPECT_EQ(field_mode(1, one, 1, vac), FockVector::basis(cp({1}, 1), tp(-1, -1)));
  EXPECT_TRUE(field_mode(1, one, -1, vac).zero());
  EXPECT_EQ(field_mode(0, one, 0, FockVector::basis(cp({2, 1}, 0))), FockVector::basis(cp({2, 1}, 0)));
}

TEST(FieldMode, PsiModesAreUnitInEBasis) {
  FockVector e = FockVector::basis(cp({1}, 0), e_normalize(cp({1}, 0)));
  for (int j = -4; j <= 4; ++j) {
    FockVector r = psi_mode(j, e);
    ASSERT_LE(r.terms().size(), 1u);
    for (const auto& [q, c] : r.terms()) {
      Scalar unit = c / e_normalize(q);
      EXPECT_TRUE(unit == num(1) || unit == num(-1)) << j;
    }
  }
}

TEST(Bosonized, Examples) {
  FockVector vac = FockVector::basis(cp({}, 0));
  EXPECT_EQ(bosonized_mode(1, 0, vac, 6), FockVector::basis(cp({}, 1)));
  EXPECT_EQ(bosonized_mode(1, 0, vac, 6), field_mode(1, one, 0, vac));
  for (const auto& mu : enumerate_partitions(4)) {
    FockVector v = FockVector::basis({mu, 0});
    EXPECT_EQ(bosonized_mode(0, 0, v, 6), v);
  }
  EXPECT_THROW(bosonized_mode(1, 3, vac, 1), GuardBandError);
}

TEST(Bosonized, AgreesWithFieldMode) {
  for (int a : {-2, -1, 1, 2})
    for (int d = -3; d <= 3; ++d)
      for (const auto& mu : enumerate_partitions(3)) {
        FockVector v = FockVector::basis({mu, 1});
        EXPECT_EQ(field_mode(a, one, d, v), bosonized_mode(a, d, v, bosonized_required_cap(a, d, v)))
            << a << " " << d << " " << mu.str();
      }
}

TEST(Locality, CliffordOrder) {
  GridBounds win{-5, 5, -5, 5};
  LaurentWindow g = supercommutator_window(1, -1, one, one, cp({}, 0), cp({}, 0), win);
  EXPECT_FALSE(g.zero());
  // delta(z - w): every coefficient on the antidiagonal is the same
  for (const auto& [e, c] : g.coeffs()) EXPECT_EQ(e[0] + e[1], -1);
  EXPECT_EQ(annihilation_order(g, 6), 1);
  LaurentWindow z({"z", "w"}, {{-2, 2}, {-2, 2}});
  EXPECT_EQ(annihilation_order(z, 3), 0);
}

TEST(Locality, InsertionsFinite) {
  GridBounds win{-6, 6, -6, 6};
  SymFunc e1 = SymFunc::e(1);
  for (const auto& mu : enumerate_partitions(2)) {
    LaurentWindow g = supercommutator_window(1, -1, e1, e1, {mu, 0}, {mu, 0}, win);
    auto K = annihilation_order(g, 8);
    ASSERT_TRUE(K);
    EXPECT_LE(*K, 8);
  }
}

TEST(Locality, SameSignVanishes) {
  GridBounds win{-4, 4, -4, 4};
  for (const auto& mu : enumerate_partitions(2))
    for (const auto& nu : enumerate_partitions(2)) {
      EXPECT_TRUE(supercommutator_window(1, 1, one, one, {mu, 0}, {nu, 2}, win).zero());
      EXPECT_TRUE(supercommutator_window(-1, -1, one, one, {mu, 0}, {nu, -2}, win).zero());
    }
}

TEST(Locality, GuardBand) {
  GridBounds win{-2, 30, -2, 30};
  EXPECT_THROW(supercommutator_window(1, -1, one, one, cp({}, 0), cp({}, 0), win, 10), GuardBandError);
}

TEST(NegativeChargeRule, PlainBreaksClifford) {
  FockVector vac = FockVector::basis(cp({}, 0));
  bool broken = false;
  for (int i = -3; i <= 3 && !broken; ++i)
    for (int j = -3; j <= 3 && !broken; ++j) {
      auto rule = NegativeChargeRule::kPlain;
      FockVector s = psi_mode(i, psi_star_mode(j, vac, rule), rule) + psi_star_mode(j, psi_mode(i, vac, rule), rule);
      broken = s != (i + j == 0 ? vac : FockVector());
    }
  EXPECT_TRUE(broken);
}
