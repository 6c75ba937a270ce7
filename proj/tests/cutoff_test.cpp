#include <gtest/gtest.h>

#include "vertexloc/cutoff.hpp"
#include "vertexloc/fock.hpp"
#include "vertexloc/vertex.hpp"

using namespace vertexloc;

namespace {

Scalar num(long n) { return Scalar(VarSet::T, mpq_class(n)); }
const SymFunc one = SymFunc::constant(1);

}  // namespace

TEST(Cutoff, Validate) {
  EXPECT_THROW((CutoffConfig{1, 1}).validate(), std::invalid_argument);
  EXPECT_NO_THROW((CutoffConfig{-2, 3}).validate());
  EXPECT_EQ((CutoffConfig{-1, 2}).weights(), (WeightSet{1, 0, -1}));
}

TEST(Cutoff, FixedPoints) {
  EXPECT_EQ(enumerate_fixed_points({-1, 1}, 0).size(), 2u);
  EXPECT_EQ(enumerate_fixed_points({-2, 2}, 0).size(), 6u);
}

TEST(Cutoff, TooSmall) {
  EXPECT_THROW(truncated_maya({Partition({1, 1, 1}), 0}, {-1, 1}), CutoffTooSmall);
}

TEST(Cutoff, EulerHom) {
  EXPECT_EQ(euler_hom({0}, {2, 1}), Scalar::t_power(mpq_class(2), 2));
  EXPECT_TRUE(euler_hom({0}, {0}).is_zero());
  EXPECT_EQ(euler_hom({}, {3}), num(1));
}

TEST(Cutoff, RawPairing) {
  CutoffConfig cfg{-2, 2};
  WeightSet U{1, 0};
  FlagValue d = raw_flag_pairing(cfg, one, U, U);
  EXPECT_EQ(d.z_exponent, 0);
  EXPECT_EQ(d.value, euler_hom(U, complement(cfg, U)));
  EXPECT_TRUE(raw_flag_pairing(cfg, one, {1, 0}, {1, -1}).value.is_zero());
}

TEST(Cutoff, NormalizedMatchesW) {
  CutoffConfig cfg{-6, 6};
  for (int a = 0; a <= 2; ++a)
    for (const auto& mu : enumerate_partitions(3))
      for (const auto& nu : enumerate_partitions(3)) {
        ChargedPartition p{mu, 0}, q{nu, a};
        FlagValue got = normalized_flag_pairing(cfg, SymFunc::e(1), p, q);
        auto w = matrix_element_W(a, SymFunc::e(1), p, q);
        if (w)
          EXPECT_EQ(got, (FlagValue{w->coeff, w->z_exponent + a * (a + 1) / 2}));
        else
          EXPECT_TRUE(got.value.is_zero());
      }
}

TEST(Cutoff, StabilizeDiagonal) {
  ChargedPartition p{Partition({2, 1}), 1};
  Stabilization st = stabilize(one, p, p, 10);
  ASSERT_TRUE(st.value);
  EXPECT_EQ(st.value->value, hook_norm(p.mu));
  EXPECT_GE(st.threshold_N, 1);
  std::string csv = to_csv(st);
  EXPECT_EQ(csv.rfind("N,M,value,stable\n", 0), 0u);
}

TEST(FH, DegreeZero) {
  FH fh = FH_eval({2, 1}, {0}, one, 0);
  LaurentWindow unit({"z"}, {{0, 0}});
  unit.add({0}, num(1));
  EXPECT_EQ(fh.F, unit);
  EXPECT_TRUE(fh.H.zero());
}

TEST(FH, Recursion) {
  EXPECT_TRUE(fh_recursion({3, 1, -2}, {0}, {2, -1}, 2, 1).holds());
  EXPECT_TRUE(fh_recursion({4, 2, 1, -1}, {}, {0}, 1, 4).holds());
}

TEST(FH, LiteralSignsFail) {
  int failures = 0;
  for (int d = 1; d <= 3; ++d)
    if (!fh_recursion_uncorrected({3, 1, -2}, {0}, {2, -1}, d, 1).holds()) ++failures;
  EXPECT_GT(failures, 0);
}

TEST(FH, VanishingAtOne) {
  // sum over V of z^{sum V}/alpha(V, Y\V) vanishes to order d(|Y| - d)
  for (int d = 0; d <= 3; ++d) {
    LaurentWindow F = F_function({2, 1, 0}, {}, chern_class(one), d);
    EXPECT_EQ(vanishing_order_at_one(F), d * (3 - d)) << d;
  }
}

TEST(Lemma, SameSignZero) {
  CutoffConfig cfg{-2, 2};
  for (const auto& U : enumerate_fixed_points(cfg, -1))
    for (const auto& W : enumerate_fixed_points(cfg, 1)) {
      EXPECT_TRUE(lemma_B(cfg, U, -1, W, 1, 1, one, one).zero());
      EXPECT_TRUE(lemma_B(cfg, W, 1, U, -1, -1, one, one).zero());
    }
}

TEST(Lemma, Divisibility) {
  CutoffConfig cfg{-2, 2};
  for (const auto& U : enumerate_fixed_points(cfg, 0))
    for (const auto& W : enumerate_fixed_points(cfg, 0)) {
      LaurentWindow B = lemma_B(cfg, U, 0, W, 0, 1, one, one);
      auto bound = lemma_bound(cfg, U, 0, W, 1, one, one);
      if (!bound || B.zero()) continue;
      EXPECT_GE(divisibility_order(B, 1), *bound);
    }
}

TEST(Lemma, FermicomEqualSets) {
  CutoffConfig cfg{-2, 2};
  IdentityCheck c = fermicom_B(cfg, {1, 0}, {1, 0});
  EXPECT_TRUE(c.holds());
  EXPECT_TRUE(fermicom_B(cfg, {1}, {1, 0, -1}).holds());
}

TEST(Normalization, Ratio) {
  EXPECT_EQ(normalization_ratio(Partition(), 0, 5, false), 1);
  Asymptotics a = normalization_asymptotics(Partition({2, 1}), 0, false, 50);
  EXPECT_TRUE(a.monotone);
  EXPECT_TRUE(normalization_asymptotics(Partition({3}), 1, true, 50).monotone);
}

TEST(EulerCharacteristic, Identities) {
  std::vector<int> ks{5, 2, -1};
  for (int n = -4; n <= 4; ++n) {
    EXPECT_EQ(euler_characteristic_sum(ks, n, 0), 3);
    EXPECT_EQ(euler_characteristic_sum(ks, n, 1), 6 + 3 * n);
  }
}
