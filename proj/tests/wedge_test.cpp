#include <gtest/gtest.h>

#include "vertexloc/wedge.hpp"

using namespace vertexloc;

namespace {

using State = WedgeState<mpq_class>;

State basis(const Partition& mu, int m) { return State{{ChargedPartition{mu, m}, mpq_class(1)}}; }

const std::function<mpq_class(int)> unit = [](int) { return mpq_class(1); };

}  // namespace

TEST(Wedge, Examples) {
  EXPECT_EQ(wedge(1, basis(Partition(), 0)), basis(Partition(), 1));
  EXPECT_TRUE(wedge(0, basis(Partition(), 0)).empty());
  EXPECT_EQ(wedge(2, basis(Partition(), 0)), basis(Partition({1}), 1));
}

TEST(Contract, Examples) {
  EXPECT_EQ(contract(1, basis(Partition(), 1)), basis(Partition(), 0));
  EXPECT_TRUE(contract(1, basis(Partition(), 0)).empty());
}

TEST(Translate, Examples) {
  EXPECT_EQ(translate(-1, unit, basis(Partition(), 0)), basis(Partition({1}), 0));
  EXPECT_TRUE(translate(1, unit, basis(Partition(), 0)).empty());
  State two = translate(-1, unit, translate(-1, unit, basis(Partition(), 0)));
  ASSERT_EQ(two.size(), 2u);
  // signs as produced: both +1
  EXPECT_EQ(two.at({Partition({2}), 0}), 1);
  EXPECT_EQ(two.at({Partition({1, 1}), 0}), 1);
  EXPECT_THROW(translate(0, unit, basis(Partition(), 0)), std::invalid_argument);
}

TEST(Wedge, CanonicalAnticommutators) {
  for (int m = -1; m <= 1; ++m)
    for (const auto& mu : enumerate_partitions(5)) {
      State v = basis(mu, m);
      for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j) {
          EXPECT_TRUE(add(wedge(i, wedge(j, v)), wedge(j, wedge(i, v))).empty());
          EXPECT_TRUE(add(contract(i, contract(j, v)), contract(j, contract(i, v))).empty());
          State wc = add(wedge(i, contract(j, v)), contract(j, wedge(i, v)));
          EXPECT_EQ(wc, i == j ? v : State{}) << mu.str() << " " << i << " " << j;
        }
    }
}

TEST(Translate, HeisenbergOracle) {
  for (const auto& mu : enumerate_partitions(8)) {
    State v = basis(mu, 0);
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        if (a == 0 || b == 0) continue;
        State lhs = add(translate(a, unit, translate(b, unit, v)), translate(b, unit, translate(a, unit, v)),
                        mpq_class(-1));
        State rhs = a + b == 0 ? State{{ChargedPartition{mu, 0}, mpq_class(a)}} : State{};
        EXPECT_EQ(lhs, rhs) << mu.str() << " " << a << " " << b;
      }
  }
}
