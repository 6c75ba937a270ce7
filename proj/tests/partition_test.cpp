#include <gtest/gtest.h>

#include "vertexloc/partition.hpp"

using namespace vertexloc;

TEST(Partition, ArmLegHook) {
  EXPECT_EQ(arm_leg_hook(Partition({1}), {1, 1}), (ArmLegHook{0, 0, 1}));
  EXPECT_EQ(arm_leg_hook(Partition(), {1, 1}), (ArmLegHook{-1, -1, -1}));
  EXPECT_EQ(arm_leg_hook(Partition({2, 1}), {1, 1}), (ArmLegHook{1, 1, 3}));
}

TEST(Partition, Transpose) {
  EXPECT_EQ(Partition({3, 1}).transpose(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition().transpose(), Partition());
}

TEST(Partition, RejectsBadParts) {
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("2,1").str(), "2,1");
  EXPECT_EQ(Partition::parse(""), Partition());
  EXPECT_EQ((ChargedPartition{Partition({2, 1}), -1}).str(), "(2,1;-1)");
}

TEST(Partition, HookProduct) {
  EXPECT_EQ(hook_product(Partition()), 1);
  EXPECT_EQ(hook_product(Partition({2, 1})), 3);
  EXPECT_EQ(hook_product(Partition({3, 2})), 24);
}

TEST(Maya, Sets) {
  EXPECT_EQ(maya_set({Partition(), 0}, -3), (WeightSet{0, -1, -2, -3}));
  EXPECT_EQ(maya_set({Partition({1}), 0}, -3), (WeightSet{1, -1, -2, -3}));
  EXPECT_EQ(maya_set({Partition({1}), 1}, -3), (WeightSet{2, 0, -1, -2, -3}));
}

TEST(Maya, FloorTooHigh) { EXPECT_THROW(maya_set({Partition({1, 1}), 0}, 0), std::invalid_argument); }

TEST(Maya, RoundTrip) {
  for (int m = -2; m <= 2; ++m)
    for (const auto& mu : enumerate_partitions(6)) {
      ChargedPartition p{mu, m};
      int floor = m - mu.length() - 2;
      EXPECT_EQ(from_maya(maya_set(p, floor), floor), p);
    }
}

TEST(Maya, Containment) {
  EXPECT_TRUE(maya_contains({Partition(), 0}, {Partition({1}), 1}));
  EXPECT_FALSE(maya_contains({Partition({1}), 0}, {Partition({2}), 1}));
  for (const auto& mu : enumerate_partitions(6)) EXPECT_TRUE(maya_contains({mu, 0}, {mu, 0}));
  EXPECT_EQ(maya_difference({Partition({1}), 1}, {Partition(), 0}), (WeightSet{2}));
}

TEST(Partitions, Enumerate) {
  EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()});
  EXPECT_EQ(enumerate_partitions(3).size(), 7u);
  std::vector<Partition> boxed = {Partition(),       Partition({1}),    Partition({2}),
                                  Partition({1, 1}), Partition({2, 1}), Partition({2, 2})};
  EXPECT_EQ(enumerate_partitions(4, std::make_pair(2, 2)), boxed);
  std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), counts[n]);
}
