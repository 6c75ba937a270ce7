#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace vertexloc {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws unless weakly decreasing and positive

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // 1-based, zero past the end
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int column(int j) const;  // length of column j, i.e. transpose part

  Partition transpose() const;
  bool contains_box(int i, int j) const { return j >= 1 && j <= part(i); }

  std::string str() const;  // "2,1"; "" for the empty partition
  static Partition parse(const std::string& text);

  auto operator<=>(const Partition& o) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Box {
  int i, j;
};

struct ArmLegHook {
  int arm, leg, hook;
  bool operator==(const ArmLegHook&) const = default;
};

ArmLegHook arm_leg_hook(const Partition& lambda, Box b);
int arm(const Partition& lambda, Box b);
int leg(const Partition& lambda, Box b);
std::vector<Box> boxes(const Partition& lambda);
long hook_product(const Partition& lambda);

struct ChargedPartition {
  Partition mu;
  int m = 0;

  bool operator==(const ChargedPartition& o) const = default;
  // charge, then size, then parts
  bool operator<(const ChargedPartition& o) const {
    if (m != o.m) return m < o.m;
    if (mu.size() != o.mu.size()) return mu.size() < o.mu.size();
    return mu.parts() > o.mu.parts();
  }
  std::string str() const;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << "(" << p.str() << ")"; }
inline std::ostream& operator<<(std::ostream& os, const ChargedPartition& p) { return os << p.str(); }

// descending
using WeightSet = std::vector<int>;

WeightSet maya_set(const ChargedPartition& p, int floor);
// inverse of maya_set; s must hold every element of S(p) that is >= floor
ChargedPartition from_maya(WeightSet s, int floor);
bool maya_contains(const ChargedPartition& p, const ChargedPartition& q);
// S(q) minus S(p), descending; empty unless p is contained in q
WeightSet maya_difference(const ChargedPartition& q, const ChargedPartition& p);

// size ascending, then reverse lexicographic
std::vector<Partition> enumerate_partitions(int max_size, std::optional<std::pair<int, int>> box = std::nullopt);
// partitions of exactly n, cached
const std::vector<Partition>& partitions_of(int n);

}  // namespace vertexloc
