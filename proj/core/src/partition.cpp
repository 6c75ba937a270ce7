#include "vertexloc/partition.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace vertexloc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k && parts_[k] > parts_[k - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

int Partition::column(int j) const {
  if (j < 1) return 0;
  int c = 0;
  while (c < length() && parts_[c] >= j) ++c;
  return c;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int j = 1; j <= part(1); ++j) t.push_back(column(j));
  return Partition(std::move(t));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s;
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition '" + text + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int arm(const Partition& lambda, Box b) { return lambda.part(b.i) - b.j; }
int leg(const Partition& lambda, Box b) { return lambda.column(b.j) - b.i; }

ArmLegHook arm_leg_hook(const Partition& lambda, Box b) {
  int a = arm(lambda, b), l = leg(lambda, b);
  return {a, l, a + l + 1};
}

std::vector<Box> boxes(const Partition& lambda) {
  std::vector<Box> out;
  out.reserve(lambda.size());
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) out.push_back({i, j});
  return out;
}

long hook_product(const Partition& lambda) {
  long h = 1;
  for (Box b : boxes(lambda)) h *= arm_leg_hook(lambda, b).hook;
  return h;
}

std::string ChargedPartition::str() const { return "(" + mu.str() + ";" + std::to_string(m) + ")"; }

WeightSet maya_set(const ChargedPartition& p, int floor) {
  if (floor > p.m - p.mu.length()) throw std::invalid_argument("maya floor above the nontrivial range");
  WeightSet s;
  for (int i = 1;; ++i) {
    int v = p.m + p.mu.part(i) - i + 1;
    if (v < floor) break;
    s.push_back(v);
  }
  return s;
}

ChargedPartition from_maya(WeightSet s, int floor) {
  std::sort(s.begin(), s.end(), std::greater<>());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated index in maya set");
  int m = static_cast<int>(s.size()) + floor - 1;
  std::vector<int> parts;
  for (std::size_t k = 0; k < s.size(); ++k) {
    int v = s[k] - (m - static_cast<int>(k));
    if (v < 0) throw std::invalid_argument("maya set is not closed below");
    if (v > 0) parts.push_back(v);
  }
  return {Partition(std::move(parts)), m};
}

bool maya_contains(const ChargedPartition& p, const ChargedPartition& q) {
  if (p.m > q.m) return false;
  // every nontrivial element of S(p) must be in S(q); elements at or below
  // q.m - len(q) are in S(q) automatically
  int qfloor = q.m - q.mu.length();
  int j = 1;
  for (int i = 1;; ++i) {
    int v = p.m + p.mu.part(i) - i + 1;
    if (v <= qfloor) return true;
    while (q.m + q.mu.part(j) - j + 1 > v) ++j;
    if (q.m + q.mu.part(j) - j + 1 != v) return false;
  }
}

WeightSet maya_difference(const ChargedPartition& q, const ChargedPartition& p) {
  int floor = std::min(p.m - p.mu.length(), q.m - q.mu.length());
  WeightSet sq = maya_set(q, floor), sp = maya_set(p, floor);
  WeightSet out;
  std::set_difference(sq.begin(), sq.end(), sp.begin(), sp.end(), std::back_inserter(out), std::greater<>());
  return out;
}

namespace {

void gen(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out, int rows) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) >= rows) return;
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen(n - k, k, cur, out, rows);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int max_size, std::optional<std::pair<int, int>> box) {
  std::vector<Partition> out;
  int rows = box ? box->first : max_size + 1;
  int cols = box ? box->second : max_size;
  std::vector<int> cur;
  for (int n = 0; n <= max_size; ++n) gen(n, cols, cur, out, rows);
  return out;
}

const std::vector<Partition>& partitions_of(int n) {
  static std::mutex mu;
  static std::deque<std::vector<Partition>> cache;
  if (n < 0) {
    static const std::vector<Partition> none;
    return none;
  }
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    std::vector<Partition> ps;
    std::vector<int> cur;
    int k = static_cast<int>(cache.size());
    gen(k, k, cur, ps, k + 1);
    cache.push_back(std::move(ps));
  }
  return cache[n];
}

}  // namespace vertexloc
