#include "cominus/partitions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "cominus/exact.hpp"

namespace cominus {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int v : parts_) s += v;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Partition dual(const Partition& mu) {
  std::vector<int> d(mu.first(), 0);
  for (int part : mu.parts())
    for (int j = 0; j < part; ++j) ++d[j];
  return Partition(std::move(d));
}

Frobenius frobenius(const Partition& mu) {
  const Partition t = dual(mu);
  Frobenius f;
  for (int i = 1; mu.part(i) >= i; ++i) {
    f.arms.push_back(mu.part(i) - i);
    f.legs.push_back(t.part(i) - i);
  }
  return f;
}

std::vector<Partition> partitions_in_box(int size, int max_rows, int max_cols) {
  std::vector<Partition> out;
  if (size < 0 || max_rows < 0 || max_cols < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    const int rows_left = max_rows - static_cast<int>(cur.size());
    if (rows_left <= 0) return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      if (static_cast<std::int64_t>(part) * rows_left < remaining) break;
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(size, max_cols);
  return out;
}

namespace {

std::vector<Partition> hooks_with_shift(int p, int n, int shift) {
  if (p < 0 || n < 1) return {};
  // a_1 = b_1 + shift bounds the first row by n + shift.
  std::vector<Partition> out;
  for (auto& mu : partitions_in_box(2 * p, n, std::max(0, n + shift))) {
    const Frobenius f = frobenius(mu);
    bool ok = true;
    for (std::size_t i = 0; i < f.arms.size() && ok; ++i) ok = f.arms[i] == f.legs[i] + shift;
    if (ok) out.push_back(std::move(mu));
  }
  return out;
}

MinTwistWitness minimize(const std::vector<Partition>& candidates, TwistCost cost) {
  MinTwistWitness w;
  w.cost = cost;
  w.l = std::numeric_limits<int>::max();
  for (const auto& mu : candidates) {
    const int c = twist_cost(mu, cost);
    if (c < w.l) {
      w.l = c;
      w.partitions.clear();
    }
    if (c == w.l) w.partitions.push_back(mu);
  }
  if (w.partitions.empty()) throw ConsistencyError("oracle found no admissible partition");
  return w;
}

}  // namespace

std::vector<Partition> hooks_q1(int p, int n) { return hooks_with_shift(p, n, +1); }
std::vector<Partition> hooks_qm1(int p, int n) { return hooks_with_shift(p, n, -1); }

std::string to_string(TwistCost c) {
  switch (c) {
    case TwistCost::RowPlusColumn: return "mu1+mu1'";
    case TwistCost::FirstRow: return "mu1";
    case TwistCost::FirstTwoRows: return "mu1+mu2";
  }
  return "?";
}

int twist_cost(const Partition& mu, TwistCost c) {
  switch (c) {
    case TwistCost::RowPlusColumn: return mu.first() + mu.rows();
    case TwistCost::FirstRow: return mu.first();
    case TwistCost::FirstTwoRows: return mu.part(1) + mu.part(2);
  }
  return 0;
}

int min_twist_grass(int k, int n, int p) {
  if (k < 1 || k >= n) throw std::invalid_argument("k out of range");
  k = std::min(k, n - k);
  if (p < 1 || p > k * (n - k)) throw std::invalid_argument("p out of range");
  if (p == k * (n - k)) return n;  // top exterior power: K_X = O(-n)
  if (p <= k * k) return static_cast<int>(ceil_sqrt(4LL * p));
  return k + (p + k - 1) / k;
}

MinTwistWitness min_twist_grass_oracle(int k, int n, int p) {
  if (k < 1 || k >= n) throw std::invalid_argument("k out of range");
  k = std::min(k, n - k);
  if (p < 1 || p > k * (n - k)) throw std::invalid_argument("p out of range");
  return minimize(partitions_in_box(p, k, n - k), TwistCost::RowPlusColumn);
}

int min_twist_lagr(int p) {
  if (p < 1) throw std::invalid_argument("p out of range");
  // smallest m with m - 1/2 >= sqrt(2p), i.e. (2m - 1)^2 >= 8p
  const std::int64_t r = ceil_sqrt(8LL * p);
  return static_cast<int>(r % 2 == 1 ? (r + 1) / 2 : r / 2 + 1);
}

MinTwistWitness min_twist_lagr_oracle(int n, int p) {
  if (n < 1 || p < 1 || p > n * (n + 1) / 2) throw std::invalid_argument("p out of range");
  return minimize(hooks_q1(p, n), TwistCost::FirstRow);
}

int min_twist_spinor(int p) {
  if (p < 1) throw std::invalid_argument("p out of range");
  // a = ceil(sqrt(2p) - 1/2): smallest a with (2a + 1)^2 >= 8p
  const std::int64_t r = ceil_sqrt(8LL * p);
  const int a = static_cast<int>(r % 2 == 1 ? (r - 1) / 2 : r / 2);
  const int b = (a * (a + 1) - 2 * p) / 2;
  if (b < 0 || b >= a) throw ConsistencyError("spinor twist: b outside [0, a)");
  return (b == a - 1 && b > 0) ? 2 * a - 1 : 2 * a;
}

MinTwistWitness min_twist_spinor_oracle(int n, int p) {
  if (n < 2 || p < 1 || p > n * (n - 1) / 2) throw std::invalid_argument("p out of range");
  return minimize(hooks_qm1(p, n), TwistCost::FirstTwoRows);
}

}  // namespace cominus
