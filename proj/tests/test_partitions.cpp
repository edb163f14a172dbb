#include "cominus/exact.hpp"
#include "cominus/partitions.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace cominus;

namespace {

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

std::vector<Partition> brute_hooks(int p, int n, int shift) {
  std::vector<Partition> out;
  for (const auto& parts : oracle::all_partitions(2 * p)) {
    if (static_cast<int>(parts.size()) > n) continue;
    auto [arms, legs] = oracle::frobenius_cells(parts);
    bool ok = true;
    for (std::size_t i = 0; i < arms.size(); ++i) ok = ok && arms[i] == legs[i] + shift;
    if (ok) out.emplace_back(parts);
  }
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  CHECK(Partition{3, 1, 0, 0}.parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{4, 3}.str() == "(4,3)");
  CHECK(Partition{}.str() == "()");
  CHECK(Partition{4, 3}.size() == 7);
}

TEST_CASE("dual") {
  CHECK(dual(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(dual(Partition{2, 2, 2, 2, 2}) == Partition{5, 5});
  CHECK(dual(Partition{}) == Partition{});
  for (int s = 0; s <= 40; ++s)
    for (const auto& parts : oracle::all_partitions(s)) {
      const Partition mu(parts);
      REQUIRE(dual(dual(mu)) == mu);
    }
}

TEST_CASE("frobenius coordinates") {
  const auto f = frobenius(Partition{3, 3});
  CHECK(f.arms == std::vector<int>{2, 1});
  CHECK(f.legs == std::vector<int>{1, 0});
  for (int s = 0; s <= 14; ++s)
    for (const auto& parts : oracle::all_partitions(s)) {
      auto [arms, legs] = oracle::frobenius_cells(parts);
      const auto g = frobenius(Partition(parts));
      CHECK(g.arms == arms);
      CHECK(g.legs == legs);
    }
}

TEST_CASE("partitions in a box") {
  const auto box = partitions_in_box(4, 2, 3);
  CHECK(box == std::vector<Partition>{{3, 1}, {2, 2}});
  for (int s = 0; s <= 12; ++s) {
    const auto all = partitions_in_box(s, s, s);
    CHECK(all.size() == oracle::all_partitions(s).size());
    CHECK(std::is_sorted(all.rbegin(), all.rend()));
  }
}

TEST_CASE("hook classes") {
  CHECK(hooks_q1(1, 3) == std::vector<Partition>{{2}});
  CHECK(hooks_qm1(1, 3) == std::vector<Partition>{{1, 1}});
  CHECK(hooks_qm1(2, 4) == std::vector<Partition>{{2, 1, 1}});
  CHECK(as_set(hooks_q1(3, 3)) == std::set<Partition>{{4, 1, 1}, {3, 3}});
  for (int n = 1; n <= 7; ++n)
    for (int p = 1; p <= n * (n + 1) / 2; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      const auto q1 = hooks_q1(p, n);
      const auto qm1 = hooks_qm1(p, n);
      CHECK(as_set(q1) == as_set(brute_hooks(p, n, 1)));
      CHECK(as_set(qm1) == as_set(brute_hooks(p, n, -1)));
      // Transposition trades one row for one column, so the row bound shifts.
      std::set<Partition> duals;
      for (const auto& mu : q1) duals.insert(dual(mu));
      CHECK(duals == as_set(hooks_qm1(p, n + 1)));
      for (const auto& mu : q1) {
        CHECK(mu.size() == 2 * p);
        CHECK(mu.rows() <= n);
        CHECK(mu.first() <= n + 1);
      }
    }
}

TEST_CASE("grassmannian closed form") {
  CHECK(min_twist_grass(3, 7, 10) == 7);
  CHECK(min_twist_grass(3, 6, 7) == 6);
  for (int n = 2; n <= 10; ++n)
    for (int p = 1; p < n; ++p) CHECK(min_twist_grass(1, n, p) == p + 1);
  CHECK(min_twist_grass(2, 4, 4) == 4);
  CHECK(min_twist_grass(7, 9, 2) == min_twist_grass(2, 9, 2));
  CHECK_THROWS_AS(min_twist_grass(3, 9, 0), std::invalid_argument);
  CHECK_THROWS_AS(min_twist_grass(3, 9, 19), std::invalid_argument);
  CHECK_THROWS_AS(min_twist_grass(0, 9, 1), std::invalid_argument);
}

TEST_CASE("grassmannian oracle") {
  auto w = min_twist_grass_oracle(3, 9, 7);
  CHECK(w.l == 6);
  CHECK(w.partitions == std::vector<Partition>{{4, 3}, {3, 3, 1}, {3, 2, 2}});
  w = min_twist_grass_oracle(3, 10, 10);
  CHECK(w.l == 7);
  CHECK(w.partitions == std::vector<Partition>{{5, 5}, {4, 4, 2}, {4, 3, 3}});
  w = min_twist_grass_oracle(2, 4, 4);
  CHECK(w.l == 4);
  CHECK(w.partitions == std::vector<Partition>{{2, 2}});
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int p = 1; p <= k * (n - k); ++p) {
        const auto o = min_twist_grass_oracle(k, n, p);
        REQUIRE(o.l == min_twist_grass(k, n, p));
        for (const auto& mu : o.partitions) {
          CHECK(mu.size() == p);
          CHECK(mu.rows() <= k);
          CHECK(mu.first() <= n - k);
        }
        // A rectangle (d^e) with d + e = l exists iff l^2 - 4p is a square.
        bool rect = false;
        for (const auto& mu : o.partitions) rect = rect || mu.part(mu.rows()) == mu.first();
        CHECK(rect == (is_perfect_square(static_cast<std::int64_t>(o.l) * o.l - 4 * p) &&
                       [&] {
                         const std::int64_t disc = ceil_sqrt(static_cast<std::int64_t>(o.l) * o.l - 4 * p);
                         const std::int64_t d = (o.l - disc) / 2, e = (o.l + disc) / 2;
                         return (d <= k && e <= n - k) || (e <= k && d <= n - k);
                       }()));
      }
}

TEST_CASE("lagrangian and spinor closed forms") {
  CHECK(min_twist_lagr(1) == 2);
  CHECK(min_twist_lagr(3) == 3);
  CHECK(min_twist_lagr(6) == 4);
  CHECK(min_twist_spinor(1) == 2);
  CHECK(min_twist_spinor(2) == 3);
  CHECK(min_twist_spinor(3) == 4);
  CHECK(min_twist_spinor_oracle(4, 2).partitions == std::vector<Partition>{{2, 1, 1}});
  CHECK(min_twist_lagr_oracle(4, 6).l == 4);
  const auto rect = min_twist_lagr_oracle(3, 3);
  CHECK(rect.l == 3);
  CHECK(std::count(rect.partitions.begin(), rect.partitions.end(), Partition{3, 3}) == 1);
  CHECK_THROWS_AS(min_twist_lagr(0), std::invalid_argument);
  CHECK_THROWS_AS(min_twist_lagr_oracle(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(min_twist_spinor_oracle(4, 7), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    for (int p = 1; p <= n * (n + 1) / 2; ++p) {
      const auto o = min_twist_lagr_oracle(n, p);
      CHECK(o.l == min_twist_lagr(p));
      CHECK(o.cost == TwistCost::FirstRow);
    }
    for (int p = 1; p <= n * (n - 1) / 2; ++p) {
      const auto o = min_twist_spinor_oracle(n, p);
      CHECK(o.l == min_twist_spinor(p));
      CHECK(o.cost == TwistCost::FirstTwoRows);
    }
  }
}
