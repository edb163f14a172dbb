#include "cominus/rootsys.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <functional>
#include <map>

using namespace cominus;

namespace {

std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(LieType::make(Family::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(LieType::make(Family::B, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(LieType::make(Family::C, r));
  for (int r = 3; r <= max_rank; ++r) out.push_back(LieType::make(Family::D, r));
  if (max_rank >= 6) out.push_back(LieType::make(Family::E6, 6));
  if (max_rank >= 7) out.push_back(LieType::make(Family::E7, 7));
  return out;
}

// Dominant weights with <w, w> <= bound.  The inverse Cartan matrix is
// entrywise positive, so the form only grows along the search.
std::vector<Weight> dominant_weights_of_norm(const RootSystem& rs, const Rational& bound) {
  std::vector<Weight> out;
  Weight w(rs.rank());
  std::function<void(int)> rec = [&](int i) {
    if (i == rs.rank()) {
      out.push_back(w);
      return;
    }
    for (int c = 0;; ++c) {
      w[i] = c;
      if (pairing(w, w, rs) > bound) break;
      rec(i + 1);
    }
    w[i] = 0;
  };
  rec(0);
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("lie type bounds") {
  CHECK_THROWS_AS(LieType::make(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(LieType::make(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(LieType::make(Family::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(LieType::make(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(LieType::make(Family::E6, 7), std::invalid_argument);
  CHECK(LieType::make(Family::E7, 7).name() == "E7");
}

TEST_CASE("cartan data and positive roots") {
  for (const auto& t : all_types_up_to_rank(8)) {
    CAPTURE(t.name());
    RootSystem rs(t);
    const int r = rs.rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Rational s = 0;
        for (int m = 0; m < r; ++m) s += rs.cartan(i, m) * rs.inverse_cartan()[m][j];
        CHECK(s == Rational(i == j ? 1 : 0));
      }
    CHECK(rs.positive_roots().size() == rs.expected_positive_root_count());
    for (const auto& root : rs.positive_roots()) {
      for (int c : root.simple) CHECK(c >= 0);
      CHECK(rs.from_simple_coords(root.simple) == root.fund);
    }
  }
  CHECK(RootSystem(LieType::make(Family::E6, 6)).positive_roots().size() == 36);
  CHECK(RootSystem(LieType::make(Family::E7, 7)).positive_roots().size() == 63);
  CHECK(RootSystem(LieType::make(Family::B, 5)).positive_roots().size() == 25);
  CHECK(RootSystem(LieType::make(Family::D, 5)).positive_roots().size() == 20);
}

TEST_CASE("pairing") {
  RootSystem c4(LieType::make(Family::C, 4));
  // Long roots of squared length 2 give half the classical values j.
  for (int j = 1; j <= 4; ++j)
    CHECK(pairing(Weight::fundamental(4, j), Weight::fundamental(4, 4), c4) == Rational(j, 2));
  RootSystem d5(LieType::make(Family::D, 5));
  CHECK(pairing(Weight::fundamental(5, 4), Weight::fundamental(5, 5), d5) == Rational(3, 4));
  CHECK(pairing(Weight(5), Weight{1, 2, 0, 3, 1}, d5) == 0);
  CHECK_THROWS_AS(pairing(Weight(4), Weight(5), d5), std::invalid_argument);
  for (const auto& t : all_types_up_to_rank(7)) {
    RootSystem rs(t);
    const int r = rs.rank();
    for (int i = 1; i <= r; ++i)
      for (int j = 1; j <= r; ++j)
        CHECK(pairing(Weight::fundamental(r, i), Weight::fundamental(r, j), rs) ==
              pairing(Weight::fundamental(r, j), Weight::fundamental(r, i), rs));
    for (const auto& root : rs.positive_roots()) CHECK(pairing(root.fund, root.fund, rs) > 0);
  }
}

TEST_CASE("dominance") {
  CHECK(is_dominant(Weight{1, 0, 0}));
  CHECK_FALSE(is_dominant(Weight{-2, 0, 1, 0, 0, 0}));
  CHECK(is_dominant(Weight(6)));
  CHECK(is_dominant(Weight{-2, 0, 1, 0, 0, 0}, 0b111110));
}

TEST_CASE("weyl dimension and orbits") {
  for (int n = 2; n <= 9; ++n) {
    RootSystem a(LieType::make(Family::A, n - 1));
    CHECK(weyl_dim(Weight::fundamental(n - 1, 1), a) == n);
  }
  RootSystem d5(LieType::make(Family::D, 5));
  CHECK(weyl_dim(Weight::fundamental(5, 5), d5) == 16);
  CHECK(weyl_orbit(Weight::fundamental(5, 5), d5).size() == 16);
  RootSystem e6(LieType::make(Family::E6, 6));
  CHECK(weyl_dim(Weight::fundamental(6, 1), e6) == 27);
  CHECK(weyl_orbit(Weight::fundamental(6, 1), e6).size() == 27);
  RootSystem e7(LieType::make(Family::E7, 7));
  CHECK(weyl_dim(Weight::fundamental(7, 7), e7) == 56);
  CHECK(weyl_dim(Weight::fundamental(7, 1), e7) == 133);
  CHECK_THROWS_AS(weyl_dim(Weight{-1, 0, 0, 0, 0, 0}, e6), std::invalid_argument);

  CHECK(weyl_orbit(Weight(3), RootSystem(LieType::make(Family::A, 3))) == std::vector<Weight>{Weight(3)});
  RootSystem a1(LieType::make(Family::A, 1));
  CHECK(weyl_orbit(Weight{1}, a1) == std::vector<Weight>{Weight{-1}, Weight{1}});
}

TEST_CASE("weyl group orders") {
  for (int r = 1; r <= 7; ++r)
    CHECK(weyl_group_order(RootSystem(LieType::make(Family::A, r)), (NodeSet{1} << r) - 1) == factorial(r + 1));
  for (int r = 2; r <= 7; ++r) {
    const NodeSet all = (NodeSet{1} << r) - 1;
    CHECK(weyl_group_order(RootSystem(LieType::make(Family::B, r)), all) == (BigInt(1) << r) * factorial(r));
    CHECK(weyl_group_order(RootSystem(LieType::make(Family::C, r)), all) == (BigInt(1) << r) * factorial(r));
    if (r >= 3)
      CHECK(weyl_group_order(RootSystem(LieType::make(Family::D, r)), all) ==
            (BigInt(1) << (r - 1)) * factorial(r));
  }
  CHECK(weyl_group_order(RootSystem(LieType::make(Family::E6, 6)), 0b111111) == 51840);
  CHECK(weyl_group_order(RootSystem(LieType::make(Family::E7, 7)), 0b1111111) == 2903040);
}

TEST_CASE("small weight systems") {
  RootSystem a2(LieType::make(Family::A, 2));
  const auto adj = weight_system(Weight{1, 1}, a2);
  std::int64_t total = 0;
  for (const auto& wm : adj) {
    total += wm.mult;
    CHECK(wm.mult == (wm.weight.is_zero() ? 2 : 1));
  }
  CHECK(adj.size() == 7);
  CHECK(total == 8);

  RootSystem c2(LieType::make(Family::C, 2));
  const auto v5 = weight_system(Weight{0, 1}, c2);
  REQUIRE(v5.size() == 5);
  for (const auto& wm : v5) CHECK(wm.mult == 1);
  CHECK(weyl_orbit(Weight{0, 1}, c2).size() == 4);

  CHECK(weight_system(Weight(4), RootSystem(LieType::make(Family::D, 4))) ==
        std::vector<WeightMult>{{Weight(4), 1}});
}

TEST_CASE("type A multiplicities agree with tableau counts") {
  for (int r = 1; r <= 4; ++r) {
    RootSystem rs(LieType::make(Family::A, r));
    for (const auto& hw : dominant_weights_of_norm(rs, 4)) {
      CAPTURE(hw.str());
      std::map<std::vector<int>, std::int64_t> got;
      for (const auto& wm : weight_system(hw, rs)) got[wm.weight.vec()] = wm.mult;
      CHECK(got == oracle::type_a_character(hw.vec()));
    }
  }
}

TEST_CASE("weyl dimension equals total multiplicity, systems are W-invariant") {
  for (const auto& t : all_types_up_to_rank(7)) {
    RootSystem rs(t);
    for (const auto& hw : dominant_weights_of_norm(rs, 6)) {
      CAPTURE(t.name());
      CAPTURE(hw.str());
      const auto ws = weight_system(hw, rs);
      BigInt total = 0;
      std::map<Weight, std::int64_t> m;
      for (const auto& wm : ws) {
        total += wm.mult;
        m[wm.weight] = wm.mult;
      }
      CHECK(total == weyl_dim(hw, rs));
      if (rs.rank() <= 4) {
        for (int i = 0; i < rs.rank(); ++i)
          for (const auto& [w, c] : m) {
            auto it = m.find(reflect(w, i, rs));
            REQUIRE(it != m.end());
            CHECK(it->second == c);
          }
      }
      // Levi restriction: the orbit-size count of a sub-diagram system.
      BigInt orbit_total = 0;
      for (const auto& dm : dominant_multiplicities(hw, rs, rs.all_nodes()))
        orbit_total += dm.mult * orbit_size(dm.weight, rs, rs.all_nodes());
      CHECK(orbit_total == total);
    }
  }
}

TEST_CASE("orbits contain a unique dominant element") {
  RootSystem b3(LieType::make(Family::B, 3));
  for (const Weight& w : {Weight{1, -2, 1}, Weight{-1, 0, 2}, Weight{0, 0, -1}}) {
    const auto orbit = weyl_orbit(w, b3);
    int dominant = 0;
    for (const auto& v : orbit) dominant += is_dominant(v) ? 1 : 0;
    CHECK(dominant == 1);
    CHECK(is_dominant(to_dominant(w, b3, b3.all_nodes())));
    CHECK(std::find(orbit.begin(), orbit.end(), to_dominant(w, b3, b3.all_nodes())) != orbit.end());
  }
}
