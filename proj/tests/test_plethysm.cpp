#include "doctest.h"

#include "cominus/plethysm.hpp"

#include <map>
#include <set>

using namespace cominus;

namespace {

// Lambda^p character by brute force over p-subsets of the fiber weights.
std::map<Weight, std::int64_t> subset_character(const GrassmannianSpec& spec, int p) {
  std::vector<Weight> fiber;
  for (const auto& r : nilradical_roots(spec)) fiber.push_back(-r);
  std::map<Weight, std::int64_t> out;
  const int n = static_cast<int>(fiber.size());
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    Weight w(spec.ambient().rank());
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) w += fiber[i];
    ++out[w];
  }
  return out;
}

std::map<Weight, std::int64_t> summand_character(const GrassmannianSpec& spec,
                                                 const std::vector<IrreducibleSummand>& ss) {
  std::map<Weight, std::int64_t> out;
  for (const auto& s : ss)
    for (const auto& wm : weight_system(s.highest_weight, spec.ambient(), spec.levi_nodes())) out[wm.weight] += wm.mult;
  return out;
}

std::vector<Weight> weights_of(const DecompositionReport& r) {
  std::vector<Weight> out;
  for (const auto& s : r.summands) out.push_back(s.highest_weight);
  return out;
}

std::vector<GrassmannianSpec> small_specs() {
  return {make_grass(1, 4), make_grass(2, 4), make_grass(2, 5), make_grass(3, 6), make_quadric(3), make_quadric(5),
          make_quadric(6), make_lagrangian(2), make_lagrangian(3), make_spinor(4), make_spinor(5)};
}

}  // namespace

TEST_CASE("omega_p_weights matches the subset enumeration") {
  for (const auto& spec : small_specs()) {
    for (int p = 0; p <= spec.dim(); ++p) {
      const auto ws = omega_p_weights(spec, p);
      CHECK(ws.grade == p);
      CHECK(ws.total() == binomial(spec.dim(), p));
      std::map<Weight, std::int64_t> got;
      for (const auto& e : ws.entries) got[e.weight] += e.mult;
      CHECK_MESSAGE(got == subset_character(spec, p), spec.name() << " p=" << p);
    }
  }
}

TEST_CASE("omega_p_weights endpoints") {
  const auto e6 = make_cayley();
  const auto w0 = omega_p_weights(e6, 0);
  REQUIRE(w0.entries.size() == 1);
  CHECK(w0.entries[0].weight.is_zero());
  const auto w1 = omega_p_weights(e6, 1);
  CHECK(w1.entries.size() == 16);
  for (const auto& e : w1.entries) CHECK(e.mult == 1);
  const auto top = omega_p_weights(e6, 16);
  REQUIRE(top.entries.size() == 1);
  CHECK(top.entries[0].weight == -12 * Weight::fundamental(6, 1));
  CHECK_THROWS_AS(omega_p_weights(e6, 17), std::invalid_argument);
  CHECK_THROWS_AS(omega_p_weights(e6, -1), std::invalid_argument);
}

TEST_CASE("summand characters add up to Lambda^p") {
  for (const auto& spec : small_specs()) {
    for (int p = 0; p <= spec.dim(); ++p) {
      const auto r = decompose_omega(spec, p);
      CHECK_MESSAGE(summand_character(spec, r.summands) == subset_character(spec, p), spec.name() << " p=" << p);
    }
  }
}

TEST_CASE("p = 1 is the cotangent weight") {
  for (const auto& spec : catalog_up_to_rank(6)) {
    const auto r = decompose_omega(spec, 1);
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].highest_weight == spec.cotangent_weight());
  }
}

TEST_CASE("exceptional rows") {
  const auto e6 = decompose_omega(make_cayley(), 4);
  CHECK(weights_of(e6) == std::vector<Weight>{Weight::parse("-5L1+2L5", 6), Weight::parse("-5L1+2L2+L6", 6)});
  CHECK(e6.rank() == binomial(16, 4));

  const auto e7 = decompose_omega(make_freudenthal(), 9);
  CHECK(e7.summands.size() == 3);
  const auto ws = weights_of(e7);
  CHECK(std::count(ws.begin(), ws.end(), Weight::parse("4L1+L6-10L7", 7)) == 1);
  CHECK(e7.rank() == binomial(27, 9));
}

TEST_CASE("Cauchy decomposition") {
  const auto g24 = cauchy_decompose(2, 4, 2);
  REQUIRE(g24.size() == 2);
  std::set<Partition> mus;
  for (const auto& ps : g24) mus.insert(ps.mu);
  CHECK(mus == std::set<Partition>{Partition{2}, Partition{1, 1}});

  for (int p = 0; p <= 5; ++p) {
    const auto pn = cauchy_decompose(1, 6, p);
    REQUIRE(pn.size() == 1);
    CHECK(pn[0].mu.rows() <= 1);
  }

  const auto g36 = cauchy_decompose(3, 6, 9);
  REQUIRE(g36.size() == 1);
  CHECK(g36[0].mu == Partition{3, 3, 3});
  CHECK(g36[0].summand.highest_weight == Weight{0, 0, -6, 0, 0});
}

TEST_CASE("hook decompositions") {
  const auto ig1 = hooks_decompose(make_lagrangian(3), 1);
  REQUIRE(ig1.size() == 1);
  CHECK(ig1[0].mu == Partition{2});
  CHECK(ig1[0].summand.highest_weight == Weight{0, 2, -2});

  const auto og1 = hooks_decompose(make_spinor(5), 1);
  REQUIRE(og1.size() == 1);
  CHECK(og1[0].mu == Partition{1, 1});
  CHECK(og1[0].summand.highest_weight == Weight{0, 0, 1, 0, -2});

  // The rectangle (3,3) carries 3*lambda_1 - 3*lambda_3.
  const auto ig3 = hooks_decompose(make_lagrangian(3), 3);
  bool found = false;
  for (const auto& ps : ig3)
    if (ps.mu == Partition{3, 3}) {
      found = true;
      CHECK(ps.summand.highest_weight == Weight{3, 0, -3});
    }
  CHECK(found);
}

TEST_CASE("twist_via_lemma") {
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p <= n * (n + 1) / 2; ++p)
      for (const auto& ps : hooks_decompose(make_lagrangian(n), p)) CHECK(ps.summand.highest_weight[n - 1] == -ps.mu.first());
  for (int n = 3; n <= 6; ++n)
    for (int p = 1; p <= n * (n - 1) / 2; ++p)
      for (const auto& ps : hooks_decompose(make_spinor(n), p))
        CHECK(ps.summand.highest_weight[n - 1] == -ps.mu.part(1) - ps.mu.part(2));
  const auto e6 = make_cayley();
  CHECK(twist_via_lemma(e6, Weight(6), 0) == 0);
  CHECK_THROWS_AS(twist_via_lemma(e6, Weight{1, 0, 0, 0, 0, 0}, 1), std::invalid_argument);
  // Levi part that no summand of Lambda^1 can carry.
  CHECK_THROWS_AS(twist_via_lemma(make_grass(2, 5), Weight{1, 0, 0, 0}, 1), ConsistencyError);
}

TEST_CASE("every summand satisfies the twist identity") {
  for (const auto& spec : catalog_up_to_rank(5))
    for (const auto& r : decompose_all(spec))
      for (const auto& s : r.summands) CHECK(s.twist_check == s.highest_weight[spec.k_index()]);
}

TEST_CASE("fast paths agree with the weight DP") {
  DecomposeOptions dp;
  dp.force_dp = true;
  for (const auto& spec : catalog_up_to_rank(6)) {
    if (!spec.is_classical() || spec.dim() > 12) continue;
    for (int p = 0; p <= spec.dim(); ++p) {
      const auto fast = decompose_omega(spec, p);
      const auto slow = decompose_omega(spec, p, dp);
      CHECK(fast.method != DecompositionMethod::WeightDP);
      CHECK_MESSAGE(weights_of(fast) == weights_of(slow), spec.name() << " p=" << p);
    }
  }
}

TEST_CASE("duality matches the direct DP") {
  DecomposeOptions direct;
  direct.use_duality = false;
  for (const auto& spec : {make_cayley(), make_spinor(5), make_grass(2, 6)}) {
    DecomposeOptions dual;
    dual.force_dp = direct.force_dp = true;
    for (int p = spec.dim() / 2 + 1; p <= spec.dim(); ++p) {
      const auto a = decompose_omega(spec, p, dual);
      const auto b = decompose_omega(spec, p, direct);
      CHECK(a.method == DecompositionMethod::WeightDPDual);
      CHECK(b.method == DecompositionMethod::WeightDP);
      CHECK_MESSAGE(weights_of(a) == weights_of(b), spec.name() << " p=" << p);
    }
  }
}

TEST_CASE("decompose rejects a non-invariant multiset") {
  const auto spec = make_grass(2, 4);
  auto ws = omega_p_weights(spec, 2);
  ws.entries.push_back({Weight{0, -2, 1}, 1});
  CHECK_THROWS_AS(decompose(ws, spec), ConsistencyError);
}

TEST_CASE("rank identity through dimension 21") {
  for (const auto& spec : catalog_up_to_rank(7)) {
    if (spec.dim() > 21) continue;
    for (const auto& r : decompose_all(spec)) CHECK(r.rank() == r.expected_rank);
  }
}

TEST_CASE("pruned dominant DP equals the dominant part of the full multiset") {
  for (const auto& spec : {make_grass(2, 6), make_grass(3, 6), make_quadric(7), make_lagrangian(4), make_spinor(5),
                           make_cayley()}) {
    const auto dom = omega_dominant_weights(spec, spec.dim());
    for (int p = 0; p <= spec.dim(); ++p) {
      std::vector<WeightMult> expect;
      for (const auto& e : omega_p_weights(spec, p).entries)
        if (is_dominant(e.weight, spec.levi_nodes())) expect.push_back(e);
      CHECK_MESSAGE(dom[p] == expect, spec.name() << " p=" << p);
    }
  }
}
