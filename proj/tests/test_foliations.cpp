#include "doctest.h"

#include "cominus/foliations.hpp"

using namespace cominus;

namespace {

const FoliationFamilyReport* find_rect(const std::vector<FoliationFamilyReport>& rs, int d, int e) {
  for (const auto& r : rs)
    if (r.d == d && r.e == e) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("rectangles") {
  const auto g36 = rect_family(3, 6, 4);
  const auto* r = find_rect(g36, 2, 2);
  REQUIRE(r);
  CHECK(r->l == 4);
  CHECK(r->degree == -1);
  CHECK(r->tf_rank == 5);
  CHECK(r->tf_c1 == 2);
  CHECK(r->minimal);
  CHECK(r->parameter_space == "Flag(1,5,V)");
  // (4,1) and (1,4) do not fit in the 3 x 3 box.
  CHECK(g36.size() == 1);

  const auto ad = rect_family(3, 10, 12);
  const auto* a = find_rect(ad, 4, 3);
  REQUIRE(a);
  CHECK(a->kind == FamilyKind::AraujoDruel);
  CHECK(a->m == 3);
  CHECK(a->degree == -6);
  CHECK(a->l == 10 - a->m);

  const auto g25 = rect_family(2, 5, 3);
  REQUIRE(g25.size() == 1);
  CHECK(g25[0].d == 3);
  CHECK(g25[0].e == 1);
  CHECK(g25[0].l == 4);
  CHECK(g25[0].minimal);

  // p = 5 in G(2,5): only (5) or (1^5), neither fits.
  CHECK(rect_family(2, 5, 5).empty());
  CHECK_THROWS_AS(rect_family(0, 5, 1), std::invalid_argument);
}

TEST_CASE("both orientations when the transpose fits") {
  const auto r = rect_family(3, 7, 6);
  CHECK(find_rect(r, 3, 2));
  CHECK(find_rect(r, 2, 3));
}

TEST_CASE("minimal rectangles are exactly the integer roots of x^2 - l x + p") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int p = 1; p <= k * (n - k); ++p) {
        const int l = min_twist_grass(k, n, p);
        const std::int64_t disc = std::int64_t{l} * l - 4 * p;
        bool gate = false;
        if (disc >= 0 && is_perfect_square(disc)) {
          const int s = static_cast<int>(ceil_sqrt(disc));
          if ((l + s) % 2 == 0) {
            const int big = (l + s) / 2, small = (l - s) / 2;
            gate = (big <= n - k && small <= k) || (small <= n - k && big <= k);
          }
        }
        bool minimal = false;
        for (const auto& r : rect_family(k, n, p)) {
          CHECK(r.degree == r.l - r.p - 1);
          CHECK(r.d * r.e == p);
          CHECK(r.tf_rank == k * (n - k) - p);
          CHECK(r.tf_c1 == n - r.d - r.e);
          if (r.minimal) {
            minimal = true;
            CHECK(r.d + r.e == l);
            CHECK(r.h0_weights.size() == 1);
          }
        }
        CHECK_MESSAGE(minimal == gate, "G:" << k << ":" << n << " p=" << p);
      }
}

TEST_CASE("symplectic and orthogonal families") {
  const auto s = symplectic_family(3, 2);
  CHECK(s.p == 3);
  CHECK(s.l == 3);
  CHECK(s.degree == -1);
  CHECK(s.parameter_space == "IG(1,6)");
  const auto s53 = symplectic_family(5, 3);
  CHECK(s53.p == 6);
  CHECK(s53.l == 4);
  CHECK(s53.degree == -3);
  CHECK(s53.h0_weights == std::vector<Weight>{Weight{0, 4, 0, 0, 0}});
  CHECK(symplectic_family(4, 1).degree == 0);

  const auto o = orthogonal_family(5, 2);
  CHECK(o.p == 3);
  CHECK(o.l == 4);
  CHECK(o.degree == 0);
  CHECK(o.parameter_space == "OG(2,10)");
  CHECK(orthogonal_family(5, 1).l == 2);
  const auto o63 = orthogonal_family(6, 3);
  CHECK(o63.p == 6);
  CHECK(o63.l == 6);
  CHECK(o63.degree == -1);
  CHECK(o63.h0_weights == std::vector<Weight>{Weight{0, 3, 0, 0, 0, 0}});

  for (int n = 3; n <= 7; ++n)
    for (int a = 1; a <= n - 2; ++a) {
      const int p = a * (a + 1) / 2;
      const auto sy = symplectic_family(n, a);
      CHECK(sy.l == min_twist_lagr(p));
      CHECK(sy.l == min_twist_lagr_oracle(n, p).l);
      CHECK(sy.minimal);
      const auto ot = orthogonal_family(n, a);
      CHECK(ot.l == min_twist_spinor(p));
      CHECK(ot.l == min_twist_spinor_oracle(n, p).l);
      CHECK(ot.minimal);
    }
  CHECK_THROWS_AS(symplectic_family(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(orthogonal_family(5, 4), std::invalid_argument);
}

TEST_CASE("Cayley family") {
  const auto c = cayley_family();
  CHECK(c.p == 8);
  CHECK(c.l == 8);
  CHECK(c.degree == -1);
  CHECK(c.tf_rank == 8);
  CHECK(c.tf_c1 == 4);
  CHECK(c.h0_weights == std::vector<Weight>{Weight::parse("4L6", 6)});
  CHECK(c.h0_dual_weights == std::vector<Weight>{Weight::parse("4L1", 6)});
}

TEST_CASE("atlas is sorted and minimal") {
  const auto atlas = foliation_scan(6);
  CHECK(!atlas.empty());
  for (std::size_t i = 0; i + 1 < atlas.size(); ++i)
    CHECK(std::tie(atlas[i].space, atlas[i].p) <= std::tie(atlas[i + 1].space, atlas[i + 1].p));
  for (const auto& r : atlas) CHECK(r.minimal);
}
