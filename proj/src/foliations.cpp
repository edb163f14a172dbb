#include "cominus/foliations.hpp"

#include <algorithm>
#include <stdexcept>

namespace cominus {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::RectFlag: return "RectFlag";
    case FamilyKind::AraujoDruel: return "AraujoDruel";
    case FamilyKind::SymplecticProj: return "SymplecticProj";
    case FamilyKind::OrthogonalProj: return "OrthogonalProj";
    case FamilyKind::CayleyLines: return "CayleyLines";
  }
  return "?";
}

namespace {

void fill_h0(FoliationFamilyReport& r, const GrassmannianSpec& spec) {
  const auto mt = min_twist(spec, r.p);
  r.min_twist = mt.l;
  r.minimal = r.l == mt.l;
  if (!r.minimal) return;
  const auto& rs = spec.ambient();
  for (const auto& w : mt.h0_weights) {
    r.h0_weights.push_back(w);
    r.h0_dual_weights.push_back(to_dominant(-w, rs, rs.all_nodes()));
  }
}

}  // namespace

std::vector<FoliationFamilyReport> rect_family(int k, int n, int p) {
  if (k < 1 || k >= n) throw std::invalid_argument("k out of range (need 1 <= k < n)");
  k = std::min(k, n - k);
  const int h = n - k;
  if (p < 1 || p > k * h) throw std::invalid_argument("p out of range (need 1 <= p <= k(n-k))");
  const auto spec = make_grass(k, n);
  const int lp = closed_form_min_twist(spec, p).value();
  std::vector<FoliationFamilyReport> out;
  for (int e = 1; e <= k; ++e) {
    if (p % e != 0) continue;
    const int d = p / e;
    if (d > h) continue;
    FoliationFamilyReport r;
    r.space = spec.name();
    r.kind = e == k ? FamilyKind::AraujoDruel : FamilyKind::RectFlag;
    r.p = p;
    r.d = d;
    r.e = e;
    r.h = h;
    if (e == k) r.m = h - d;
    r.l = d + e;
    r.degree = r.l - p - 1;
    r.parameter_space = "Flag(" + std::to_string(h - d) + "," + std::to_string(h + e) + ",V)";
    r.tf_rank = k * h - d * e;
    r.tf_c1 = n - d - e;
    r.min_twist = lp;
    r.minimal = r.l == lp;
    out.push_back(std::move(r));
  }
  // The witness set is only computed once per (k, n, p).
  if (std::any_of(out.begin(), out.end(), [](const auto& r) { return r.minimal; })) {
    const auto mt = min_twist(spec, p);
    for (auto& r : out)
      if (r.minimal) {
        // The rectangle's own summand: mu = (d^e) has e rows and d columns.
        for (std::size_t i = 0; i < mt.witnesses.size(); ++i) {
          const auto& mu = mt.witnesses[i].partition;
          if (!mu || mu->rows() != r.e || mu->first() != r.d || mu->size() != p) continue;
          r.h0_weights.push_back(mt.h0_weights[i]);
          r.h0_dual_weights.push_back(to_dominant(-mt.h0_weights[i], spec.ambient(), spec.ambient().all_nodes()));
        }
      }
  }
  return out;
}

FoliationFamilyReport symplectic_family(int n, int a) {
  if (n < 2) throw std::invalid_argument("n out of range (need n >= 2)");
  if (a < 1 || a > n - 1) throw std::invalid_argument("a out of range (need 1 <= a <= n-1)");
  const auto spec = make_lagrangian(n);
  FoliationFamilyReport r;
  r.space = spec.name();
  r.kind = FamilyKind::SymplecticProj;
  r.a = a;
  r.p = a * (a + 1) / 2;
  r.l = a + 1;
  r.degree = r.l - r.p - 1;
  r.parameter_space = "IG(" + std::to_string(n - a) + "," + std::to_string(2 * n) + ")";
  r.tf_rank = spec.dim() - r.p;
  r.tf_c1 = spec.index_c1() - r.l;
  fill_h0(r, spec);
  return r;
}

FoliationFamilyReport orthogonal_family(int n, int a) {
  if (n < 3) throw std::invalid_argument("n out of range (need n >= 3)");
  if (a < 1 || a > n - 2) throw std::invalid_argument("a out of range (need 1 <= a <= n-2)");
  const auto spec = make_spinor(n);
  FoliationFamilyReport r;
  r.space = spec.name();
  r.kind = FamilyKind::OrthogonalProj;
  r.a = a;
  r.p = a * (a + 1) / 2;
  r.l = 2 * a;
  r.degree = r.l - r.p - 1;
  r.parameter_space = "OG(" + std::to_string(n - a - 1) + "," + std::to_string(2 * n) + ")";
  r.tf_rank = spec.dim() - r.p;
  r.tf_c1 = spec.index_c1() - r.l;
  fill_h0(r, spec);
  return r;
}

FoliationFamilyReport cayley_family() {
  const auto spec = make_cayley();
  FoliationFamilyReport r;
  r.space = spec.name();
  r.kind = FamilyKind::CayleyLines;
  r.p = 8;
  r.l = 8;
  r.degree = r.l - r.p - 1;
  r.parameter_space = "OP^2 (dual plane)";
  r.tf_rank = spec.dim() - r.p;
  r.tf_c1 = spec.index_c1() - r.l;
  fill_h0(r, spec);
  if (!r.minimal)
    throw ConsistencyError("Cayley plane: computed l(8) = " + std::to_string(r.min_twist) + ", expected 8");
  return r;
}

std::vector<FoliationFamilyReport> foliation_scan(int max_rank) {
  std::vector<FoliationFamilyReport> out;
  for (const auto& spec : catalog_up_to_rank(max_rank)) {
    switch (spec.family()) {
      case SpaceFamily::Grass: {
        const int k = spec.params()[0], n = spec.params()[1];
        if (2 * k > n) break;  // G(k,n) = G(n-k,n) is listed once
        for (int p = 1; p <= spec.dim(); ++p)
          for (auto& r : rect_family(k, n, p))
            if (r.minimal) out.push_back(std::move(r));
        break;
      }
      case SpaceFamily::Lagrangian:
        for (int a = 1; a <= spec.params()[0] - 1; ++a) out.push_back(symplectic_family(spec.params()[0], a));
        break;
      case SpaceFamily::Spinor:
        for (int a = 1; a <= spec.params()[0] - 2; ++a) out.push_back(orthogonal_family(spec.params()[0], a));
        break;
      case SpaceFamily::Cayley: out.push_back(cayley_family()); break;
      default: break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.space, x.p) < std::tie(y.space, y.p);
  });
  return out;
}

}  // namespace cominus
