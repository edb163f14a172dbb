#pragma once

// Numeric invariants of the minimal-degree foliation families: codimension,
// twist, degree, rank and c1 of the tangent sheaf, and the parameter space.

#include "cominus/twists.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cominus {

enum class FamilyKind { RectFlag, AraujoDruel, SymplecticProj, OrthogonalProj, CayleyLines };
std::string to_string(FamilyKind k);

struct FoliationFamilyReport {
  std::string space;
  FamilyKind kind{FamilyKind::RectFlag};
  int p{0};
  int l{0};       // c1 of the normal sheaf
  int degree{0};  // l - p - 1
  // Family parameters; unused ones stay zero.
  int d{0}, e{0}, h{0};  // rectangle (d^e), h = n - k
  int m{0};              // Araujo-Druel: dim W = h - d
  int a{0};              // symplectic / orthogonal families
  std::string parameter_space;
  int tf_rank{0};
  int tf_c1{0};
  bool minimal{false};  // l equals the minimal twist l(p)
  int min_twist{0};
  /// Highest weights of H^0(Omega^p(l)) (and their duals where they differ).
  std::vector<Weight> h0_weights;
  std::vector<Weight> h0_dual_weights;
};

/// Rectangles (d^e) with p = d*e, 1 <= e <= k, 1 <= d <= n - k, for
/// G(k, n) with k normalized to min(k, n - k).  Both orientations are
/// listed when both fit; non-minimal rectangles carry minimal = false.
/// Empty when p has no admissible factorization.
std::vector<FoliationFamilyReport> rect_family(int k, int n, int p);

/// IG(n-a, 2n) family on IG(n, 2n): p = a(a+1)/2, l = a + 1; 1 <= a <= n-1.
FoliationFamilyReport symplectic_family(int n, int a);
/// OG(n-a-1, 2n) family on OG(n, 2n): p = a(a+1)/2, l = 2a; 1 <= a <= n-2.
FoliationFamilyReport orthogonal_family(int n, int a);
/// Codimension-8 family on the Cayley plane parametrized by the dual plane.
/// Throws ConsistencyError if the computed minimal twist is not 8.
FoliationFamilyReport cayley_family();

/// Every minimal family over the catalog up to max_rank, sorted by
/// (space, p).
std::vector<FoliationFamilyReport> foliation_scan(int max_rank);

}  // namespace cominus
