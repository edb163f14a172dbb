#pragma once

// Exact root-system arithmetic for the ambient groups of the cominuscule
// Grassmannians: Cartan data, the invariant form, Weyl orbits, the Weyl
// dimension formula and Freudenthal multiplicities.
//
// Conventions: Bourbaki node numbering; cartan(i, j) = <alpha_i, alpha_j^vee>
// so row i lists the fundamental-weight coordinates of alpha_i.  Nodes are
// 0-based in code and 1-based in every printed label.  Most operations take
// a NodeSet selecting a sub-diagram (the Levi factor of a parabolic); the
// default is the whole diagram.

#include "cominus/exact.hpp"
#include "cominus/weight.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cominus {

enum class Family { A, B, C, D, E6, E7 };

struct LieType {
  Family family{Family::A};
  int rank{1};

  /// Validates rank bounds: A >= 1, B/C >= 2, D >= 3, E6/E7 fixed.
  static LieType make(Family family, int rank);
  std::string name() const;  // "A5", "E6", ...
  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Bitmask over 0-based nodes.
using NodeSet = std::uint64_t;

inline NodeSet node_bit(int node) { return NodeSet{1} << node; }
inline bool contains(NodeSet s, int node) { return (s >> node) & 1U; }

struct PositiveRoot {
  std::vector<int> simple;  // coordinates in the simple-root basis
  Weight fund;              // coordinates in the fundamental-weight basis
  int height{0};
  NodeSet support{0};
};

class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  NodeSet all_nodes() const { return (NodeSet{1} << rank()) - 1; }

  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_cartan_; }
  /// Squared lengths of the simple roots, long roots normalized to 2.
  const std::vector<Rational>& simple_root_norms() const { return norms_; }
  /// Integers proportional to the squared simple-root lengths; the integral
  /// form (x, alpha_j) = x_j * symmetrizer()[j] is used in the hot loops.
  const std::vector<int>& symmetrizer() const { return sym_; }

  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  /// Positive roots supported inside `nodes`.
  std::vector<const PositiveRoot*> positive_roots(NodeSet nodes) const;
  const Weight& simple_root(int node) const { return simple_fund_[node]; }
  /// rho in fundamental coordinates: the all-ones weight.
  Weight weyl_vector() const;

  Weight from_simple_coords(const std::vector<int>& simple) const;
  std::vector<Rational> to_simple_coords(const Weight& w) const;

  /// Closed-form count per type (self-test for the root closure).
  std::size_t expected_positive_root_count() const;

 private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> inverse_cartan_;
  std::vector<Rational> norms_;
  std::vector<int> sym_;
  std::vector<Weight> simple_fund_;
  std::vector<PositiveRoot> roots_;
};

/// Invariant form <a, b> induced by the Killing form, long roots of
/// squared length 2.  Throws std::invalid_argument on a rank mismatch.
Rational pairing(const Weight& a, const Weight& b, const RootSystem& rs);

bool is_dominant(const Weight& w);
bool is_dominant(const Weight& w, NodeSet nodes);

/// s_i(w) = w - w_i alpha_i
Weight reflect(const Weight& w, int node, const RootSystem& rs);
/// The unique `nodes`-dominant element of the orbit of w under the
/// reflections at `nodes`.
Weight to_dominant(Weight w, const RootSystem& rs, NodeSet nodes);
/// Same, also returning how many reflections were applied.
Weight to_dominant(Weight w, const RootSystem& rs, NodeSet nodes, int& reflections);

/// Weyl dimension formula over the sub-diagram `nodes`.
/// Throws std::invalid_argument if w is not dominant there.
BigInt weyl_dim(const Weight& w, const RootSystem& rs);
BigInt weyl_dim(const Weight& w, const RootSystem& rs, NodeSet nodes);

/// Orbit under the Weyl group generated by reflections at `nodes`, sorted.
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs, NodeSet nodes);

/// |W_nodes| = prod over positive roots of (ht + 1) / ht.
BigInt weyl_group_order(const RootSystem& rs, NodeSet nodes);
/// Size of the orbit of a `nodes`-dominant weight.
BigInt orbit_size(const Weight& dominant, const RootSystem& rs, NodeSet nodes);

struct WeightMult {
  Weight weight;
  std::int64_t mult{0};
  friend bool operator==(const WeightMult&, const WeightMult&) = default;
};

/// Freudenthal recursion restricted to the dominant chamber: multiplicities
/// of every `nodes`-dominant weight of the irreducible module with highest
/// weight `hw`.  The first entry is hw itself; the list is ordered by depth
/// below hw.
std::vector<WeightMult> dominant_multiplicities(const Weight& hw, const RootSystem& rs,
                                                NodeSet nodes);

/// Full weight multiset (dominant multiplicities extended by Weyl symmetry),
/// sorted by weight.
std::vector<WeightMult> weight_system(const Weight& hw, const RootSystem& rs);
std::vector<WeightMult> weight_system(const Weight& hw, const RootSystem& rs, NodeSet nodes);

}  // namespace cominus
