#pragma once

// The cominuscule Grassmannians X = G/P_k: ambient root system, marked node
// and the data derived from the nilradical (dimension, index, cotangent
// weight).  Derived fields are recomputed from the root system, never
// copied from a table.

#include "cominus/rootsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cominus {

enum class SpaceFamily { Grass, QuadricOdd, QuadricEven, Lagrangian, Spinor, Cayley, Freudenthal };

std::string to_string(SpaceFamily f);

class GrassmannianSpec {
 public:
  SpaceFamily family() const { return family_; }
  /// Grass: {k, n}; quadrics: {m}; Lagrangian/Spinor: {n}; E6/E7: {}.
  const std::vector<int>& params() const { return params_; }
  const RootSystem& ambient() const { return *ambient_; }
  std::shared_ptr<const RootSystem> ambient_ptr() const { return ambient_; }
  /// 1-based marked node.
  int marked_node() const { return marked_node_; }
  /// 0-based coordinate of lambda_k in a Weight.
  int k_index() const { return marked_node_ - 1; }
  NodeSet levi_nodes() const { return ambient_->all_nodes() & ~node_bit(k_index()); }
  int dim() const { return dim_; }
  int index_c1() const { return index_c1_; }
  const Weight& cotangent_weight() const { return cotangent_; }
  /// Positive roots with nonzero alpha_k coefficient.
  const std::vector<const PositiveRoot*>& nilradical() const { return nilradical_; }

  bool is_quadric() const {
    return family_ == SpaceFamily::QuadricOdd || family_ == SpaceFamily::QuadricEven;
  }
  bool is_classical() const {
    return family_ != SpaceFamily::Cayley && family_ != SpaceFamily::Freudenthal;
  }

  /// Canonical textual name: G:k:n, Q:m, IG:n, OG:n, E6, E7.
  std::string name() const;
  /// Human-readable: "Grassmannian G(3,9)", "Cayley plane E6/P1", ...
  std::string description() const;
  /// Semisimple Levi type, e.g. "D5" or "A2xA5", plus the torus.
  std::string levi_description() const;

  friend GrassmannianSpec make_spec(SpaceFamily family, std::vector<int> params);

 private:
  SpaceFamily family_{SpaceFamily::Grass};
  std::vector<int> params_;
  std::shared_ptr<const RootSystem> ambient_;
  int marked_node_{1};
  int dim_{0};
  int index_c1_{0};
  Weight cotangent_;
  std::vector<const PositiveRoot*> nilradical_;
};

/// Throws std::invalid_argument naming the offending parameter.
GrassmannianSpec make_spec(SpaceFamily family, std::vector<int> params);

GrassmannianSpec make_grass(int k, int n);
/// Q^m: B_{(m+1)/2}/P_1 for odd m >= 3, D_{(m+2)/2}/P_1 for even m >= 4.
GrassmannianSpec make_quadric(int m);
GrassmannianSpec make_lagrangian(int n);  // IG(n, 2n) = C_n/P_n, n >= 2
GrassmannianSpec make_spinor(int n);      // OG(n, 2n) = D_n/P_n, n >= 3
GrassmannianSpec make_cayley();           // E6/P_1
GrassmannianSpec make_freudenthal();      // E7/P_7

/// Nilradical roots as fundamental-weight vectors; their negatives are the
/// weights of the cotangent fiber.
std::vector<Weight> nilradical_roots(const GrassmannianSpec& spec);

/// Every catalog space whose ambient group has rank <= max_rank, in a fixed
/// order (G:k:n for all 1 <= k < n, quadrics, IG, OG, E6, E7).
std::vector<GrassmannianSpec> catalog_up_to_rank(int max_rank);

/// Computed vs tabulated dimension, index and cotangent weight.
struct Table1Record {
  std::string space;
  int dim{0};
  int index_c1{0};
  Weight cotangent;
  int expected_dim{0};
  int expected_c1{0};
  std::optional<Weight> expected_cotangent;  // absent where only the bundle is tabulated
  bool dim_ok{false};
  bool c1_ok{false};
  bool cotangent_ok{false};
  std::string note;
  bool ok() const { return dim_ok && c1_ok && cotangent_ok; }
};

Table1Record check_table1(const GrassmannianSpec& spec);

}  // namespace cominus
