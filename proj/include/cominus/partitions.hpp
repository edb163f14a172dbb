#pragma once

// Young-diagram combinatorics behind the minimal twists of the classical
// cominuscule Grassmannians, with exhaustive oracles next to each closed
// form.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cominus {

/// Weakly decreasing positive parts; the empty list is the zero partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |mu|
  int rows() const { return static_cast<int>(parts_.size()); }
  /// mu_i with 1-based i; zero past the last row.
  int part(int i) const { return i >= 1 && i <= rows() ? parts_[i - 1] : 0; }
  int first() const { return part(1); }
  bool empty() const { return parts_.empty(); }

  /// "(3,3,1)"
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

Partition dual(const Partition& mu);

/// Frobenius coordinates (a_1..a_r | b_1..b_r): arm and leg lengths of the
/// diagonal boxes.
struct Frobenius {
  std::vector<int> arms;
  std::vector<int> legs;
};
Frobenius frobenius(const Partition& mu);

/// All partitions of `size` with at most `max_rows` rows and parts at most
/// `max_cols`, in reverse-lexicographic order.
std::vector<Partition> partitions_in_box(int size, int max_rows, int max_cols);

/// Partitions of 2p with at most n rows whose Frobenius coordinates satisfy
/// a_i = b_i + 1 (the summands of Lambda^p S^2 of a rank-n bundle).
std::vector<Partition> hooks_q1(int p, int n);
/// Same with a_i = b_i - 1 (Lambda^p Lambda^2 of a rank-n bundle).
std::vector<Partition> hooks_qm1(int p, int n);

/// Cost a partition pays before a Schur summand acquires sections.
enum class TwistCost {
  RowPlusColumn,  // mu_1 + mu_1'  (Grassmannian)
  FirstRow,       // mu_1          (Lagrangian)
  FirstTwoRows,   // mu_1 + mu_2   (spinor)
};
std::string to_string(TwistCost c);
int twist_cost(const Partition& mu, TwistCost c);

struct MinTwistWitness {
  int l{0};
  TwistCost cost{TwistCost::RowPlusColumn};
  std::vector<Partition> partitions;  // every minimizer, reverse-lex order
};

/// Closed form for G(k, n); k is normalized to min(k, n - k).
/// Throws std::invalid_argument unless 1 <= k < n and 1 <= p <= k(n - k).
int min_twist_grass(int k, int n, int p);
/// Exhaustive minimum of mu_1 + mu_1' over the k x (n - k) box.
MinTwistWitness min_twist_grass_oracle(int k, int n, int p);

/// ceil(sqrt(2p) + 1/2); p >= 1.
int min_twist_lagr(int p);
/// Minimum of mu_1 over hooks_q1(p, n); 1 <= p <= n(n+1)/2.
MinTwistWitness min_twist_lagr_oracle(int n, int p);

/// 2a or 2a - 1 from 2p = a(a+1) - 2b; p >= 1.
int min_twist_spinor(int p);
/// Minimum of mu_1 + mu_2 over hooks_qm1(p, n); 1 <= p <= n(n-1)/2.
MinTwistWitness min_twist_spinor_oracle(int n, int p);

}  // namespace cominus
