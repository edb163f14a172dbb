#pragma once

// Decomposition of Lambda^p of the cotangent fiber into irreducible Levi
// modules.  The weight DP plus greedy subtraction works for every space;
// the partition-indexed fast paths cover the classical families.

#include "cominus/catalog.hpp"
#include "cominus/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cominus {

enum class DecompositionMethod {
  CauchyA,        // Grassmannians, partitions in the k x (n-k) box
  HooksC,         // Lagrangian, Q_1(2p)
  HooksD,         // spinor, Q_{-1}(2p)
  VectorQuadric,  // quadrics, exterior powers of the vector representation
  WeightDP,       // subset-sum DP over the fiber weights + subtraction
  WeightDPDual,   // WeightDP at N - p, transported by Serre-type duality
};

std::string to_string(DecompositionMethod m);

/// Character of Lambda^p of the cotangent fiber, sorted by weight.
struct WeightMultiset {
  int grade{0};
  std::vector<WeightMult> entries;
  BigInt total() const;
};

struct IrreducibleSummand {
  Weight highest_weight;  // full-group coordinates, lambda_k included
  BigInt levi_dim;
  int twist_check{0};     // a recomputed from the Levi part alone
  std::optional<Partition> partition;  // set by the partition-indexed paths
};

struct DecompositionReport {
  GrassmannianSpec spec;
  int p{0};
  DecompositionMethod method{DecompositionMethod::WeightDP};
  std::vector<IrreducibleSummand> summands;  // sorted by highest weight
  BigInt expected_rank;                      // C(dim X, p)
  BigInt rank() const;
};

struct DecomposeOptions {
  /// Ignore the fast paths and run the weight DP.
  bool force_dp{false};
  /// For p > dim/2 on the DP path, decompose N - p and dualize.
  bool use_duality{true};
};

/// Full weight multiset of Lambda^p; throws std::invalid_argument unless
/// 0 <= p <= dim X.
WeightMultiset omega_p_weights(const GrassmannianSpec& spec, int p);

/// Levi-dominant part of every grade 0..max_p from a single DP pass.
std::vector<std::vector<WeightMult>> omega_dominant_weights(const GrassmannianSpec& spec, int max_p);

/// Greedy highest-weight subtraction on a Levi-invariant multiset.
/// Throws ConsistencyError if a multiplicity would go negative.
std::vector<IrreducibleSummand> decompose(const WeightMultiset& ws, const GrassmannianSpec& spec);
/// Same, on the Levi-dominant entries only.
std::vector<IrreducibleSummand> decompose_dominant(std::vector<WeightMult> dominant, const GrassmannianSpec& spec,
                                                   int p);

struct PartitionSummand {
  Partition mu;
  IrreducibleSummand summand;
};

/// Omega^p of G(k, n): one summand per partition of p in the k x (n-k) box.
std::vector<PartitionSummand> cauchy_decompose(int k, int n, int p);
/// Omega^p of IG(n, 2n) or OG(n, 2n), indexed by the hook classes.
std::vector<PartitionSummand> hooks_decompose(const GrassmannianSpec& spec, int p);
/// Omega^p of a quadric: -p*lambda_1 plus Lambda^p of the Levi vector
/// representation (two summands in the middle degree of an even quadric).
std::vector<IrreducibleSummand> vector_quadric_decompose(const GrassmannianSpec& spec, int p);

/// The lambda_k coefficient a of E_{rho + a lambda_k} in Lambda^p, from
/// the Levi part rho alone: a = <p*lambda - rho, lambda_k> / <lambda_k, lambda_k>
/// with lambda the cotangent weight.  Throws ConsistencyError if the
/// division is not exact.
int twist_via_lemma(const GrassmannianSpec& spec, const Weight& levi_weight, int mu_size);

/// Builds a summand with its Levi dimension and twist check filled in.
IrreducibleSummand make_summand(const GrassmannianSpec& spec, const Weight& highest_weight, int p);

/// Summands of Lambda^{N-p} from those of Lambda^p: Levi dual, then
/// twisted by the canonical weight -c1 * lambda_k.
std::vector<IrreducibleSummand> dual_summands(const GrassmannianSpec& spec,
                                              const std::vector<IrreducibleSummand>& summands, int p);

DecompositionReport decompose_omega(const GrassmannianSpec& spec, int p, const DecomposeOptions& opts = {});
/// Every p from 0 to dim X, sharing one DP pass where the DP is used.
std::vector<DecompositionReport> decompose_all(const GrassmannianSpec& spec, const DecomposeOptions& opts = {});
/// p = 0 .. max_p.
std::vector<DecompositionReport> decompose_range(const GrassmannianSpec& spec, int max_p,
                                                 const DecomposeOptions& opts = {});

}  // namespace cominus
