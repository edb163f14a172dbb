#pragma once

// Degree-zero Bott-Borel-Weil: H^0(E_beta(l)) != 0 iff beta + l*lambda_k is
// dominant, and then it is the irreducible G-module of that highest weight.

#include "cominus/plethysm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cominus {

enum class TwistSource {
  BottBorelWeil,      // minimum over the decomposition
  QuadricClosedForm,  // l(p) = p + 1 below the top degree, checked by BBW
};
std::string to_string(TwistSource s);

struct MinTwistReport {
  GrassmannianSpec spec;
  int p{0};
  int l{0};
  int degree{0};  // l - p - 1
  TwistSource source{TwistSource::BottBorelWeil};
  DecompositionMethod method{DecompositionMethod::WeightDP};
  std::vector<IrreducibleSummand> witnesses;  // summands with sections at twist l
  std::vector<Weight> h0_weights;             // beta + l*lambda_k per witness
  BigInt h0_dim;
  std::optional<int> closed_form_l;  // the family's closed form, if it has one
};

struct TwistOptions {
  /// Quadrics: use the BBW minimum instead of the closed form.
  bool force_plethysm{false};
  /// Decompose with the weight DP even where a fast path exists.
  bool force_dp{false};
};

/// 0 unless beta + l*lambda_k is dominant, else its ambient Weyl dimension.
BigInt h0_dim(const GrassmannianSpec& spec, const IrreducibleSummand& summand, int l);
/// Sum over a decomposition.
BigInt h0_dim(const DecompositionReport& report, int l);

/// Minimal twist from an existing decomposition (pure BBW).
MinTwistReport min_twist_from(const DecompositionReport& report);
/// Throws std::invalid_argument unless 1 <= p <= dim X.
MinTwistReport min_twist(const GrassmannianSpec& spec, int p, const TwistOptions& opts = {});
/// p = 1 .. dim X, sharing one decomposition pass.
std::vector<MinTwistReport> min_twist_all(const GrassmannianSpec& spec, const TwistOptions& opts = {});

/// The closed form of the family (Grassmannian, Lagrangian, spinor,
/// quadric), or nothing for E6/E7.
std::optional<int> closed_form_min_twist(const GrassmannianSpec& spec, int p);

enum class NonvanishingStatus { Confirmation, PermittedException, Violation };
std::string to_string(NonvanishingStatus s);

struct NonvanishingRecord {
  std::string space;
  int p{0};
  int l{0};
  BigInt h0_twist2;  // h^0(Omega^p(2))
  BigInt h0_twist3;  // h^0(Omega^p(3))
  NonvanishingStatus status{NonvanishingStatus::Confirmation};
  std::string note;
};

/// Every (X, p) with h^0(Omega^p(3)) != 0 over the catalog up to max_rank,
/// classified against: sections at twist 2 force p = 1; sections at twist
/// 3 force p <= 2 unless X is a Lagrangian Grassmannian and p = 3.
std::vector<NonvanishingRecord> nonvanishing_scan(int max_rank);

enum class ExceptionalTable { E6, E7 };
std::string to_string(ExceptionalTable t);

struct AuditCell {
  int column{0};  // 1-based table column; 0 for a computed summand the table lacks
  std::optional<Weight> table;
  std::optional<Weight> computed;
  bool match{false};
  std::string note;
};

struct AuditRow {
  int p{0};
  std::vector<AuditCell> cells;
  int table_l{0};
  int computed_l{0};
  bool summands_match{false};
  bool l_match{false};
  bool ok() const { return summands_match && l_match; }
};

struct TableAudit {
  ExceptionalTable which{ExceptionalTable::E6};
  std::vector<AuditRow> rows;
  int mismatched_cells{0};
  int mismatched_rows{0};
  bool all_match() const { return mismatched_rows == 0; }
};

/// Transcribed table rows: p, the weights as printed, l(p).
struct TableRow {
  int p;
  std::vector<std::string> weights;
  int l;
};
const std::vector<TableRow>& transcribed_table(ExceptionalTable which);

/// Recomputes rows 1..max_p (all rows by default) and diffs them against
/// the transcribed table, cell by cell.
TableAudit table_audit(ExceptionalTable which, std::optional<int> max_p = std::nullopt,
                       const DecomposeOptions& opts = {});

}  // namespace cominus
