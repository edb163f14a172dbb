#include "cominus/twists.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cominus {

std::string to_string(TwistSource s) {
  return s == TwistSource::BottBorelWeil ? "BottBorelWeil" : "QuadricClosedForm";
}

std::string to_string(NonvanishingStatus s) {
  switch (s) {
    case NonvanishingStatus::Confirmation: return "confirmation";
    case NonvanishingStatus::PermittedException: return "permitted-exception";
    case NonvanishingStatus::Violation: return "violation";
  }
  return "?";
}

std::string to_string(ExceptionalTable t) { return t == ExceptionalTable::E6 ? "E6" : "E7"; }

BigInt h0_dim(const GrassmannianSpec& spec, const IrreducibleSummand& summand, int l) {
  Weight w = summand.highest_weight;
  w[spec.k_index()] += l;
  if (!is_dominant(w)) return 0;
  return weyl_dim(w, spec.ambient());
}

BigInt h0_dim(const DecompositionReport& report, int l) {
  BigInt total = 0;
  for (const auto& s : report.summands) total += h0_dim(report.spec, s, l);
  return total;
}

std::optional<int> closed_form_min_twist(const GrassmannianSpec& spec, int p) {
  const auto& par = spec.params();
  switch (spec.family()) {
    case SpaceFamily::Grass:
      // Omega^top = K_X = O(-n).
      return p == spec.dim() ? par[1] : min_twist_grass(par[0], par[1], p);
    case SpaceFamily::Lagrangian: return min_twist_lagr(p);
    case SpaceFamily::Spinor: return min_twist_spinor(p);
    case SpaceFamily::QuadricOdd:
    case SpaceFamily::QuadricEven: return p < spec.dim() ? p + 1 : spec.dim();
    default: return std::nullopt;
  }
}

namespace {

void fill_witnesses(MinTwistReport& r, const DecompositionReport& d) {
  r.witnesses.clear();
  r.h0_weights.clear();
  r.h0_dim = 0;
  for (const auto& s : d.summands) {
    const BigInt h = h0_dim(d.spec, s, r.l);
    if (h == 0) continue;
    r.witnesses.push_back(s);
    Weight w = s.highest_weight;
    w[d.spec.k_index()] += r.l;
    r.h0_weights.push_back(std::move(w));
    r.h0_dim += h;
  }
  r.degree = r.l - r.p - 1;
}

// Every summand is Levi-dominant, so only the lambda_k coordinate can
// obstruct dominance; the first l with a dominant twist is the minimum of
// -beta_k, and dominance persists for all larger l.
int bbw_minimum(const DecompositionReport& d) {
  int l = std::numeric_limits<int>::max();
  for (const auto& s : d.summands) l = std::min(l, -s.highest_weight[d.spec.k_index()]);
  return l;
}

MinTwistReport from_decomposition(const DecompositionReport& d, const TwistOptions& opts) {
  MinTwistReport r;
  r.spec = d.spec;
  r.p = d.p;
  r.method = d.method;
  r.closed_form_l = closed_form_min_twist(d.spec, d.p);
  const int bbw = bbw_minimum(d);
  if (d.spec.is_quadric() && !opts.force_plethysm) {
    r.source = TwistSource::QuadricClosedForm;
    r.l = *r.closed_form_l;
    if (r.l != bbw)
      throw ConsistencyError("quadric closed form l = " + std::to_string(r.l) + " disagrees with BBW l = " +
                             std::to_string(bbw) + " on " + d.spec.name());
  } else {
    r.l = bbw;
  }
  fill_witnesses(r, d);
  return r;
}

}  // namespace

MinTwistReport min_twist_from(const DecompositionReport& report) {
  return from_decomposition(report, TwistOptions{.force_plethysm = true});
}

MinTwistReport min_twist(const GrassmannianSpec& spec, int p, const TwistOptions& opts) {
  if (p < 1 || p > spec.dim()) throw std::invalid_argument("p out of range (need 1 <= p <= dim X)");
  DecomposeOptions d;
  d.force_dp = opts.force_dp;
  return from_decomposition(decompose_omega(spec, p, d), opts);
}

std::vector<MinTwistReport> min_twist_all(const GrassmannianSpec& spec, const TwistOptions& opts) {
  DecomposeOptions d;
  d.force_dp = opts.force_dp;
  std::vector<MinTwistReport> out;
  for (const auto& rep : decompose_all(spec, d))
    if (rep.p >= 1) out.push_back(from_decomposition(rep, opts));
  return out;
}

std::vector<NonvanishingRecord> nonvanishing_scan(int max_rank) {
  std::vector<NonvanishingRecord> out;
  for (const auto& spec : catalog_up_to_rank(max_rank)) {
    for (const auto& rep : decompose_all(spec)) {
      if (rep.p < 1) continue;
      NonvanishingRecord rec;
      rec.space = spec.name();
      rec.p = rep.p;
      rec.l = bbw_minimum(rep);
      rec.h0_twist2 = h0_dim(rep, 2);
      rec.h0_twist3 = h0_dim(rep, 3);
      if (rec.h0_twist3 == 0) continue;
      const bool ok2 = rec.h0_twist2 == 0 || rec.p == 1;
      const bool ok3 = rec.p <= 2;
      const bool lagrangian = spec.family() == SpaceFamily::Lagrangian;
      // Q^3 is isomorphic to IG(2,4).
      const bool lagrangian_iso = spec.is_quadric() && spec.params()[0] == 3;
      if (ok2 && ok3) {
        rec.status = NonvanishingStatus::Confirmation;
      } else if (ok2 && rec.p == 3 && (lagrangian || lagrangian_iso)) {
        rec.status = NonvanishingStatus::PermittedException;
        rec.note = lagrangian ? "Lagrangian Grassmannian, p = 3" : "Q^3 = IG(2,4), p = 3";
      } else {
        rec.status = NonvanishingStatus::Violation;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

const std::vector<TableRow>& transcribed_table(ExceptionalTable which) {
  // Copied verbatim from the published tables, including row 8 of the
  // Cayley table.
  static const std::vector<TableRow> e6 = {
      {1, {"-2L1+L3"}, 2},
      {2, {"-3L1+L4"}, 3},
      {3, {"-4L1+L2+L5"}, 4},
      {4, {"-5L1+2L2+L6", "-5L1+2L5"}, 5},
      {5, {"-6L1+3L2", "-6L1+L2+L5+L6"}, 6},
      {6, {"-7L1+2L2+L5", "-7L1+L4+2L6"}, 7},
      {7, {"-8L1+L2+L4+L6", "-8L1+L3+3L6"}, 8},
      {8, {"-9L1+2L4", "-9L1+L2+L3+6L6", "-8L1+4L6"}, 8},
      {9, {"-10L1+L3+L4+L6", "-9L1+L2+3L6"}, 9},
      {10, {"-10L1+L4+2L6", "-11L1+2L3+L5"}, 10},
      {11, {"-12L1+3L3", "-11L1+L3+L5+L6"}, 11},
      {12, {"-12L1+2L3+L6", "-11L1+2L5"}, 11},
      {13, {"-12L1+L3+L5"}, 12},
      {14, {"-12L1+L4"}, 12},
      {15, {"-12L1+L2"}, 12},
  };
  static const std::vector<TableRow> e7 = {
      {1, {"-2L7+L6"}, 2},
      {2, {"-3L7+L5"}, 3},
      {3, {"-4L7+L4"}, 4},
      {4, {"-5L7+L2+L3"}, 5},
      {5, {"-6L7+2L3", "-6L7+L1+2L2"}, 6},
      {6, {"-7L7+3L2", "-7L7+L1+L2+L3"}, 7},
      {7, {"-8L7+2L2+L3", "-8L7+2L1+L4"}, 8},
      {8, {"-9L7+L1+L2+L4", "-9L7+3L1+L5"}, 9},
      {9, {"-10L7+2L4", "-10L7+2L1+L2+L5", "-10L7+4L1+L6"}, 10},
      {10, {"-11L7+L1+L4+L5", "-11L7+3L1+L2+L6", "-10L7+5L1"}, 10},
      {11, {"-12L7+L3+2L5", "-12L7+2L1+L4+L6", "-11L7+4L1+L2"}, 11},
      {12, {"-13L7+3L5", "-13L7+L1+L3+L5+L6", "-12L7+3L1+L4"}, 12},
      {13, {"-14L7+2L3+2L6", "-14L7+L1+2L5+L6", "-13L7+2L1+L3+L5"}, 13},
      {14, {"-15L7+L3+L5+2L6", "-14L7+L1+2L3+L6", "-14L7+2L1+2L5"}, 14},
      {15, {"-16L7+L4+3L6", "-14L7+3L3", "-15L7+L1+L3+L5+L6"}, 14},
      {16, {"-15L7+2L3+L5", "-17L7+L2+4L6", "-16L7+L1+L4+2L6"}, 15},
      {17, {"-18L7+5L6", "-16L7+L3+L4+L6", "-17L7+L1+L2+3L6"}, 16},
      {18, {"-16L7+2L4", "-17L7+L2+L3+2L6", "-18L7+L1+4L6"}, 16},
      {19, {"-18L7+L3+3L6", "-17L7+L2+L4+L6"}, 17},
      {20, {"-18L7+L4+2L6", "-17L7+2L2+L5"}, 17},
      {21, {"-18L7+L2+L5+L6", "-17L7+3L2"}, 17},
      {22, {"-18L7+2L5", "-18L7+2L2+L6"}, 18},
      {23, {"-18L7+L2+L5"}, 18},
      {24, {"-18L7+L4"}, 18},
      {25, {"-18L7+L3"}, 18},
      {26, {"-18L7+L1"}, 18},
  };
  return which == ExceptionalTable::E6 ? e6 : e7;
}

namespace {

// Why a printed weight cannot be a summand of Omega^p.
std::string diagnose_cell(const GrassmannianSpec& spec, const Weight& w, int p) {
  if (!is_dominant(w, spec.levi_nodes())) return "printed weight is not Levi-dominant";
  Weight levi = w;
  levi[spec.k_index()] = 0;
  try {
    const int a = twist_via_lemma(spec, levi, p);
    if (a != w[spec.k_index()])
      return "printed weight breaks the twist identity: its Levi part forces L" +
             std::to_string(spec.marked_node()) + " coefficient " + std::to_string(a);
  } catch (const ConsistencyError&) {
    return "printed weight breaks the twist identity: non-integer L" + std::to_string(spec.marked_node()) +
           " coefficient";
  }
  return "printed weight is consistent but absent from the decomposition";
}

}  // namespace

TableAudit table_audit(ExceptionalTable which, std::optional<int> max_p, const DecomposeOptions& opts) {
  const auto spec = which == ExceptionalTable::E6 ? make_cayley() : make_freudenthal();
  const auto& table = transcribed_table(which);
  const int last = max_p ? std::clamp(*max_p, 0, static_cast<int>(table.size())) : static_cast<int>(table.size());
  TableAudit audit;
  audit.which = which;
  if (last == 0) return audit;
  const auto reports = decompose_range(spec, last, opts);
  const int rank = spec.ambient().rank();
  for (int p = 1; p <= last; ++p) {
    const auto& trow = table[p - 1];
    const auto& rep = reports[p];
    AuditRow row;
    row.p = p;
    row.table_l = trow.l;
    std::vector<Weight> computed;
    for (const auto& s : rep.summands) computed.push_back(s.highest_weight);
    row.computed_l = from_decomposition(rep, {}).l;

    std::vector<bool> used(computed.size(), false);
    std::vector<std::size_t> unmatched_cells;
    for (std::size_t c = 0; c < trow.weights.size(); ++c) {
      AuditCell cell;
      cell.column = static_cast<int>(c + 1);
      cell.table = Weight::parse(trow.weights[c], rank);
      for (std::size_t j = 0; j < computed.size(); ++j)
        if (!used[j] && computed[j] == *cell.table) {
          used[j] = true;
          cell.computed = computed[j];
          cell.match = true;
          break;
        }
      if (!cell.match) unmatched_cells.push_back(row.cells.size());
      row.cells.push_back(std::move(cell));
    }
    // Pair leftovers in order so a typo shows up next to its correction.
    std::size_t next = 0;
    for (std::size_t j = 0; j < computed.size(); ++j) {
      if (used[j]) continue;
      if (next < unmatched_cells.size()) {
        row.cells[unmatched_cells[next++]].computed = computed[j];
      } else {
        AuditCell extra;
        extra.computed = computed[j];
        extra.note = "computed summand missing from the table";
        row.cells.push_back(std::move(extra));
      }
    }
    for (auto& cell : row.cells)
      if (!cell.match && cell.table) cell.note = diagnose_cell(spec, *cell.table, p);

    row.summands_match = std::all_of(row.cells.begin(), row.cells.end(), [](const AuditCell& c) { return c.match; });
    row.l_match = row.table_l == row.computed_l;
    for (const auto& c : row.cells) audit.mismatched_cells += c.match ? 0 : 1;
    audit.mismatched_rows += row.ok() ? 0 : 1;
    audit.rows.push_back(std::move(row));
  }
  return audit;
}

}  // namespace cominus
