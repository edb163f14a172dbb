#include "cominus/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

namespace cominus {

SpaceParseError::SpaceParseError(const std::string& text, std::size_t column, const std::string& what)
    : std::invalid_argument("'" + text + "' column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

constexpr int kMaxRank = 63;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_colons(std::string_view s) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(':', start);
    out.push_back({s.substr(start, pos == std::string_view::npos ? s.npos : pos - start), start + 1});
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

GrassmannianSpec parse_space(std::string_view text) {
  const std::string whole(text);
  if (text.empty()) throw SpaceParseError(whole, 1, "empty space name (expected G:k:n, Q:m, IG:n, OG:n, E6 or E7)");
  const auto toks = split_colons(text);
  const auto fail = [&](const Token& t, const std::string& what) -> SpaceParseError {
    return SpaceParseError(whole, t.column, what);
  };
  const auto integer = [&](const Token& t) {
    int v = 0;
    const auto* b = t.text.data();
    const auto* e = b + t.text.size();
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (t.text.empty() || ec != std::errc() || ptr != e) throw fail(t, "expected an integer, got '" + std::string(t.text) + "'");
    return v;
  };
  const auto arity = [&](std::size_t n) {
    if (toks.size() - 1 < n) {
      const auto& last = toks.back();
      throw SpaceParseError(whole, last.column + last.text.size(),
                            std::string(toks[0].text) + " needs " + std::to_string(n) + " parameter(s)");
    }
    if (toks.size() - 1 > n) throw fail(toks[n + 1], "unexpected token '" + std::string(toks[n + 1].text) + "'");
  };

  const auto fam = toks[0].text;
  if (fam == "G") {
    arity(2);
    const int k = integer(toks[1]), n = integer(toks[2]);
    if (n < 2 || n - 1 > kMaxRank) throw fail(toks[2], "n out of range (need 2 <= n <= 64)");
    if (k < 1 || k >= n) throw fail(toks[1], "k out of range (need 1 <= k < n)");
    return make_grass(k, n);
  }
  if (fam == "Q") {
    arity(1);
    const int m = integer(toks[1]);
    if (m < 3 || m > 2 * kMaxRank - 2) throw fail(toks[1], "m out of range (need 3 <= m <= 124)");
    return make_quadric(m);
  }
  if (fam == "IG") {
    arity(1);
    const int n = integer(toks[1]);
    if (n < 2 || n > kMaxRank) throw fail(toks[1], "n out of range (need 2 <= n <= 63)");
    return make_lagrangian(n);
  }
  if (fam == "OG") {
    arity(1);
    const int n = integer(toks[1]);
    if (n < 3 || n > kMaxRank) throw fail(toks[1], "n out of range (need 3 <= n <= 63)");
    return make_spinor(n);
  }
  if (fam == "E6") {
    arity(0);
    return make_cayley();
  }
  if (fam == "E7") {
    arity(0);
    return make_freudenthal();
  }
  throw fail(toks[0], "unknown family '" + std::string(fam) + "' (expected G, Q, IG, OG, E6 or E7)");
}

Json json_int(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

namespace {

Json coords(const Weight& w) { return Json(w.vec()); }

Json summand_json(const IrreducibleSummand& s, int k_index) {
  Json j;
  j["weight"] = s.highest_weight.pretty();
  j["coords"] = coords(s.highest_weight);
  j["levi_dim"] = json_int(s.levi_dim);
  j["twist"] = s.highest_weight[k_index];
  if (s.partition) j["partition"] = s.partition->str();
  return j;
}

std::string family_tag(const GrassmannianSpec& s) {
  switch (s.family()) {
    case SpaceFamily::Grass: return "G";
    case SpaceFamily::QuadricOdd:
    case SpaceFamily::QuadricEven: return "Q";
    case SpaceFamily::Lagrangian: return "IG";
    case SpaceFamily::Spinor: return "OG";
    case SpaceFamily::Cayley: return "E6";
    case SpaceFamily::Freudenthal: return "E7";
  }
  return "?";
}

std::string join_weights(const std::vector<Weight>& ws) {
  std::string out;
  for (const auto& w : ws) {
    if (!out.empty()) out += ' ';
    out += w.pretty();
  }
  return out;
}

Json weight_list(const std::vector<Weight>& ws) {
  Json j = Json::array();
  for (const auto& w : ws) j.push_back(w.pretty());
  return j;
}

}  // namespace

Json to_json(const GrassmannianSpec& spec, bool detailed) {
  Json j;
  j["name"] = spec.name();
  j["description"] = spec.description();
  j["family"] = to_string(spec.family());
  j["params"] = spec.params();
  j["ambient"] = spec.ambient().type().name();
  j["marked_node"] = spec.marked_node();
  j["dim"] = spec.dim();
  j["c1"] = spec.index_c1();
  j["cotangent"] = spec.cotangent_weight().pretty();
  j["levi"] = spec.levi_description();
  if (detailed) {
    Json roots = Json::array();
    for (const auto* r : spec.nilradical()) roots.push_back({{"simple", r->simple}, {"weight", r->fund.pretty()}});
    j["nilradical"] = std::move(roots);
    const auto t1 = check_table1(spec);
    Json t;
    t["dim_ok"] = t1.dim_ok;
    t["c1_ok"] = t1.c1_ok;
    t["cotangent_ok"] = t1.cotangent_ok;
    t["expected_dim"] = t1.expected_dim;
    t["expected_c1"] = t1.expected_c1;
    t["expected_cotangent"] = t1.expected_cotangent ? Json(t1.expected_cotangent->pretty()) : Json();
    t["note"] = t1.note;
    j["table1"] = std::move(t);
  }
  return j;
}

Json to_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.type().name();
  j["rank"] = rs.rank();
  j["cartan"] = rs.cartan_matrix();
  Json inv = Json::array();
  for (const auto& row : rs.inverse_cartan()) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    inv.push_back(std::move(r));
  }
  j["inverse_cartan"] = std::move(inv);
  Json norms = Json::array();
  for (const auto& q : rs.simple_root_norms()) norms.push_back(to_string(q));
  j["simple_root_norms"] = std::move(norms);
  j["weyl_group_order"] = json_int(weyl_group_order(rs, rs.all_nodes()));
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots())
    roots.push_back({{"simple", r.simple}, {"weight", r.fund.pretty()}, {"height", r.height}});
  j["positive_root_count"] = rs.positive_roots().size();
  j["positive_roots"] = std::move(roots);
  return j;
}

Json to_json(const DecompositionReport& r) {
  Json j;
  j["space"] = r.spec.name();
  j["p"] = r.p;
  j["method"] = to_string(r.method);
  Json ss = Json::array();
  for (const auto& s : r.summands) ss.push_back(summand_json(s, r.spec.k_index()));
  j["summands"] = std::move(ss);
  j["rank_check"] = {{"expected", json_int(r.expected_rank)},
                     {"got", json_int(r.rank())},
                     {"ok", r.rank() == r.expected_rank}};
  return j;
}

Json to_json(const MinTwistReport& r) {
  Json j;
  j["space"] = r.spec.name();
  j["p"] = r.p;
  j["l"] = r.l;
  j["d"] = r.degree;
  j["h0_dim"] = json_int(r.h0_dim);
  j["source"] = to_string(r.source);
  j["method"] = to_string(r.method);
  j["closed_form_l"] = r.closed_form_l ? Json(*r.closed_form_l) : Json();
  Json ws = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    Json w = summand_json(r.witnesses[i], r.spec.k_index());
    w["h0_weight"] = r.h0_weights[i].pretty();
    w["h0_dim"] = json_int(weyl_dim(r.h0_weights[i], r.spec.ambient()));
    ws.push_back(std::move(w));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

Json to_json(const TableAudit& a) {
  Json j;
  j["which"] = to_string(a.which);
  j["all_match"] = a.all_match();
  j["mismatched_rows"] = a.mismatched_rows;
  j["mismatched_cells"] = a.mismatched_cells;
  Json rows = Json::array();
  for (const auto& row : a.rows) {
    Json r;
    r["p"] = row.p;
    r["ok"] = row.ok();
    r["table_l"] = row.table_l;
    r["computed_l"] = row.computed_l;
    r["l_match"] = row.l_match;
    r["summands_match"] = row.summands_match;
    Json cells = Json::array();
    for (const auto& c : row.cells) {
      Json cj;
      cj["column"] = c.column;
      cj["table"] = c.table ? Json(c.table->pretty()) : Json();
      cj["computed"] = c.computed ? Json(c.computed->pretty()) : Json();
      cj["match"] = c.match;
      if (!c.note.empty()) cj["note"] = c.note;
      cells.push_back(std::move(cj));
    }
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const NonvanishingRecord& r) {
  Json j;
  j["space"] = r.space;
  j["p"] = r.p;
  j["l"] = r.l;
  j["h0_twist2"] = json_int(r.h0_twist2);
  j["h0_twist3"] = json_int(r.h0_twist3);
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const FoliationFamilyReport& r) {
  Json j;
  j["space"] = r.space;
  j["kind"] = to_string(r.kind);
  j["p"] = r.p;
  j["l"] = r.l;
  j["degree"] = r.degree;
  switch (r.kind) {
    case FamilyKind::RectFlag: j["params"] = {{"d", r.d}, {"e", r.e}, {"h", r.h}}; break;
    case FamilyKind::AraujoDruel: j["params"] = {{"d", r.d}, {"e", r.e}, {"h", r.h}, {"m", r.m}}; break;
    case FamilyKind::SymplecticProj:
    case FamilyKind::OrthogonalProj: j["params"] = {{"a", r.a}}; break;
    case FamilyKind::CayleyLines: j["params"] = Json::object(); break;
  }
  j["parameter_space"] = r.parameter_space;
  j["tf_rank"] = r.tf_rank;
  j["tf_c1"] = r.tf_c1;
  j["normal_c1"] = r.l;
  j["minimal"] = r.minimal;
  j["min_twist"] = r.min_twist;
  j["h0_weights"] = weight_list(r.h0_weights);
  j["h0_dual_weights"] = weight_list(r.h0_dual_weights);
  return j;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw std::logic_error("CSV row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::ostringstream os;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      const auto& c = cells[i];
      if (c.find_first_of(",\"\n") == std::string::npos) {
        os << c;
        continue;
      }
      os << '"';
      for (char ch : c) {
        if (ch == '"') os << '"';
        os << ch;
      }
      os << '"';
    }
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return os.str();
}

namespace {

std::string s(int v) { return std::to_string(v); }
std::string s(const BigInt& v) { return v.str(); }
std::string s(bool v) { return v ? "true" : "false"; }

}  // namespace

CsvTable catalog_csv(const std::vector<GrassmannianSpec>& specs) {
  CsvTable t({"name", "family", "ambient", "marked_node", "dim", "c1", "cotangent", "levi"});
  for (const auto& sp : specs)
    t.add({sp.name(), to_string(sp.family()), sp.ambient().type().name(), s(sp.marked_node()), s(sp.dim()),
           s(sp.index_c1()), sp.cotangent_weight().pretty(), sp.levi_description()});
  return t;
}

CsvTable decomposition_csv(const std::vector<DecompositionReport>& rs) {
  CsvTable t({"space", "p", "method", "weight", "levi_dim", "twist", "partition"});
  for (const auto& r : rs)
    for (const auto& x : r.summands)
      t.add({r.spec.name(), s(r.p), to_string(r.method), x.highest_weight.pretty(), s(x.levi_dim),
             s(x.highest_weight[r.spec.k_index()]), x.partition ? x.partition->str() : ""});
  return t;
}

CsvTable min_twist_csv(const std::vector<MinTwistReport>& rs) {
  CsvTable t({"space", "p", "l", "d", "h0_dim"});
  for (const auto& r : rs) t.add({r.spec.name(), s(r.p), s(r.l), s(r.degree), s(r.h0_dim)});
  return t;
}

CsvTable audit_csv(const TableAudit& a) {
  CsvTable t({"which", "p", "column", "table", "computed", "match", "note"});
  for (const auto& row : a.rows) {
    t.add({to_string(a.which), s(row.p), "l", s(row.table_l), s(row.computed_l), s(row.l_match), ""});
    for (const auto& c : row.cells)
      t.add({to_string(a.which), s(row.p), s(c.column), c.table ? c.table->pretty() : "",
             c.computed ? c.computed->pretty() : "", s(c.match), c.note});
  }
  return t;
}

CsvTable nonvanishing_csv(const std::vector<NonvanishingRecord>& rs) {
  CsvTable t({"space", "p", "l", "h0_twist2", "h0_twist3", "status", "note"});
  for (const auto& r : rs) t.add({r.space, s(r.p), s(r.l), s(r.h0_twist2), s(r.h0_twist3), to_string(r.status), r.note});
  return t;
}

CsvTable foliation_csv(const std::vector<FoliationFamilyReport>& rs) {
  CsvTable t({"space", "kind", "p", "l", "degree", "d", "e", "h", "m", "a", "parameter_space", "tf_rank", "tf_c1",
              "minimal", "min_twist", "h0_weights", "h0_dual_weights"});
  for (const auto& r : rs)
    t.add({r.space, to_string(r.kind), s(r.p), s(r.l), s(r.degree), s(r.d), s(r.e), s(r.h), s(r.m), s(r.a),
           r.parameter_space, s(r.tf_rank), s(r.tf_c1), s(r.minimal), s(r.min_twist), join_weights(r.h0_weights),
           join_weights(r.h0_dual_weights)});
  return t;
}

// ---------------------------------------------------------------------------
// verify

namespace {

// Runs f(0..n-1) on `jobs` threads; results stay in index order.
template <class F>
auto parallel_map(std::size_t n, int jobs, F f) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) out[i] = f(i);
  };
  const std::size_t threads = std::min<std::size_t>(n, jobs > 0 ? jobs : std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return out;
}

constexpr std::size_t kMaxFailures = 50;

void fail(VerifyCheck& c, std::string msg) {
  if (c.failures.size() < kMaxFailures) c.failures.push_back(std::move(msg));
}

std::string summand_list(const std::vector<IrreducibleSummand>& ss) {
  std::string out;
  for (const auto& x : ss) out += (out.empty() ? "" : " ") + x.highest_weight.pretty();
  return out;
}

// Per-spec outcome for the checks that share one decomposition pass.
struct SpecOutcome {
  VerifyCheck paths{"plethysm path agreement"};
  VerifyCheck ranks{"rank identity"};
  VerifyCheck lemma{"twist identity"};
  VerifyCheck twists{"BBW minimum vs closed form"};
};

void check_lemma(VerifyCheck& c, const DecompositionReport& r) {
  for (const auto& x : r.summands) {
    ++c.cases;
    if (x.twist_check != x.highest_weight[r.spec.k_index()])
      fail(c, r.spec.name() + " p=" + s(r.p) + " " + to_string(r.method) + ": " + x.highest_weight.pretty() +
                  " has twist coefficient " + s(x.highest_weight[r.spec.k_index()]) + ", identity gives " +
                  s(x.twist_check));
  }
}

SpecOutcome verify_spec(const GrassmannianSpec& spec, int max_p) {
  SpecOutcome o;
  const auto tag = spec.name();
  try {
    const auto reports = decompose_range(spec, max_p);
    for (const auto& r : reports) {
      ++o.ranks.cases;
      if (r.rank() != r.expected_rank)
        fail(o.ranks, tag + " p=" + s(r.p) + ": rank " + s(r.rank()) + ", expected " + s(r.expected_rank));
      check_lemma(o.lemma, r);
    }
    if (spec.is_classical()) {
      DecomposeOptions dp;
      dp.force_dp = true;
      const auto slow = decompose_range(spec, max_p, dp);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        ++o.paths.cases;
        check_lemma(o.lemma, slow[i]);
        std::vector<Weight> a, b;
        for (const auto& x : reports[i].summands) a.push_back(x.highest_weight);
        for (const auto& x : slow[i].summands) b.push_back(x.highest_weight);
        if (a != b)
          fail(o.paths, tag + " p=" + s(reports[i].p) + ": " + to_string(reports[i].method) + " {" +
                            summand_list(reports[i].summands) + "} vs DP {" + summand_list(slow[i].summands) + "}");
      }
      for (const auto& r : reports) {
        if (r.p == 0) continue;
        const auto mt = min_twist_from(r);
        const auto cf = closed_form_min_twist(spec, r.p);
        ++o.twists.cases;
        if (!cf || *cf != mt.l)
          fail(o.twists, tag + " p=" + s(r.p) + ": BBW " + s(mt.l) + ", closed form " + (cf ? s(*cf) : "none"));
      }
    }
  } catch (const std::exception& e) {
    fail(o.ranks, tag + ": " + e.what());
  }
  return o;
}

std::string check_name_for(const std::string& f) {
  static const std::vector<std::string> known{"G", "Q", "IG", "OG", "E6", "E7"};
  if (std::find(known.begin(), known.end(), f) == known.end())
    throw std::invalid_argument("unknown family '" + f + "' (expected G, Q, IG, OG, E6 or E7)");
  return f;
}

}  // namespace

bool VerifyResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
}

Json VerifyResult::json(const VerifyConfig& cfg) const {
  Json j;
  j["ok"] = ok();
  Json c;
  c["max_rank"] = cfg.max_rank;
  c["families"] = cfg.families;
  c["max_p"] = cfg.max_p ? Json(*cfg.max_p) : Json();
  Json tables = Json::array();
  for (auto t : cfg.tables) tables.push_back(to_string(t));
  c["tables"] = std::move(tables);
  j["config"] = std::move(c);
  Json cs = Json::array();
  for (const auto& ch : checks) cs.push_back({{"name", ch.name}, {"ok", ch.ok()}, {"cases", ch.cases}, {"failures", ch.failures}});
  j["checks"] = std::move(cs);
  return j;
}

VerifyResult run_verify(const VerifyConfig& cfg) {
  if (cfg.max_rank < 2) throw std::invalid_argument("max_rank must be at least 2");
  if (cfg.max_p && *cfg.max_p < 0) throw std::invalid_argument("max_p must be nonnegative");
  for (const auto& f : cfg.families) check_name_for(f);
  const auto wanted = [&](const std::string& f) {
    return cfg.families.empty() || std::find(cfg.families.begin(), cfg.families.end(), f) != cfg.families.end();
  };

  std::vector<GrassmannianSpec> specs;
  for (auto& sp : catalog_up_to_rank(cfg.max_rank))
    if (wanted(family_tag(sp))) specs.push_back(std::move(sp));

  VerifyResult res;

  VerifyCheck closed{"partition closed forms vs oracles"};
  for (const auto& sp : specs) {
    const auto& pr = sp.params();
    for (int p = 1; p <= sp.dim(); ++p) {
      int formula = 0, oracle = 0;
      switch (sp.family()) {
        case SpaceFamily::Grass:
          if (2 * pr[0] > pr[1]) continue;
          formula = min_twist_grass(pr[0], pr[1], p);
          oracle = min_twist_grass_oracle(pr[0], pr[1], p).l;
          break;
        case SpaceFamily::Lagrangian:
          formula = min_twist_lagr(p);
          oracle = min_twist_lagr_oracle(pr[0], p).l;
          break;
        case SpaceFamily::Spinor:
          formula = min_twist_spinor(p);
          oracle = min_twist_spinor_oracle(pr[0], p).l;
          break;
        default: continue;
      }
      ++closed.cases;
      if (formula != oracle) fail(closed, sp.name() + " p=" + s(p) + ": formula " + s(formula) + ", oracle " + s(oracle));
    }
  }
  res.checks.push_back(std::move(closed));

  const auto outcomes = parallel_map(specs.size(), cfg.jobs, [&](std::size_t i) {
    return verify_spec(specs[i], std::min(specs[i].dim(), cfg.max_p.value_or(specs[i].dim())));
  });
  SpecOutcome merged;
  const auto absorb = [](VerifyCheck& into, const VerifyCheck& from) {
    into.cases += from.cases;
    for (const auto& f : from.failures) fail(into, f);
  };
  for (const auto& o : outcomes) {
    absorb(merged.paths, o.paths);
    absorb(merged.ranks, o.ranks);
    absorb(merged.lemma, o.lemma);
    absorb(merged.twists, o.twists);
  }
  res.checks.push_back(std::move(merged.ranks));
  res.checks.push_back(std::move(merged.paths));
  res.checks.push_back(std::move(merged.lemma));
  res.checks.push_back(std::move(merged.twists));

  for (auto which : cfg.tables) {
    VerifyCheck c{"table audit " + to_string(which)};
    const auto a = table_audit(which, cfg.max_p);
    for (const auto& row : a.rows) {
      ++c.cases;
      if (!row.l_match) fail(c, "p=" + s(row.p) + ": l table " + s(row.table_l) + ", computed " + s(row.computed_l));
      for (const auto& cell : row.cells)
        if (!cell.match)
          fail(c, "p=" + s(row.p) + " column " + s(cell.column) + ": table " +
                      (cell.table ? cell.table->pretty() : "-") + ", computed " +
                      (cell.computed ? cell.computed->pretty() : "-") + (cell.note.empty() ? "" : " (" + cell.note + ")"));
    }
    res.checks.push_back(std::move(c));
  }

  VerifyCheck scan{"low-twist nonvanishing scan"};
  for (const auto& r : nonvanishing_scan(cfg.max_rank)) {
    if (!wanted(family_tag(parse_space(r.space)))) continue;
    ++scan.cases;
    if (r.status == NonvanishingStatus::Violation) fail(scan, r.space + " p=" + s(r.p) + " l=" + s(r.l) + ": " + r.note);
  }
  res.checks.push_back(std::move(scan));

  VerifyCheck fol{"foliation family twists"};
  for (int n = 2; n <= cfg.max_rank; ++n)
    for (int a = 1; a <= n - 1; ++a) {
      const int p = a * (a + 1) / 2;
      if (wanted("IG")) {
        const auto r = symplectic_family(n, a);
        ++fol.cases;
        if (!r.minimal || r.l != min_twist_lagr_oracle(n, p).l)
          fail(fol, r.space + " a=" + s(a) + ": family l " + s(r.l) + ", l(p) " + s(r.min_twist));
      }
      if (wanted("OG") && n >= 3 && a <= n - 2) {
        const auto r = orthogonal_family(n, a);
        ++fol.cases;
        if (!r.minimal || r.l != min_twist_spinor_oracle(n, p).l)
          fail(fol, r.space + " a=" + s(a) + ": family l " + s(r.l) + ", l(p) " + s(r.min_twist));
      }
    }
  if (cfg.max_rank >= 6 && wanted("E6")) {
    ++fol.cases;
    try {
      const auto c = cayley_family();
      if (c.p != 8 || c.l != 8 || c.degree != -1) fail(fol, "E6: unexpected Cayley family invariants");
    } catch (const std::exception& e) {
      fail(fol, std::string("E6: ") + e.what());
    }
  }
  res.checks.push_back(std::move(fol));
  return res;
}

}  // namespace cominus
