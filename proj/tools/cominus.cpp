// cominus: command-line front end.  Exit codes: 0 all checks pass,
// 1 mathematical mismatch, 2 usage or I/O error.

#include "cominus/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace cominus;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format;
  std::string path;
};

void add_output(CLI::App* sub, Output& o, const std::string& default_format) {
  o.format = default_format;
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--out", o.path, "Write to PATH instead of stdout");
}

void write(const Output& o, const std::string& text) {
  if (o.path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw UsageError("--out: cannot open '" + o.path + "' for writing");
  f << text;
  if (!f) throw UsageError("--out: write to '" + o.path + "' failed");
}

void emit(const Output& o, const Json& j, const CsvTable& csv) {
  write(o, o.format == "json" ? j.dump(2) + "\n" : csv.str());
}

GrassmannianSpec space_flag(const std::string& text) {
  try {
    return parse_space(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--space: ") + e.what());
  }
}

LieType type_flag(const std::string& text) {
  static const std::map<char, Family> letters{{'A', Family::A}, {'B', Family::B}, {'C', Family::C}, {'D', Family::D}};
  try {
    if (text == "E6") return LieType::make(Family::E6, 6);
    if (text == "E7") return LieType::make(Family::E7, 7);
    if (text.size() >= 2 && letters.count(text[0])) {
      std::size_t used = 0;
      const int rank = std::stoi(text.substr(1), &used);
      if (used + 1 == text.size()) return LieType::make(letters.at(text[0]), rank);
    }
  } catch (const std::exception& e) {
    throw UsageError("--type: '" + text + "': " + e.what());
  }
  throw UsageError("--type: '" + text + "': expected A<n>, B<n>, C<n>, D<n>, E6 or E7");
}

ExceptionalTable table_flag(const std::string& flag, const std::string& text) {
  if (text == "E6") return ExceptionalTable::E6;
  if (text == "E7") return ExceptionalTable::E7;
  throw UsageError(flag + ": '" + text + "': expected E6 or E7");
}

void check_p(const GrassmannianSpec& spec, int p, int lo) {
  if (p < lo || p > spec.dim())
    throw UsageError("--p: " + std::to_string(p) + " out of range for " + spec.name() + " (need " + std::to_string(lo) +
                     " <= p <= " + std::to_string(spec.dim()) + ")");
}

Json array_of(const auto& items) {
  Json j = Json::array();
  for (const auto& x : items) j.push_back(to_json(x));
  return j;
}

int partitions_verify(char family, int max_rank, const Output& out) {
  CsvTable csv({"space", "p", "formula", "oracle", "minimizers", "match"});
  Json cases = Json::array();
  int mismatches = 0;
  const auto record = [&](const std::string& space, int p, int formula, const MinTwistWitness& w) {
    std::string mins;
    for (const auto& mu : w.partitions) mins += (mins.empty() ? "" : " ") + mu.str();
    const bool ok = formula == w.l;
    mismatches += !ok;
    csv.add({space, std::to_string(p), std::to_string(formula), std::to_string(w.l), mins, ok ? "true" : "false"});
    cases.push_back({{"space", space}, {"p", p}, {"formula", formula}, {"oracle", w.l}, {"cost", to_string(w.cost)},
                     {"minimizers", mins}, {"match", ok}});
  };
  switch (family) {
    case 'A':
      for (int n = 2; n <= max_rank + 1; ++n)
        for (int k = 1; 2 * k <= n; ++k)
          for (int p = 1; p <= k * (n - k); ++p)
            record("G:" + std::to_string(k) + ":" + std::to_string(n), p, min_twist_grass(k, n, p),
                   min_twist_grass_oracle(k, n, p));
      break;
    case 'C':
      for (int n = 2; n <= max_rank; ++n)
        for (int p = 1; p <= n * (n + 1) / 2; ++p)
          record("IG:" + std::to_string(n), p, min_twist_lagr(p), min_twist_lagr_oracle(n, p));
      break;
    case 'D':
      for (int n = 3; n <= max_rank; ++n)
        for (int p = 1; p <= n * (n - 1) / 2; ++p)
          record("OG:" + std::to_string(n), p, min_twist_spinor(p), min_twist_spinor_oracle(n, p));
      break;
  }
  Json j;
  j["family"] = std::string(1, family);
  j["max_rank"] = max_rank;
  j["cases"] = cases.size();
  j["mismatches"] = mismatches;
  j["ok"] = mismatches == 0;
  j["results"] = std::move(cases);
  emit(out, j, csv);
  return mismatches ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted differential forms on cominuscule Grassmannians"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all subcommand help");

  int rc = 0;
  std::function<void()> action;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "The cominuscule Grassmannians");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List every space up to a rank");
  Output cat_list_out;
  int cat_max_rank = 7;
  cat_list->add_option("--max-rank", cat_max_rank, "Largest ambient rank")->capture_default_str()->check(CLI::Range(1, 63));
  add_output(cat_list, cat_list_out, "csv");
  cat_list->callback([&] {
    action = [&] {
      const auto specs = catalog_up_to_rank(cat_max_rank);
      Json j = Json::array();
      for (const auto& s : specs) j.push_back(to_json(s));
      emit(cat_list_out, j, catalog_csv(specs));
    };
  });
  auto* cat_show = catalog->add_subcommand("show", "Invariants, nilradical and tabulated-value check of one space");
  Output cat_show_out;
  std::string cat_space;
  cat_show->add_option("--space", cat_space, "G:k:n, Q:m, IG:n, OG:n, E6 or E7")->required();
  add_output(cat_show, cat_show_out, "json");
  cat_show->callback([&] {
    action = [&] {
      const auto spec = space_flag(cat_space);
      emit(cat_show_out, to_json(spec, true), catalog_csv({spec}));
      if (!check_table1(spec).ok()) rc = 1;
    };
  });

  // rootsys
  auto* rootsys = app.add_subcommand("rootsys", "Root system data");
  rootsys->require_subcommand(1);
  auto* rs_dump = rootsys->add_subcommand("dump", "Cartan matrix, norms and positive roots");
  Output rs_out;
  std::string rs_type;
  rs_dump->add_option("--type", rs_type, "A<n>, B<n>, C<n>, D<n>, E6 or E7")->required();
  add_output(rs_dump, rs_out, "json");
  rs_dump->callback([&] {
    action = [&] {
      const RootSystem rs(type_flag(rs_type));
      CsvTable csv({"index", "height", "simple", "weight"});
      int i = 0;
      for (const auto& r : rs.positive_roots()) {
        std::string simple;
        for (int c : r.simple) simple += (simple.empty() ? "" : " ") + std::to_string(c);
        csv.add({std::to_string(++i), std::to_string(r.height), simple, r.fund.pretty()});
      }
      emit(rs_out, to_json(rs), csv);
    };
  });

  // partitions
  auto* parts = app.add_subcommand("partitions", "Closed-form minimal twists against exhaustive oracles");
  parts->require_subcommand(1);
  auto* parts_verify = parts->add_subcommand("verify", "Compare formula and oracle for every p");
  Output parts_out;
  std::string parts_family = "A";
  int parts_max_rank = 10;
  parts_verify->add_option("--family", parts_family, "A (Grassmannians), C (Lagrangian) or D (spinor)")
      ->check(CLI::IsMember({"A", "C", "D"}))
      ->capture_default_str();
  parts_verify->add_option("--max-rank", parts_max_rank, "Largest ambient rank")->capture_default_str()->check(CLI::Range(1, 20));
  add_output(parts_verify, parts_out, "csv");
  parts_verify->callback([&] { action = [&] { rc = partitions_verify(parts_family[0], parts_max_rank, parts_out); }; });

  // omega
  auto* omega = app.add_subcommand("omega", "Decompositions of Omega^p");
  omega->require_subcommand(1);
  auto* omega_dec = omega->add_subcommand("decompose", "Irreducible summands of Omega^p");
  Output omega_out;
  std::string omega_space;
  std::optional<int> omega_p;
  bool omega_force = false, omega_no_dual = false;
  omega_dec->add_option("--space", omega_space, "G:k:n, Q:m, IG:n, OG:n, E6 or E7")->required();
  omega_dec->add_option("--p", omega_p, "Form degree (all degrees when omitted)");
  omega_dec->add_flag("--force-plethysm", omega_force, "Use the weight DP even where a partition formula exists");
  omega_dec->add_flag("--no-duality", omega_no_dual, "Run the DP directly above the middle degree");
  add_output(omega_dec, omega_out, "json");
  omega_dec->callback([&] {
    action = [&] {
      const auto spec = space_flag(omega_space);
      DecomposeOptions opts;
      opts.force_dp = omega_force;
      opts.use_duality = !omega_no_dual;
      std::vector<DecompositionReport> reports;
      if (omega_p) {
        check_p(spec, *omega_p, 0);
        reports.push_back(decompose_omega(spec, *omega_p, opts));
      } else {
        reports = decompose_all(spec, opts);
      }
      for (const auto& r : reports)
        if (r.rank() != r.expected_rank) rc = 1;
      emit(omega_out, omega_p ? to_json(reports[0]) : array_of(reports), decomposition_csv(reports));
    };
  });

  // min-twist
  auto* mt = app.add_subcommand("min-twist", "Minimal twist l(p) with H^0(Omega^p(l)) != 0");
  Output mt_out;
  std::string mt_space;
  std::optional<int> mt_p;
  bool mt_force = false;
  mt->add_option("--space", mt_space, "G:k:n, Q:m, IG:n, OG:n, E6 or E7")->required();
  mt->add_option("--p", mt_p, "Form degree (1..dim, all when omitted)");
  mt->add_flag("--force-plethysm", mt_force, "Quadrics: BBW minimum instead of the closed form");
  add_output(mt, mt_out, "csv");
  mt->callback([&] {
    action = [&] {
      const auto spec = space_flag(mt_space);
      TwistOptions opts;
      opts.force_plethysm = mt_force;
      std::vector<MinTwistReport> reports;
      if (mt_p) {
        check_p(spec, *mt_p, 1);
        reports.push_back(min_twist(spec, *mt_p, opts));
      } else {
        reports = min_twist_all(spec, opts);
      }
      for (const auto& r : reports)
        if (r.closed_form_l && *r.closed_form_l != r.l) rc = 1;
      emit(mt_out, mt_p ? to_json(reports[0]) : array_of(reports), min_twist_csv(reports));
    };
  });

  // table-audit
  auto* audit = app.add_subcommand("table-audit", "Recompute an exceptional table and diff it cell by cell");
  Output audit_out;
  std::string audit_which;
  std::optional<int> audit_max_p;
  audit->add_option("--which", audit_which, "E6 or E7")->required();
  audit->add_option("--max-p", audit_max_p, "Audit rows 1..max-p only")->check(CLI::NonNegativeNumber);
  add_output(audit, audit_out, "json");
  audit->callback([&] {
    action = [&] {
      const auto a = table_audit(table_flag("--which", audit_which), audit_max_p);
      emit(audit_out, to_json(a), audit_csv(a));
      if (!a.all_match()) rc = 1;
    };
  });

  // nonvanishing
  auto* nv = app.add_subcommand("nonvanishing", "Every (X, p) with sections of Omega^p(3)");
  Output nv_out;
  int nv_max_rank = 6;
  nv->add_option("--max-rank", nv_max_rank, "Largest ambient rank")->capture_default_str()->check(CLI::Range(1, 63));
  add_output(nv, nv_out, "csv");
  nv->callback([&] {
    action = [&] {
      const auto recs = nonvanishing_scan(nv_max_rank);
      emit(nv_out, array_of(recs), nonvanishing_csv(recs));
      for (const auto& r : recs)
        if (r.status == NonvanishingStatus::Violation) rc = 1;
    };
  });

  // foliation
  auto* fol = app.add_subcommand("foliation", "Minimal-degree foliation families");
  fol->require_subcommand(1);
  Output fol_out;
  int fk = 0, fn = 0, fp = 0, fa = 0, fol_max_rank = 6;
  auto* f_rect = fol->add_subcommand("rect", "Rectangular families on G(k,n)");
  f_rect->add_option("--k", fk)->required();
  f_rect->add_option("--n", fn)->required();
  f_rect->add_option("--p", fp)->required();
  add_output(f_rect, fol_out, "json");
  f_rect->callback([&] {
    action = [&] {
      if (fn < 2 || fn > 64) throw UsageError("--n: need 2 <= n <= 64");
      if (fk < 1 || fk >= fn) throw UsageError("--k: need 1 <= k < n");
      const int box = std::min(fk, fn - fk) * std::max(fk, fn - fk);
      if (fp < 1 || fp > box) throw UsageError("--p: need 1 <= p <= k(n-k) = " + std::to_string(box));
      const auto rs = rect_family(fk, fn, fp);
      emit(fol_out, array_of(rs), foliation_csv(rs));
    };
  });
  auto* f_sym = fol->add_subcommand("sympl", "IG(n-a, 2n) family on IG(n, 2n)");
  f_sym->add_option("--n", fn)->required();
  f_sym->add_option("--a", fa)->required();
  add_output(f_sym, fol_out, "json");
  f_sym->callback([&] {
    action = [&] {
      if (fn < 2 || fn > 63) throw UsageError("--n: need 2 <= n <= 63");
      if (fa < 1 || fa > fn - 1) throw UsageError("--a: need 1 <= a <= n-1");
      const auto r = symplectic_family(fn, fa);
      emit(fol_out, to_json(r), foliation_csv({r}));
    };
  });
  auto* f_ortho = fol->add_subcommand("ortho", "OG(n-a-1, 2n) family on OG(n, 2n)");
  f_ortho->add_option("--n", fn)->required();
  f_ortho->add_option("--a", fa)->required();
  add_output(f_ortho, fol_out, "json");
  f_ortho->callback([&] {
    action = [&] {
      if (fn < 3 || fn > 63) throw UsageError("--n: need 3 <= n <= 63");
      if (fa < 1 || fa > fn - 2) throw UsageError("--a: need 1 <= a <= n-2");
      const auto r = orthogonal_family(fn, fa);
      emit(fol_out, to_json(r), foliation_csv({r}));
    };
  });
  auto* f_cay = fol->add_subcommand("cayley", "Codimension-8 family on the Cayley plane");
  add_output(f_cay, fol_out, "json");
  f_cay->callback([&] {
    action = [&] {
      const auto r = cayley_family();
      emit(fol_out, to_json(r), foliation_csv({r}));
    };
  });
  auto* f_scan = fol->add_subcommand("scan", "Atlas of every minimal family up to a rank");
  f_scan->add_option("--max-rank", fol_max_rank, "Largest ambient rank")->capture_default_str()->check(CLI::Range(1, 20));
  add_output(f_scan, fol_out, "csv");
  f_scan->callback([&] {
    action = [&] {
      const auto rs = foliation_scan(fol_max_rank);
      emit(fol_out, array_of(rs), foliation_csv(rs));
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Batch self-consistency checks");
  Output ver_out;
  VerifyConfig cfg;
  std::vector<std::string> ver_tables;
  ver->add_option("--max-rank", cfg.max_rank, "Largest ambient rank")->capture_default_str()->check(CLI::Range(2, 8));
  ver->add_option("--families", cfg.families, "Subset of G, Q, IG, OG, E6, E7")
      ->delimiter(',')
      ->check(CLI::IsMember({"G", "Q", "IG", "OG", "E6", "E7"}));
  ver->add_option("--max-p", cfg.max_p, "Largest form degree per space")->check(CLI::NonNegativeNumber);
  ver->add_option("--tables", ver_tables, "Transcribed tables to audit: E6, E7")->delimiter(',');
  ver->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_output(ver, ver_out, "json");
  ver->callback([&] {
    action = [&] {
      for (const auto& t : ver_tables) cfg.tables.push_back(table_flag("--tables", t));
      const auto res = run_verify(cfg);
      CsvTable csv({"check", "ok", "cases", "failures"});
      for (const auto& c : res.checks) {
        std::string f;
        for (const auto& x : c.failures) f += (f.empty() ? "" : "; ") + x;
        csv.add({c.name, c.ok() ? "true" : "false", std::to_string(c.cases), f});
      }
      emit(ver_out, res.json(cfg), csv);
      rc = res.ok() ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
