#pragma once

// Textual space names, JSON/CSV renderings of every report type and the
// batch verifier behind `cominus verify`.

#include "cominus/foliations.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cominus {

using Json = nlohmann::ordered_json;

/// Parse failure with the 1-based column of the offending token.
class SpaceParseError : public std::invalid_argument {
 public:
  SpaceParseError(const std::string& text, std::size_t column, const std::string& what);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// `G:k:n | Q:m | IG:n | OG:n | E6 | E7`.  Ranks are capped at 63.
GrassmannianSpec parse_space(std::string_view text);

/// Exact integers become JSON numbers when they fit in 64 bits, strings
/// otherwise.
Json json_int(const BigInt& v);

Json to_json(const GrassmannianSpec& spec, bool detailed = false);
Json to_json(const RootSystem& rs);
Json to_json(const DecompositionReport& r);
Json to_json(const MinTwistReport& r);
Json to_json(const TableAudit& a);
Json to_json(const NonvanishingRecord& r);
Json to_json(const FoliationFamilyReport& r);

/// Header plus one line per record, RFC 4180 quoting, '\n' line ends.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

CsvTable catalog_csv(const std::vector<GrassmannianSpec>& specs);
CsvTable decomposition_csv(const std::vector<DecompositionReport>& rs);
CsvTable min_twist_csv(const std::vector<MinTwistReport>& rs);
CsvTable audit_csv(const TableAudit& a);
CsvTable nonvanishing_csv(const std::vector<NonvanishingRecord>& rs);
CsvTable foliation_csv(const std::vector<FoliationFamilyReport>& rs);

struct VerifyConfig {
  int max_rank{6};
  /// Family filter over G, Q, IG, OG, E6, E7; empty means all.
  std::vector<std::string> families;
  std::optional<int> max_p;
  /// Transcribed tables to audit.
  std::vector<ExceptionalTable> tables;
  /// Worker threads; 0 means hardware concurrency.
  int jobs{0};
};

struct VerifyCheck {
  VerifyCheck() = default;
  explicit VerifyCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  long cases{0};
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  bool ok() const;
  Json json(const VerifyConfig& cfg) const;
};

/// Throws std::invalid_argument on an invalid config (max_rank < 2,
/// unknown family name).
VerifyResult run_verify(const VerifyConfig& cfg);

}  // namespace cominus
