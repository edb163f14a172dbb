#include "doctest.h"

#include "cominus/report.hpp"

using namespace cominus;

TEST_CASE("parse_space") {
  CHECK(parse_space("IG:4").family() == SpaceFamily::Lagrangian);
  CHECK(parse_space("IG:4").params() == std::vector<int>{4});
  const auto g = parse_space("G:3:9");
  CHECK(g.family() == SpaceFamily::Grass);
  CHECK(g.params() == std::vector<int>{3, 9});
  CHECK(parse_space("Q:7").family() == SpaceFamily::QuadricOdd);
  CHECK(parse_space("OG:5").dim() == 10);
  CHECK(parse_space("E6").dim() == 16);
  CHECK(parse_space("E7").dim() == 27);
  for (const auto& spec : catalog_up_to_rank(7)) CHECK(parse_space(spec.name()).name() == spec.name());
}

TEST_CASE("parse_space diagnostics") {
  const auto column = [](const char* text) -> std::pair<std::size_t, std::string> {
    try {
      parse_space(text);
    } catch (const SpaceParseError& e) {
      return {e.column(), e.what()};
    }
    return {0, ""};
  };
  auto [c, msg] = column("G:0:5");
  CHECK(c == 3);
  CHECK(msg.find("k out of range") != std::string::npos);
  CHECK(column("G:5:5").first == 3);
  CHECK(column("G:2:x").first == 5);
  CHECK(column("X:3").first == 1);
  CHECK(column("Q:2").first == 3);
  CHECK(column("OG:2").first == 4);
  CHECK(column("E6:1").first == 4);
  CHECK(column("G:3").first == 4);
  CHECK(column("").first == 1);
  CHECK(column("IG:").first == 4);
}

TEST_CASE("json_int") {
  CHECK(json_int(BigInt(42)).is_number_unsigned());
  CHECK(json_int(BigInt(-3)) == -3);
  BigInt big = BigInt(1) << 70;
  CHECK(json_int(big) == big.str());
}

TEST_CASE("CSV quoting") {
  CsvTable t({"a", "b"});
  t.add({"x,y", "say \"hi\""});
  t.add({"plain", ""});
  CHECK(t.str() == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\nplain,\n");
  CHECK_THROWS(t.add({"only one"}));
}

TEST_CASE("report shapes") {
  const auto spec = parse_space("G:2:4");
  const auto j = to_json(decompose_omega(spec, 2));
  CHECK(j["space"] == "G:2:4");
  CHECK(j["summands"].size() == 2);
  CHECK(j["rank_check"]["expected"] == 6);
  CHECK(j["rank_check"]["got"] == 6);

  const auto mt = min_twist_csv({min_twist(parse_space("G:3:9"), 7)});
  CHECK(mt.str() == "space,p,l,d,h0_dim\nG:3:9,7,6,-2,14449050\n");

  std::vector<std::string> keys;
  const auto cj = to_json(cayley_family());
  for (const auto& [k, v] : cj.items()) keys.push_back(k);
  CHECK(keys.front() == "space");
  CHECK(keys.size() == 14);
}

TEST_CASE("verify") {
  VerifyConfig cfg;
  cfg.max_rank = 5;
  cfg.jobs = 2;
  const auto a = run_verify(cfg);
  CHECK(a.ok());
  CHECK(a.json(cfg).dump() == run_verify(cfg).json(cfg).dump());

  VerifyConfig e7;
  e7.max_rank = 2;
  e7.max_p = 4;
  e7.tables = {ExceptionalTable::E7};
  const auto b = run_verify(e7);
  CHECK(b.ok());
  bool seen = false;
  for (const auto& c : b.checks)
    if (c.name == "table audit E7") {
      seen = true;
      CHECK(c.cases == 4);
    }
  CHECK(seen);

  VerifyConfig e6;
  e6.max_rank = 2;
  e6.tables = {ExceptionalTable::E6};
  CHECK_FALSE(run_verify(e6).ok());

  VerifyConfig bad;
  bad.max_rank = 1;
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
  bad.max_rank = 4;
  bad.families = {"F4"};
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);
}
