#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "posethom/errors.hpp"
#include "posethom_cli/commands.hpp"

using namespace posethom;
using namespace posethom::cli;

namespace {

std::string data_path(const std::string& rel) { return std::string(POSETHOM_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("series and list parsing") {
  CHECK(parse_series("1,1,2,1,1").values() == std::vector<std::int64_t>{1, 1, 2, 1, 1});
  CHECK(parse_series("[1, 2, 3]").values() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(parse_series("1,2,3", 4).values() == std::vector<std::int64_t>{1, 2, 3, 2, 1});
  CHECK_THROWS_AS(parse_series("1,x"), ParseError);
  CHECK_THROWS_AS(parse_series("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_series("1,-2"), ArgumentError);
  CHECK(parse_int_list("9, 8,7") == std::vector<int>{9, 8, 7});
}

TEST_CASE("pitable reports") {
  const auto full = cmd_pitable(19, kTableOneQ);
  CHECK(full.status == "pass");
  CHECK(full.results["rows"].size() == 8);
  CHECK(full.results["rows"][0]["values"][0] == kDash);
  CHECK(full.results["rows"][6]["values"][0] == 8);

  const auto single = cmd_pitable(2, {3});
  CHECK(single.results["rows"].size() == 1);
  CHECK(single.results["rows"][0]["values"][0] == 2);
  CHECK(cmd_pitable(3, {3}).results["rows"][1]["values"][0] == kDash);
  CHECK(cmd_pitable(1, {2}).status == "error");
}

TEST_CASE("homology reports") {
  const auto scan = cmd_homology("boolean:8", 3, std::nullopt, std::nullopt, {});
  CHECK(scan.status == "pass");
  CHECK(scan.results["pi"] == 3);

  const auto one = cmd_homology("boolean:4", 3, 2, 1, {});
  CHECK(one.status == "pass");
  CHECK(one.results["dim"] == 1);
  CHECK(one.results["trace"]["pass"] == true);

  const auto proj = cmd_homology("projective:4,2", 3, std::nullopt, std::nullopt, {});
  CHECK(proj.status == "pass");
  CHECK(proj.results["pi"] == 2);

  CHECK(cmd_homology("projective:4,3", 3, std::nullopt, std::nullopt, {}).status == "error");
  CHECK(cmd_homology("boolean:4", 3, 2, std::nullopt, {}).status == "error");
  const auto capped = cmd_homology("boolean:20", 3, std::nullopt, std::nullopt, {1000, 1000});
  CHECK(capped.status == "error");
  CHECK(capped.results["error"] == "resource");
}

TEST_CASE("orbits reports") {
  const auto c4 = cmd_orbits(data_path("groups/c4.json"), "boolean:4", std::nullopt, "both", {});
  CHECK(c4.status == "pass");
  CHECK(c4.results["uf"] == c4.results["burnside"]);
  CHECK(c4.results["uf"] == std::vector<int>{1, 1, 2, 1, 1});

  const auto mismatch = cmd_orbits(data_path("groups/c4.json"), "boolean:5", std::nullopt, "uf", {});
  CHECK(mismatch.status == "error");
  CHECK(mismatch.results["error"] == "incompatible");
  CHECK(exit_code(mismatch) == 2);

  const auto k6 = cmd_orbits(data_path("groups/m24.json"), "boolean:24", 6, "uf", {});
  CHECK(k6.results["uf"] == 2);
  CHECK(cmd_orbits(data_path("groups/c4.json"), "boolean:4", std::nullopt, "magic", {}).status == "error");
  CHECK(cmd_orbits("/nonexistent.json", "boolean:4", std::nullopt, "uf", {}).status == "error");
}

TEST_CASE("mult reports") {
  const auto s5 = cmd_mult("sn:5", "boolean:5", 3, "(4,1)", {});
  CHECK(s5.status == "pass");
  CHECK(s5.results["series"] == std::vector<int>{0, 1, 1, 1, 1, 0});
  CHECK(s5.results["chain"].is_string());

  const auto s6 = cmd_mult("sn:6", "boolean:6", 7, "(5,1)", {});
  CHECK(s6.status == "pass");
  CHECK(s6.results["regime"] == "stanley");
  CHECK(s6.results["stanley"] == true);

  const auto c5 = cmd_mult(data_path("tables/c5_table.json"), "boolean:5", 3, "chi1", {});
  CHECK(c5.status == "pass");
  CHECK(c5.results["chain"]["folded"] == std::vector<int>{2, 2});

  auto doc = nlohmann::json::parse(oracle::data("tables/s4_table.json"));
  doc["irreducibles"][2]["values"][0] = 3;
  const auto bad = std::filesystem::temp_directory_path() / "posethom_bad_table.json";
  std::ofstream(bad) << doc.dump();
  const auto rejected = cmd_mult(bad.string(), "boolean:4", 5, "(2,2)", {});
  std::filesystem::remove(bad);
  CHECK(rejected.status == "error");
  CHECK(rejected.results["message"].get<std::string>().find("orthogonality") != std::string::npos);

  CHECK(cmd_mult("sn:4", "projective:3,2", 5, "(4)", {}).status == "error");
}

TEST_CASE("bounds and chain reports") {
  const auto b = cmd_bounds(10, {9, 8, 7});
  CHECK(b.status == "pass");
  CHECK(b.results["lower"][2] == 2);
  CHECK(b.results["lower"][3] == 3);
  CHECK(b.results["lower"][4] == 4);

  const auto c = cmd_chain("1,1,1,1,1,1,2,2,3,3,3,3,5", 24, 17);
  CHECK(c.status == "pass");
  CHECK(exit_code(c) == 0);
  const auto v = cmd_chain("0,2,1,0,0", std::nullopt, 3);
  CHECK(v.status == "fail");
  CHECK(v.results["first_violation"] == 1);
  CHECK(exit_code(v) == 1);
}

TEST_CASE("order and table reports") {
  const auto o = cmd_order(data_path("groups/m24.json"), {});
  CHECK(o.results["order"] == 244823040);
  CHECK(o.results["factorization"] == "2^10*3^3*5*7*11*23");
  const auto t = cmd_table("sn:3");
  CHECK(t.results["table"]["group_order"] == 6);
}

TEST_CASE("json reports are deterministic") {
  const auto a = to_json(cmd_orbits(data_path("groups/a5_pairs.json"), "boolean:10", std::nullopt, "both", {}), false).dump();
  const auto b = to_json(cmd_orbits(data_path("groups/a5_pairs.json"), "boolean:10", std::nullopt, "both", {}), false).dump();
  CHECK(a == b);
  const auto j = to_json(cmd_bounds(6, {}), true);
  CHECK(j.contains("timing"));
  CHECK_FALSE(to_json(cmd_bounds(6, {}), false).contains("timing"));
  CHECK(j["status"] == "pass");
}
