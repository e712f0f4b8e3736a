#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "posethom_cli/commands.hpp"

namespace cli = posethom::cli;

int main(int argc, char** argv) {
  CLI::App app{"posethom: incidence homology and orbit-number inequalities"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  bool timing = false;
  cli::Limits limits;
  app.add_flag("--json", as_json, "Print the JSON report");
  app.add_flag("--timing", timing, "Include wall-clock time in the report");
  app.add_option("--max-rank-size", limits.max_rank_size, "Largest rank set to enumerate");
  app.add_option("--max-group-order", limits.max_group_order, "Largest group to enumerate");

  std::optional<cli::Report> report;

  auto* pitable = app.add_subcommand("pitable", "Table of pi(p,q)");
  std::uint32_t pmax = 19;
  std::string qlist = "2,3,4,5,7,8,9,11,13,16,17,19,23";
  pitable->add_option("--pmax", pmax, "Largest prime row")->capture_default_str();
  pitable->add_option("--q", qlist, "Columns, comma separated")->capture_default_str();
  pitable->callback([&] { report = cli::cmd_pitable(pmax, cli::parse_int_list(qlist)); });

  auto* homology = app.add_subcommand("homology", "Homology scan or a single H_{j,i}");
  std::string poset;
  std::uint32_t p = 0;
  std::optional<int> j, i;
  homology->add_option("poset", poset, "boolean:<n> or projective:<n>,<q>")->required();
  homology->add_option("--p", p, "Field characteristic")->required();
  homology->add_option("--j", j);
  homology->add_option("--i", i);
  homology->callback([&] { report = cli::cmd_homology(poset, p, j, i, limits); });

  auto* orbits = app.add_subcommand("orbits", "Orbit numbers N_k");
  std::string group_file, method = "uf";
  std::optional<int> k;
  orbits->add_option("group", group_file, "Group file")->required();
  orbits->add_option("poset", poset, "boolean:<n> or projective:<n>,<q>")->required();
  orbits->add_option("--k", k, "Single rank");
  orbits->add_option("--method", method, "uf, burnside or both")->capture_default_str();
  orbits->callback([&] { report = cli::cmd_orbits(group_file, poset, k, method, limits); });

  auto* mult = app.add_subcommand("mult", "Character multiplicities c_k and their inequalities");
  std::string table, irreducible;
  mult->add_option("table", table, "sn:<n> or a table file")->required();
  mult->add_option("poset", poset, "boolean:<n>")->required();
  mult->add_option("--p", p)->required();
  mult->add_option("--chi", irreducible, "Irreducible name")->required();
  mult->callback([&] { report = cli::cmd_mult(table, poset, p, irreducible, limits); });

  auto* bounds = app.add_subcommand("bounds", "Lower bounds for orbit numbers");
  int n = 0;
  std::string pis;
  bounds->add_option("--n", n)->required();
  bounds->add_option("--pis", pis, "Comma separated pi values")->required();
  bounds->callback([&] { report = cli::cmd_bounds(n, cli::parse_int_list(pis)); });

  auto* chain = app.add_subcommand("chain", "Check the folded chain of a series");
  std::string series;
  std::optional<int> chain_n;
  int pi = 0;
  chain->add_option("series", series, "c_0,c_1,... or a JSON array")->required();
  chain->add_option("--n", chain_n, "Complete a lower half by symmetry up to n");
  chain->add_option("--pi", pi)->required();
  chain->callback([&] { report = cli::cmd_chain(series, chain_n, pi); });

  auto* order = app.add_subcommand("order", "Group order");
  order->add_option("group", group_file, "Group file")->required();
  order->callback([&] { report = cli::cmd_order(group_file, limits); });

  auto* export_table = app.add_subcommand("table", "Export a character table");
  export_table->add_option("table", table, "sn:<n> or a table file")->required();
  export_table->callback([&] { report = cli::cmd_table(table); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!report) return 2;

  if (as_json)
    std::cout << cli::to_json(*report, timing).dump(2) << "\n";
  else {
    std::cout << report->text;
    if (timing) std::cout << "time: " << report->seconds << " s\n";
  }
  return cli::exit_code(*report);
}
