#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "posethom/groupact.hpp"
#include "posethom/poset.hpp"
#include "posethom/series.hpp"

namespace posethom::cli {

using nlohmann::ordered_json;

struct Limits {
  std::size_t max_rank_size = kDefaultMaxRankSize;
  std::size_t max_group_order = kDefaultMaxGroupOrder;
};

/// Outcome of one command. JSON is the contract; text is for people.
struct Report {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  std::string status = "pass";  // pass | fail | error
  double seconds = 0.0;
  std::string text;
};

ordered_json to_json(const Report& r, bool with_timing);
int exit_code(const Report& r);

/// "1,1,2,1,1" or a JSON array. With n, a lower half is completed by symmetry.
Series parse_series(const std::string& text, std::optional<int> n = std::nullopt);
std::vector<int> parse_int_list(const std::string& text);

Report cmd_pitable(std::uint32_t pmax, const std::vector<int>& qs);
Report cmd_homology(const std::string& poset, std::uint32_t p, std::optional<int> j, std::optional<int> i,
                    const Limits& limits);
Report cmd_orbits(const std::string& group_file, const std::string& poset, std::optional<int> k,
                  const std::string& method, const Limits& limits);
Report cmd_mult(const std::string& table_source, const std::string& poset, std::uint32_t p,
                const std::string& irreducible, const Limits& limits);
Report cmd_bounds(int n, const std::vector<int>& pis);
Report cmd_chain(const std::string& series, std::optional<int> n, int pi);
Report cmd_order(const std::string& group_file, const Limits& limits);
/// Exports a character table ("sn:<n>" or a file) in the table file format.
Report cmd_table(const std::string& table_source);

inline const std::vector<int> kTableOneQ{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23};
inline constexpr const char* kDash = "\xE2\x80\x94";

}  // namespace posethom::cli
