#include "posethom_cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "posethom/chartab.hpp"
#include "posethom/errors.hpp"
#include "posethom/homology.hpp"
#include "posethom/inequal.hpp"
#include "posethom/qarith.hpp"
#include "posethom/schreier_sims.hpp"

namespace posethom::cli {

namespace {

ordered_json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const IncompatibilityError*>(&e)) return "incompatible";
  if (dynamic_cast<const ArgumentError*>(&e)) return "argument";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const DataError*>(&e)) return "data";
  if (dynamic_cast<const ConsistencyError*>(&e)) return "consistency";
  return "internal";
}

template <class Body>
Report guarded(std::string command, ordered_json inputs, Body&& body) {
  Report r;
  r.command = std::move(command);
  r.inputs = std::move(inputs);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = "error";
    r.results = ordered_json::object();
    r.results["error"] = error_kind(e);
    r.results["message"] = e.what();
    r.text = std::string("error (") + error_kind(e) + "): " + e.what() + "\n";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? sep : "") + std::to_string(v[t]);
  return s;
}

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

CharacterTable table_from_source(const std::string& source) {
  if (source.rfind("sn:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(source.substr(3));
    } catch (const std::exception&) {
      throw ParseError("bad table source '" + source + "', expected sn:<n>");
    }
    return sn_table(n);
  }
  return load_table(read_file(source));
}

ordered_json chain_json(const FoldedChainResult& c) {
  ordered_json j;
  j["pi"] = c.pi;
  j["m"] = c.m;
  j["s"] = c.s;
  j["folded"] = c.folded;
  j["pass"] = c.pass;
  j["first_violation"] = c.first_violation ? ordered_json(*c.first_violation) : ordered_json(nullptr);
  return j;
}

std::string chain_text(const FoldedChainResult& c) {
  std::string s;
  for (std::size_t r = 0; r < c.folded.size(); ++r) {
    if (r) s += " >= ";
    s += "[c_" + std::to_string(c.m - static_cast<int>(r)) + "]=" + std::to_string(c.folded[r]);
  }
  return s;
}

std::string factorization(BigInt v) {
  std::string s;
  for (unsigned f = 2; v > 1; ++f) {
    int e = 0;
    while (v % f == 0) {
      v /= f;
      ++e;
    }
    if (e) {
      if (!s.empty()) s += "*";
      s += std::to_string(f);
      if (e > 1) s += "^" + std::to_string(e);
    }
    if (BigInt(f) * f > v && v > 1) {
      if (!s.empty()) s += "*";
      s += v.str();
      break;
    }
  }
  return s.empty() ? "1" : s;
}

Group load_group(const std::string& path, const Limits& limits) {
  return parse_group(read_file(path), limits.max_group_order);
}

}  // namespace

ordered_json to_json(const Report& r, bool with_timing) {
  ordered_json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  j["status"] = r.status;
  if (with_timing) j["timing"] = {{"seconds", r.seconds}};
  return j;
}

int exit_code(const Report& r) {
  if (r.status == "pass") return 0;
  if (r.status == "fail") return 1;
  return 2;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    try {
      return nlohmann::json::parse(s).get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("bad integer list '" + text + "': " + e.what());
    }
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.find_first_not_of(" \t") == std::string::npos) {
      if (!s.empty()) throw ParseError("bad integer list '" + text + "': empty item");
    } else {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        throw ParseError("bad integer list '" + text + "': '" + item + "' is not an integer");
      }
      if (item.find_first_not_of(" \t", used) != std::string::npos)
        throw ParseError("bad integer list '" + text + "': '" + item + "' is not an integer");
      out.push_back(static_cast<int>(v));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Series parse_series(const std::string& text, std::optional<int> n) {
  const auto ints = parse_int_list(text);
  std::vector<std::int64_t> values(ints.begin(), ints.end());
  if (values.empty()) throw ParseError("empty series");
  for (auto v : values)
    if (v < 0) throw ArgumentError("series entries must be nonnegative");
  if (n && *n + 1 != static_cast<int>(values.size())) return Series::from_lower_half(values, *n);
  return Series(std::move(values));
}

Report cmd_pitable(std::uint32_t pmax, const std::vector<int>& qs) {
  ordered_json inputs{{"pmax", pmax}, {"q", qs}};
  return guarded("pitable", inputs, [&](Report& r) {
    if (qs.empty()) throw ArgumentError("pitable: empty q list");
    for (int q : qs)
      if (q < 1) throw ArgumentError("pitable: q must be >= 1");
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2; p <= pmax; ++p)
      if (is_prime(p)) primes.push_back(p);
    if (primes.empty()) throw ArgumentError("pitable: no primes <= " + std::to_string(pmax));

    bool ok = true;
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    text << std::setw(4) << "p" << " |";
    for (int q : qs) text << std::setw(4) << q;
    text << "\n" << std::string(6 + 4 * qs.size(), '-') << "\n";
    for (auto p : primes) {
      ordered_json cells = ordered_json::array();
      text << std::setw(4) << p << " |";
      for (int q : qs) {
        if (q % static_cast<int>(p) == 0) {
          cells.push_back(kDash);
          text << "   " << kDash;
          continue;
        }
        const int pi = quantum_char(p, static_cast<std::uint64_t>(q));
        if (pi != quantum_char_by_order(p, static_cast<std::uint64_t>(q))) ok = false;
        cells.push_back(pi);
        text << std::setw(4) << pi;
      }
      text << "\n";
      rows.push_back({{"p", p}, {"values", cells}});
    }
    r.results["primes"] = primes;
    r.results["q"] = qs;
    r.results["rows"] = rows;
    r.status = ok ? "pass" : "fail";
    r.text = text.str();
  });
}

Report cmd_homology(const std::string& poset, std::uint32_t p, std::optional<int> j, std::optional<int> i,
                    const Limits& limits) {
  ordered_json inputs{{"poset", poset}, {"p", p}};
  if (j) inputs["j"] = *j;
  if (i) inputs["i"] = *i;
  return guarded("homology", inputs, [&](Report& r) {
    if (j.has_value() != i.has_value()) throw ArgumentError("homology: give both j and i, or neither");
    const auto spec = PosetSpec::parse(poset);
    const FieldSpec field(p);
    const Poset pos(spec, limits.max_rank_size);
    const HomologyEngine engine(pos, field);
    r.results["pi"] = engine.pi();
    std::ostringstream text;
    text << spec.to_string() << " over GF(" << p << "), pi = " << engine.pi() << "\n";

    if (j) {
      const auto dim = engine.homology_dim(*j, *i);
      const auto tc = engine.trace_check(*j, *i);
      const bool in_window = vanishing_window(spec.n(), engine.pi(), *j, *i);
      r.results["dim"] = dim;
      r.results["in_window"] = in_window;
      r.results["trace"] = {{"lhs", tc.lhs},         {"rhs", tc.rhs},
                            {"d", tc.d},             {"homology_index", tc.homology_index},
                            {"almost_exact", tc.almost_exact}, {"pass", tc.pass}};
      const bool ok = tc.pass && (in_window || dim == 0);
      r.status = ok ? "pass" : "fail";
      text << "dim H_{" << *j << "," << *i << "} = " << dim << (in_window ? " (inside window)" : " (outside window)")
           << "\ntrace: " << tc.lhs << " = " << tc.rhs << " at d=" << tc.d << ": " << pass_word(tc.pass) << "\n";
      r.text = text.str();
      return;
    }

    const auto rep = engine.scan();
    const auto ops = engine.verify_operator_identities();
    ordered_json records = ordered_json::array();
    std::size_t nonzero = 0;
    for (const auto& rec : rep.records) {
      if (rec.dim) ++nonzero;
      records.push_back({{"j", rec.j},
                         {"i", rec.i},
                         {"dim", rec.dim},
                         {"in_window", rec.in_window},
                         {"lhs", rec.trace.lhs},
                         {"rhs", rec.trace.rhs},
                         {"d", rec.trace.d},
                         {"pass", rec.pass}});
      if (rec.dim || !rec.pass)
        text << "  H_{" << rec.j << "," << rec.i << "} = " << rec.dim << "  trace " << rec.trace.lhs << "/"
             << rec.trace.rhs << "  " << pass_word(rec.pass) << "\n";
    }
    r.results["records"] = records;
    r.results["nonzero"] = nonzero;
    r.results["operator_identities"] = {{"checked", ops.checked}, {"failures", ops.failures}};
    const bool ok = rep.pass && ops.pass();
    r.status = ok ? "pass" : "fail";
    text << rep.records.size() << " homologies, " << nonzero << " nonzero; operator identities " << ops.checked
         << " checked, " << ops.failures.size() << " failed\n"
         << pass_word(ok) << "\n";
    r.text = text.str();
  });
}

Report cmd_orbits(const std::string& group_file, const std::string& poset, std::optional<int> k,
                  const std::string& method, const Limits& limits) {
  ordered_json inputs{{"group", group_file}, {"poset", poset}, {"method", method}};
  if (k) inputs["k"] = *k;
  return guarded("orbits", inputs, [&](Report& r) {
    if (method != "uf" && method != "burnside" && method != "both")
      throw ArgumentError("orbits: method must be uf, burnside or both");
    const auto spec = PosetSpec::parse(poset);
    const auto g = load_group(group_file, limits);
    if (!g.acts_on(spec)) throw IncompatibilityError("orbits: group does not act on " + spec.to_string());
    const auto order = group_order(g, limits.max_group_order);
    r.results["order"] = big(order);
    std::ostringstream text;
    text << "|G| = " << order.str() << " on " << spec.to_string() << "\n";

    const bool uf = method != "burnside";
    const bool bs = method != "uf";
    std::optional<Series> burnside;
    if (bs) burnside = burnside_counts(g, spec, limits.max_group_order);

    bool ok = true;
    if (k) {
      if (*k < 0 || *k > spec.n()) throw ArgumentError("orbits: k out of range 0.." + std::to_string(spec.n()));
      std::optional<std::uint64_t> u;
      if (uf) {
        u = orbit_count_unionfind(g, spec, *k, limits.max_rank_size);
        r.results["uf"] = *u;
      }
      if (bs) r.results["burnside"] = (*burnside)[*k];
      if (u && burnside) ok = static_cast<std::int64_t>(*u) == (*burnside)[*k];
      text << "N_" << *k << " = " << (u ? std::to_string(*u) : std::to_string((*burnside)[*k])) << "\n";
    } else {
      std::optional<Series> series;
      if (uf) {
        const Poset pos(spec, limits.max_rank_size);
        series = orbit_series_unionfind(g, pos);
        r.results["uf"] = series->values();
      }
      if (bs) r.results["burnside"] = burnside->values();
      if (series && burnside) ok = *series == *burnside;
      const Series& s = series ? *series : *burnside;
      const auto lw = check_lw(s);
      const auto pal = check_palindrome(s);
      r.results["livingstone_wagner"] = lw.pass;
      r.results["palindrome"] = pal.pass;
      ok = ok && lw.pass && pal.pass;
      text << "N = " << join(s.values()) << "\nLivingstone-Wagner " << pass_word(lw.pass) << ", palindrome "
           << pass_word(pal.pass) << "\n";
    }
    if (uf && bs) {
      r.results["methods_agree"] = ok;
      text << "union-find vs Burnside: " << (ok ? "agree" : "DISAGREE") << "\n";
    }
    r.status = ok ? "pass" : "fail";
    r.text = text.str();
  });
}

Report cmd_mult(const std::string& table_source, const std::string& poset, std::uint32_t p,
                const std::string& irreducible, const Limits&) {
  ordered_json inputs{{"table", table_source}, {"poset", poset}, {"p", p}, {"irreducible", irreducible}};
  return guarded("mult", inputs, [&](Report& r) {
    const auto spec = PosetSpec::parse(poset);
    if (!spec.is_boolean())
      throw IncompatibilityError("mult: multiplicities are only available for boolean posets");
    const FieldSpec field(p);
    const auto table = table_from_source(table_source);
    const auto idx = table.find_irreducible(irreducible);
    const auto c = multiplicity_series(table, idx, spec.n());
    const int pi = quantum_char(p, 1);
    const bool coprime = table.group_order % p != 0;

    const auto pal = check_palindrome(c);
    const auto stanley = check_lw(c);
    r.results["irreducible"] = table.irreducibles[idx].name;
    r.results["series"] = c.values();
    r.results["pi"] = pi;
    r.results["regime"] = pi > spec.n() ? "stanley" : "folded";
    r.results["palindrome"] = pal.pass;
    r.results["stanley"] = stanley.pass;
    if (stanley.first_violation)
      r.results["stanley_violation"] = {stanley.first_violation->first, stanley.first_violation->second};

    std::ostringstream text;
    text << "c = " << join(c.values()) << " for " << table.irreducibles[idx].name << "\npalindrome "
         << pass_word(pal.pass) << ", Stanley " << pass_word(stanley.pass) << "\n";
    bool ok = pal.pass && stanley.pass;
    if (coprime) {
      const auto chain = check_chain(c, pi);
      r.results["chain"] = chain_json(chain);
      ok = ok && chain.pass;
      text << "chain (pi=" << pi << "): " << chain_text(chain) << ": " << pass_word(chain.pass) << "\n";
    } else {
      r.results["chain"] = "not applicable: p divides |G|";
      text << "chain: not applicable, " << p << " divides |G| = " << table.group_order.str() << "\n";
    }
    r.status = ok ? "pass" : "fail";
    r.text = text.str();
  });
}

Report cmd_bounds(int n, const std::vector<int>& pis) {
  ordered_json inputs{{"n", n}, {"pis", pis}};
  return guarded("bounds", inputs, [&](Report& r) {
    const auto rep = deduce_bounds(n, pis);
    r.results["lower"] = rep.lower;
    ordered_json log = ordered_json::array();
    std::ostringstream text;
    for (const auto& step : rep.log) {
      log.push_back({{"rule", step.rule}, {"k", step.k}, {"from", step.from}, {"to", step.to}, {"reason", step.reason}});
      if (step.rule == "R4")
        text << "  " << step.rule << ": N_" << step.k << " >= " << step.to << "  (" << step.reason << ")\n";
    }
    r.results["log"] = log;
    text << "L = " << join(rep.lower) << "\n";
    r.text = text.str();
  });
}

Report cmd_chain(const std::string& series, std::optional<int> n, int pi) {
  ordered_json inputs{{"series", series}, {"pi", pi}};
  if (n) inputs["n"] = *n;
  return guarded("chain", inputs, [&](Report& r) {
    const auto c = parse_series(series, n);
    const auto chain = check_chain(c, pi);
    r.results = chain_json(chain);
    r.results["n"] = c.n();
    r.results["series"] = c.values();
    r.results["index_sets"] = symbolic_chain(c.n(), pi);
    r.status = chain.pass ? "pass" : "fail";
    std::ostringstream text;
    text << chain_text(chain) << "\n";
    if (chain.first_violation) text << "violation at r=" << *chain.first_violation << "\n";
    text << pass_word(chain.pass) << "\n";
    r.text = text.str();
  });
}

Report cmd_order(const std::string& group_file, const Limits& limits) {
  ordered_json inputs{{"group", group_file}};
  return guarded("order", inputs, [&](Report& r) {
    const auto g = load_group(group_file, limits);
    const auto order = group_order(g, limits.max_group_order);
    r.results["kind"] = g.kind() == GroupKind::permutation ? "permutation" : "matrix";
    r.results["degree"] = g.degree();
    r.results["order"] = big(order);
    r.results["factorization"] = factorization(order);
    r.text = "|G| = " + order.str() + " = " + factorization(order) + "\n";
  });
}

Report cmd_table(const std::string& table_source) {
  ordered_json inputs{{"table", table_source}};
  return guarded("table", inputs, [&](Report& r) {
    const auto table = table_from_source(table_source);
    const auto text = export_table(table);
    r.results["table"] = ordered_json::parse(text);
    r.text = text + "\n";
  });
}

}  // namespace posethom::cli
