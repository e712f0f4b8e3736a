#include "posethom/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "posethom/errors.hpp"
#include "posethom/groupact.hpp"

namespace posethom {

namespace {

using nlohmann::json;

/// Murnaghan-Nakayama over beta-sets, memoised on (lambda, position in mu).
class BorderStripRule {
 public:
  explicit BorderStripRule(Partition mu) : mu_(std::move(mu)) {}

  std::int64_t value(const Partition& lambda, std::size_t start = 0) {
    if (start == mu_.size()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, start);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu_[start];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int t = 0; t < len; ++t) beta[static_cast<std::size_t>(t)] = lambda[static_cast<std::size_t>(t)] + (len - 1 - t);

    std::int64_t sum = 0;
    for (int t = 0; t < len; ++t) {
      const int b = beta[static_cast<std::size_t>(t)];
      const int nb = b - r;
      if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
      // leg length = number of beads jumped over
      const auto jumped = std::count_if(beta.begin(), beta.end(), [&](int x) { return nb < x && x < b; });
      std::vector<int> moved = beta;
      moved[static_cast<std::size_t>(t)] = nb;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      Partition smaller;
      for (int s = 0; s < len; ++s) {
        const int part = moved[static_cast<std::size_t>(s)] - (len - 1 - s);
        if (part > 0) smaller.push_back(part);
      }
      const std::int64_t sub = value(smaller, start + 1);
      sum += jumped % 2 == 0 ? sub : -sub;
    }
    memo_.emplace(key, sum);
    return sum;
  }

 private:
  Partition mu_;
  std::map<std::pair<Partition, std::size_t>, std::int64_t> memo_;
};

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

std::string class_name(const Partition& p) {
  std::string s;
  for (std::size_t t = 0; t < p.size();) {
    std::size_t u = t;
    while (u < p.size() && p[u] == p[t]) ++u;
    if (!s.empty()) s += ' ';
    s += std::to_string(p[t]);
    if (u - t > 1) s += '^' + std::to_string(u - t);
    t = u;
  }
  return s;
}

std::string normalize_name(std::string_view name) {
  std::string s(name);
  for (const char* prefix : {"chi^", "\xCF\x87^", "chi", "\xCF\x87"})
    if (s.rfind(prefix, 0) == 0) {
      s.erase(0, std::char_traits<char>::length(prefix));
      break;
    }
  std::replace(s.begin(), s.end(), '[', '(');
  std::replace(s.begin(), s.end(), ']', ')');
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (!s.empty() && s.front() != '(' &&
      std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == ','; }))
    s = "(" + s + ")";
  return s;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int t = 2; t <= n; ++t) f *= t;
  return f;
}

std::string format_value(std::complex<double> z) {
  std::ostringstream os;
  os.precision(10);
  if (std::abs(z.imag()) < 1e-12)
    os << z.real();
  else
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

BigInt json_bigint(const json& v, const std::string& what) {
  if (v.is_string()) return BigInt(v.get<std::string>());
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return BigInt(v.get<std::uint64_t>());
  throw ParseError("table file: " + what + " must be a nonnegative integer");
}

}  // namespace

// ---------------------------------------------------------------- basics

std::int64_t IrreducibleCharacter::degree() const {
  if (!exact.empty()) return exact.front();
  return values.empty() ? 0 : static_cast<std::int64_t>(std::llround(values.front().real()));
}

std::size_t CharacterTable::find_irreducible(std::string_view name) const {
  for (std::size_t t = 0; t < irreducibles.size(); ++t)
    if (irreducibles[t].name == name) return t;
  const auto wanted = normalize_name(name);
  for (std::size_t t = 0; t < irreducibles.size(); ++t)
    if (normalize_name(irreducibles[t].name) == wanted) return t;
  throw ArgumentError("no irreducible named '" + std::string(name) + "' in the table");
}

std::size_t CharacterTable::identity_class() const {
  for (std::size_t t = 0; t < classes.size(); ++t) {
    const auto& ct = classes[t].cycle_type;
    if (ct && !ct->empty() && std::all_of(ct->begin(), ct->end(), [](int c) { return c == 1; })) return t;
  }
  for (std::size_t t = 0; t < classes.size(); ++t)
    if (classes[t].size == 1) return t;
  return 0;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition current;
  partitions_rec(n, n, current, out);
  return out;
}

std::string partition_name(const Partition& p) {
  std::string s = "(";
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(p[t]);
  }
  return s + ")";
}

std::int64_t sn_character(const Partition& lambda, const Partition& mu) {
  return BorderStripRule(mu).value(lambda);
}

CharacterTable sn_table(int n) {
  if (n < 1 || n > 10) throw ArgumentError("sn_table: n must be in 1..10, got " + std::to_string(n));
  const auto parts = partitions(n);
  CharacterTable t;
  t.group_order = factorial(n);
  t.exact = true;

  std::vector<Partition> cycle_types(parts.rbegin(), parts.rend());
  for (const auto& mu : cycle_types) {
    // |class| = n! / z_mu, z_mu = prod_i i^{m_i} m_i!
    BigInt z = 1;
    for (std::size_t s = 0; s < mu.size();) {
      std::size_t u = s;
      while (u < mu.size() && mu[u] == mu[s]) ++u;
      for (std::size_t m = 1; m <= u - s; ++m) z *= static_cast<long long>(mu[s]) * static_cast<long long>(m);
      s = u;
    }
    t.classes.push_back({class_name(mu), t.group_order / z, mu});
  }

  std::vector<BorderStripRule> rules;
  for (const auto& mu : cycle_types) rules.emplace_back(mu);
  for (const auto& lambda : parts) {
    IrreducibleCharacter chi;
    chi.name = partition_name(lambda);
    for (auto& rule : rules) {
      const auto v = rule.value(lambda);
      chi.exact.push_back(v);
      chi.values.emplace_back(static_cast<double>(v), 0.0);
    }
    t.irreducibles.push_back(std::move(chi));
  }
  return t;
}

// ---------------------------------------------------------------- validation

TableValidation validate_table(const CharacterTable& t) {
  TableValidation v;
  const auto fail = [&](std::string msg) {
    v.ok = false;
    v.diagnostics.push_back(std::move(msg));
  };
  const std::size_t nc = t.classes.size();
  if (nc == 0) {
    fail("table has no classes");
    return v;
  }
  for (const auto& chi : t.irreducibles) {
    if (chi.values.size() != nc) {
      fail("irreducible " + chi.name + " has " + std::to_string(chi.values.size()) + " values for " +
           std::to_string(nc) + " classes");
      return v;
    }
    if (t.exact && chi.exact.size() != nc) {
      fail("irreducible " + chi.name + " lacks exact values");
      return v;
    }
  }
  if (t.irreducibles.size() != nc)
    fail("table is not square: " + std::to_string(t.irreducibles.size()) + " irreducibles, " + std::to_string(nc) +
         " classes");

  BigInt class_total = 0;
  for (const auto& c : t.classes) class_total += c.size;
  if (class_total != t.group_order)
    fail("class sizes sum to " + class_total.str() + ", group order is " + t.group_order.str());

  const std::size_t id = t.identity_class();
  BigInt degree_squares = 0;
  for (const auto& chi : t.irreducibles) {
    const auto z = chi.values[id];
    if (z.real() < 0.5 || std::abs(z.imag()) > kTableTolerance ||
        std::abs(z.real() - std::round(z.real())) > kTableTolerance)
      fail("irreducible " + chi.name + " has non-integral degree " + format_value(z));
    const BigInt d = chi.degree();
    degree_squares += d * d;
  }
  if (degree_squares != t.group_order)
    fail("sum of squared degrees is " + degree_squares.str() + ", group order is " + t.group_order.str());

  const double order = static_cast<double>(t.group_order);
  for (std::size_t a = 0; a < t.irreducibles.size(); ++a)
    for (std::size_t b = a; b < t.irreducibles.size(); ++b) {
      const auto& x = t.irreducibles[a];
      const auto& y = t.irreducibles[b];
      const std::string pair = "<" + x.name + "," + y.name + ">";
      if (t.exact) {
        BigInt sum = 0;
        for (std::size_t c = 0; c < nc; ++c) sum += t.classes[c].size * x.exact[c] * y.exact[c];
        const BigInt expected = a == b ? t.group_order : BigInt(0);
        if (sum != expected) {
          const std::string val = sum % t.group_order == 0 ? BigInt(sum / t.group_order).str()
                                                           : sum.str() + "/" + t.group_order.str();
          fail("orthogonality fails: " + pair + " = " + val + ", expected " + (a == b ? "1" : "0"));
        }
      } else {
        std::complex<double> sum = 0;
        for (std::size_t c = 0; c < nc; ++c)
          sum += static_cast<double>(t.classes[c].size) * x.values[c] * std::conj(y.values[c]);
        sum /= order;
        const double expected = a == b ? 1.0 : 0.0;
        if (std::abs(sum - expected) > kTableTolerance)
          fail("orthogonality fails: " + pair + " = " + format_value(sum) + ", expected " + (a == b ? "1" : "0"));
      }
    }
  return v;
}

// ---------------------------------------------------------------- file format

CharacterTable load_table(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("table file: ") + e.what());
  }
  CharacterTable t;
  try {
    if (!doc.is_object()) throw ParseError("table file: top level must be an object");
    for (const char* key : {"group_order", "classes", "irreducibles"})
      if (!doc.contains(key)) throw ParseError(std::string("table file: missing field \"") + key + "\"");
    t.group_order = json_bigint(doc.at("group_order"), "group_order");

    for (const auto& c : doc.at("classes")) {
      ConjugacyClass cls;
      cls.name = c.value("name", std::string("C") + std::to_string(t.classes.size() + 1));
      if (!c.contains("size")) throw ParseError("table file: class " + cls.name + " has no size");
      cls.size = json_bigint(c.at("size"), "size of class " + cls.name);
      if (c.contains("cycle_type")) {
        Partition ct = c.at("cycle_type").get<Partition>();
        std::sort(ct.begin(), ct.end(), std::greater<>());
        cls.cycle_type = std::move(ct);
      }
      t.classes.push_back(std::move(cls));
    }

    bool all_integer = true;
    for (const auto& r : doc.at("irreducibles")) {
      IrreducibleCharacter chi;
      chi.name = r.value("name", std::string("chi") + std::to_string(t.irreducibles.size() + 1));
      if (!r.contains("values")) throw ParseError("table file: irreducible " + chi.name + " has no values");
      for (const auto& v : r.at("values")) {
        if (v.is_number_integer()) {
          chi.values.emplace_back(static_cast<double>(v.get<std::int64_t>()), 0.0);
          chi.exact.push_back(v.get<std::int64_t>());
        } else if (v.is_number()) {
          chi.values.emplace_back(v.get<double>(), 0.0);
          all_integer = false;
        } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
          chi.values.emplace_back(v[0].get<double>(), v[1].get<double>());
          all_integer = false;
        } else {
          throw ParseError("table file: irreducible " + chi.name + " has a value that is neither a number nor [re,im]");
        }
      }
      t.irreducibles.push_back(std::move(chi));
    }
    t.exact = all_integer;
    if (!t.exact)
      for (auto& chi : t.irreducibles) chi.exact.clear();
  } catch (const json::exception& e) {
    throw ParseError(std::string("table file: ") + e.what());
  }

  const auto check = validate_table(t);
  if (!check.ok) {
    std::string msg = "character table rejected:";
    for (const auto& d : check.diagnostics) msg += "\n  " + d;
    throw DataError(msg);
  }
  return t;
}

std::string export_table(const CharacterTable& t) {
  nlohmann::ordered_json doc;
  doc["group_order"] = t.group_order <= std::numeric_limits<std::uint64_t>::max()
                           ? nlohmann::ordered_json(static_cast<std::uint64_t>(t.group_order))
                           : nlohmann::ordered_json(t.group_order.str());
  doc["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : t.classes) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["size"] = static_cast<std::uint64_t>(c.size);
    if (c.cycle_type) jc["cycle_type"] = *c.cycle_type;
    doc["classes"].push_back(jc);
  }
  doc["irreducibles"] = nlohmann::ordered_json::array();
  for (const auto& chi : t.irreducibles) {
    nlohmann::ordered_json jr;
    jr["name"] = chi.name;
    jr["values"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < chi.values.size(); ++c) {
      if (t.exact)
        jr["values"].push_back(chi.exact[c]);
      else
        jr["values"].push_back(nlohmann::ordered_json::array({chi.values[c].real(), chi.values[c].imag()}));
    }
    doc["irreducibles"].push_back(jr);
  }
  return doc.dump(2);
}

// ---------------------------------------------------------------- characters

std::vector<BigInt> perm_character(const CharacterTable& t, int n, int k) {
  std::vector<BigInt> out;
  for (const auto& c : t.classes) {
    if (!c.cycle_type)
      throw IncompatibilityError("unsupported action: class " + c.name + " has no cycle type");
    int total = 0;
    for (int part : *c.cycle_type) total += part;
    if (total != n)
      throw IncompatibilityError("unsupported action: class " + c.name + " has a cycle type of degree " +
                                 std::to_string(total) + ", expected " + std::to_string(n));
    out.push_back(fix_count_subsets(*c.cycle_type, k));
  }
  return out;
}

Series multiplicity_series(const CharacterTable& t, std::size_t irreducible, int n) {
  if (irreducible >= t.irreducibles.size()) throw ArgumentError("multiplicity_series: no such irreducible");
  const auto& chi = t.irreducibles[irreducible];
  std::vector<std::int64_t> c;
  for (int k = 0; k <= n; ++k) {
    const auto fix = perm_character(t, n, k);
    std::int64_t value = 0;
    if (t.exact) {
      BigInt sum = 0;
      for (std::size_t s = 0; s < fix.size(); ++s) sum += t.classes[s].size * fix[s] * chi.exact[s];
      if (sum % t.group_order != 0 || sum < 0)
        throw DataError("multiplicity of " + chi.name + " at k=" + std::to_string(k) + " is " + sum.str() + "/" +
                        t.group_order.str() + ", not a nonnegative integer (wrong table?)");
      value = static_cast<std::int64_t>(sum / t.group_order);
    } else {
      std::complex<double> sum = 0;
      for (std::size_t s = 0; s < fix.size(); ++s)
        sum += static_cast<double>(t.classes[s].size) * static_cast<double>(fix[s]) * std::conj(chi.values[s]);
      sum /= static_cast<double>(t.group_order);
      const double rounded = std::round(sum.real());
      if (std::abs(sum.real() - rounded) > kMultiplicityTolerance || std::abs(sum.imag()) > kMultiplicityTolerance ||
          rounded < 0)
        throw DataError("multiplicity of " + chi.name + " at k=" + std::to_string(k) + " is " + format_value(sum) +
                        ", not a nonnegative integer (wrong table?)");
      value = static_cast<std::int64_t>(rounded);
    }
    c.push_back(value);
  }
  return Series(std::move(c));
}

Series multiplicity_series(const CharacterTable& t, std::string_view irreducible, int n) {
  return multiplicity_series(t, t.find_irreducible(irreducible), n);
}

}  // namespace posethom
