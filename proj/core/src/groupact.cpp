#include "posethom/groupact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "posethom/errors.hpp"
#include "posethom/schreier_sims.hpp"

namespace posethom {

namespace {

using nlohmann::json;

struct BytesHash {
  std::size_t operator()(const std::vector<GfElem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t components_;
};

void require_action(const Group& g, const PosetSpec& spec) {
  if (!g.acts_on(spec)) {
    const std::string what = g.kind() == GroupKind::permutation
                                 ? "permutation group of degree " + std::to_string(g.degree())
                                 : "matrix group GL(" + std::to_string(g.n()) + "," + std::to_string(g.q()) + ")";
    throw IncompatibilityError(what + " does not act on " + spec.to_string());
  }
}

std::vector<GfMatrix> matrix_closure(const Group& g, std::size_t cap) {
  std::unordered_set<std::vector<GfElem>, BytesHash> seen;
  std::vector<GfMatrix> elements;
  const auto id = GfMatrix::identity(g.field(), g.n());
  seen.insert(id.entries());
  elements.push_back(id);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : g.matrices()) {
      GfMatrix next = s * elements[head];
      if (seen.insert(next.entries()).second) {
        if (elements.size() >= cap)
          throw ResourceError("matrix group closure exceeds the group order cap of " + std::to_string(cap) +
                              "; supply \"order\" in the group file or raise --max-group-order");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

Perm parse_perm_generator(const json& gen, std::size_t degree, std::size_t index) {
  const std::string where = "generator " + std::to_string(index + 1);
  try {
    if (gen.is_string()) return Perm::parse_cycles(gen.get<std::string>(), degree);
    if (gen.is_array()) {
      if (gen.size() != degree)
        throw DataError("image list has " + std::to_string(gen.size()) + " entries, expected " + std::to_string(degree));
      std::vector<std::uint32_t> im;
      for (const auto& v : gen) {
        const auto x = v.get<long long>();
        if (x < 1 || x > static_cast<long long>(degree)) throw DataError("image " + std::to_string(x) + " out of range");
        im.push_back(static_cast<std::uint32_t>(x - 1));
      }
      return Perm(std::move(im));
    }
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(where + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a cycle string or an image list");
}

}  // namespace

// ---------------------------------------------------------------- GfMatrix

GfMatrix::GfMatrix(std::shared_ptr<const GaloisField> field, int n, std::vector<GfElem> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (!field_) throw ArgumentError("GfMatrix: null field");
  if (n < 1 || entries_.size() != static_cast<std::size_t>(n * n)) throw ArgumentError("GfMatrix: shape mismatch");
  for (auto x : entries_)
    if (x >= field_->order()) throw DataError("GfMatrix: entry " + std::to_string(x) + " outside the field");
}

GfMatrix GfMatrix::identity(std::shared_ptr<const GaloisField> field, int n) {
  std::vector<GfElem> e(static_cast<std::size_t>(n * n), 0);
  for (int t = 0; t < n; ++t) e[static_cast<std::size_t>(t * n + t)] = 1;
  return GfMatrix(std::move(field), n, std::move(e));
}

bool GfMatrix::is_invertible() const {
  auto copy = entries_;
  return field_->rref(copy, static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)) == static_cast<std::size_t>(n_);
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
  if (a.n_ != b.n_ || a.field_->order() != b.field_->order()) throw ArgumentError("GfMatrix product: mismatch");
  const auto& f = *a.field_;
  const int n = a.n_;
  std::vector<GfElem> e(static_cast<std::size_t>(n * n), 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const GfElem x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < n; ++c) {
        auto& slot = e[static_cast<std::size_t>(r * n + c)];
        slot = f.add(slot, f.mul(x, b.at(k, c)));
      }
    }
  return GfMatrix(a.field_, n, std::move(e));
}

// ---------------------------------------------------------------- Group

Group Group::permutation_group(std::size_t degree, std::vector<Perm> generators) {
  if (degree < 1) throw ArgumentError("permutation group: degree must be >= 1");
  if (generators.empty()) throw ArgumentError("permutation group: at least one generator required");
  for (const auto& g : generators)
    if (g.degree() != degree) throw ArgumentError("permutation group: generator degree mismatch");
  Group grp;
  grp.kind_ = GroupKind::permutation;
  grp.degree_ = static_cast<int>(degree);
  grp.permutations_ = std::move(generators);
  return grp;
}

Group Group::matrix_group(int n, int q, std::vector<GfMatrix> generators) {
  if (generators.empty()) throw ArgumentError("matrix group: at least one generator required");
  Group grp;
  grp.kind_ = GroupKind::matrix;
  grp.degree_ = n;
  grp.q_ = q;
  grp.field_ = generators.front().field_ptr();
  for (std::size_t t = 0; t < generators.size(); ++t) {
    const auto& g = generators[t];
    if (g.n() != n || static_cast<int>(g.field().order()) != q)
      throw ArgumentError("matrix group: generator " + std::to_string(t + 1) + " has the wrong shape or field");
    if (!g.is_invertible()) throw DataError("matrix group: generator " + std::to_string(t + 1) + " is singular");
  }
  grp.matrices_ = std::move(generators);
  return grp;
}

std::vector<GroupElement> Group::generators() const {
  std::vector<GroupElement> out;
  for (const auto& g : permutations_) out.emplace_back(g);
  for (const auto& g : matrices_) out.emplace_back(g);
  return out;
}

bool Group::acts_on(const PosetSpec& spec) const {
  if (kind_ == GroupKind::permutation) return spec.is_boolean() && spec.n() == degree_;
  return !spec.is_boolean() && spec.n() == degree_ && spec.q() == q_;
}

// ---------------------------------------------------------------- parsing

Group parse_group(std::string_view json_text, std::size_t max_group_order) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("group file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("group file: top level must be an object");
  const auto require = [&](const char* key) -> const json& {
    if (!doc.contains(key)) throw ParseError(std::string("group file: missing field \"") + key + "\"");
    return doc.at(key);
  };

  Group group;
  try {
    const auto kind = require("kind").get<std::string>();
    const auto& gens = require("generators");
    if (!gens.is_array() || gens.empty()) throw ParseError("group file: \"generators\" must be a nonempty array");
    if (kind == "permutation") {
      const auto degree = require("degree").get<long long>();
      if (degree < 1 || degree > 4096) throw ParseError("group file: degree out of range");
      std::vector<Perm> perms;
      for (std::size_t t = 0; t < gens.size(); ++t)
        perms.push_back(parse_perm_generator(gens[t], static_cast<std::size_t>(degree), t));
      group = Group::permutation_group(static_cast<std::size_t>(degree), std::move(perms));
    } else if (kind == "matrix") {
      const auto n = require("n").get<int>();
      const auto q = require("q").get<int>();
      if (n < 1 || n > 64) throw ParseError("group file: n out of range");
      if (q < 2 || !GaloisField::supported(static_cast<std::uint32_t>(q)))
        throw DataError("group file: unsupported q=" + std::to_string(q));
      auto field = std::make_shared<const GaloisField>(static_cast<std::uint32_t>(q));
      std::vector<GfMatrix> mats;
      for (std::size_t t = 0; t < gens.size(); ++t) {
        const auto& rows = gens[t];
        const std::string where = "group file: generator " + std::to_string(t + 1);
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
          throw ParseError(where + ": expected " + std::to_string(n) + " rows");
        std::vector<GfElem> e;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(n))
            throw ParseError(where + ", row " + std::to_string(r + 1) + ": expected " + std::to_string(n) + " entries");
          for (const auto& v : rows[r]) {
            const auto x = v.get<long long>();
            if (x < 0 || x >= q)
              throw DataError(where + ", row " + std::to_string(r + 1) + ": entry " + std::to_string(x) +
                              " outside 0.." + std::to_string(q - 1));
            e.push_back(static_cast<GfElem>(x));
          }
        }
        GfMatrix m(field, n, std::move(e));
        if (!m.is_invertible()) throw DataError(where + ": matrix is singular");
        mats.push_back(std::move(m));
      }
      group = Group::matrix_group(n, q, std::move(mats));
    } else {
      throw ParseError("group file: unknown kind '" + kind + "'");
    }

    if (doc.contains("order")) {
      const auto& o = doc.at("order");
      BigInt declared = o.is_string() ? BigInt(o.get<std::string>()) : BigInt(o.get<std::uint64_t>());
      std::optional<BigInt> computed;
      if (group.kind() == GroupKind::permutation) {
        computed = group_order(group);
      } else {
        try {
          computed = group_order(group, max_group_order);
        } catch (const ResourceError&) {
          // too large to verify here; trusted as stated
        }
      }
      if (computed && *computed != declared)
        throw DataError("group file: stated order " + declared.str() + " but the generators give " + computed->str());
      group.set_declared_order(declared);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("group file: ") + e.what());
  }
  return group;
}

// ---------------------------------------------------------------- orders and elements

BigInt group_order(const Group& g, std::size_t max_group_order) {
  if (g.kind() == GroupKind::permutation) {
    return StabilizerChain(static_cast<std::size_t>(g.degree()), g.permutations()).order();
  }
  try {
    return BigInt(matrix_closure(g, max_group_order).size());
  } catch (const ResourceError&) {
    if (g.declared_order()) return *g.declared_order();
    throw;
  }
}

std::vector<Perm> enumerate_elements(const Group& g, std::size_t max_group_order) {
  if (g.kind() != GroupKind::permutation) throw ArgumentError("enumerate_elements: permutation groups only");
  const BigInt order = group_order(g);
  if (order > max_group_order)
    throw ResourceError("group of order " + order.str() + " exceeds the element enumeration cap of " +
                        std::to_string(max_group_order));
  std::unordered_set<Perm> seen;
  std::vector<Perm> elements{Perm::identity(static_cast<std::size_t>(g.degree()))};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (const auto& s : g.permutations()) {
      Perm next = s * elements[head];
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  if (BigInt(elements.size()) != order)
    throw ConsistencyError("closure found " + std::to_string(elements.size()) + " elements but |G| = " + order.str());
  return elements;
}

// ---------------------------------------------------------------- counting

BigInt fix_count_subsets(const Partition& cycle_type, int k) {
  if (k < 0) return 0;
  std::vector<BigInt> poly{1};
  for (int c : cycle_type) {
    if (c < 1) throw ArgumentError("fix_count_subsets: cycle lengths must be positive");
    std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(c), 0);
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t] += poly[t];
      next[t + static_cast<std::size_t>(c)] += poly[t];
    }
    poly = std::move(next);
  }
  return static_cast<std::size_t>(k) < poly.size() ? poly[static_cast<std::size_t>(k)] : BigInt(0);
}

OrbitSeries burnside_counts(const Group& g, const PosetSpec& spec, std::size_t max_group_order) {
  if (g.kind() != GroupKind::permutation)
    throw ArgumentError("burnside_counts: only permutation groups are supported (use union-find for matrix groups)");
  require_action(g, spec);
  const auto elements = enumerate_elements(g, max_group_order);
  std::map<Partition, std::uint64_t> tally;
  for (const auto& e : elements) ++tally[cycle_type(e)];

  const BigInt order(elements.size());
  std::vector<std::int64_t> counts;
  for (int k = 0; k <= spec.n(); ++k) {
    BigInt total = 0;
    for (const auto& [ct, mult] : tally) total += fix_count_subsets(ct, k) * mult;
    if (total % order != 0)
      throw ConsistencyError("Burnside sum " + total.str() + " at k=" + std::to_string(k) +
                             " is not divisible by |G| = " + order.str());
    counts.push_back(static_cast<std::int64_t>(total / order));
  }
  return OrbitSeries(std::move(counts));
}

std::uint64_t orbit_count_unionfind(const Group& g, const Poset& poset, int k) {
  const auto& spec = poset.spec();
  require_action(g, spec);
  const std::size_t count = poset.size(k);
  if (count == 0) return 0;
  if (count > UINT32_MAX) throw ResourceError("orbit_count_unionfind: rank set too large");
  DisjointSets sets(count);

  if (spec.is_boolean()) {
    // per generator: image of each byte of a mask
    std::vector<std::array<std::array<SubsetMask, 256>, 8>> tables(g.permutations().size());
    for (std::size_t t = 0; t < tables.size(); ++t) {
      const auto& perm = g.permutations()[t];
      for (int byte = 0; byte < 8; ++byte)
        for (int v = 0; v < 256; ++v) {
          SubsetMask img = 0;
          for (int bit = 0; bit < 8; ++bit) {
            const int point = byte * 8 + bit;
            if ((v >> bit & 1) && point < spec.n()) img |= SubsetMask{1} << perm(static_cast<std::uint32_t>(point));
          }
          tables[t][static_cast<std::size_t>(byte)][static_cast<std::size_t>(v)] = img;
        }
    }
    const int bytes = (spec.n() + 7) / 8;
    SubsetMask x = k == 0 ? 0 : (SubsetMask{1} << k) - 1;
    for (std::size_t idx = 0; idx < count; ++idx) {
      for (const auto& tab : tables) {
        SubsetMask img = 0;
        for (int byte = 0; byte < bytes; ++byte) img |= tab[static_cast<std::size_t>(byte)][(x >> (8 * byte)) & 0xff];
        sets.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(subset_index(img)));
      }
      if (k > 0 && idx + 1 < count) x = next_subset(x);
    }
  } else {
    const auto& xs = poset.subspaces(k);
    for (std::size_t idx = 0; idx < xs.size(); ++idx)
      for (const auto& m : g.matrices())
        sets.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(poset.index_of(act(m, xs[idx]))));
  }
  return sets.components();
}

std::uint64_t orbit_count_unionfind(const Group& g, const PosetSpec& spec, int k, std::size_t max_rank_size) {
  return orbit_count_unionfind(g, Poset(spec, max_rank_size), k);
}

OrbitSeries orbit_series_unionfind(const Group& g, const Poset& poset) {
  std::vector<std::int64_t> counts;
  for (int k = 0; k <= poset.spec().n(); ++k)
    counts.push_back(static_cast<std::int64_t>(orbit_count_unionfind(g, poset, k)));
  return OrbitSeries(std::move(counts));
}

// ---------------------------------------------------------------- action

SubsetMask act(const Perm& g, SubsetMask x) {
  SubsetMask img = 0;
  for (SubsetMask m = x; m; m &= m - 1) {
    const auto point = static_cast<std::uint32_t>(std::countr_zero(m));
    if (point >= g.degree()) throw ArgumentError("act: subset has a point beyond the permutation degree");
    img |= SubsetMask{1} << g(point);
  }
  return img;
}

Subspace act(const GfMatrix& g, const Subspace& x) {
  if (g.n() != x.n()) throw ArgumentError("act: matrix and subspace dimensions differ");
  const auto& f = g.field();
  const int n = x.n();
  const int k = x.rank();
  // rows of X g^T: each basis vector v becomes g v
  std::vector<GfElem> rows(static_cast<std::size_t>(k * n), 0);
  for (int r = 0; r < k; ++r)
    for (int t = 0; t < n; ++t) {
      GfElem s = 0;
      for (int c = 0; c < n; ++c) s = f.add(s, f.mul(g.at(t, c), x.at(r, c)));
      rows[static_cast<std::size_t>(r * n + t)] = s;
    }
  return Subspace::span_of(std::move(rows), k, n, f);
}

RankElement act(const GroupElement& g, const RankElement& x, const PosetSpec& spec) {
  if (const auto* perm = std::get_if<Perm>(&g)) {
    if (!spec.is_boolean() || static_cast<int>(perm->degree()) != spec.n())
      throw IncompatibilityError("act: permutation does not act on " + spec.to_string());
    return act(*perm, std::get<SubsetMask>(x));
  }
  const auto& m = std::get<GfMatrix>(g);
  if (spec.is_boolean() || m.n() != spec.n() || static_cast<int>(m.field().order()) != spec.q())
    throw IncompatibilityError("act: matrix does not act on " + spec.to_string());
  return act(m, std::get<Subspace>(x));
}

}  // namespace posethom
