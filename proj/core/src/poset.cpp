#include "posethom/poset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>

#include "posethom/errors.hpp"

namespace posethom {

namespace {

bool is_prime_power(long long q) {
  if (q < 2) return false;
  long long p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw ParseError("poset: bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

const std::array<std::array<std::uint64_t, 65>, 65>& binomial_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
    return c;
  }();
  return table;
}

std::size_t checked_size(const BigInt& size, std::size_t cap, const PosetSpec& spec, int k) {
  if (size > cap)
    throw ResourceError("rank " + std::to_string(k) + " of " + spec.to_string() + " has " + size.str() +
                        " elements, above the enumeration cap of " + std::to_string(cap));
  return static_cast<std::size_t>(size);
}

/// All k x n RREF matrices over GF(q), sorted lexicographically.
std::vector<Subspace> enumerate_subspaces(int n, int k, const GaloisField& field) {
  std::vector<Subspace> out;
  const std::uint32_t q = field.order();
  if (k < 0 || k > n) return out;
  // pivot columns as a k-subset of n in numeric mask order; order is fixed by the final sort
  SubsetMask pivots = k == 0 ? 0 : (SubsetMask{1} << k) - 1;
  const SubsetMask limit = SubsetMask{1} << n;
  while (true) {
    std::vector<int> pivot_cols;
    for (int c = 0; c < n; ++c)
      if (pivots >> c & 1) pivot_cols.push_back(c);
    std::vector<GfElem> base(static_cast<std::size_t>(k * n), 0);
    std::vector<std::size_t> free_pos;
    for (int r = 0; r < k; ++r) {
      base[static_cast<std::size_t>(r * n + pivot_cols[r])] = 1;
      for (int c = pivot_cols[r] + 1; c < n; ++c)
        if (!(pivots >> c & 1)) free_pos.push_back(static_cast<std::size_t>(r * n + c));
    }
    std::vector<std::uint32_t> digit(free_pos.size(), 0);
    while (true) {
      std::vector<GfElem> m = base;
      for (std::size_t t = 0; t < free_pos.size(); ++t) m[free_pos[t]] = static_cast<GfElem>(digit[t]);
      out.push_back(Subspace::span_of(std::move(m), k, n, field));
      std::size_t t = 0;
      while (t < digit.size() && ++digit[t] == q) digit[t++] = 0;
      if (t == digit.size()) break;
    }
    if (k == 0) break;
    pivots = next_subset(pivots);
    if (pivots >= limit) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- PosetSpec

PosetSpec PosetSpec::boolean(int n) {
  if (n < 1) throw ArgumentError("boolean poset needs n >= 1, got " + std::to_string(n));
  return PosetSpec(PosetKind::boolean, n, 1);
}

PosetSpec PosetSpec::projective(int n, int q) {
  if (n < 1) throw ArgumentError("projective poset needs n >= 1, got " + std::to_string(n));
  if (!is_prime_power(q)) throw ArgumentError("projective poset needs a prime power q, got " + std::to_string(q));
  return PosetSpec(PosetKind::projective, n, q);
}

PosetSpec PosetSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("poset: expected boolean:<n> or projective:<n>,<q>");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "boolean") return boolean(parse_int(rest, "n"));
  if (kind == "projective") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ParseError("poset: expected projective:<n>,<q>");
    return projective(parse_int(rest.substr(0, comma), "n"), parse_int(rest.substr(comma + 1), "q"));
  }
  throw ParseError("poset: unknown kind '" + std::string(kind) + "'");
}

BigInt PosetSpec::total_size() const {
  BigInt total = 0;
  for (int k = 0; k <= n_; ++k) total += rank_size(k);
  return total;
}

std::string PosetSpec::to_string() const {
  if (is_boolean()) return "boolean:" + std::to_string(n_);
  return "projective:" + std::to_string(n_) + "," + std::to_string(q_);
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span_of(std::vector<GfElem> rows, int nrows, int n, const GaloisField& field) {
  if (static_cast<std::size_t>(nrows) * static_cast<std::size_t>(n) != rows.size())
    throw ArgumentError("Subspace::span_of: shape mismatch");
  Subspace s;
  s.n_ = n;
  s.rank_ = static_cast<int>(field.rref(rows, static_cast<std::size_t>(nrows), static_cast<std::size_t>(n)));
  rows.resize(static_cast<std::size_t>(s.rank_ * n));
  s.rref_ = std::move(rows);
  return s;
}

// ---------------------------------------------------------------- subsets

std::uint64_t binomial64(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 64) return 0;
  return binomial_table()[n][k];
}

std::uint64_t subset_index(SubsetMask mask) {
  const auto& c = binomial_table();
  std::uint64_t idx = 0;
  int t = 0;
  while (mask) {
    const int pos = std::countr_zero(mask);
    idx += c[pos][t + 1];
    ++t;
    mask &= mask - 1;
  }
  return idx;
}

SubsetMask subset_at(std::uint64_t index, int k) {
  const auto& c = binomial_table();
  SubsetMask mask = 0;
  for (int t = k; t >= 1; --t) {
    int pos = t - 1;
    while (pos + 1 < 64 && c[pos + 1][t] <= index) ++pos;
    mask |= SubsetMask{1} << pos;
    index -= c[pos][t];
  }
  return mask;
}

SubsetMask next_subset(SubsetMask x) {
  const SubsetMask low = x & (~x + 1);
  const SubsetMask ripple = x + low;
  return (((ripple ^ x) >> 2) / low) | ripple;
}

// ---------------------------------------------------------------- Poset

Poset::Poset(PosetSpec spec, std::size_t max_rank_size) : spec_(spec), max_rank_size_(max_rank_size) {
  if (spec_.is_boolean()) {
    if (spec_.n() > 63) throw ArgumentError("boolean poset: n <= 63 required for enumeration");
  } else {
    if (!GaloisField::supported(static_cast<std::uint32_t>(spec_.q())))
      throw ArgumentError("projective poset: GF(" + std::to_string(spec_.q()) + ") arithmetic not available");
    field_ = std::make_unique<GaloisField>(static_cast<std::uint32_t>(spec_.q()));
  }
}

std::size_t Poset::size(int k) const {
  if (k < 0 || k > spec_.n()) return 0;
  return checked_size(spec_.rank_size(k), max_rank_size_, spec_, k);
}

void Poset::check_rank(int k) const {
  if (k < 0 || k > spec_.n())
    throw ArgumentError("rank " + std::to_string(k) + " outside 0.." + std::to_string(spec_.n()));
}

const std::vector<SubsetMask>& Poset::subsets(int k) const {
  if (!spec_.is_boolean()) throw ArgumentError("subsets(): poset is projective");
  {
    std::lock_guard lock(mutex_);
    if (auto it = subsets_.find(k); it != subsets_.end()) return it->second;
  }
  std::vector<SubsetMask> list;
  if (k >= 0 && k <= spec_.n()) {
    const std::size_t count = size(k);
    list.reserve(count);
    SubsetMask x = k == 0 ? 0 : (SubsetMask{1} << k) - 1;
    for (std::size_t t = 0; t < count; ++t) {
      list.push_back(x);
      if (k > 0 && t + 1 < count) x = next_subset(x);
    }
  }
  std::lock_guard lock(mutex_);
  return subsets_.emplace(k, std::move(list)).first->second;
}

const std::vector<Subspace>& Poset::subspaces(int k) const {
  if (spec_.is_boolean()) throw ArgumentError("subspaces(): poset is boolean");
  {
    std::lock_guard lock(mutex_);
    if (auto it = subspaces_.find(k); it != subspaces_.end()) return it->second;
  }
  std::vector<Subspace> list;
  if (k >= 0 && k <= spec_.n()) {
    const std::size_t expected = size(k);
    list = enumerate_subspaces(spec_.n(), k, *field_);
    if (list.size() != expected)
      throw ConsistencyError("enumerated " + std::to_string(list.size()) + " subspaces, expected " +
                             std::to_string(expected));
  }
  std::lock_guard lock(mutex_);
  return subspaces_.emplace(k, std::move(list)).first->second;
}

std::vector<RankElement> Poset::elements(int k) const {
  std::vector<RankElement> out;
  if (k < 0 || k > spec_.n()) return out;
  if (spec_.is_boolean()) {
    const auto& s = subsets(k);
    out.assign(s.begin(), s.end());
  } else {
    const auto& s = subspaces(k);
    out.assign(s.begin(), s.end());
  }
  return out;
}

std::size_t Poset::index_of(const Subspace& x) const {
  const auto& list = subspaces(x.rank());
  const auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) throw ArgumentError("index_of: subspace is not canonical or not in this poset");
  return static_cast<std::size_t>(it - list.begin());
}

std::size_t Poset::index_of(const RankElement& x) const {
  return std::visit([this](const auto& e) { return index_of(e); }, x);
}

RankElement Poset::canonical(const RankElement& x) const {
  if (const auto* m = std::get_if<SubsetMask>(&x)) return *m;
  const auto& s = std::get<Subspace>(x);
  return Subspace::span_of(s.rref(), s.rank(), s.n(), *field_);
}

bool Poset::contains(const RankElement& x, const RankElement& y) const {
  if (spec_.is_boolean()) {
    const auto a = std::get<SubsetMask>(x);
    const auto b = std::get<SubsetMask>(y);
    return (b & ~a) == 0;
  }
  const auto& a = std::get<Subspace>(x);
  const auto& b = std::get<Subspace>(y);
  if (b.rank() > a.rank()) return false;
  std::vector<GfElem> stacked = a.rref();
  stacked.insert(stacked.end(), b.rref().begin(), b.rref().end());
  return static_cast<int>(field_->rref(stacked, static_cast<std::size_t>(a.rank() + b.rank()),
                                       static_cast<std::size_t>(a.n()))) == a.rank();
}

std::vector<std::vector<std::uint32_t>> Poset::below(int k, int i) const {
  const int r = k - i;
  std::vector<std::vector<std::uint32_t>> out(size(k));
  if (spec_.is_boolean()) {
    const auto& xs = subsets(k);
    for (std::size_t c = 0; c < xs.size(); ++c) {
      int pos[64];
      int cnt = 0;
      for (SubsetMask m = xs[c]; m; m &= m - 1) pos[cnt++] = std::countr_zero(m);
      if (r == 0) {
        out[c].push_back(0);
        continue;
      }
      const SubsetMask local_limit = SubsetMask{1} << k;
      for (SubsetMask keep = (SubsetMask{1} << r) - 1; keep < local_limit; keep = next_subset(keep)) {
        SubsetMask y = 0;
        for (SubsetMask m = keep; m; m &= m - 1) y |= SubsetMask{1} << pos[std::countr_zero(m)];
        out[c].push_back(static_cast<std::uint32_t>(subset_index(y)));
      }
      std::sort(out[c].begin(), out[c].end());
    }
    return out;
  }

  const Poset* local = nullptr;
  {
    std::lock_guard lock(mutex_);
    auto& slot = local_[k];
    if (!slot) slot = std::make_unique<Poset>(PosetSpec::projective(std::max(k, 1), spec_.q()), max_rank_size_);
    local = slot.get();
  }
  const std::vector<Subspace> zero_space{Subspace::span_of({}, 0, k, *field_)};
  const auto& coeffs = k == 0 ? zero_space : local->subspaces(r);
  const auto& xs = subspaces(k);
  const int n = spec_.n();
  std::vector<GfElem> prod;
  for (std::size_t c = 0; c < xs.size(); ++c) {
    for (const auto& coef : coeffs) {
      prod.assign(static_cast<std::size_t>(r * n), 0);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < k; ++b) {
          const GfElem f = coef.at(a, b);
          if (f == 0) continue;
          for (int t = 0; t < n; ++t)
            prod[static_cast<std::size_t>(a * n + t)] = field_->add(prod[static_cast<std::size_t>(a * n + t)],
                                                                    field_->mul(f, xs[c].at(b, t)));
        }
      out[c].push_back(static_cast<std::uint32_t>(index_of(Subspace::span_of(std::move(prod), r, n, *field_))));
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

SparseMat Poset::boundary(int k, const FieldSpec& field) const {
  if (k < 1 || k > spec_.n())
    throw ArgumentError("boundary: k=" + std::to_string(k) + " outside 1.." + std::to_string(spec_.n()));
  if (spec_.q() % static_cast<int>(field.p()) == 0)
    throw IncompatibilityError("boundary: p=" + std::to_string(field.p()) + " divides q=" + std::to_string(spec_.q()));
  const auto lists = below(k, 1);
  std::vector<SparseMat::Entry> e;
  for (std::size_t c = 0; c < lists.size(); ++c)
    for (auto row : lists[c]) e.push_back({row, static_cast<std::uint32_t>(c), 1});
  return SparseMat::from_triplets(size(k - 1), size(k), field.p(), std::move(e));
}

SparseMat Poset::incidence(int k, int i) const {
  if (i < 0 || k - i < 0 || k > spec_.n())
    throw ArgumentError("incidence: need 0 <= k-i and k <= n (k=" + std::to_string(k) + ", i=" + std::to_string(i) + ")");
  const auto lists = below(k, i);
  std::vector<SparseMat::Entry> e;
  for (std::size_t c = 0; c < lists.size(); ++c)
    for (auto row : lists[c]) e.push_back({row, static_cast<std::uint32_t>(c), 1});
  return SparseMat::from_triplets(size(k - i), size(k), 0, std::move(e));
}

// ---------------------------------------------------------------- free functions

std::vector<RankElement> enumerate_rank(const PosetSpec& spec, int k, std::size_t max_rank_size) {
  return Poset(spec, max_rank_size).elements(k);
}

SparseMat boundary_matrix(const PosetSpec& spec, int k, const FieldSpec& field, std::size_t max_rank_size) {
  return Poset(spec, max_rank_size).boundary(k, field);
}

SparseMat incidence_matrix(const PosetSpec& spec, int k, int i, std::size_t max_rank_size) {
  return Poset(spec, max_rank_size).incidence(k, i);
}

}  // namespace posethom
