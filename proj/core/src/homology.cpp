#include "posethom/homology.hpp"

#include <algorithm>
#include <cstdlib>

#include "posethom/errors.hpp"
#include "posethom/gfpla.hpp"

namespace posethom {

namespace {

int floor_mod(int a, int m) {
  const int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------- layout

bool SequenceLayout::contains(int index) const {
  return floor_mod(index - j, pi) == 0 || floor_mod(index - j + i, pi) == 0;
}

int SequenceLayout::offset_of(int index) const {
  if (floor_mod(index - b, pi) == 0) return 2 * (index - b) / pi;
  if (floor_mod(index - a, pi) == 0) return -1 + 2 * (index - a) / pi;
  throw ArgumentError("offset_of: index " + std::to_string(index) + " is not in the sequence");
}

SequenceLayout sequence_layout(int j, int i, int pi, int n) {
  if (!(0 < i && i < pi))
    throw ArgumentError("sequence_layout: need 0 < i < pi (i=" + std::to_string(i) + ", pi=" + std::to_string(pi) + ")");
  SequenceLayout s;
  s.j = j;
  s.i = i;
  s.pi = pi;
  s.n = n;
  // the initial arrow satisfies -pi < a < b < pi, so this range always contains it
  const int lo = std::min({0, j - i, -pi}) - pi;
  const int hi = std::max({n, j, pi}) + pi;
  for (int x = lo; x <= hi; ++x)
    if (s.contains(x)) s.indices.push_back(x);

  int found = 0;
  for (std::size_t t = 0; t + 1 < s.indices.size(); ++t) {
    const int l = s.indices[t];
    const int r = s.indices[t + 1];
    if (0 <= l + r && l + r < pi) {
      ++found;
      s.a = l;
      s.b = r;
    }
  }
  if (found != 1)
    throw ConsistencyError("sequence_layout(j=" + std::to_string(j) + ", i=" + std::to_string(i) +
                           ", pi=" + std::to_string(pi) + "): " + std::to_string(found) +
                           " arrows with 0 <= a+b < pi, expected exactly one");
  if (s.b - s.a != i && s.b - s.a != pi - i)
    throw ConsistencyError("sequence_layout: initial arrow has step " + std::to_string(s.b - s.a));

  const auto pos_j = std::find(s.indices.begin(), s.indices.end(), j) - s.indices.begin();
  const auto pos_b = std::find(s.indices.begin(), s.indices.end(), s.b) - s.indices.begin();
  s.offset = static_cast<int>(pos_j - pos_b);
  s.d = std::abs(s.offset);
  if (s.offset != s.offset_of(j)) throw ConsistencyError("sequence_layout: inconsistent offsets");
  return s;
}

bool vanishing_window(int n, int pi, int j, int i) {
  if (!(0 < i && i < pi)) throw ArgumentError("vanishing_window: need 0 < i < pi");
  const int t = 2 * j - i;
  return n - pi < t && t < n;
}

// ---------------------------------------------------------------- engine

HomologyEngine::HomologyEngine(const Poset& poset, FieldSpec field)
    : poset_(poset), field_(field), pi_(quantum_char(field.p(), static_cast<std::uint64_t>(poset.spec().q()))) {}

const SparseMat& HomologyEngine::power(int k, int i) const {
  const auto key = std::make_pair(k, i);
  {
    std::lock_guard lock(mutex_);
    if (auto it = powers_.find(key); it != powers_.end()) return *it->second;
  }
  const int n = poset_.spec().n();
  SparseMat m;
  if (k < 0 || k > n || k - i < 0)
    m = SparseMat(poset_.size(k - i), poset_.size(k), field_.p());
  else if (i == 1)
    m = poset_.boundary(k, field_);
  else
    m = matmul(power(k - 1, i - 1), power(k, 1));
  auto ptr = std::make_shared<const SparseMat>(std::move(m));
  std::lock_guard lock(mutex_);
  return *powers_.emplace(key, std::move(ptr)).first->second;
}

std::size_t HomologyEngine::power_rank(int k, int i) const {
  const auto key = std::make_pair(k, i);
  {
    std::lock_guard lock(mutex_);
    if (auto it = ranks_.find(key); it != ranks_.end()) return it->second;
  }
  const std::size_t r = rank(power(k, i));
  std::lock_guard lock(mutex_);
  return ranks_.emplace(key, r).first->second;
}

void HomologyEngine::check_args(int j, int i) const {
  if (!(0 < i && i < pi_))
    throw ArgumentError("homology: need 0 < i < pi=" + std::to_string(pi_) + ", got i=" + std::to_string(i));
  if (j < 0 || j > poset_.spec().n())
    throw ArgumentError("homology: need 0 <= j <= n, got j=" + std::to_string(j));
}

long long HomologyEngine::homology_dim(int j, int i) const {
  check_args(j, i);
  const auto kernel = static_cast<long long>(poset_.size(j)) - static_cast<long long>(power_rank(j, i));
  const auto image = static_cast<long long>(power_rank(j + pi_ - i, pi_ - i));
  const long long dim = kernel - image;
  if (dim < 0)
    throw ConsistencyError("H_{" + std::to_string(j) + "," + std::to_string(i) + "}: image of dimension " +
                           std::to_string(image) + " does not fit in kernel of dimension " + std::to_string(kernel));
  return dim;
}

TraceCheck HomologyEngine::trace_check(int j, int i) const {
  check_args(j, i);
  const int n = poset_.spec().n();
  const auto layout = sequence_layout(j, i, pi_, n);

  TraceCheck tc;
  tc.j = j;
  tc.i = i;
  long long fold = 0;
  int nonzero = 0;
  for (int x = 0; x <= n; ++x) {
    if (!layout.contains(x)) continue;
    const auto sz = static_cast<long long>(poset_.size(x));
    fold += floor_mod(x - layout.b, pi_) == 0 ? sz : -sz;
    const bool same_class = floor_mod(x - j, pi_) == 0;
    const long long h = homology_dim(x, same_class ? i : pi_ - i);
    if (h != 0) {
      ++nonzero;
      tc.lhs = h;
      tc.homology_index = x;
    }
  }
  tc.almost_exact = nonzero <= 1;
  if (nonzero == 0) {
    tc.homology_index = j;
    tc.d = layout.d;
  } else {
    tc.d = std::abs(layout.offset_of(tc.homology_index));
  }
  tc.rhs = tc.d % 2 == 0 ? fold : -fold;
  tc.pass = tc.almost_exact && tc.lhs == tc.rhs;
  return tc;
}

HomologyReport HomologyEngine::scan() const {
  HomologyReport report{poset_.spec(), field_.p(), pi_, {}, true};
  const int n = poset_.spec().n();
  for (int i = 1; i < pi_; ++i) {
    for (int j = 0; j <= n; ++j) {
      HomologyRecord rec;
      rec.j = j;
      rec.i = i;
      rec.dim = homology_dim(j, i);
      rec.in_window = vanishing_window(n, pi_, j, i);
      rec.trace = trace_check(j, i);
      if (rec.trace.almost_exact && rec.trace.rhs < 0)
        throw ConsistencyError("homology scan of " + poset_.spec().to_string() + " over GF(" +
                               std::to_string(field_.p()) + "): negative trace value at (j,i)=(" +
                               std::to_string(j) + "," + std::to_string(i) + ")");
      rec.pass = (rec.in_window || rec.dim == 0) && rec.trace.pass;
      report.pass = report.pass && rec.pass;
      report.records.push_back(rec);
    }
  }
  return report;
}

OperatorIdentityReport HomologyEngine::verify_operator_identities() const {
  OperatorIdentityReport out;
  const int n = poset_.spec().n();
  const auto q = static_cast<std::uint64_t>(poset_.spec().q());
  const auto where = [&](int k, int i) {
    return poset_.spec().to_string() + " p=" + std::to_string(field_.p()) + " k=" + std::to_string(k) +
           " i=" + std::to_string(i);
  };
  for (int k = 0; k <= n; ++k) {
    ++out.checked;
    if (!power(k, pi_).is_zero()) out.failures.push_back("d^pi != 0 at " + where(k, pi_));
    for (int i = 1; i <= k; ++i) {
      ++out.checked;
      const auto expected = poset_.incidence(k, i).reduce(field_.p()).scaled(q_factorial_mod(i, q, field_.p()));
      if (power(k, i) != expected) out.failures.push_back("d^i != (i!)_q incidence at " + where(k, i));
    }
  }
  return out;
}

// ---------------------------------------------------------------- free functions

long long homology_dim(const PosetSpec& spec, const FieldSpec& field, int j, int i) {
  const Poset poset(spec);
  return HomologyEngine(poset, field).homology_dim(j, i);
}

TraceCheck trace_check(const PosetSpec& spec, const FieldSpec& field, int j, int i) {
  const Poset poset(spec);
  return HomologyEngine(poset, field).trace_check(j, i);
}

HomologyReport homology_scan(const PosetSpec& spec, const FieldSpec& field, std::size_t max_rank_size) {
  const Poset poset(spec, max_rank_size);
  return HomologyEngine(poset, field).scan();
}

}  // namespace posethom
