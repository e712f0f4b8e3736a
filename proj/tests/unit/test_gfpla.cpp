#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "posethom/errors.hpp"
#include "posethom/gfpla.hpp"
#include "posethom/poset.hpp"

using namespace posethom;

namespace {

SparseMat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t p, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<SparseMat::Entry> e;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c)
      if (u(rng) < density) e.push_back({r, c, static_cast<std::uint32_t>(1 + rng() % (p - 1))});
  return SparseMat::from_triplets(rows, cols, p, std::move(e));
}

}  // namespace

TEST_CASE("sparse matrix construction") {
  const auto m = SparseMat::from_triplets(3, 3, 5, {{0, 0, 3}, {0, 0, 2}, {1, 2, 7}, {2, 1, 0}});
  CHECK(m.nnz() == 1);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(1, 2) == 2);
  CHECK_THROWS_AS(SparseMat::from_triplets(2, 2, 5, {{2, 0, 1}}), ArgumentError);
  CHECK(SparseMat::identity(4, 7).nnz() == 4);
  const auto z = SparseMat(0, 5, 3);
  CHECK(z.rows() == 0);
  CHECK(rank(z) == 0);
  CHECK(nullity(z) == 5);
  CHECK(m.transpose().transpose() == m);
  CHECK(SparseMat::from_triplets(2, 2, 0, {{0, 0, 12}}).reduce(5).at(0, 0) == 2);
  CHECK(SparseMat::from_triplets(2, 2, 0, {{0, 0, 10}}).reduce(5).is_zero());
}

TEST_CASE("rank examples") {
  const auto d = boundary_matrix(PosetSpec::boolean(4), 2, FieldSpec(2));
  CHECK(d.rows() == 4);
  CHECK(d.cols() == 6);
  CHECK(rank(d) == 3);
  CHECK(rank(SparseMat::identity(5, 3)) == 5);
  CHECK(rank(SparseMat(4, 6, 7)) == 0);
}

TEST_CASE("rank agrees with dense elimination") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 13}[trial % 5];
    const auto rows = 1 + rng() % 14, cols = 1 + rng() % 14;
    const auto m = random_matrix(rng, rows, cols, p, 0.1 + 0.1 * static_cast<double>(trial % 6));
    const auto r = rank(m);
    CHECK(r == oracle::dense_rank(oracle::to_dense(m), p));
    CHECK(r == rank(m.transpose()));
    CHECK(r <= std::min(rows, cols));
  }
}

TEST_CASE("matmul examples and oracle") {
  std::mt19937_64 rng(5);
  const auto a = random_matrix(rng, 5, 7, 7, 0.4);
  CHECK(matmul(a, SparseMat::identity(7, 7)) == a);
  CHECK(matmul(SparseMat::identity(5, 7), a) == a);
  CHECK_THROWS_AS(matmul(a, SparseMat::identity(6, 7)), ArgumentError);
  CHECK_THROWS_AS(matmul(a, SparseMat::identity(7, 5)), ArgumentError);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 11;
    const auto x = random_matrix(rng, 1 + rng() % 9, 6, p, 0.3);
    const auto y = random_matrix(rng, 6, 1 + rng() % 9, p, 0.3);
    CHECK(oracle::to_dense(matmul(x, y)) == oracle::dense_mul(oracle::to_dense(x), oracle::to_dense(y), p));
  }
}

TEST_CASE("boundary products for boolean 4") {
  const auto spec = PosetSpec::boolean(4);
  for (int k = 1; k < 4; ++k) {
    const auto dd2 = matmul(boundary_matrix(spec, k, FieldSpec(2)), boundary_matrix(spec, k + 1, FieldSpec(2)));
    CHECK(dd2.is_zero());
    const auto dd3 = matmul(boundary_matrix(spec, k, FieldSpec(3)), boundary_matrix(spec, k + 1, FieldSpec(3)));
    CHECK(dd3 == incidence_matrix(spec, k + 1, 2).reduce(3).scaled(2));
  }
}

TEST_CASE("power_boundary examples") {
  const FieldSpec f3(3), f5(5);
  const auto top = power_boundary(PosetSpec::boolean(4), 4, 2, f3);
  REQUIRE(top.rows() == 6);
  REQUIRE(top.cols() == 1);
  for (std::uint32_t r = 0; r < 6; ++r) CHECK(top.at(r, 0) == 2);

  for (int k = 0; k <= 4; ++k) {
    const auto z = power_boundary(PosetSpec::boolean(4), k, 3, f3);
    CHECK(z.is_zero());
    CHECK(BigInt(z.cols()) == rank_size(PosetSpec::boolean(4), k));
  }
  CHECK(power_boundary(PosetSpec::boolean(5), 2, 2, f5) == incidence_matrix(PosetSpec::boolean(5), 2, 2).reduce(5).scaled(2));

  const auto below = power_boundary(PosetSpec::boolean(4), 1, 2, f3);
  CHECK(below.rows() == 0);
  CHECK(below.cols() == 4);
  const auto above = power_boundary(PosetSpec::boolean(4), 6, 1, f3);
  CHECK(above.cols() == 0);
  CHECK_THROWS_AS(power_boundary(PosetSpec::boolean(4), 2, 0, f3), ArgumentError);
}

TEST_CASE("power_boundary is the q-factorial times incidence") {
  struct Case {
    PosetSpec spec;
    std::uint32_t p;
  };
  const std::vector<Case> cases{{PosetSpec::boolean(6), 2},       {PosetSpec::boolean(6), 3},
                                {PosetSpec::boolean(7), 5},       {PosetSpec::projective(4, 2), 3},
                                {PosetSpec::projective(4, 2), 7}, {PosetSpec::projective(3, 3), 2},
                                {PosetSpec::projective(3, 4), 5}};
  for (const auto& c : cases) {
    const FieldSpec f(c.p);
    const Poset poset(c.spec);
    const int pi = quantum_char(c.p, static_cast<std::uint64_t>(c.spec.q()));
    for (int k = 0; k <= c.spec.n(); ++k) {
      CHECK(power_boundary(poset, k, pi, f).is_zero());
      for (int i = 1; i <= k; ++i) {
        CAPTURE(c.spec.to_string());
        CAPTURE(k);
        CAPTURE(i);
        const auto scalar = q_factorial_mod(i, static_cast<std::uint64_t>(c.spec.q()), c.p);
        CHECK(power_boundary(poset, k, i, f) == poset.incidence(k, i).reduce(c.p).scaled(scalar));
      }
    }
  }
}

TEST_CASE("boolean boundary has full rank when p exceeds n") {
  for (int n = 1; n <= 10; ++n) {
    const Poset poset(PosetSpec::boolean(n));
    for (int k = 1; k <= n; ++k) {
      const auto d = poset.boundary(k, FieldSpec(11));
      CHECK(rank(d) == std::min(oracle::binomial(n, k), oracle::binomial(n, k - 1)));
    }
  }
}
