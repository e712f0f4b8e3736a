#include <doctest.h>

#include <map>
#include <queue>
#include <random>

#include "oracles.hpp"
#include "posethom/errors.hpp"
#include "posethom/groupact.hpp"
#include "posethom/inequal.hpp"
#include "posethom/schreier_sims.hpp"

using namespace posethom;

namespace {

const std::vector<std::string> kCorpus{"trivial3", "c4", "c5", "c6", "c7", "d4", "d5", "d6",
                                       "s4",       "s5", "s6", "a4", "a5", "a5_pairs"};

Group corpus_group(const std::string& name) { return parse_group(oracle::data("groups/" + name + ".json")); }

// orbits by breadth-first search over generator images
std::uint64_t bfs_orbits(const Group& g, const Poset& poset, int k) {
  const auto elems = poset.elements(k);
  std::vector<bool> seen(elems.size(), false);
  const auto gens = g.generators();
  std::uint64_t orbits = 0;
  for (std::size_t s = 0; s < elems.size(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    std::queue<std::size_t> todo;
    todo.push(s);
    seen[s] = true;
    while (!todo.empty()) {
      const auto x = todo.front();
      todo.pop();
      for (const auto& gen : gens) {
        const auto y = poset.index_of(act(gen, elems[x], poset.spec()));
        if (!seen[y]) {
          seen[y] = true;
          todo.push(y);
        }
      }
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("permutation parsing and composition") {
  const auto a = Perm::parse_cycles("(1,2,3)", 4);
  CHECK(a(0) == 1);
  CHECK(a(2) == 0);
  CHECK(a(3) == 3);
  CHECK(Perm::parse_cycles("(1 2 3)", 4) == a);
  CHECK(Perm::parse_cycles("()", 4).is_identity());
  const auto b = Perm::parse_cycles("(1,2)", 4);
  // (a*b)(x) = a(b(x))
  const auto ab = a * b;
  for (std::uint32_t x = 0; x < 4; ++x) CHECK(ab(x) == a(b(x)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(Perm::parse_cycles(a.to_cycles(), 4) == a);
  CHECK(a.first_moved() == 0);
  CHECK_THROWS_AS(Perm::parse_cycles("(1,2,1)", 4), DataError);
  CHECK_THROWS_AS(Perm::parse_cycles("(1,5)", 4), ParseError);
  CHECK_THROWS_AS(Perm::parse_cycles("(1,2", 4), ParseError);
  CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0, 1}), DataError);
}

TEST_CASE("cycle_type examples") {
  CHECK(cycle_type(Perm::identity(5)) == Partition{1, 1, 1, 1, 1});
  CHECK(cycle_type(Perm::parse_cycles("(1,2)(3,4)", 5)) == Partition{2, 2, 1});
  CHECK(cycle_type(Perm::parse_cycles("(1,2,3,4)", 4)) == Partition{4});
}

TEST_CASE("fix_count_subsets examples") {
  CHECK(fix_count_subsets({1, 1, 1, 1, 1}, 2) == 10);
  CHECK(fix_count_subsets({2, 2, 1}, 2) == 2);
  CHECK(fix_count_subsets({4}, 2) == 0);
  CHECK(fix_count_subsets({4}, 0) == 1);
  CHECK(fix_count_subsets({3, 1}, 7) == 0);
}

TEST_CASE("fix_count_subsets against direct counting") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<std::uint32_t> img(n);
    for (std::uint32_t t = 0; t < n; ++t) img[t] = t;
    std::shuffle(img.begin(), img.end(), rng);
    const Perm g(img);
    std::vector<std::uint64_t> fixed(n + 1, 0);
    for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
      if (act(g, m) == m) ++fixed[static_cast<std::size_t>(std::popcount(m))];
    for (std::size_t k = 0; k <= n; ++k) CHECK(fix_count_subsets(cycle_type(g), static_cast<int>(k)) == fixed[k]);
  }
}

TEST_CASE("group_order examples") {
  CHECK(group_order(corpus_group("s4")) == 24);
  CHECK(group_order(corpus_group("c4")) == 4);
  CHECK(group_order(corpus_group("trivial3")) == 1);
  const auto m24 = parse_group(oracle::data("groups/m24.json"));
  CHECK(m24.degree() == 24);
  CHECK(group_order(m24) == 244823040);
  CHECK(group_order(parse_group(oracle::data("groups/gl3_2.json"))) == 168);
}

TEST_CASE("schreier-sims matches closure size") {
  for (const auto& name : kCorpus) {
    const auto g = corpus_group(name);
    CAPTURE(name);
    const StabilizerChain chain(static_cast<std::size_t>(g.degree()), g.permutations());
    const auto elems = enumerate_elements(g);
    CHECK(BigInt(elems.size()) == chain.order());
    for (const auto& e : elems) CHECK(chain.contains(e));
  }
  // random subgroups of S_8
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Perm> gens;
    for (int t = 0; t < 1 + trial % 3; ++t) {
      std::vector<std::uint32_t> img(8);
      for (std::uint32_t x = 0; x < 8; ++x) img[x] = x;
      std::shuffle(img.begin(), img.begin() + 3 + static_cast<long>(rng() % 6), rng);
      gens.emplace_back(img);
    }
    const auto g = Group::permutation_group(8, gens);
    CHECK(BigInt(enumerate_elements(g, 50000).size()) == group_order(g));
  }
  const StabilizerChain a5(5, corpus_group("a5").permutations());
  CHECK_FALSE(a5.contains(Perm::parse_cycles("(1,2)", 5)));
}

TEST_CASE("group file validation") {
  CHECK_THROWS_AS(parse_group(R"j({"kind":"permutation","degree":3,"generators":[[1,1,2]]})j"), DataError);
  CHECK_THROWS_AS(parse_group(R"j({"kind":"permutation","degree":3,"generators":["(1,2"]})j"), ParseError);
  CHECK_THROWS_AS(parse_group(R"j({"kind":"permutation","degree":3,"generators":["(1,2)"],"order":6})j"), DataError);
  CHECK_THROWS_AS(parse_group(R"j({"kind":"matrix","n":2,"q":2,"generators":[[[1,1],[1,1]]]})j"), DataError);
  CHECK_THROWS_AS(parse_group(R"j({"kind":"matrix","n":2,"q":6,"generators":[[[1,0],[0,1]]]})j"), DataError);
  CHECK_THROWS_AS(parse_group(R"j({"kind":"matrix","n":2,"q":2,"generators":[[[1,0]]]})j"), ParseError);
  CHECK_THROWS_AS(parse_group(R"j({"kind":"perm","degree":3,"generators":["()"]})j"), ParseError);
  CHECK_THROWS_AS(parse_group("{not json"), ParseError);
  const auto g = parse_group(R"j({"kind":"permutation","degree":4,"generators":[[2,3,4,1]],"order":4})j");
  CHECK(group_order(g) == 4);
}

TEST_CASE("burnside_counts examples") {
  CHECK(burnside_counts(corpus_group("c4"), PosetSpec::boolean(4)).values() == std::vector<std::int64_t>{1, 1, 2, 1, 1});
  CHECK(burnside_counts(corpus_group("s4"), PosetSpec::boolean(4)).values() == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(burnside_counts(corpus_group("trivial3"), PosetSpec::boolean(3)).values() == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK_THROWS_AS(burnside_counts(corpus_group("s4"), PosetSpec::boolean(5)), IncompatibilityError);
  CHECK_THROWS_AS(burnside_counts(corpus_group("s6"), PosetSpec::boolean(6), 100), ResourceError);
}

TEST_CASE("burnside agrees with union-find and bfs on the corpus") {
  for (const auto& name : kCorpus) {
    const auto g = corpus_group(name);
    const auto spec = PosetSpec::boolean(g.degree());
    const Poset poset(spec);
    const auto b = burnside_counts(g, spec);
    const auto u = orbit_series_unionfind(g, poset);
    CAPTURE(name);
    CHECK(b == u);
    for (int k = 0; k <= spec.n(); ++k) CHECK(static_cast<std::uint64_t>(u[k]) == bfs_orbits(g, poset, k));
    CHECK(check_palindrome(u).pass);
    CHECK(check_lw(u).pass);
  }
}

TEST_CASE("matrix group orbits") {
  const auto gl = parse_group(oracle::data("groups/gl3_2.json"));
  const Poset fano(PosetSpec::projective(3, 2));
  CHECK(orbit_series_unionfind(gl, fano).values() == std::vector<std::int64_t>{1, 1, 1, 1});
  CHECK_THROWS_AS(orbit_count_unionfind(gl, PosetSpec::projective(4, 2), 1), IncompatibilityError);
  CHECK_THROWS_AS(orbit_count_unionfind(gl, PosetSpec::boolean(3), 1), IncompatibilityError);

  const auto f3 = std::make_shared<const GaloisField>(3);
  const auto diag = Group::matrix_group(3, 3, {GfMatrix(f3, 3, {2, 0, 0, 0, 1, 0, 0, 0, 1})});
  const Poset pg(PosetSpec::projective(3, 3));
  const auto series = orbit_series_unionfind(diag, pg);
  for (int k = 0; k <= 3; ++k) CHECK(static_cast<std::uint64_t>(series[k]) == bfs_orbits(diag, pg, k));
  CHECK(series[1] == 9);
  CHECK(check_palindrome(series).pass);
  CHECK(group_order(diag) == 2);
}

TEST_CASE("act examples and action axiom") {
  const auto c = Perm::parse_cycles("(1,2,3)", 3);
  CHECK(act(c, SubsetMask{0b011}) == SubsetMask{0b110});

  const auto f4 = std::make_shared<const GaloisField>(4);
  const Poset poset(PosetSpec::projective(3, 4));
  const auto id = GfMatrix::identity(f4, 3);
  for (const auto& s : poset.subspaces(2)) CHECK(act(id, s) == s);

  std::mt19937_64 rng(17);
  const auto random_invertible = [&] {
    while (true) {
      std::vector<GfElem> e(9);
      for (auto& x : e) x = static_cast<GfElem>(rng() % 4);
      GfMatrix m(f4, 3, e);
      if (m.is_invertible()) return m;
    }
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_invertible(), h = random_invertible();
    const auto& xs = poset.subspaces(1 + trial % 2);
    const auto& x = xs[rng() % xs.size()];
    const auto gx = act(g, x);
    CHECK(gx.rank() == x.rank());
    CHECK(act(g * h, x) == act(g, act(h, x)));
    CHECK(Subspace::span_of(gx.rref(), gx.rank(), 3, *f4) == gx);
  }
  const auto s5 = corpus_group("s5").permutations();
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = s5[trial % 2] * s5[(trial / 2) % 2], h = s5[(trial / 3) % 2];
    const SubsetMask x = rng() % 32;
    CHECK(act(g * h, x) == act(g, act(h, x)));
  }
  CHECK_THROWS_AS(act(GroupElement{c}, RankElement{SubsetMask{1}}, PosetSpec::boolean(5)), IncompatibilityError);
}

TEST_CASE("m24 orbit numbers on small ranks") {
  const auto m24 = parse_group(oracle::data("groups/m24.json"));
  const auto spec = PosetSpec::boolean(24);
  for (int k = 0; k <= 6; ++k) CHECK(orbit_count_unionfind(m24, spec, k) == (k == 6 ? 2u : 1u));
}
