#include <doctest.h>

#include <algorithm>

#include "su/frame.hpp"
#include "support.hpp"

using namespace su;
using test_support::antichain;
using test_support::chain;

namespace {

PointSet ps(int n, std::initializer_list<int> members) {
  return make_point_set(n, members);
}

}  // namespace

TEST_CASE("set operators on the 2-chain") {
  Frame f = chain(2);
  CHECK(f.r_image(ps(2, {0})) == ps(2, {0, 1}));
  CHECK(f.r_image(ps(2, {})) == ps(2, {}));
  CHECK(f.diamond(ps(2, {1})) == ps(2, {0, 1}));
  CHECK(f.box(f.universe()) == f.universe());
  CHECK(f.box(ps(2, {1})) == ps(2, {1}));
  CHECK(f.complement(ps(2, {})) == f.universe());
  CHECK(f.heyting_neg(ps(2, {1})) == ps(2, {}));
  CHECK(f.heyting_neg(ps(2, {})) == f.universe());
}

TEST_CASE("identity frame operators") {
  Frame f = antichain(2);
  CHECK(f.r_image(ps(2, {0})) == ps(2, {0}));
  CHECK(f.heyting_neg(ps(2, {1})) == ps(2, {0}));
}

TEST_CASE("point range errors") {
  Frame f = chain(2);
  CHECK_THROWS_AS(f.r_image(ps(3, {0})), PreconditionError);
  CHECK_THROWS_AS(f.related(0, 5), PreconditionError);
  CHECK_THROWS_AS(Frame(2, {{0, 2}}), PreconditionError);
  CHECK_THROWS_AS(Frame(0, {}), PreconditionError);
}

TEST_CASE("s4 predicates and closure") {
  Frame bare(1, {});
  CHECK_FALSE(bare.is_s4());
  Frame closed = bare.reflexive_transitive_closure();
  CHECK(closed.is_s4());
  CHECK(closed.related(0, 0));

  CHECK(chain(2).is_s4());

  Frame path(3, {{0, 1}, {1, 2}});
  Frame rt = path.reflexive_transitive_closure();
  CHECK(rt.is_s4());
  CHECK(rt.related(0, 2));
  for (int i = 0; i < 3; ++i) CHECK(rt.related(i, i));
  CHECK_FALSE(rt.related(2, 0));

  Frame refl_only(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  CHECK(refl_only.is_reflexive());
  CHECK_FALSE(refl_only.is_transitive());
}

TEST_CASE("upsets") {
  Frame two = chain(2);
  CHECK(two.is_upset(ps(2, {1})));
  CHECK_FALSE(two.is_upset(ps(2, {0})));
  CHECK(two.is_upset(ps(2, {})));
  CHECK(two.is_upset(two.universe()));

  std::vector<PointSet> ups = two.upsets();
  REQUIRE(ups.size() == 3);
  CHECK(ups[0] == ps(2, {}));
  CHECK(ups[1] == ps(2, {1}));
  CHECK(ups[2] == ps(2, {0, 1}));

  CHECK(antichain(2).upsets().size() == 4);
  CHECK(chain(1).upsets().size() == 2);

  CHECK_THROWS_AS(antichain(5).upsets(10), CapExceeded);
}

TEST_CASE("upsets of larger frames use the same order") {
  // A 22-point frame exercises the recursive enumeration path; compare
  // against the filtering path on an isomorphic small frame pattern.
  std::vector<std::pair<int, int>> edges;
  const int n = 22;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i);
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  Frame big(n, edges);  // a chain: n + 1 upsets
  auto ups = big.upsets();
  CHECK(ups.size() == static_cast<std::size_t>(n + 1));
  CHECK(std::is_sorted(ups.begin(), ups.end()));
}

TEST_CASE("roots and ends") {
  Frame two = chain(2);
  CHECK(two.roots() == ps(2, {0}));
  CHECK(two.ends() == ps(2, {1}));
  CHECK(two.end_of(0) == ps(2, {1}));
  CHECK(two.end_of(1) == ps(2, {1}));

  Frame id3 = antichain(3);
  CHECK(id3.roots() == ps(3, {}));
  CHECK(id3.ends() == id3.universe());

  // A two-point cluster is its own end.
  Frame cluster = Frame(2, {{0, 1}, {1, 0}}).reflexive_transitive_closure();
  CHECK(cluster.ends() == cluster.universe());
  CHECK(cluster.roots() == cluster.universe());
}

TEST_CASE("generated subframe") {
  Frame f = test_support::fork(3);
  GeneratedSubframe g = generated_subframe(f, 1);
  CHECK(g.frame.size() == 1);
  CHECK(g.points == std::vector<int>{1});

  GeneratedSubframe whole = generated_subframe(f, 0);
  CHECK(whole.frame.size() == 4);
  CHECK(whole.frame.is_s4());

  Frame d = test_support::diamond();
  GeneratedSubframe mid = generated_subframe(d, 1);
  CHECK(mid.frame.size() == 2);
  CHECK(mid.points == std::vector<int>{1, 3});
  CHECK(mid.frame.is_s4());
  CHECK(mid.frame.related(0, 1));
  CHECK_FALSE(mid.frame.related(1, 0));
}

TEST_CASE("enumeration counts labeled preorders") {
  // Independent oracle: filter every relation on n points directly.
  auto brute_count = [](int n) {
    int count = 0;
    const int bits = n * n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rel[i][j] = mask >> (i * n + j) & 1;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = rel[i][i];
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          for (int k = 0; k < n && ok; ++k)
            if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
      if (ok) ++count;
    }
    return count;
  };
  CHECK(brute_count(1) == 1);
  CHECK(brute_count(2) == 4);
  CHECK(brute_count(3) == 29);

  for (int n = 1; n <= 4; ++n) {
    S4FrameEnumerator e(n);
    int count = 0;
    while (auto f = e.next()) {
      CHECK(f->is_s4());
      ++count;
    }
    int expected[] = {0, 1, 4, 29, 355};
    CHECK(count == expected[n]);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(S4FrameEnumerator(6), CapExceeded);
  CHECK_NOTHROW(S4FrameEnumerator(6, 6));
}

TEST_CASE("random frames are deterministic and S4") {
  for (std::uint64_t seed : {1ull, 2ull, 42ull}) {
    Frame a = random_s4_frame(6, seed);
    Frame b = random_s4_frame(6, seed);
    CHECK(a.is_s4());
    CHECK(a.edges() == b.edges());
  }
  CHECK(random_s4_frame(5, 1).edges() != random_s4_frame(5, 2).edges());
}

TEST_CASE("operator laws on random frames") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Frame f = random_s4_frame(5, seed);
    std::mt19937_64 rng(seed);
    PointSet x(5), y(5);
    for (int i = 0; i < 5; ++i) {
      if (rng() & 1) x.set(i);
      if (rng() & 1) y.set(i);
    }
    // box and diamond are dual through complement.
    CHECK(f.box(x) == f.complement(f.diamond(f.complement(x))));
    // S4: X is below diamond(X), and diamond is idempotent.
    CHECK(x.is_subset_of(f.diamond(x)));
    CHECK(f.diamond(f.diamond(x)) == f.diamond(x));
    // diamond and r_image distribute over union; box is monotone.
    CHECK(f.diamond(x | y) == (f.diamond(x) | f.diamond(y)));
    CHECK(f.r_image(x | y) == (f.r_image(x) | f.r_image(y)));
    if (x.is_subset_of(y)) CHECK(f.box(x).is_subset_of(f.box(y)));
    CHECK((f.heyting_neg(x) & f.diamond(x)).none());
    // Every upset is fixed by r_image.
    for (const PointSet& u : f.upsets()) CHECK(f.r_image(u) == u);
  }
}

TEST_CASE("generated subframes of S4 frames are S4") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Frame f = random_s4_frame(6, seed);
    for (int w = 0; w < f.size(); ++w) {
      GeneratedSubframe g = generated_subframe(f, w);
      CHECK(g.frame.is_s4());
      CHECK(g.frame.size() == static_cast<int>(f.successors(w).count()));
    }
  }
}
