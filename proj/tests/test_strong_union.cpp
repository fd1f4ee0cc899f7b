#include <doctest.h>

#include <algorithm>

#include "su/strong_union.hpp"
#include "support.hpp"

using namespace su;
using test_support::chain;
using test_support::diamond;
using test_support::fork;

TEST_CASE("singleton strong union is mutual reachability") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Frame f = random_s4_frame(4, seed);
    for (int z = 0; z < f.size(); ++z)
      for (int x = 0; x < f.size(); ++x)
        CHECK(strongly_unites(f, z, {x}) ==
              (f.related(z, x) && f.related(x, z)));
  }
}

TEST_CASE("diamond frame: the root strongly unites its middle points") {
  Frame d = diamond();
  CHECK(strongly_unites(d, 0, {1, 2}));
  CHECK(satisfies_su2(d));
  CHECK_FALSE(find_su2_failure(d).has_value());
}

TEST_CASE("three-pronged fork fails (su_2)") {
  Frame f = fork(3);
  CHECK_FALSE(strongly_unites(f, 0, {1, 2}));
  CHECK_FALSE(satisfies_su2(f));
  auto failure = find_su2_failure(f);
  REQUIRE(failure.has_value());
  CHECK(failure->w == 0);
  CHECK(failure->x == 1);
  CHECK(failure->y == 2);
}

TEST_CASE("strongly_unites validates inputs") {
  Frame f = fork(2);
  CHECK_THROWS_AS(strongly_unites(f, 0, {}), PreconditionError);
  CHECK_THROWS_AS(strongly_unites(f, 9, {0}), PreconditionError);
  CHECK_THROWS_AS(strongly_unites(Frame(2, {{0, 1}}), 0, {1}), PreconditionError);
}

TEST_CASE("permutation invariance of strong union") {
  test_support::FormulaGen gen(5);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Frame f = random_s4_frame(5, seed);
    for (int trial = 0; trial < 40; ++trial) {
      int len = 2 + gen.raw() % 3;
      std::vector<int> xs;
      for (int i = 0; i < len; ++i) xs.push_back(gen.raw() % f.size());
      int z = gen.raw() % f.size();
      bool original = strongly_unites(f, z, xs);
      std::vector<int> perm = xs;
      for (int i = len - 1; i > 0; --i)
        std::swap(perm[i], perm[gen.raw() % (i + 1)]);
      CHECK(strongly_unites(f, z, perm) == original);
    }
  }
}

TEST_CASE("duplicates in the tuple are allowed and differ from collapsing") {
  // On the 2-chain, 0 strongly unites [1,1] (the pair shares successors)
  // but not [1] (which needs mutual reachability).
  Frame two = chain(2);
  CHECK(strongly_unites(two, 0, {1, 1}));
  CHECK_FALSE(strongly_unites(two, 0, {1}));
}

TEST_CASE("(su_1) is universal; (su) collapses to (su_2)") {
  for (int n = 1; n <= 4; ++n) {
    S4FrameEnumerator e(n);
    while (auto f = e.next()) {
      CHECK(satisfies_su_n(*f, 1));
      CHECK(satisfies_su(*f) == satisfies_su2(*f));
    }
  }
}

TEST_CASE("(Uni) on small frames") {
  CHECK(satisfies_uni(chain(1)));
  CHECK(satisfies_uni(diamond()));
  // Two leaves still admit a union point; three do not.
  CHECK(satisfies_uni(fork(2)));
  CHECK_FALSE(satisfies_uni(fork(3)));
}

TEST_CASE("fork countermodel refutes su and certifies the paper valuation") {
  Frame f = fork(3);
  Model m = build_su_countermodel(f, 0, 1, 2);
  CHECK_FALSE(satisfies(m, 0, axiom(AxiomName::Su)));
  CHECK(satisfies(m, 1, parse_formula("p")));
  CHECK_FALSE(satisfies(m, 1, parse_formula("r")));
  CHECK(satisfies(m, 2, parse_formula("q")));
  CHECK_FALSE(satisfies(m, 2, parse_formula("s")));
}

TEST_CASE("countermodel construction rejects non-witnesses") {
  CHECK_THROWS_AS(build_su_countermodel(diamond(), 0, 1, 2), PreconditionError);
  Frame f = fork(3);
  CHECK_THROWS_AS(build_su_countermodel(f, 1, 2, 3), PreconditionError);
  CHECK_THROWS_AS(build_su_countermodel(f, 0, 1, 9), PreconditionError);
}

TEST_CASE("the countermodel valuation works on every failure witness up to 5 points") {
  // Every failure witness of every enumerated frame must yield a certified
  // refutation; this pins the reading of the valuation.
  for (int n = 2; n <= 5; ++n) {
    S4FrameEnumerator e(n);
    while (auto f = e.next()) {
      auto failure = find_su2_failure(*f);
      if (!failure) continue;
      Model m = build_su_countermodel(*f, failure->w, failure->x, failure->y);
      CHECK_FALSE(satisfies(m, failure->w, axiom(AxiomName::Su)));
    }
  }
}

TEST_CASE("correspondence examples") {
  auto one = correspondence_check(chain(1));
  CHECK(one.validates_su);
  CHECK(one.satisfies_su2);
  CHECK(one.agree);

  auto forked = correspondence_check(fork(3));
  CHECK_FALSE(forked.validates_su);
  CHECK_FALSE(forked.satisfies_su2);
  CHECK(forked.agree);
}

TEST_CASE("correspondence harness over all 3-point frames") {
  auto summary = correspondence_over_enumerated(3);
  CHECK(summary.frames == 29);
  CHECK(summary.agreements == 29);
  CHECK(summary.all_agree());
  CHECK_FALSE(summary.first_disagreement.has_value());
}

TEST_CASE("correspondence harness on random frames is deterministic") {
  auto a = correspondence_over_random(10, 5, 6, 99);
  auto b = correspondence_over_random(10, 5, 6, 99);
  CHECK(a.frames == 10);
  CHECK(a.agreements == b.agreements);
  CHECK(a.all_agree());
}

TEST_CASE("report line format") {
  FrameClassification c = classify_frame(test_support::diamond());
  CHECK(report_line("e4:7", c) == "e4:7 su2=1 su=1 uni=1 kp=1 sa=1");
  // The fork refutes kp but still validates sa.
  FrameClassification f = classify_frame(fork(3));
  CHECK(report_line("x", f) == "x su2=0 su=0 uni=0 kp=0 sa=1");
}

TEST_CASE("lemma suites at reduced scale stay clean") {
  CHECK(run_su1_suite(4).ok());
  CHECK(run_union_of_unions_suite(4, 2).ok());
  CHECK(run_su2_implies_sun_suite(4, 3).ok());
  CHECK(run_containment_suite(3).ok());
}
