#include <doctest.h>

#include <fstream>
#include <sstream>

#include "su/prover.hpp"
#include "support.hpp"

using namespace su;

TEST_CASE("sequent parsing and printing") {
  Sequent s = parse_sequent("p, p -> q |- q");
  CHECK(s.premises.size() == 2);
  CHECK(s.conclusion == Formula::var("q"));
  CHECK(print_sequent(s) == "p, p -> q |- q");

  Sequent goal_only = parse_sequent("|- p -> p");
  CHECK(goal_only.premises.empty());
  CHECK(print_sequent(goal_only) == "|- p -> p");

  CHECK(parse_sequent("p -> p").premises.empty());
  CHECK_THROWS_AS(parse_sequent("p, |- q"), ParseError);
}

TEST_CASE("basic decisions") {
  CHECK(prove_ipc(parse_sequent("|- p -> p")).provable);
  CHECK_FALSE(prove_ipc(parse_sequent("|- p | ~p")).provable);
  CHECK(prove_ipc(parse_sequent("p, p -> q |- q")).provable);
  CHECK(prove_ipc(parse_sequent("_|_ |- q")).provable);
  CHECK_FALSE(prove_ipc(parse_sequent("|- _|_")).provable);
  CHECK(prove_ipc(parse_sequent("~p, p |- _|_")).provable);
}

TEST_CASE("certificates replay") {
  for (const char* text :
       {"|- p -> p", "p, p -> q |- q", "|- ~~(p | ~p)",
        "|- (p -> (q -> r)) -> ((p -> q) -> (p -> r))",
        "(p -> q) -> r, p -> q |- r"}) {
    Sequent s = parse_sequent(text);
    ProofOutcome outcome = prove_ipc(s);
    REQUIRE(outcome.provable);
    REQUIRE(outcome.certificate.has_value());
    CHECK(replay_certificate(*outcome.certificate, s));
  }
}

TEST_CASE("certificates are deterministic") {
  Sequent s = parse_sequent("|- ~~(p | ~p)");
  auto a = prove_ipc(s), b = prove_ipc(s);
  REQUIRE((a.provable && b.provable));
  CHECK(format_certificate(*a.certificate) == format_certificate(*b.certificate));
}

TEST_CASE("replay rejects mismatched certificates") {
  Sequent s = parse_sequent("|- p -> p");
  Sequent other = parse_sequent("|- q -> q");
  ProofOutcome outcome = prove_ipc(s);
  REQUIRE(outcome.provable);
  CHECK_FALSE(replay_certificate(*outcome.certificate, other));
  ProofStep bogus{Rule::Axiom, Formula::var("p"), {}};
  CHECK_FALSE(replay_certificate(bogus, s));
}

TEST_CASE("golden corpus matches exactly") {
  std::ifstream in(SUKIT_TEST_DATA_DIR "/ipc_golden.txt");
  REQUIRE(in.good());
  std::string line;
  int items = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    bool expect = line.substr(0, tab) == "1";
    std::string sequent_text = line.substr(tab + 1);
    CAPTURE(sequent_text);
    CHECK(prove_ipc(parse_sequent(sequent_text)).provable == expect);
    ++items;
  }
  CHECK(items == 50);
}

TEST_CASE("lemma: su and aa interderivable through pinned instances") {
  LemmaReport report = verify_lemma_su_aa();
  for (const auto& check : report.checks) {
    CAPTURE(check.name);
    CHECK(check.passed);
  }
  CHECK(report.ok());
  CHECK(report.checks.size() == 7);
}

TEST_CASE("lemma 1 instances match the golden file") {
  std::ifstream in(SUKIT_TEST_DATA_DIR "/lemma1_instances.txt");
  REQUIRE(in.good());
  Lemma1Data data = lemma1_data();
  std::map<std::string, std::string> expected;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    expected[line.substr(0, tab)] = line.substr(tab + 1);
  }
  CHECK(data.su_instance_for_aa_plus.str() == expected.at("su_instance_for_aa_plus"));
  CHECK(data.aa_plus_instance_for_aa.str() == expected.at("aa_plus_instance_for_aa"));
  CHECK(data.aa_instance_step2.str() == expected.at("aa_instance_step2"));
  CHECK(data.aa_instance_step3.str() == expected.at("aa_instance_step3"));
  REQUIRE(data.chain.size() == 5);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(data.chain[i].str() == expected.at("chain_" + std::to_string(i)));
  // The aa_plus instance for aa is literally aa.
  CHECK(data.aa_plus_instance_for_aa == axiom(AxiomName::Aa));
}

TEST_CASE("corrupted lemma instance is reported") {
  Lemma1Data corrupted = lemma1_data();
  SchemaSubstitution swap_p;
  swap_p.bindings.emplace("p", Formula::bottom());
  for (const char* v : {"q", "r", "s"})
    swap_p.bindings.emplace(v, Formula::var(v));
  corrupted.aa_instance_step2 = instantiate(corrupted.aa_instance_step2, swap_p);
  LemmaReport report = verify_lemma_su_aa(corrupted);
  CHECK_FALSE(report.ok());
  bool step2_failed = false;
  for (const auto& check : report.checks)
    if (check.name == "chain_step_2" && !check.passed) step2_failed = true;
  CHECK(step2_failed);
}

TEST_CASE("su_star reductions") {
  CHECK(verify_su_star(1));
  CHECK(verify_su_star(2));
  CHECK(verify_su_star(3));
  CHECK_THROWS_AS(verify_su_star(4), CapExceeded);
  CHECK_NOTHROW(verify_su_star(4, 4));
  CHECK_THROWS_AS(verify_su_star(0), PreconditionError);
}

TEST_CASE("structural properties of the decision procedure") {
  StructuralReport report = check_structural_properties();
  for (const std::string& v : report.violations) { CAPTURE(v); }
  CHECK(report.ok());
  CHECK(report.checks > 1000);
}

TEST_CASE("prove_su finds single-instance derivations") {
  SuProofResult su_res = prove_su(axiom(AxiomName::Su), 0);
  CHECK(su_res.proved());
  REQUIRE(su_res.instances.size() == 1);
  // The identity instance closes su itself.
  CHECK(su_res.instances[0] == axiom(AxiomName::Su));

  for (AxiomName name : {AxiomName::AaPlus, AxiomName::Kp, AxiomName::Sa}) {
    SuProofResult res = prove_su(axiom(name), 0);
    CAPTURE(axiom(name).str());
    CHECK(res.proved());
    REQUIRE(res.instances.size() == 1);
    // The certificate proves goal from the reported instance.
    Sequent claimed{{res.instances[0]}, axiom(name)};
    CHECK(replay_certificate(*res.ipc.certificate, claimed));
  }
}

TEST_CASE("prove_su is inconclusive on non-theorems") {
  SuProofResult res = prove_su(parse_formula("p | ~p"), 1);
  CHECK_FALSE(res.proved());
  CHECK(res.status == SuProofResult::Status::Inconclusive);
  CHECK(res.instances.empty());
}

TEST_CASE("prove_su respects the instance cap") {
  CHECK_THROWS_AS(prove_su(axiom(AxiomName::Aa), 1), CapExceeded);
  CHECK_NOTHROW(prove_su(parse_formula("p | ~p"), 0, 300));
  CHECK_THROWS_AS(prove_su(parse_formula("(p -> q) | (q -> p)"), 0, 10),
                  CapExceeded);
}

TEST_CASE("ipc theorems need no instance") {
  SuProofResult res = prove_su(parse_formula("p -> p"), 0);
  CHECK(res.proved());
  CHECK(res.instances.empty());
}
