// A terminating decision procedure for intuitionistic propositional
// consequence (a contraction-free single-succedent calculus with the
// implication-left rule split on the shape of the antecedent's premise),
// plus bounded schema-instance proof search on top of it.
//
// Sequent syntax: "phi1, phi2 |- psi"; the premise list may be empty.

#ifndef SU_PROVER_HPP
#define SU_PROVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "su/formula.hpp"

namespace su {

struct Sequent {
  std::vector<Formula> premises;
  Formula conclusion;
};

Sequent parse_sequent(std::string_view text);
std::string print_sequent(const Sequent& s);

enum class Rule {
  Axiom,             // goal is an atom already among the premises
  BotLeft,           // _|_ among the premises
  AndLeft,           // A & B  ~>  A, B
  OrLeft,            // A | B  ~>  two branches
  AndRight,          // goal A & B  ~>  two branches
  OrRightLeft,       // goal A | B  ~>  goal A
  OrRightRight,      // goal A | B  ~>  goal B
  ImpliesRight,      // goal A -> B  ~>  add A, goal B
  ImpliesLeftAtom,   // p, p -> B  ~>  p, B
  ImpliesLeftBot,    // _|_ -> B dropped
  ImpliesLeftAnd,    // (A & B) -> C  ~>  A -> (B -> C)
  ImpliesLeftOr,     // (A | B) -> C  ~>  A -> C, B -> C
  ImpliesLeftImplies // (A -> B) -> C  ~>  B -> C => A -> B  and  C => goal
};

const char* rule_name(Rule rule);

// A derivation trace.  Replaying it from the root sequent re-derives the
// proof deterministically.
struct ProofStep {
  Rule rule;
  Formula principal;
  std::vector<ProofStep> premises;
};

struct ProofOutcome {
  bool provable = false;
  std::optional<ProofStep> certificate;
};

// Total: always terminates, provable iff the premises entail the conclusion
// intuitionistically.  Premises are treated as a set.
ProofOutcome prove_ipc(const Sequent& sequent);

// Checks that every rule application in the certificate matches the sequent
// it claims to derive.
bool replay_certificate(const ProofStep& step, const Sequent& sequent);

std::string format_certificate(const ProofStep& step);

// --- SU schema search -----------------------------------------------------

inline constexpr std::size_t kDefaultInstanceCap = 100000;

struct SuProofResult {
  enum class Status { Proved, Inconclusive };
  Status status = Status::Inconclusive;
  // The su instances handed to the IPC prover (at most one with the current
  // strategy; empty when the goal is an IPC theorem outright).
  std::vector<Formula> instances;
  ProofOutcome ipc;
  std::uint64_t attempts = 0;

  bool proved() const { return status == Status::Proved; }
};

// Sound bounded search for SU-theoremhood: substitutions map the schema
// variables of su into the subformula closure of the goal plus bottom,
// closed under `depth` extra levels of negation.  Candidate instances are
// tried one at a time (cheapest first, with a consequent-relevance
// prescreen); "proved" means the goal follows intuitionistically from a
// single su instance, so it is an SU theorem.  Inconclusive is a distinct
// outcome, never a refutation.  Throws CapExceeded when the substitution
// universe is larger than instance_cap.
SuProofResult prove_su(const Formula& goal, int depth,
                       std::size_t instance_cap = kDefaultInstanceCap);

// --- machine-checked lemmas ------------------------------------------------

// The pinned instances and derivation chain for the su <-> aa equivalence.
struct Lemma1Data {
  Formula su_instance_for_aa_plus = Formula::bottom();  // su[p := p -> q, q := ~p]
  Formula aa_plus_instance_for_aa = Formula::bottom();  // aa_plus[p := ~p], literally aa
  Formula aa_instance_step2 = Formula::bottom();        // aa[p := q, q := p]
  Formula aa_instance_step3 = Formula::bottom();  // aa[r := ~~q -> s, s := (~q -> p) -> r]
  std::vector<Formula> chain;                     // S0, S1, S2, S3, S4
};
Lemma1Data lemma1_data();

struct LemmaCheck {
  std::string name;
  bool passed;
};
struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

// (a) the pinned su instance derives aa_plus; (b) the pinned aa_plus
// instance derives aa; (c) each chain step follows from its predecessor and
// the cited aa instance; (d) the two aa instances jointly derive su.
LemmaReport verify_lemma_su_aa();
LemmaReport verify_lemma_su_aa(const Lemma1Data& data);

// The intuitionistic reduction behind (SU*): the paired negative-implication
// premises over conjunctions entail the componentwise ones.  1 <= n <= cap.
bool verify_su_star(int n, int cap = 3);

// Property-tests the structural behaviors of prove_ipc ((A), (Cut), (Mon),
// (bot), (&I), (&E), (|I), (PC), (MP), (DT)) on seeded random formulas.
struct StructuralReport {
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
StructuralReport check_structural_properties(std::uint64_t seed = 20240801);

}  // namespace su

#endif  // SU_PROVER_HPP
