#include "su/prover.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>

namespace su {

Sequent parse_sequent(std::string_view text) {
  auto turnstile = text.find("|-");
  std::string_view premise_part, goal_part;
  if (turnstile == std::string_view::npos) {
    goal_part = text;
  } else {
    premise_part = text.substr(0, turnstile);
    goal_part = text.substr(turnstile + 2);
  }
  Sequent s{{}, Formula::bottom()};
  std::size_t start = 0;
  auto only_space = [](std::string_view sv) {
    for (char c : sv)
      if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!only_space(premise_part)) {
    while (start <= premise_part.size()) {
      auto comma = premise_part.find(',', start);
      std::string_view piece = comma == std::string_view::npos
                                   ? premise_part.substr(start)
                                   : premise_part.substr(start, comma - start);
      s.premises.push_back(parse_formula(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  s.conclusion = parse_formula(goal_part);
  return s;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    if (i > 0) out += ", ";
    out += s.premises[i].str();
  }
  if (!s.premises.empty()) out += " ";
  out += "|- ";
  out += s.conclusion.str();
  return out;
}

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::Axiom: return "axiom";
    case Rule::BotLeft: return "bot_left";
    case Rule::AndLeft: return "and_left";
    case Rule::OrLeft: return "or_left";
    case Rule::AndRight: return "and_right";
    case Rule::OrRightLeft: return "or_right_left";
    case Rule::OrRightRight: return "or_right_right";
    case Rule::ImpliesRight: return "implies_right";
    case Rule::ImpliesLeftAtom: return "implies_left_atom";
    case Rule::ImpliesLeftBot: return "implies_left_bot";
    case Rule::ImpliesLeftAnd: return "implies_left_and";
    case Rule::ImpliesLeftOr: return "implies_left_or";
    case Rule::ImpliesLeftImplies: return "implies_left_implies";
  }
  return "?";
}

namespace {

// Premises are kept as a sorted deduplicated vector; contraction and
// weakening are admissible, so set semantics decides the same consequence
// relation.
using Context = std::vector<Formula>;

Context normalize(const std::vector<Formula>& premises) {
  Context ctx(premises);
  std::sort(ctx.begin(), ctx.end());
  ctx.erase(std::unique(ctx.begin(), ctx.end(),
                        [](const Formula& a, const Formula& b) { return a == b; }),
            ctx.end());
  return ctx;
}

bool contains(const Context& ctx, const Formula& f) {
  auto it = std::lower_bound(ctx.begin(), ctx.end(), f);
  return it != ctx.end() && *it == f;
}

Context with(const Context& ctx, const Formula& f) {
  Context out;
  out.reserve(ctx.size() + 1);
  auto it = std::lower_bound(ctx.begin(), ctx.end(), f);
  if (it != ctx.end() && *it == f) return ctx;
  out.insert(out.end(), ctx.begin(), it);
  out.push_back(f);
  out.insert(out.end(), it, ctx.end());
  return out;
}

Context without(const Context& ctx, const Formula& f) {
  Context out;
  out.reserve(ctx.size());
  bool removed = false;
  for (const Formula& g : ctx) {
    if (!removed && g == f) {
      removed = true;
      continue;
    }
    out.push_back(g);
  }
  return out;
}

struct SequentKey {
  Context premises;
  Formula goal;

  bool operator==(const SequentKey& other) const {
    if (!(goal == other.goal)) return false;
    if (premises.size() != other.premises.size()) return false;
    for (std::size_t i = 0; i < premises.size(); ++i)
      if (!(premises[i] == other.premises[i])) return false;
    return true;
  }
};

struct SequentKeyHash {
  std::size_t operator()(const SequentKey& k) const {
    std::size_t h = k.goal.hash();
    for (const Formula& f : k.premises)
      h ^= f.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class G4ip {
 public:
  std::optional<ProofStep> search(const Context& ctx, const Formula& goal) {
    // Immediate endings.
    for (const Formula& f : ctx) {
      if (f.is_bottom()) return ProofStep{Rule::BotLeft, f, {}};
    }
    if (goal.is_var() && contains(ctx, goal))
      return ProofStep{Rule::Axiom, goal, {}};

    SequentKey key{ctx, goal};
    if (failed_.count(key)) return std::nullopt;

    auto fail = [&]() -> std::optional<ProofStep> {
      failed_.insert(key);
      return std::nullopt;
    };

    // Invertible single-premise left rules.
    for (const Formula& f : ctx) {
      switch (f.kind()) {
        case Formula::Kind::And: {
          Context next = with(with(without(ctx, f), f.lhs()), f.rhs());
          auto sub = search(next, goal);
          if (!sub) return fail();
          return ProofStep{Rule::AndLeft, f, {std::move(*sub)}};
        }
        case Formula::Kind::Implies: {
          Formula a = f.lhs();
          switch (a.kind()) {
            case Formula::Kind::Bottom: {
              auto sub = search(without(ctx, f), goal);
              if (!sub) return fail();
              return ProofStep{Rule::ImpliesLeftBot, f, {std::move(*sub)}};
            }
            case Formula::Kind::Var: {
              if (!contains(ctx, a)) break;
              Context next = with(without(ctx, f), f.rhs());
              auto sub = search(next, goal);
              if (!sub) return fail();
              return ProofStep{Rule::ImpliesLeftAtom, f, {std::move(*sub)}};
            }
            case Formula::Kind::And: {
              Formula curried = Formula::implies(
                  a.lhs(), Formula::implies(a.rhs(), f.rhs()));
              Context next = with(without(ctx, f), curried);
              auto sub = search(next, goal);
              if (!sub) return fail();
              return ProofStep{Rule::ImpliesLeftAnd, f, {std::move(*sub)}};
            }
            case Formula::Kind::Or: {
              Context next = with(
                  with(without(ctx, f), Formula::implies(a.lhs(), f.rhs())),
                  Formula::implies(a.rhs(), f.rhs()));
              auto sub = search(next, goal);
              if (!sub) return fail();
              return ProofStep{Rule::ImpliesLeftOr, f, {std::move(*sub)}};
            }
            case Formula::Kind::Implies:
              break;  // non-invertible, handled below
          }
          break;
        }
        default:
          break;
      }
    }

    // Invertible right rules.
    if (goal.kind() == Formula::Kind::Implies) {
      auto sub = search(with(ctx, goal.lhs()), goal.rhs());
      if (!sub) return fail();
      return ProofStep{Rule::ImpliesRight, goal, {std::move(*sub)}};
    }
    if (goal.kind() == Formula::Kind::And) {
      auto left = search(ctx, goal.lhs());
      if (!left) return fail();
      auto right = search(ctx, goal.rhs());
      if (!right) return fail();
      return ProofStep{Rule::AndRight, goal, {std::move(*left), std::move(*right)}};
    }

    // Invertible branching left rule.
    for (const Formula& f : ctx) {
      if (f.kind() != Formula::Kind::Or) continue;
      Context base = without(ctx, f);
      auto left = search(with(base, f.lhs()), goal);
      if (!left) return fail();
      auto right = search(with(base, f.rhs()), goal);
      if (!right) return fail();
      return ProofStep{Rule::OrLeft, f, {std::move(*left), std::move(*right)}};
    }

    // Non-invertible choices, tried with backtracking.
    if (goal.kind() == Formula::Kind::Or) {
      if (auto sub = search(ctx, goal.lhs()))
        return ProofStep{Rule::OrRightLeft, goal, {std::move(*sub)}};
      if (auto sub = search(ctx, goal.rhs()))
        return ProofStep{Rule::OrRightRight, goal, {std::move(*sub)}};
    }
    for (const Formula& f : ctx) {
      if (f.kind() != Formula::Kind::Implies) continue;
      Formula a = f.lhs();
      if (a.kind() != Formula::Kind::Implies) continue;
      // f = (A -> B) -> C
      Context base = without(ctx, f);
      auto major = search(with(base, Formula::implies(a.rhs(), f.rhs())), a);
      if (!major) continue;
      auto minor = search(with(base, f.rhs()), goal);
      if (!minor) continue;
      return ProofStep{Rule::ImpliesLeftImplies, f,
                       {std::move(*major), std::move(*minor)}};
    }
    return fail();
  }

 private:
  std::unordered_set<SequentKey, SequentKeyHash> failed_;
};

}  // namespace

ProofOutcome prove_ipc(const Sequent& sequent) {
  G4ip prover;
  auto step = prover.search(normalize(sequent.premises), sequent.conclusion);
  if (!step) return ProofOutcome{false, std::nullopt};
  return ProofOutcome{true, std::move(step)};
}

// --- certificate replay ------------------------------------------------

namespace {

bool replay(const ProofStep& step, const Context& ctx, const Formula& goal) {
  const Formula& f = step.principal;
  auto premise_count = [&](std::size_t n) { return step.premises.size() == n; };
  switch (step.rule) {
    case Rule::BotLeft:
      return premise_count(0) && f.is_bottom() && contains(ctx, f);
    case Rule::Axiom:
      return premise_count(0) && f == goal && goal.is_var() && contains(ctx, f);
    case Rule::AndLeft:
      return premise_count(1) && f.kind() == Formula::Kind::And &&
             contains(ctx, f) &&
             replay(step.premises[0],
                    with(with(without(ctx, f), f.lhs()), f.rhs()), goal);
    case Rule::OrLeft:
      return premise_count(2) && f.kind() == Formula::Kind::Or &&
             contains(ctx, f) &&
             replay(step.premises[0], with(without(ctx, f), f.lhs()), goal) &&
             replay(step.premises[1], with(without(ctx, f), f.rhs()), goal);
    case Rule::AndRight:
      return premise_count(2) && f == goal &&
             goal.kind() == Formula::Kind::And &&
             replay(step.premises[0], ctx, goal.lhs()) &&
             replay(step.premises[1], ctx, goal.rhs());
    case Rule::OrRightLeft:
      return premise_count(1) && f == goal &&
             goal.kind() == Formula::Kind::Or &&
             replay(step.premises[0], ctx, goal.lhs());
    case Rule::OrRightRight:
      return premise_count(1) && f == goal &&
             goal.kind() == Formula::Kind::Or &&
             replay(step.premises[0], ctx, goal.rhs());
    case Rule::ImpliesRight:
      return premise_count(1) && f == goal &&
             goal.kind() == Formula::Kind::Implies &&
             replay(step.premises[0], with(ctx, goal.lhs()), goal.rhs());
    case Rule::ImpliesLeftAtom:
      return premise_count(1) && f.kind() == Formula::Kind::Implies &&
             f.lhs().is_var() && contains(ctx, f) && contains(ctx, f.lhs()) &&
             replay(step.premises[0], with(without(ctx, f), f.rhs()), goal);
    case Rule::ImpliesLeftBot:
      return premise_count(1) && f.kind() == Formula::Kind::Implies &&
             f.lhs().is_bottom() && contains(ctx, f) &&
             replay(step.premises[0], without(ctx, f), goal);
    case Rule::ImpliesLeftAnd: {
      if (!premise_count(1) || f.kind() != Formula::Kind::Implies ||
          f.lhs().kind() != Formula::Kind::And || !contains(ctx, f))
        return false;
      Formula curried =
          Formula::implies(f.lhs().lhs(), Formula::implies(f.lhs().rhs(), f.rhs()));
      return replay(step.premises[0], with(without(ctx, f), curried), goal);
    }
    case Rule::ImpliesLeftOr: {
      if (!premise_count(1) || f.kind() != Formula::Kind::Implies ||
          f.lhs().kind() != Formula::Kind::Or || !contains(ctx, f))
        return false;
      Context next = with(with(without(ctx, f),
                               Formula::implies(f.lhs().lhs(), f.rhs())),
                          Formula::implies(f.lhs().rhs(), f.rhs()));
      return replay(step.premises[0], next, goal);
    }
    case Rule::ImpliesLeftImplies: {
      if (!premise_count(2) || f.kind() != Formula::Kind::Implies ||
          f.lhs().kind() != Formula::Kind::Implies || !contains(ctx, f))
        return false;
      Formula a = f.lhs();
      Context base = without(ctx, f);
      return replay(step.premises[0],
                    with(base, Formula::implies(a.rhs(), f.rhs())), a) &&
             replay(step.premises[1], with(base, f.rhs()), goal);
    }
  }
  return false;
}

void format_rec(const ProofStep& step, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += rule_name(step.rule);
  out += ": ";
  out += step.principal.str();
  out += '\n';
  for (const ProofStep& sub : step.premises) format_rec(sub, indent + 1, out);
}

}  // namespace

bool replay_certificate(const ProofStep& step, const Sequent& sequent) {
  return replay(step, normalize(sequent.premises), sequent.conclusion);
}

std::string format_certificate(const ProofStep& step) {
  std::string out;
  format_rec(step, 0, out);
  return out;
}

// --- SU schema search -----------------------------------------------------

namespace {

void subformulas_rec(const Formula& f, std::set<Formula>& out) {
  out.insert(f);
  switch (f.kind()) {
    case Formula::Kind::Bottom:
    case Formula::Kind::Var:
      return;
    default:
      subformulas_rec(f.lhs(), out);
      subformulas_rec(f.rhs(), out);
  }
}

}  // namespace

SuProofResult prove_su(const Formula& goal, int depth,
                       std::size_t instance_cap) {
  if (depth < 0) throw PreconditionError("prove_su needs depth >= 0");
  SuProofResult result;

  // The goal may already be an IPC theorem.
  ++result.attempts;
  ProofOutcome direct = prove_ipc(Sequent{{}, goal});
  if (direct.provable) {
    result.status = SuProofResult::Status::Proved;
    result.ipc = std::move(direct);
    return result;
  }

  // Substitution universe: subformula closure plus bottom, then `depth`
  // levels of negation.
  std::set<Formula> closure;
  subformulas_rec(goal, closure);
  closure.insert(Formula::bottom());
  for (int d = 0; d < depth; ++d) {
    std::set<Formula> next = closure;
    for (const Formula& f : closure) next.insert(Formula::neg(f));
    closure = std::move(next);
  }
  std::vector<Formula> universe(closure.begin(), closure.end());
  std::sort(universe.begin(), universe.end(), [](const Formula& a, const Formula& b) {
    if (a.node_count() != b.node_count()) return a.node_count() < b.node_count();
    return a.str() < b.str();
  });

  const std::size_t u = universe.size();
  const std::size_t total = u * u * u * u;
  if (u > 0 && (total / u / u / u != u || total > instance_cap))
    throw CapExceeded("su instance universe " + std::to_string(u) + "^4 exceeds cap " +
                      std::to_string(instance_cap));

  const Formula schema = axiom(AxiomName::Su);
  // Enumerate substitutions in lexicographic index order over (p, q, r, s).
  // The schema is symmetric under swapping (p, r) with (q, s), so the
  // lexicographically larger twin of each instance is skipped.
  for (std::size_t ip = 0; ip < u; ++ip)
    for (std::size_t iq = 0; iq < u; ++iq)
      for (std::size_t ir = 0; ir < u; ++ir)
        for (std::size_t is = 0; is < u; ++is) {
          if (std::make_pair(ip, ir) > std::make_pair(iq, is)) continue;
          // Relevance prescreen: the instance's consequent alone must already
          // close the goal; otherwise the full instance is not tried.  This
          // keeps the search sound (anything proved still follows from one
          // su instance) at the price of completeness the bounded search
          // never promised.
          Formula consequent = Formula::disj(
              Formula::implies(universe[ip], universe[ir]),
              Formula::implies(universe[iq], universe[is]));
          ++result.attempts;
          if (!prove_ipc(Sequent{{consequent}, goal}).provable) continue;
          SchemaSubstitution subst;
          subst.bindings.emplace("p", universe[ip]);
          subst.bindings.emplace("q", universe[iq]);
          subst.bindings.emplace("r", universe[ir]);
          subst.bindings.emplace("s", universe[is]);
          Formula instance = instantiate(schema, subst);
          ++result.attempts;
          ProofOutcome outcome = prove_ipc(Sequent{{instance}, goal});
          if (outcome.provable) {
            result.status = SuProofResult::Status::Proved;
            result.instances = {std::move(instance)};
            result.ipc = std::move(outcome);
            return result;
          }
        }
  result.status = SuProofResult::Status::Inconclusive;
  return result;
}

// --- Lemma machine-checks ---------------------------------------------------

Lemma1Data lemma1_data() {
  Lemma1Data data;
  const Formula su = axiom(AxiomName::Su);
  const Formula aa = axiom(AxiomName::Aa);
  const Formula aa_plus = axiom(AxiomName::AaPlus);
  auto subst = [](std::initializer_list<std::pair<const char*, const char*>> bs) {
    SchemaSubstitution s;
    for (auto [v, text] : bs) s.bindings.emplace(v, parse_formula(text));
    return s;
  };
  data.su_instance_for_aa_plus = instantiate(
      su, subst({{"p", "p -> q"}, {"q", "~p"}, {"r", "r"}, {"s", "s"}}));
  data.aa_plus_instance_for_aa = instantiate(
      aa_plus, subst({{"p", "~p"}, {"q", "q"}, {"r", "r"}, {"s", "s"}}));
  data.aa_instance_step2 = instantiate(
      aa, subst({{"p", "q"}, {"q", "p"}, {"r", "r"}, {"s", "s"}}));
  data.aa_instance_step3 = instantiate(
      aa, subst({{"p", "p"}, {"q", "q"}, {"r", "~~q -> s"}, {"s", "(~q -> p) -> r"}}));
  data.chain = {
      parse_formula("(~p -> q) & (~q -> p) -> r | s"),
      parse_formula("(~p -> q) -> ((~q -> p) -> r | s)"),
      parse_formula("(~p -> q) -> ((~q -> p) -> r) | (~~q -> s)"),
      parse_formula("(~~p -> ((~q -> p) -> r)) | ((~p -> q) -> (~~q -> s))"),
      parse_formula("(p -> r) | (q -> s)"),
  };
  return data;
}

LemmaReport verify_lemma_su_aa() { return verify_lemma_su_aa(lemma1_data()); }

LemmaReport verify_lemma_su_aa(const Lemma1Data& data) {
  LemmaReport report;
  auto check = [&](const std::string& name, const Sequent& sequent) {
    report.checks.push_back({name, prove_ipc(sequent).provable});
  };
  check("su_instance_derives_aa_plus",
        Sequent{{data.su_instance_for_aa_plus}, axiom(AxiomName::AaPlus)});
  check("aa_plus_instance_derives_aa",
        Sequent{{data.aa_plus_instance_for_aa}, axiom(AxiomName::Aa)});
  const std::vector<Formula>& chain = data.chain;
  if (chain.size() == 5) {
    check("chain_step_1", Sequent{{chain[0]}, chain[1]});
    check("chain_step_2", Sequent{{chain[1], data.aa_instance_step2}, chain[2]});
    check("chain_step_3", Sequent{{chain[2], data.aa_instance_step3}, chain[3]});
    check("chain_step_4", Sequent{{chain[3]}, chain[4]});
  } else {
    report.checks.push_back({"chain_shape", false});
  }
  check("aa_instances_derive_su",
        Sequent{{data.aa_instance_step2, data.aa_instance_step3},
                axiom(AxiomName::Su)});
  return report;
}

bool verify_su_star(int n, int cap) {
  if (n < 1) throw PreconditionError("verify_su_star needs n >= 1");
  if (n > cap)
    throw CapExceeded("su_star arity " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Formula> phis, psis;
  for (int i = 1; i <= n; ++i) {
    phis.push_back(Formula::var("p" + std::to_string(i)));
    psis.push_back(Formula::var("q" + std::to_string(i)));
  }
  auto big_and = [](const std::vector<Formula>& fs) {
    Formula acc = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i)
      acc = Formula::conj(acc, fs[i]);
    return acc;
  };
  Formula phi_all = big_and(phis);
  Formula psi_all = big_and(psis);
  Formula premise =
      Formula::conj(Formula::implies(Formula::neg(phi_all), psi_all),
                    Formula::implies(Formula::neg(psi_all), phi_all));
  std::vector<Formula> pairs;
  for (int i = 0; i < n; ++i)
    pairs.push_back(
        Formula::conj(Formula::implies(Formula::neg(phis[i]), psis[i]),
                      Formula::implies(Formula::neg(psis[i]), phis[i])));
  Formula conclusion = big_and(pairs);
  return prove_ipc(Sequent{{premise}, conclusion}).provable;
}

// --- structural property tests ----------------------------------------------

namespace {

class RandomFormulas {
 public:
  explicit RandomFormulas(std::uint64_t seed) : rng_(seed) {}

  Formula formula(int max_depth) {
    if (max_depth == 0 || rng_() % 4 == 0) {
      switch (rng_() % 5) {
        case 0: return Formula::bottom();
        default: return Formula::var(names_[rng_() % names_.size()]);
      }
    }
    switch (rng_() % 4) {
      case 0:
        return Formula::conj(formula(max_depth - 1), formula(max_depth - 1));
      case 1:
        return Formula::disj(formula(max_depth - 1), formula(max_depth - 1));
      case 2:
        return Formula::neg(formula(max_depth - 1));
      default:
        return Formula::implies(formula(max_depth - 1), formula(max_depth - 1));
    }
  }

  std::vector<Formula> context(int max_size, int max_depth) {
    std::vector<Formula> out;
    const int k = static_cast<int>(rng_() % (max_size + 1));
    for (int i = 0; i < k; ++i) out.push_back(formula(max_depth));
    return out;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<std::string> names_{"p", "q", "r"};
};

}  // namespace

StructuralReport check_structural_properties(std::uint64_t seed) {
  StructuralReport report;
  RandomFormulas gen(seed);
  auto provable = [](std::vector<Formula> premises, const Formula& goal) {
    return prove_ipc(Sequent{std::move(premises), goal}).provable;
  };
  auto expect = [&](bool condition, const std::string& what) {
    ++report.checks;
    if (!condition) report.violations.push_back(what);
  };

  for (int i = 0; i < 100; ++i) {
    Formula phi = gen.formula(3);
    std::vector<Formula> gamma = gen.context(2, 2);

    // (A)
    std::vector<Formula> with_phi = gamma;
    with_phi.push_back(phi);
    expect(provable(with_phi, phi), "(A) failed: " + phi.str());

    // (bot)
    expect(provable({Formula::bottom()}, phi), "(bot) failed: " + phi.str());

    Formula psi = gen.formula(3);
    // (and I), (and E)
    expect(provable({phi, psi}, Formula::conj(phi, psi)), "(andI) failed");
    expect(provable({Formula::conj(phi, psi)}, phi), "(andE left) failed");
    expect(provable({Formula::conj(phi, psi)}, psi), "(andE right) failed");
    // (or I)
    expect(provable({phi}, Formula::disj(phi, psi)), "(orI left) failed");
    expect(provable({psi}, Formula::disj(phi, psi)), "(orI right) failed");
    // (MP)
    expect(provable({phi, Formula::implies(phi, psi)}, psi), "(MP) failed");
  }

  // (DT) both directions.
  for (int i = 0; i < 200; ++i) {
    std::vector<Formula> gamma = gen.context(2, 2);
    Formula phi = gen.formula(2);
    Formula psi = gen.formula(2);
    std::vector<Formula> extended = gamma;
    extended.push_back(phi);
    bool lhs = provable(extended, psi);
    bool rhs = provable(gamma, Formula::implies(phi, psi));
    expect(lhs == rhs, "(DT) failed: " + print_sequent(Sequent{gamma, psi}));
  }

  // (PC)
  for (int i = 0; i < 100; ++i) {
    std::vector<Formula> gamma = gen.context(2, 2);
    Formula phi = gen.formula(2), psi = gen.formula(2), chi = gen.formula(2);
    std::vector<Formula> g1 = gamma, g2 = gamma, g3 = gamma;
    g1.push_back(phi);
    g2.push_back(psi);
    g3.push_back(Formula::disj(phi, psi));
    if (provable(g1, chi) && provable(g2, chi))
      expect(provable(g3, chi), "(PC) failed: " + chi.str());
    else
      ++report.checks;
  }

  // (Cut)
  for (int i = 0; i < 100; ++i) {
    std::vector<Formula> gamma = gen.context(2, 2);
    std::vector<Formula> delta = gen.context(2, 2);
    Formula phi = gen.formula(2), psi = gen.formula(2);
    std::vector<Formula> g1 = gamma;
    g1.push_back(psi);
    if (provable(g1, phi) && provable(delta, psi)) {
      std::vector<Formula> both = gamma;
      both.insert(both.end(), delta.begin(), delta.end());
      expect(provable(both, phi), "(Cut) failed: " + phi.str());
    } else {
      ++report.checks;
    }
  }

  // (Mon)
  for (int i = 0; i < 100; ++i) {
    std::vector<Formula> gamma = gen.context(2, 2);
    Formula phi = gen.formula(2);
    if (provable(gamma, phi)) {
      std::vector<Formula> bigger = gamma;
      bigger.push_back(gen.formula(2));
      expect(provable(bigger, phi), "(Mon) failed: " + phi.str());
    } else {
      ++report.checks;
    }
  }

  return report;
}

}  // namespace su
