// Command-line workbench for the intermediate logic SU: formula parsing,
// finite S4 model checking, strong-union frame properties, Medvedev frames,
// connected products, proof search and countermodel search.

#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "su/constructions.hpp"
#include "su/formula.hpp"
#include "su/frame.hpp"
#include "su/io.hpp"
#include "su/prover.hpp"
#include "su/semantics.hpp"
#include "su/strong_union.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInputError = 3;

std::size_t upset_cap_default() {
  if (const char* env = std::getenv("SU_KIT_CAP_UPSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw su::Error("SU_KIT_CAP_UPSETS must be a positive integer");
  }
  return su::kDefaultUpsetCap;
}

void print_valuation(const std::map<std::string, su::PointSet>& valuation) {
  for (const auto& [var, val] : valuation) {
    std::cout << "val " << var;
    for (int p : su::set_members(val)) std::cout << " " << p;
    std::cout << "\n";
  }
}

// Renames every variable of the right model (and of beta) that collides with
// a left-side variable, appending _2, _3, ... until fresh.
void rename_apart(const su::Model& left, const su::Formula& alpha,
                  su::Model& right, su::Formula& beta) {
  std::set<std::string> taken = su::variables(alpha);
  for (const auto& [var, _] : left.valuation()) taken.insert(var);

  std::set<std::string> right_vars = su::variables(beta);
  for (const auto& [var, _] : right.valuation()) right_vars.insert(var);

  std::map<std::string, std::string> renaming;
  for (const std::string& var : right_vars) {
    if (!taken.count(var)) {
      taken.insert(var);
      continue;
    }
    int suffix = 2;
    std::string fresh;
    do {
      fresh = var + "_" + std::to_string(suffix++);
    } while (taken.count(fresh) || right_vars.count(fresh));
    taken.insert(fresh);
    renaming[var] = fresh;
  }
  if (renaming.empty()) return;

  su::SchemaSubstitution subst;
  for (const std::string& var : su::variables(beta)) {
    auto it = renaming.find(var);
    subst.bindings.emplace(var, su::Formula::var(it == renaming.end() ? var : it->second));
  }
  beta = su::instantiate(beta, subst);

  std::map<std::string, su::PointSet> valuation;
  for (const auto& [var, val] : right.valuation()) {
    auto it = renaming.find(var);
    valuation.emplace(it == renaming.end() ? var : it->second, val);
  }
  right = su::Model(right.frame(), std::move(valuation));
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for the intermediate logic SU"};
  app.require_subcommand(1);
  std::size_t upset_cap = upset_cap_default();
  app.add_option("--upset-cap", upset_cap,
                 "cap on enumerated upsets per frame (env SU_KIT_CAP_UPSETS)");

  // parse
  std::string formula_text;
  auto* cmd_parse = app.add_subcommand("parse", "parse a formula and print it back");
  cmd_parse->add_option("formula", formula_text)->required();

  // validate
  std::string frame_path, formula_arg;
  auto* cmd_validate =
      app.add_subcommand("validate", "check a formula on every valuation of a frame");
  cmd_validate->add_option("frame", frame_path)->required();
  cmd_validate->add_option("formula", formula_arg)->required();

  // su2 / uni
  std::string prop_frame_path;
  auto* cmd_su2 = app.add_subcommand("su2", "does the frame satisfy (su_2)?");
  cmd_su2->add_option("frame", prop_frame_path)->required();
  std::string uni_frame_path;
  auto* cmd_uni = app.add_subcommand("uni", "does the frame satisfy (Uni)?");
  cmd_uni->add_option("frame", uni_frame_path)->required();

  // medvedev / star
  int med_size = 0;
  auto* cmd_medvedev =
      app.add_subcommand("medvedev", "emit the Medvedev frame over k elements");
  cmd_medvedev->add_option("--size", med_size)->required();
  int star_size = 0;
  auto* cmd_star =
      app.add_subcommand("star", "check the subset-union decomposition property");
  cmd_star->add_option("--size", star_size)->required();

  // product
  std::string prod_left, prod_right;
  auto* cmd_product =
      app.add_subcommand("product", "emit the connected product of two frames");
  cmd_product->add_option("frame1", prod_left)->required();
  cmd_product->add_option("frame2", prod_right)->required();

  // prove
  std::string logic = "ipc", sequent_text;
  int depth = 1;
  std::size_t instance_cap = su::kDefaultInstanceCap;
  auto* cmd_prove = app.add_subcommand("prove", "proof search (phi1, phi2 |- psi)");
  cmd_prove->add_option("--logic", logic)->check(CLI::IsMember({"ipc", "su"}));
  cmd_prove->add_option("--depth", depth, "negation closure depth for su instances");
  cmd_prove->add_option("--instance-cap", instance_cap);
  cmd_prove->add_option("sequent", sequent_text)->required();

  // countermodel
  int max_points = 4;
  std::string counter_formula;
  auto* cmd_counter = app.add_subcommand(
      "countermodel", "search S4 frames satisfying (su_2) for a refutation");
  cmd_counter->add_option("--max-points", max_points);
  cmd_counter->add_option("formula", counter_formula)->required();

  // dp-witness
  std::string dp_m1, dp_m2, dp_alpha, dp_beta;
  bool dp_rename = false;
  auto* cmd_dp = app.add_subcommand(
      "dp-witness", "certified countermodel for a disjunction from two models");
  cmd_dp->add_option("model1", dp_m1)->required();
  cmd_dp->add_option("model2", dp_m2)->required();
  cmd_dp->add_option("alpha", dp_alpha)->required();
  cmd_dp->add_option("beta", dp_beta)->required();
  cmd_dp->add_flag("--rename-apart", dp_rename,
                   "rename the second model's variables away from the first");

  // correspondence
  int enum_points = 0, random_count = 0, random_points = 0;
  std::uint64_t seed = 20240801;
  bool per_frame_report = false;
  auto* cmd_corr = app.add_subcommand(
      "correspondence", "check validity of su against (su_2) over many frames");
  auto* opt_enum = cmd_corr->add_option("--enumerate", enum_points,
                                        "all labeled S4 frames with n points");
  auto* opt_random = cmd_corr->add_option("--random", random_count, "random frame count");
  cmd_corr->add_option("--points", random_points, "points per random frame");
  cmd_corr->add_option("--seed", seed);
  cmd_corr->add_flag("--report", per_frame_report,
                     "print one classification line per frame");
  opt_enum->excludes(opt_random);

  // verify-lemmas
  int lemma_points = 5, containment_points = 4, product_points = 3;
  auto* cmd_lemmas = app.add_subcommand(
      "verify-lemmas", "machine-check the lemma suite at desk scale");
  cmd_lemmas->add_option("--lemma-points", lemma_points);
  cmd_lemmas->add_option("--containment-points", containment_points);
  cmd_lemmas->add_option("--product-points", product_points);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kExitInputError;
  }

  if (cmd_parse->parsed()) {
    std::cout << su::parse_formula(formula_text).str() << "\n";
    return kExitTrue;
  }

  if (cmd_validate->parsed()) {
    su::FrameFile ff = su::read_frame_file_from(frame_path);
    if (!ff.frame.is_s4())
      throw su::Error("frame '" + ff.name + "' is not S4; add 'closure'");
    su::Formula f = su::parse_formula(formula_arg);
    auto refutation = su::find_refuting_valuation(ff.frame, f, upset_cap);
    if (!refutation) {
      std::cout << "true\n";
      return kExitTrue;
    }
    std::cout << "false\n";
    print_valuation(refutation->valuation);
    std::cout << "point " << refutation->point << "\n";
    return kExitFalse;
  }

  if (cmd_su2->parsed()) {
    su::FrameFile ff = su::read_frame_file_from(prop_frame_path);
    auto failure = su::find_su2_failure(ff.frame);
    if (!failure) {
      std::cout << "true\n";
      return kExitTrue;
    }
    std::cout << "false\n";
    std::cout << "witness w=" << failure->w << " x=" << failure->x
              << " y=" << failure->y << "\n";
    return kExitFalse;
  }

  if (cmd_uni->parsed()) {
    su::FrameFile ff = su::read_frame_file_from(uni_frame_path);
    bool ok = su::satisfies_uni(ff.frame);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kExitTrue : kExitFalse;
  }

  if (cmd_medvedev->parsed()) {
    su::MedvedevFrame m = su::medvedev(med_size);
    std::cout << su::write_frame_file("medvedev" + std::to_string(med_size),
                                      m.frame, su::medvedev_pointmap_comments(m));
    return kExitTrue;
  }

  if (cmd_star->parsed()) {
    bool ok = su::check_star_property(star_size);
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kExitTrue : kExitFalse;
  }

  if (cmd_product->parsed()) {
    su::FrameFile f1 = su::read_frame_file_from(prod_left);
    su::FrameFile f2 = su::read_frame_file_from(prod_right);
    su::ConnectedProduct product(f1.frame, f2.frame);
    std::cout << su::write_frame_file(f1.name + "_x_" + f2.name, product.frame(),
                                      product.pointmap_comments());
    return kExitTrue;
  }

  if (cmd_prove->parsed()) {
    su::Sequent sequent = su::parse_sequent(sequent_text);
    if (logic == "ipc") {
      su::ProofOutcome outcome = su::prove_ipc(sequent);
      if (!outcome.provable) {
        std::cout << "not provable\n";
        return kExitFalse;
      }
      std::cout << "provable\n" << su::format_certificate(*outcome.certificate);
      return kExitTrue;
    }
    // |-_SU with premises: fold them into the goal by the deduction theorem.
    su::Formula goal = sequent.conclusion;
    for (auto it = sequent.premises.rbegin(); it != sequent.premises.rend(); ++it)
      goal = su::Formula::implies(*it, goal);
    su::SuProofResult result = su::prove_su(goal, depth, instance_cap);
    if (!result.proved()) {
      std::cout << "inconclusive\n";
      return kExitInconclusive;
    }
    std::cout << "provable\n";
    for (const su::Formula& inst : result.instances)
      std::cout << "instance: " << inst.str() << "\n";
    std::cout << su::format_certificate(*result.ipc.certificate);
    return kExitTrue;
  }

  if (cmd_counter->parsed()) {
    su::Formula f = su::parse_formula(counter_formula);
    su::SearchBounds bounds;
    bounds.max_points = max_points;
    bounds.upset_cap = upset_cap;
    auto found = su::find_su_countermodel(f, bounds);
    if (!found) {
      std::cout << "no countermodel up to " << max_points << " points\n";
      return kExitInconclusive;
    }
    std::cout << "countermodel found\n"
              << su::write_model_file("countermodel", found->model)
              << "point " << found->point << "\n";
    return kExitFalse;
  }

  if (cmd_dp->parsed()) {
    su::ModelFile m1 = su::read_model_file_from(dp_m1);
    su::ModelFile m2 = su::read_model_file_from(dp_m2);
    su::Formula alpha = su::parse_formula(dp_alpha);
    su::Formula beta = su::parse_formula(dp_beta);
    su::Model right = m2.model;
    if (dp_rename) rename_apart(m1.model, alpha, right, beta);
    su::PointSet roots1 = m1.model.frame().roots();
    su::PointSet roots2 = right.frame().roots();
    if (roots1.none())
      throw su::Error("first model's frame has no root");
    if (roots2.none())
      throw su::Error("second model's frame has no root");
    int r1 = static_cast<int>(roots1.find_first());
    int r2 = static_cast<int>(roots2.find_first());
    su::DpWitness witness = su::dp_witness(m1.model, r1, alpha, right, r2, beta);
    std::cout << su::write_model_file(m1.name + "_x_" + m2.name,
                                      witness.product_model,
                                      witness.product.pointmap_comments())
              << "root " << witness.root << "\n"
              << "refutes " << su::Formula::disj(alpha, beta).str() << "\n"
              << "verified: product satisfies (su_2) and the root refutes the "
                 "disjunction\n";
    return kExitTrue;
  }

  if (cmd_corr->parsed()) {
    su::FrameObserver observer;
    if (per_frame_report)
      observer = [&](const std::string& id, const su::Frame& frame,
                     const su::CorrespondenceReport&) {
        std::cout << su::report_line(id, su::classify_frame(frame, upset_cap))
                  << "\n";
      };
    su::CorrespondenceSummary summary;
    if (opt_enum->count() > 0) {
      summary = su::correspondence_over_enumerated(enum_points, upset_cap, observer);
    } else if (opt_random->count() > 0) {
      if (random_points < 1)
        throw su::Error("--random needs --points");
      summary = su::correspondence_over_random(random_count, random_points,
                                               random_points, seed, upset_cap,
                                               observer);
    } else {
      throw su::Error("correspondence needs --enumerate or --random");
    }
    std::cout << summary.frames << " frames, " << summary.agreements
              << " agree\n";
    if (summary.first_disagreement) {
      std::cout << "disagreement at " << summary.first_disagreement->frame_id
                << "\n";
      return kExitFalse;
    }
    return kExitTrue;
  }

  if (cmd_lemmas->parsed()) {
    bool all_ok = true;
    auto line = [&](bool ok, const std::string& what) {
      std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
      all_ok = all_ok && ok;
    };
    su::LemmaReport lemma1 = su::verify_lemma_su_aa();
    for (const auto& check : lemma1.checks)
      line(check.passed, "lemma1 " + check.name);
    for (int n = 1; n <= 3; ++n)
      line(su::verify_su_star(n), "su_star n=" + std::to_string(n));
    su::StructuralReport structural = su::check_structural_properties();
    line(structural.ok(), "structural properties (" +
                              std::to_string(structural.checks) + " checks)");
    for (const std::string& v : structural.violations)
      std::cout << "     " << v << "\n";
    auto suite = [&](const su::SuiteResult& r) {
      line(r.ok(), r.name + " (" + std::to_string(r.checks) + " checks)");
      for (const std::string& v : r.violations) std::cout << "     " << v << "\n";
    };
    suite(su::run_su1_suite(lemma_points));
    suite(su::run_union_of_unions_suite(lemma_points));
    suite(su::run_su2_implies_sun_suite(lemma_points));
    suite(su::run_containment_suite(containment_points, upset_cap));
    suite(su::run_product_suite(product_points));
    return all_ok ? kExitTrue : kExitFalse;
  }

  throw su::Error("no subcommand");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
