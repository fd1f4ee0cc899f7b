// The strong-union frame properties and the correspondence harness.
//
// z strongly unites x_0..x_{n-1} when z sees every x_i and, for each i,
// every successor of z is either seen from x_i or shares a successor with
// some other x_j.  (su_n) asks every n-tuple of successors of any point to
// have a strong union among that point's successors; (su) is all n at once
// and collapses to (su_2).

#ifndef SU_STRONG_UNION_HPP
#define SU_STRONG_UNION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su/frame.hpp"
#include "su/semantics.hpp"

namespace su {

// Requires S4 and nonempty xs; duplicates in xs are allowed.  The condition
// is invariant under permutations of xs.
bool strongly_unites(const Frame& frame, int z, const std::vector<int>& xs);

// Per-frame evaluator for callers checking many tuples on one frame; the
// diamond images of all principal upsets are precomputed once.
class StrongUnionEvaluator {
 public:
  explicit StrongUnionEvaluator(const Frame& frame);
  const Frame& frame() const { return *frame_; }
  bool unites(int z, const std::vector<int>& xs) const;
  // One box target per tuple position.
  std::vector<PointSet> targets(const std::vector<int>& xs) const;
  bool unites_with(int z, const std::vector<int>& xs,
                   const std::vector<PointSet>& targets) const;

 private:
  const Frame* frame_;
  std::vector<PointSet> dia_r_;
};

bool satisfies_su_n(const Frame& frame, int n);
bool satisfies_su2(const Frame& frame);
// (su) collapses to (su_2); satisfies_su delegates accordingly, while
// satisfies_su_n stays independent so the collapse itself is testable.
bool satisfies_su(const Frame& frame);

// The union property corresponding to the kp axiom: any two successors w, v
// of a point have a common successor u all of whose successors share a
// successor with w or with v.
bool satisfies_uni(const Frame& frame);

// First (w, x, y) in lexicographic order witnessing failure of (su_2):
// x, y are successors of w and no successor of w strongly unites them.
struct Su2Failure {
  int w, x, y;
};
std::optional<Su2Failure> find_su2_failure(const Frame& frame);

// The countermodel valuation for a genuine (su_2) failure witness:
//   V(p) = r_image({x})       V(r) = heyting_neg({x})
//   V(q) = r_image({y})       V(s) = heyting_neg({y})
// The returned model refutes su at w; this is verified before returning and
// a PostcheckError is raised otherwise (the reading would be wrong, which
// must surface, not be patched over).
Model build_su_countermodel(const Frame& frame, int w, int x, int y);

// Both routes of the correspondence, computed independently.
struct CorrespondenceReport {
  bool validates_su;
  bool satisfies_su2;
  bool agree;
};
CorrespondenceReport correspondence_check(const Frame& frame,
                                          std::size_t upset_cap = kDefaultUpsetCap);

// Frame classification used by the line-oriented report:
//   <frame-id> su2=<0|1> su=<0|1> uni=<0|1> kp=<0|1> sa=<0|1>
struct FrameClassification {
  bool su2, su, uni, kp, sa;
};
FrameClassification classify_frame(const Frame& frame,
                                   std::size_t upset_cap = kDefaultUpsetCap);
std::string report_line(const std::string& frame_id, const FrameClassification& c);

// --- harnesses ---------------------------------------------------------

struct Disagreement {
  std::string frame_id;
  Frame frame;
  CorrespondenceReport report;
};

struct CorrespondenceSummary {
  std::uint64_t frames = 0;
  std::uint64_t agreements = 0;
  std::optional<Disagreement> first_disagreement;
  bool all_agree() const { return frames == agreements; }
};

using FrameObserver =
    std::function<void(const std::string& id, const Frame& frame,
                       const CorrespondenceReport& report)>;

// Every labeled S4 frame with exactly n points, in enumeration order.
CorrespondenceSummary correspondence_over_enumerated(
    int n, std::size_t upset_cap = kDefaultUpsetCap,
    const FrameObserver& observer = {});

// `count` seeded random frames; frame i has min_points + (i mod span) points
// and seed `seed + i`.
CorrespondenceSummary correspondence_over_random(
    int count, int min_points, int max_points, std::uint64_t seed,
    std::size_t upset_cap = kDefaultUpsetCap, const FrameObserver& observer = {});

// --- exhaustive lemma suites --------------------------------------------

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Every S4 frame satisfies (su_1).
SuiteResult run_su1_suite(int max_points);
// u strongly unites [z, a] and z strongly unites xs imply u strongly unites
// xs ++ [a]; xs ranges over tuples of length 1..max_xs.
SuiteResult run_union_of_unions_suite(int max_points, int max_xs = 3);
// (su_2) implies (su_n) for n <= max_n, and (su_2) iff all of them.
SuiteResult run_su2_implies_sun_suite(int max_points, int max_n = 4);
// (su_2) implies validity of kp and sa; (Uni) iff validity of kp.
SuiteResult run_containment_suite(int max_points,
                                  std::size_t upset_cap = kDefaultUpsetCap);

}  // namespace su

#endif  // SU_STRONG_UNION_HPP
