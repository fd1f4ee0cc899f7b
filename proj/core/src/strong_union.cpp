#include "su/strong_union.hpp"

#include <algorithm>
#include <functional>

namespace su {

StrongUnionEvaluator::StrongUnionEvaluator(const Frame& frame)
    : frame_(&frame) {
  // dia_r_[x] = diamond(r_image({x})): the points sharing a successor with x.
  dia_r_.reserve(frame.size());
  for (int x = 0; x < frame.size(); ++x)
    dia_r_.push_back(frame.diamond(frame.successors(x)));
}

std::vector<PointSet> StrongUnionEvaluator::targets(
    const std::vector<int>& xs) const {
  // Position i must box r_image({x_i}) plus the diamonds of every other
  // position.
  const std::size_t k = xs.size();
  std::vector<PointSet> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    PointSet t = frame_->successors(xs[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) t |= dia_r_[xs[j]];
    out.push_back(std::move(t));
  }
  return out;
}

bool StrongUnionEvaluator::unites_with(int z, const std::vector<int>& xs,
                                       const std::vector<PointSet>& tgt) const {
  const PointSet& succ = frame_->successors(z);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!succ.test(xs[i])) return false;
    if (!succ.is_subset_of(tgt[i])) return false;
  }
  return true;
}

bool StrongUnionEvaluator::unites(int z, const std::vector<int>& xs) const {
  return unites_with(z, xs, targets(xs));
}

namespace {

// Adds tuple memoization on top of the evaluator.  Sound because the
// strong-union condition is permutation-invariant; callers pass sorted
// tuples when they want sharing.
class SuChecker {
 public:
  explicit SuChecker(const Frame& frame) : eval_(frame) {}

  const Frame& frame() const { return eval_.frame(); }
  std::vector<PointSet> targets(const std::vector<int>& xs) const {
    return eval_.targets(xs);
  }
  bool unites(int z, const std::vector<int>& xs,
              const std::vector<PointSet>& tgt) const {
    return eval_.unites_with(z, xs, tgt);
  }

  const PointSet& unite_set(const std::vector<int>& xs) {
    auto it = memo_.find(xs);
    if (it != memo_.end()) return it->second;
    std::vector<PointSet> tgt = eval_.targets(xs);
    PointSet zs(frame().size());
    for (int z = 0; z < frame().size(); ++z)
      if (eval_.unites_with(z, xs, tgt)) zs.set(z);
    return memo_.emplace(xs, std::move(zs)).first->second;
  }

 private:
  StrongUnionEvaluator eval_;
  std::map<std::vector<int>, PointSet> memo_;
};

void require_s4_frame(const Frame& frame, const char* op) {
  if (!frame.is_s4())
    throw PreconditionError(std::string(op) + " requires an S4 frame");
}

// Visits every nondecreasing tuple of the given length over `members`.
template <class Body>
bool each_sorted_tuple(const std::vector<int>& members, int length, Body body) {
  std::vector<int> xs(length);
  std::function<bool(int, std::size_t)> rec = [&](int pos, std::size_t start) {
    if (pos == length) return body(xs);
    for (std::size_t i = start; i < members.size(); ++i) {
      xs[pos] = members[i];
      if (!rec(pos + 1, i)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

std::vector<bool> su_n_profile(const Frame& frame, int max_n) {
  SuChecker checker(frame);
  std::vector<bool> profile(max_n + 1, true);
  for (int n = 1; n <= max_n; ++n) {
    bool holds = true;
    for (int w = 0; w < frame.size() && holds; ++w) {
      std::vector<int> members = set_members(frame.successors(w));
      const PointSet& succ = frame.successors(w);
      holds = each_sorted_tuple(members, n, [&](const std::vector<int>& xs) {
        return checker.unite_set(xs).intersects(succ);
      });
    }
    profile[n] = holds;
  }
  return profile;
}

}  // namespace

bool strongly_unites(const Frame& frame, int z, const std::vector<int>& xs) {
  require_s4_frame(frame, "strongly_unites");
  if (xs.empty())
    throw PreconditionError("strongly_unites needs a nonempty tuple");
  if (z < 0 || z >= frame.size())
    throw PreconditionError("point " + std::to_string(z) + " out of range");
  for (int x : xs)
    if (x < 0 || x >= frame.size())
      throw PreconditionError("point " + std::to_string(x) + " out of range");
  SuChecker checker(frame);
  return checker.unites(z, xs, checker.targets(xs));
}

bool satisfies_su_n(const Frame& frame, int n) {
  require_s4_frame(frame, "satisfies_su_n");
  if (n < 1) throw PreconditionError("satisfies_su_n needs n >= 1");
  SuChecker checker(frame);
  for (int w = 0; w < frame.size(); ++w) {
    std::vector<int> members = set_members(frame.successors(w));
    const PointSet& succ = frame.successors(w);
    bool ok = each_sorted_tuple(members, n, [&](const std::vector<int>& xs) {
      return checker.unite_set(xs).intersects(succ);
    });
    if (!ok) return false;
  }
  return true;
}

bool satisfies_su2(const Frame& frame) { return satisfies_su_n(frame, 2); }

bool satisfies_su(const Frame& frame) { return satisfies_su2(frame); }

bool satisfies_uni(const Frame& frame) {
  require_s4_frame(frame, "satisfies_uni");
  std::vector<PointSet> dia_r;
  dia_r.reserve(frame.size());
  for (int x = 0; x < frame.size(); ++x)
    dia_r.push_back(frame.diamond(frame.successors(x)));
  for (int s = 0; s < frame.size(); ++s) {
    std::vector<int> succ = set_members(frame.successors(s));
    for (int w : succ)
      for (int v : succ) {
        bool found = false;
        PointSet allowed = dia_r[w] | dia_r[v];
        for (int u : succ) {
          const PointSet& su = frame.successors(u);
          if (su.test(w) && su.test(v) && su.is_subset_of(allowed)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  }
  return true;
}

std::optional<Su2Failure> find_su2_failure(const Frame& frame) {
  require_s4_frame(frame, "find_su2_failure");
  SuChecker checker(frame);
  for (int w = 0; w < frame.size(); ++w) {
    const PointSet& succ = frame.successors(w);
    std::vector<int> members = set_members(succ);
    for (int x : members)
      for (int y : members) {
        std::vector<int> xs{std::min(x, y), std::max(x, y)};
        if (!checker.unite_set(xs).intersects(succ))
          return Su2Failure{w, x, y};
      }
  }
  return std::nullopt;
}

Model build_su_countermodel(const Frame& frame, int w, int x, int y) {
  require_s4_frame(frame, "build_su_countermodel");
  for (int p : {w, x, y})
    if (p < 0 || p >= frame.size())
      throw PreconditionError("point " + std::to_string(p) + " out of range");
  if (!frame.related(w, x) || !frame.related(w, y))
    throw PreconditionError("build_su_countermodel: x and y must be successors of w");
  {
    SuChecker checker(frame);
    std::vector<int> xs{std::min(x, y), std::max(x, y)};
    if (checker.unite_set(xs).intersects(frame.successors(w)))
      throw PreconditionError(
          "build_su_countermodel: a successor of w strongly unites x and y, "
          "so (w, x, y) is not a failure witness");
  }
  PointSet singleton_x = make_point_set(frame.size(), {x});
  PointSet singleton_y = make_point_set(frame.size(), {y});
  std::map<std::string, PointSet> valuation{
      {"p", frame.r_image(singleton_x)},
      {"q", frame.r_image(singleton_y)},
      {"r", frame.heyting_neg(singleton_x)},
      {"s", frame.heyting_neg(singleton_y)},
  };
  Model model(frame, std::move(valuation));
  if (satisfies(model, w, axiom(AxiomName::Su)))
    throw PostcheckError(
        "build_su_countermodel: constructed valuation fails to refute su at "
        "w; the valuation reading is wrong");
  return model;
}

CorrespondenceReport correspondence_check(const Frame& frame,
                                          std::size_t upset_cap) {
  require_s4_frame(frame, "correspondence_check");
  bool validates = frame_validates(frame, axiom(AxiomName::Su), upset_cap);
  bool su2 = satisfies_su2(frame);
  return CorrespondenceReport{validates, su2, validates == su2};
}

FrameClassification classify_frame(const Frame& frame, std::size_t upset_cap) {
  FrameClassification c;
  c.su2 = satisfies_su2(frame);
  c.su = satisfies_su(frame);
  c.uni = satisfies_uni(frame);
  c.kp = frame_validates(frame, axiom(AxiomName::Kp), upset_cap);
  c.sa = frame_validates(frame, axiom(AxiomName::Sa), upset_cap);
  return c;
}

std::string report_line(const std::string& frame_id,
                        const FrameClassification& c) {
  auto bit = [](bool b) { return b ? '1' : '0'; };
  std::string line = frame_id;
  line += " su2=";
  line += bit(c.su2);
  line += " su=";
  line += bit(c.su);
  line += " uni=";
  line += bit(c.uni);
  line += " kp=";
  line += bit(c.kp);
  line += " sa=";
  line += bit(c.sa);
  return line;
}

namespace {

void record(CorrespondenceSummary& summary, const std::string& id,
            const Frame& frame, std::size_t upset_cap,
            const FrameObserver& observer) {
  CorrespondenceReport report = correspondence_check(frame, upset_cap);
  ++summary.frames;
  if (report.agree)
    ++summary.agreements;
  else if (!summary.first_disagreement)
    summary.first_disagreement = Disagreement{id, frame, report};
  if (observer) observer(id, frame, report);
}

}  // namespace

CorrespondenceSummary correspondence_over_enumerated(int n,
                                                     std::size_t upset_cap,
                                                     const FrameObserver& observer) {
  CorrespondenceSummary summary;
  S4FrameEnumerator frames(n, std::max(n, kDefaultEnumerationCap));
  std::uint64_t index = 0;
  while (auto frame = frames.next()) {
    record(summary, "e" + std::to_string(n) + ":" + std::to_string(index),
           *frame, upset_cap, observer);
    ++index;
  }
  return summary;
}

CorrespondenceSummary correspondence_over_random(int count, int min_points,
                                                 int max_points,
                                                 std::uint64_t seed,
                                                 std::size_t upset_cap,
                                                 const FrameObserver& observer) {
  if (min_points < 1 || max_points < min_points)
    throw PreconditionError("bad point range for random correspondence run");
  CorrespondenceSummary summary;
  const int span = max_points - min_points + 1;
  for (int i = 0; i < count; ++i) {
    int n = min_points + i % span;
    Frame frame = random_s4_frame(n, seed + static_cast<std::uint64_t>(i));
    record(summary, "r" + std::to_string(i), frame, upset_cap, observer);
  }
  return summary;
}

SuiteResult run_su1_suite(int max_points) {
  SuiteResult result{"su1", 0, {}};
  for (int n = 1; n <= max_points; ++n) {
    S4FrameEnumerator frames(n, std::max(n, kDefaultEnumerationCap));
    std::uint64_t index = 0;
    while (auto frame = frames.next()) {
      ++result.checks;
      if (!satisfies_su_n(*frame, 1))
        result.violations.push_back("frame e" + std::to_string(n) + ":" +
                                    std::to_string(index) + " fails (su_1)");
      ++index;
    }
  }
  return result;
}

SuiteResult run_union_of_unions_suite(int max_points, int max_xs) {
  SuiteResult result{"union_of_unions", 0, {}};
  for (int n = 1; n <= max_points; ++n) {
    S4FrameEnumerator frames(n, std::max(n, kDefaultEnumerationCap));
    std::uint64_t index = 0;
    while (auto frame = frames.next()) {
      SuChecker checker(*frame);
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      for (int len = 1; len <= max_xs; ++len) {
        each_sorted_tuple(all, len, [&](const std::vector<int>& xs) {
          PointSet zs = checker.unite_set(xs);
          for (int z : set_members(zs))
            for (int a = 0; a < n; ++a) {
              std::vector<int> pair{std::min(z, a), std::max(z, a)};
              PointSet us = checker.unite_set(pair);
              if (us.none()) continue;
              std::vector<int> conclusion = xs;
              conclusion.push_back(a);
              std::sort(conclusion.begin(), conclusion.end());
              const PointSet& target = checker.unite_set(conclusion);
              for (int u : set_members(us)) {
                ++result.checks;
                if (!target.test(u))
                  result.violations.push_back(
                      "frame e" + std::to_string(n) + ":" +
                      std::to_string(index) + ": u=" + std::to_string(u) +
                      " unites [z,a] and z unites xs but u does not unite "
                      "xs++[a]");
              }
            }
          return true;
        });
      }
      ++index;
    }
  }
  return result;
}

SuiteResult run_su2_implies_sun_suite(int max_points, int max_n) {
  SuiteResult result{"su2_implies_sun", 0, {}};
  for (int n = 1; n <= max_points; ++n) {
    S4FrameEnumerator frames(n, std::max(n, kDefaultEnumerationCap));
    std::uint64_t index = 0;
    while (auto frame = frames.next()) {
      std::vector<bool> profile = su_n_profile(*frame, max_n);
      bool all = true;
      for (int k = 1; k <= max_n; ++k) all = all && profile[k];
      ++result.checks;
      if (profile[2] && !all)
        result.violations.push_back("frame e" + std::to_string(n) + ":" +
                                    std::to_string(index) +
                                    " satisfies (su_2) but not every (su_n)");
      ++result.checks;
      if (profile[2] != all)
        result.violations.push_back("frame e" + std::to_string(n) + ":" +
                                    std::to_string(index) +
                                    " breaks (su_2) <=> (su)");
      ++index;
    }
  }
  return result;
}

SuiteResult run_containment_suite(int max_points, std::size_t upset_cap) {
  SuiteResult result{"containments", 0, {}};
  const Formula kp = axiom(AxiomName::Kp);
  const Formula sa = axiom(AxiomName::Sa);
  for (int n = 1; n <= max_points; ++n) {
    S4FrameEnumerator frames(n, std::max(n, kDefaultEnumerationCap));
    std::uint64_t index = 0;
    while (auto frame = frames.next()) {
      const std::string id = "e" + std::to_string(n) + ":" + std::to_string(index);
      bool su2 = satisfies_su2(*frame);
      bool validates_kp = frame_validates(*frame, kp, upset_cap);
      ++result.checks;
      if (su2 && !validates_kp)
        result.violations.push_back("frame " + id + " satisfies (su_2) but refutes kp");
      ++result.checks;
      if (su2 && !frame_validates(*frame, sa, upset_cap))
        result.violations.push_back("frame " + id + " satisfies (su_2) but refutes sa");
      ++result.checks;
      if (satisfies_uni(*frame) != validates_kp)
        result.violations.push_back("frame " + id + " breaks (Uni) <=> kp");
      ++index;
    }
  }
  return result;
}

}  // namespace su
