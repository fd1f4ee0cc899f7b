// Models over S4 frames, intuitionistic truth sets, frame validity, local
// consequence, and the bounded countermodel search for the SU frame class.
//
// Truth clauses: ||_|_|| = {},  ||p|| = V(p),  ||a & b|| = ||a|| * ||b||,
// ||a | b|| = ||a|| + ||b||,  ||a -> b|| = box(complement(||a||) + ||b||).
// Every truth set is an upset.
//
// Validity and consequence quantify over monotone valuations of exactly the
// variables occurring in the formulas at hand; assignments are enumerated in
// lexicographic order (variables sorted by name, upsets ascending), so the
// first refutation found is the minimal one.

#ifndef SU_SEMANTICS_HPP
#define SU_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su/formula.hpp"
#include "su/frame.hpp"

namespace su {

class Model {
 public:
  // Requires an S4 frame and upset values; variables absent from the map
  // denote the empty upset.
  Model(Frame frame, std::map<std::string, PointSet> valuation);

  const Frame& frame() const { return frame_; }
  const std::map<std::string, PointSet>& valuation() const { return valuation_; }
  PointSet value(const std::string& var) const;

 private:
  Frame frame_;
  std::map<std::string, PointSet> valuation_;
};

PointSet truth_set(const Model& model, const Formula& f);
bool satisfies(const Model& model, int w, const Formula& f);
bool satisfies_all(const Model& model, int w, const std::vector<Formula>& gamma);

// The minimal refuting valuation and point, if any.
struct Refutation {
  std::map<std::string, PointSet> valuation;
  int point;
};

std::optional<Refutation> find_refuting_valuation(
    const Frame& frame, const Formula& f,
    std::size_t upset_cap = kDefaultUpsetCap);

bool frame_validates(const Frame& frame, const Formula& f,
                     std::size_t upset_cap = kDefaultUpsetCap);

// Gamma entails alpha at every point of the frame under every monotone
// valuation.
bool consequence_on_frame(const Frame& frame, const std::vector<Formula>& gamma,
                          const Formula& alpha,
                          std::size_t upset_cap = kDefaultUpsetCap);

struct SearchBounds {
  int max_points = 4;
  std::size_t upset_cap = kDefaultUpsetCap;
  std::uint64_t seed = 0;  // reserved for randomized phases; the exhaustive
                           // search is deterministic and ignores it
};

struct SuCountermodel {
  Model model;
  int point;
};

// Exhaustive search over all labeled S4 frames with at most max_points
// points that satisfy (su_2), and all monotone valuations of the variables
// of f.  Returns the minimal witness (frame size, then enumeration order,
// then valuation order, then point index).  Absence of a result is not a
// validity proof: the search is a bounded semi-decision.
std::optional<SuCountermodel> find_su_countermodel(const Formula& f,
                                                   const SearchBounds& bounds);

}  // namespace su

#endif  // SU_SEMANTICS_HPP
