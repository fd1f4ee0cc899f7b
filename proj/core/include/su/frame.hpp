// Finite Kripke frames with the set operators used throughout:
//
//   r_image(X)   points seen from X        { w | exists x in X, xRw }
//   diamond(X)   points seeing into X      { w | exists x in X, wRx }
//   box(X)       points seeing only X      { w | forall v, wRv => v in X }
//   complement   W \ X
//   heyting_neg  box(complement(X))        { w | no successor of w lies in X }
//
// Frames are immutable after construction.  S4 (reflexive + transitive) is a
// queryable property, not a construction invariant; operations that need S4
// say so and throw PreconditionError otherwise.

#ifndef SU_FRAME_HPP
#define SU_FRAME_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "su/errors.hpp"

namespace su {

// A subset of a frame's points.  size() always equals the frame size.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

PointSet make_point_set(int size, std::initializer_list<int> members);
std::vector<int> set_members(const PointSet& s);

inline constexpr std::size_t kDefaultUpsetCap = std::size_t{1} << 20;
inline constexpr int kDefaultEnumerationCap = 5;

class Frame {
 public:
  // Relation given as ordered pairs; pairs must lie in [0,size)^2.
  Frame(int size, const std::vector<std::pair<int, int>>& edges);
  // Relation given as successor rows; rows[w].size() must equal size.
  explicit Frame(std::vector<PointSet> rows);

  int size() const { return static_cast<int>(rows_.size()); }
  bool related(int w, int v) const;
  const PointSet& successors(int w) const;
  PointSet universe() const;  // the full point set W
  PointSet empty_set() const { return PointSet(size()); }
  std::vector<std::pair<int, int>> edges() const;

  PointSet r_image(const PointSet& xs) const;
  PointSet diamond(const PointSet& xs) const;
  PointSet box(const PointSet& xs) const;
  PointSet complement(const PointSet& xs) const;
  // box(complement(xs)); the result is an upset whenever the frame is S4
  // (xs itself need not be one).  Requires S4.
  PointSet heyting_neg(const PointSet& xs) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_s4() const { return is_reflexive() && is_transitive(); }
  // Least reflexive-transitive extension.
  Frame reflexive_transitive_closure() const;

  // Requires S4.
  bool is_upset(const PointSet& xs) const;
  // All upsets in ascending numeric order of their bitmask.  Throws
  // CapExceeded when there are more than `cap`.  Requires S4.
  std::vector<PointSet> upsets(std::size_t cap = kDefaultUpsetCap) const;

  // Points seeing every point / points whose successors all see them back.
  // Require S4.
  PointSet roots() const;
  PointSet ends() const;
  PointSet end_of(int w) const;

 private:
  void check_point(int w) const;
  void check_set(const PointSet& xs) const;
  void require_s4(const char* op) const;

  std::vector<PointSet> rows_;
};

// Restriction of `frame` to r_image({w}), with points[i] giving the original
// index of subframe point i (ascending).  Requires S4.
struct GeneratedSubframe {
  Frame frame;
  std::vector<int> points;
};
GeneratedSubframe generated_subframe(const Frame& frame, int w);

// Streams every reflexive-transitive relation on n labeled points exactly
// once, in ascending order of the off-diagonal edge bitmask (pairs (i,j),
// i != j, row-major).  Throws CapExceeded when n exceeds `cap`.
class S4FrameEnumerator {
 public:
  explicit S4FrameEnumerator(int n, int cap = kDefaultEnumerationCap);
  std::optional<Frame> next();

 private:
  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t limit_;
};

// Deterministic per (n, seed): a random relation with seed-derived edge
// density, closed under reflexivity and transitivity.
Frame random_s4_frame(int n, std::uint64_t seed);

}  // namespace su

#endif  // SU_FRAME_HPP
