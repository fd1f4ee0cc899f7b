// Medvedev frames, connected products, hereditary union functions, and the
// disjunction-property witness builder.

#ifndef SU_CONSTRUCTIONS_HPP
#define SU_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "su/formula.hpp"
#include "su/frame.hpp"
#include "su/semantics.hpp"
#include "su/strong_union.hpp"

namespace su {

inline constexpr int kDefaultMedvedevCap = 6;

// The frame of nonempty subsets of a k-element ground set ordered by
// reverse inclusion.  Point i encodes the subset with bitmask i + 1, so
// points are in ascending bitmask order and wRv iff mask(w) is a superset
// of mask(v).
struct MedvedevFrame {
  int ground_size;
  Frame frame;

  unsigned mask_of(int point) const { return static_cast<unsigned>(point) + 1; }
  int point_of(unsigned mask) const { return static_cast<int>(mask) - 1; }
};

MedvedevFrame medvedev(int k, int cap = kDefaultMedvedevCap);

// For all nonempty w, v subsets of the ground set and nonempty t inside
// w + v: t lies in w, or in v, or t = w' + v' for some nonempty w' inside w
// and v' inside v.  Checked exhaustively.
bool check_star_property(int k, int cap = kDefaultMedvedevCap);

// Connected product: the disjoint union of both frames plus one pair point
// for every (w1, w2), related to everything either component sees and to
// pairs of successors.  Point layout: the W1 block, then the W2 block, then
// pairs in row-major order.
class ConnectedProduct {
 public:
  ConnectedProduct(const Frame& f1, const Frame& f2);

  const Frame& frame() const { return frame_; }
  int size1() const { return n1_; }
  int size2() const { return n2_; }

  int inj1(int w1) const;
  int inj2(int w2) const;
  int pair(int w1, int w2) const;

  bool is_pair(int point) const { return point >= n1_ + n2_; }
  // For a pair point, its (w1, w2) coordinates.
  std::pair<int, int> coords(int point) const;

  // "# pointmap ..." comment lines for the frame file writer.
  std::vector<std::string> pointmap_comments() const;

 private:
  int n1_, n2_;
  Frame frame_;
};

// Partial map on point pairs of `base`.  The Def-13 conditions are checked
// by the predicates below, not at construction.
struct HereditaryUnionMap {
  Frame base;
  std::map<std::pair<int, int>, int> map;
};

// dom(f) closed under componentwise successors, f(w,v) sees w and v, and
// every successor of f(w,v) is seen from w, seen from v, or is f(w',v') for
// successors w' of w and v' of v.
bool is_hereditary_union_function(const HereditaryUnionMap& h);
// Componentwise monotone: wRw' and vRv' imply f(w,v) R f(w',v').
bool is_normal(const HereditaryUnionMap& h);

// The map (inj1(w1), inj2(w2)) -> pair(w1, w2) inside a connected product.
HereditaryUnionMap identity_union_map(const ConnectedProduct& product);

// A certified failure of alpha | beta on a frame in the SU class.
struct DpWitness {
  Model product_model;
  int root;
  Formula alpha;
  Formula beta;
  ConnectedProduct product;
};

// Requires: both frames satisfy (su_2); r1 is a root of m1's frame refuting
// alpha; r2 a root of m2's frame refuting beta.  Builds the connected
// product with the embedded union valuation (pair points never satisfy a
// variable), then re-verifies that the product satisfies (su_2) and that the
// root pair refutes alpha | beta.  Every precondition and post-check failure
// is reported distinctly.
DpWitness dp_witness(const Model& m1, int r1, const Formula& alpha,
                     const Model& m2, int r2, const Formula& beta);

// Connected-product law suite over all ordered pairs of enumerated S4 frames
// with at most max_points points: embedding laws, roots, ends, generated
// subframes, strong-union transfer, the identity hereditary union map, and
// preservation of (su_n) for n <= max_n.
SuiteResult run_product_suite(int max_points, int max_n = 3);

std::vector<std::string> medvedev_pointmap_comments(const MedvedevFrame& m);

}  // namespace su

#endif  // SU_CONSTRUCTIONS_HPP
