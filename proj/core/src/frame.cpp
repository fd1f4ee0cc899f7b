#include "su/frame.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace su {

PointSet make_point_set(int size, std::initializer_list<int> members) {
  PointSet s(size);
  for (int m : members) s.set(m);
  return s;
}

std::vector<int> set_members(const PointSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

Frame::Frame(int size, const std::vector<std::pair<int, int>>& edges) {
  if (size < 1) throw PreconditionError("frame must have at least one point");
  rows_.assign(size, PointSet(size));
  for (auto [w, v] : edges) {
    if (w < 0 || w >= size || v < 0 || v >= size)
      throw PreconditionError("edge (" + std::to_string(w) + ", " +
                              std::to_string(v) + ") out of range for " +
                              std::to_string(size) + " points");
    rows_[w].set(v);
  }
}

Frame::Frame(std::vector<PointSet> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw PreconditionError("frame must have at least one point");
  for (const auto& row : rows_)
    if (row.size() != rows_.size())
      throw PreconditionError("successor row size does not match frame size");
}

void Frame::check_point(int w) const {
  if (w < 0 || w >= size())
    throw PreconditionError("point " + std::to_string(w) +
                            " out of range for " + std::to_string(size()) +
                            " points");
}

void Frame::check_set(const PointSet& xs) const {
  if (static_cast<int>(xs.size()) != size())
    throw PreconditionError("point set size " + std::to_string(xs.size()) +
                            " does not match frame size " +
                            std::to_string(size()));
}

void Frame::require_s4(const char* op) const {
  if (!is_s4())
    throw PreconditionError(std::string(op) + " requires an S4 frame");
}

bool Frame::related(int w, int v) const {
  check_point(w);
  check_point(v);
  return rows_[w].test(v);
}

const PointSet& Frame::successors(int w) const {
  check_point(w);
  return rows_[w];
}

PointSet Frame::universe() const {
  PointSet s(size());
  s.set();
  return s;
}

std::vector<std::pair<int, int>> Frame::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int w = 0; w < size(); ++w)
    for (int v : set_members(rows_[w])) out.emplace_back(w, v);
  return out;
}

PointSet Frame::r_image(const PointSet& xs) const {
  check_set(xs);
  PointSet out(size());
  for (auto x = xs.find_first(); x != PointSet::npos; x = xs.find_next(x))
    out |= rows_[x];
  return out;
}

PointSet Frame::diamond(const PointSet& xs) const {
  check_set(xs);
  PointSet out(size());
  for (int w = 0; w < size(); ++w)
    if (rows_[w].intersects(xs)) out.set(w);
  return out;
}

PointSet Frame::box(const PointSet& xs) const {
  check_set(xs);
  PointSet out(size());
  for (int w = 0; w < size(); ++w)
    if (rows_[w].is_subset_of(xs)) out.set(w);
  return out;
}

PointSet Frame::complement(const PointSet& xs) const {
  check_set(xs);
  return ~xs;
}

PointSet Frame::heyting_neg(const PointSet& xs) const {
  require_s4("heyting_neg");
  return box(complement(xs));
}

bool Frame::is_reflexive() const {
  for (int w = 0; w < size(); ++w)
    if (!rows_[w].test(w)) return false;
  return true;
}

bool Frame::is_transitive() const {
  for (int w = 0; w < size(); ++w)
    for (auto v = rows_[w].find_first(); v != PointSet::npos;
         v = rows_[w].find_next(v))
      if (!rows_[v].is_subset_of(rows_[w])) return false;
  return true;
}

Frame Frame::reflexive_transitive_closure() const {
  std::vector<PointSet> rows = rows_;
  const int n = size();
  for (int w = 0; w < n; ++w) rows[w].set(w);
  // Warshall over successor rows.
  for (int k = 0; k < n; ++k)
    for (int w = 0; w < n; ++w)
      if (rows[w].test(k)) rows[w] |= rows[k];
  return Frame(std::move(rows));
}

bool Frame::is_upset(const PointSet& xs) const {
  check_set(xs);
  require_s4("is_upset");
  for (auto x = xs.find_first(); x != PointSet::npos; x = xs.find_next(x))
    if (!rows_[x].is_subset_of(xs)) return false;
  return true;
}

std::vector<PointSet> Frame::upsets(std::size_t cap) const {
  require_s4("upsets");
  const int n = size();
  std::vector<PointSet> out;
  if (n <= 20) {
    // Small frames: filter bitmasks in ascending order.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      PointSet s(n, mask);
      if (!is_upset(s)) continue;
      if (out.size() >= cap)
        throw CapExceeded("upset count exceeds cap " + std::to_string(cap));
      out.push_back(std::move(s));
    }
    return out;
  }
  // Larger frames: depth-first point-by-point decision with propagation
  // (including x forces including all successors; excluding x forces
  // excluding all points that see x).
  PointSet in(n), out_set(n);
  std::vector<PointSet> seers(n, PointSet(n));
  for (int w = 0; w < n; ++w)
    for (auto v = rows_[w].find_first(); v != PointSet::npos;
         v = rows_[w].find_next(v))
      seers[v].set(w);

  struct Rec {
    const Frame* f;
    const std::vector<PointSet>* seers;
    std::vector<PointSet>* result;
    std::size_t cap;
    int n;

    void go(PointSet in, PointSet out_set) {
      int undecided = -1;
      for (int w = 0; w < n; ++w)
        if (!in.test(w) && !out_set.test(w)) {
          undecided = w;
          break;
        }
      if (undecided < 0) {
        if (result->size() >= cap)
          throw CapExceeded("upset count exceeds cap " + std::to_string(cap));
        result->push_back(in);
        return;
      }
      {
        PointSet in2 = in, out2 = out_set;
        out2 |= (*seers)[undecided];
        if (!in2.intersects(out2)) go(in2, out2);
      }
      {
        PointSet in2 = in, out2 = out_set;
        in2 |= f->rows_[undecided];
        if (!in2.intersects(out2)) go(in2, out2);
      }
    }
  };
  Rec rec{this, &seers, &out, cap, n};
  rec.go(in, out_set);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet Frame::roots() const {
  require_s4("roots");
  PointSet out(size());
  for (int w = 0; w < size(); ++w)
    if (rows_[w].count() == static_cast<std::size_t>(size())) out.set(w);
  return out;
}

PointSet Frame::ends() const {
  require_s4("ends");
  PointSet out(size());
  for (int w = 0; w < size(); ++w) {
    bool maximal = true;
    for (auto v = rows_[w].find_first(); v != PointSet::npos;
         v = rows_[w].find_next(v))
      if (!rows_[v].test(w)) {
        maximal = false;
        break;
      }
    if (maximal) out.set(w);
  }
  return out;
}

PointSet Frame::end_of(int w) const {
  check_point(w);
  return ends() & rows_[w];
}

GeneratedSubframe generated_subframe(const Frame& frame, int w) {
  if (!frame.is_s4())
    throw PreconditionError("generated_subframe requires an S4 frame");
  std::vector<int> points = set_members(frame.successors(w));
  const int m = static_cast<int>(points.size());
  std::vector<int> where(frame.size(), -1);
  for (int i = 0; i < m; ++i) where[points[i]] = i;
  std::vector<PointSet> rows(m, PointSet(m));
  for (int i = 0; i < m; ++i)
    for (int v : set_members(frame.successors(points[i])))
      rows[i].set(where[v]);  // successors of a successor stay inside
  return GeneratedSubframe{Frame(std::move(rows)), std::move(points)};
}

S4FrameEnumerator::S4FrameEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw PreconditionError("enumeration needs at least one point");
  if (n > cap)
    throw CapExceeded("frame enumeration for " + std::to_string(n) +
                      " points exceeds cap " + std::to_string(cap));
  limit_ = std::uint64_t{1} << (n * (n - 1));
}

std::optional<Frame> S4FrameEnumerator::next() {
  const int n = n_;
  for (; mask_ < limit_; ++mask_) {
    std::vector<PointSet> rows(n, PointSet(n));
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      rows[i].set(i);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (mask_ >> bit & 1) rows[i].set(j);
        ++bit;
      }
    }
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (auto v = rows[i].find_first(); v != PointSet::npos;
           v = rows[i].find_next(v))
        if (!rows[v].is_subset_of(rows[i])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    ++mask_;
    return Frame(std::move(rows));
  }
  return std::nullopt;
}

Frame random_s4_frame(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionError("random frame needs at least one point");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n));
  const std::uint64_t density = 10 + rng() % 51;  // percent, 10..60
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (rng() % 100 < density) edges.emplace_back(i, j);
    }
  return Frame(n, edges).reflexive_transitive_closure();
}

}  // namespace su
