#include "su/constructions.hpp"

#include <algorithm>
#include <functional>

namespace su {

MedvedevFrame medvedev(int k, int cap) {
  if (k < 1) throw PreconditionError("medvedev ground set must be nonempty");
  if (k > cap)
    throw CapExceeded("medvedev ground size " + std::to_string(k) +
                      " exceeds cap " + std::to_string(cap));
  const int n = (1 << k) - 1;
  std::vector<PointSet> rows(n, PointSet(n));
  for (int a = 0; a < n; ++a) {
    const unsigned mask_a = static_cast<unsigned>(a) + 1;
    for (int b = 0; b < n; ++b) {
      const unsigned mask_b = static_cast<unsigned>(b) + 1;
      if ((mask_b & ~mask_a) == 0) rows[a].set(b);  // superset relation
    }
  }
  return MedvedevFrame{k, Frame(std::move(rows))};
}

bool check_star_property(int k, int cap) {
  if (k < 1) throw PreconditionError("star property needs a nonempty ground set");
  if (k > cap)
    throw CapExceeded("star property ground size " + std::to_string(k) +
                      " exceeds cap " + std::to_string(cap));
  const unsigned top = (1u << k) - 1;
  for (unsigned w = 1; w <= top; ++w)
    for (unsigned v = 1; v <= top; ++v) {
      const unsigned wv = w | v;
      // Nonempty subsets t of w + v.
      for (unsigned t = wv; t != 0; t = (t - 1) & wv) {
        if ((t & ~w) == 0) continue;  // t inside w
        if ((t & ~v) == 0) continue;  // t inside v
        bool found = false;
        for (unsigned wp = w; wp != 0 && !found; wp = (wp - 1) & w)
          for (unsigned vp = v; vp != 0; vp = (vp - 1) & v)
            if ((wp | vp) == t) {
              found = true;
              break;
            }
        if (!found) return false;
      }
    }
  return true;
}

ConnectedProduct::ConnectedProduct(const Frame& f1, const Frame& f2)
    : n1_(f1.size()), n2_(f2.size()), frame_(1, {}) {
  if (!f1.is_s4() || !f2.is_s4())
    throw PreconditionError("connected product requires S4 frames");
  const int total = n1_ + n2_ + n1_ * n2_;
  std::vector<PointSet> rows(total, PointSet(total));
  for (int w = 0; w < n1_; ++w)
    for (int v : set_members(f1.successors(w))) rows[w].set(v);
  for (int w = 0; w < n2_; ++w)
    for (int v : set_members(f2.successors(w))) rows[n1_ + w].set(n1_ + v);
  for (int w1 = 0; w1 < n1_; ++w1)
    for (int w2 = 0; w2 < n2_; ++w2) {
      PointSet& row = rows[n1_ + n2_ + w1 * n2_ + w2];
      for (int t : set_members(f1.successors(w1))) row.set(t);
      for (int t : set_members(f2.successors(w2))) row.set(n1_ + t);
      for (int v1 : set_members(f1.successors(w1)))
        for (int v2 : set_members(f2.successors(w2)))
          row.set(n1_ + n2_ + v1 * n2_ + v2);
    }
  frame_ = Frame(std::move(rows));
}

int ConnectedProduct::inj1(int w1) const {
  if (w1 < 0 || w1 >= n1_)
    throw PreconditionError("inj1: point out of range");
  return w1;
}

int ConnectedProduct::inj2(int w2) const {
  if (w2 < 0 || w2 >= n2_)
    throw PreconditionError("inj2: point out of range");
  return n1_ + w2;
}

int ConnectedProduct::pair(int w1, int w2) const {
  if (w1 < 0 || w1 >= n1_ || w2 < 0 || w2 >= n2_)
    throw PreconditionError("pair: point out of range");
  return n1_ + n2_ + w1 * n2_ + w2;
}

std::pair<int, int> ConnectedProduct::coords(int point) const {
  if (!is_pair(point))
    throw PreconditionError("coords: not a pair point");
  int k = point - n1_ - n2_;
  return {k / n2_, k % n2_};
}

std::vector<std::string> ConnectedProduct::pointmap_comments() const {
  std::vector<std::string> out;
  for (int w = 0; w < n1_; ++w)
    out.push_back("# pointmap " + std::to_string(w) + " = left " +
                  std::to_string(w));
  for (int w = 0; w < n2_; ++w)
    out.push_back("# pointmap " + std::to_string(n1_ + w) + " = right " +
                  std::to_string(w));
  for (int w1 = 0; w1 < n1_; ++w1)
    for (int w2 = 0; w2 < n2_; ++w2)
      out.push_back("# pointmap " + std::to_string(pair(w1, w2)) + " = pair (" +
                    std::to_string(w1) + ", " + std::to_string(w2) + ")");
  return out;
}

std::vector<std::string> medvedev_pointmap_comments(const MedvedevFrame& m) {
  std::vector<std::string> out;
  const int n = m.frame.size();
  for (int p = 0; p < n; ++p) {
    unsigned mask = m.mask_of(p);
    std::string elems;
    for (int e = 0; e < m.ground_size; ++e)
      if (mask >> e & 1) {
        if (!elems.empty()) elems += ",";
        elems += std::to_string(e + 1);
      }
    out.push_back("# pointmap " + std::to_string(p) + " = {" + elems + "}");
  }
  return out;
}

bool is_hereditary_union_function(const HereditaryUnionMap& h) {
  if (!h.base.is_s4())
    throw PreconditionError("hereditary union function requires an S4 base");
  const Frame& f = h.base;
  for (const auto& [wv, out] : h.map) {
    auto [w, v] = wv;
    // Domain closed under componentwise successors.
    for (int wp : set_members(f.successors(w)))
      for (int vp : set_members(f.successors(v)))
        if (!h.map.count({wp, vp})) return false;
    if (!f.related(out, w) || !f.related(out, v)) return false;
    for (int t : set_members(f.successors(out))) {
      if (f.related(w, t) || f.related(v, t)) continue;
      bool found = false;
      for (int wp : set_members(f.successors(w))) {
        for (int vp : set_members(f.successors(v))) {
          auto it = h.map.find({wp, vp});
          if (it != h.map.end() && it->second == t) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool is_normal(const HereditaryUnionMap& h) {
  if (!h.base.is_s4())
    throw PreconditionError("is_normal requires an S4 base");
  const Frame& f = h.base;
  for (const auto& [wv, out] : h.map)
    for (const auto& [wv2, out2] : h.map) {
      if (f.related(wv.first, wv2.first) && f.related(wv.second, wv2.second) &&
          !f.related(out, out2))
        return false;
    }
  return true;
}

HereditaryUnionMap identity_union_map(const ConnectedProduct& product) {
  HereditaryUnionMap h{product.frame(), {}};
  for (int w1 = 0; w1 < product.size1(); ++w1)
    for (int w2 = 0; w2 < product.size2(); ++w2)
      h.map[{product.inj1(w1), product.inj2(w2)}] = product.pair(w1, w2);
  return h;
}

namespace {

PointSet embed(const PointSet& xs, int offset, int total) {
  PointSet out(total);
  for (auto v = xs.find_first(); v != PointSet::npos; v = xs.find_next(v))
    out.set(offset + static_cast<int>(v));
  return out;
}

}  // namespace

DpWitness dp_witness(const Model& m1, int r1, const Formula& alpha,
                     const Model& m2, int r2, const Formula& beta) {
  if (!satisfies_su2(m1.frame()))
    throw PreconditionError("dp_witness: first frame does not satisfy (su_2)");
  if (!satisfies_su2(m2.frame()))
    throw PreconditionError("dp_witness: second frame does not satisfy (su_2)");
  if (r1 < 0 || r1 >= m1.frame().size() || !m1.frame().roots().test(r1))
    throw PreconditionError("dp_witness: r1 is not a root of the first frame");
  if (r2 < 0 || r2 >= m2.frame().size() || !m2.frame().roots().test(r2))
    throw PreconditionError("dp_witness: r2 is not a root of the second frame");
  if (satisfies(m1, r1, alpha))
    throw PreconditionError("dp_witness: r1 does not refute alpha in the first model");
  if (satisfies(m2, r2, beta))
    throw PreconditionError("dp_witness: r2 does not refute beta in the second model");

  ConnectedProduct product(m1.frame(), m2.frame());
  const int total = product.frame().size();
  std::map<std::string, PointSet> valuation;
  for (const auto& [var, val] : m1.valuation())
    valuation[var] = embed(val, 0, total);
  for (const auto& [var, val] : m2.valuation()) {
    PointSet right = embed(val, m1.frame().size(), total);
    auto it = valuation.find(var);
    if (it == valuation.end())
      valuation[var] = std::move(right);
    else
      it->second |= right;
  }
  Model model(product.frame(), std::move(valuation));

  if (!satisfies_su2(product.frame()))
    throw PostcheckError("dp_witness: product frame fails (su_2)");
  const int root = product.pair(r1, r2);
  if (satisfies(model, root, Formula::disj(alpha, beta)))
    throw PostcheckError("dp_witness: root pair fails to refute alpha | beta");
  return DpWitness{std::move(model), root, alpha, beta, std::move(product)};
}

// --- product law suite ---------------------------------------------------

namespace {

template <class Body>
void each_sorted_tuple_over(const std::vector<int>& members, int length,
                            Body body) {
  std::vector<int> xs(length);
  std::function<void(int, std::size_t)> rec = [&](int pos, std::size_t start) {
    if (pos == length) {
      body(xs);
      return;
    }
    for (std::size_t i = start; i < members.size(); ++i) {
      xs[pos] = members[i];
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
}

std::vector<Frame> enumerate_frames_upto(int max_points) {
  std::vector<Frame> out;
  for (int n = 1; n <= max_points; ++n) {
    S4FrameEnumerator frames(n, std::max(n, kDefaultEnumerationCap));
    while (auto f = frames.next()) out.push_back(std::move(*f));
  }
  return out;
}

}  // namespace

SuiteResult run_product_suite(int max_points, int max_n) {
  SuiteResult result{"connected_product", 0, {}};
  std::vector<Frame> frames = enumerate_frames_upto(max_points);

  std::vector<std::vector<bool>> su_profiles;
  su_profiles.reserve(frames.size());
  for (const Frame& f : frames) {
    std::vector<bool> profile(max_n + 1, true);
    for (int m = 1; m <= max_n; ++m) profile[m] = satisfies_su_n(f, m);
    su_profiles.push_back(std::move(profile));
  }

  auto fail = [&](std::size_t i, std::size_t j, const std::string& what) {
    result.violations.push_back("product " + std::to_string(i) + " x " +
                                std::to_string(j) + ": " + what);
  };

  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = 0; j < frames.size(); ++j) {
      const Frame& f1 = frames[i];
      const Frame& f2 = frames[j];
      ConnectedProduct product(f1, f2);
      const Frame& pf = product.frame();
      const int n1 = f1.size(), n2 = f2.size(), total = pf.size();

      ++result.checks;
      if (total != n1 + n2 + n1 * n2) fail(i, j, "wrong point count");
      ++result.checks;
      if (!pf.is_s4()) fail(i, j, "product not S4");

      // Embedded r_images agree with component r_images.
      for (int w = 0; w < n1; ++w) {
        ++result.checks;
        if (pf.successors(product.inj1(w)) != embed(f1.successors(w), 0, total))
          fail(i, j, "left embedding changes r_image");
      }
      for (int w = 0; w < n2; ++w) {
        ++result.checks;
        if (pf.successors(product.inj2(w)) != embed(f2.successors(w), n1, total))
          fail(i, j, "right embedding changes r_image");
      }

      // Roots are exactly the pairs of roots.
      {
        PointSet expected(total);
        for (int a : set_members(f1.roots()))
          for (int b : set_members(f2.roots())) expected.set(product.pair(a, b));
        ++result.checks;
        if (pf.roots() != expected) fail(i, j, "roots are not the root pairs");
      }

      // Ends are the embedded component ends.
      {
        PointSet expected =
            embed(f1.ends(), 0, total) | embed(f2.ends(), n1, total);
        ++result.checks;
        if (pf.ends() != expected) fail(i, j, "ends mismatch");
        for (int w = 0; w < n1; ++w) {
          ++result.checks;
          if (pf.end_of(product.inj1(w)) != embed(f1.end_of(w), 0, total))
            fail(i, j, "end_of mismatch on left block");
        }
        for (int w = 0; w < n2; ++w) {
          ++result.checks;
          if (pf.end_of(product.inj2(w)) != embed(f2.end_of(w), n1, total))
            fail(i, j, "end_of mismatch on right block");
        }
        for (int w1 = 0; w1 < n1; ++w1)
          for (int w2 = 0; w2 < n2; ++w2) {
            ++result.checks;
            if (pf.end_of(product.pair(w1, w2)) !=
                (embed(f1.end_of(w1), 0, total) | embed(f2.end_of(w2), n1, total)))
              fail(i, j, "end_of mismatch on pair point");
          }
      }

      // Embedded blocks are generated subframes.
      {
        PointSet left(total), right(total);
        for (int w = 0; w < n1; ++w) left.set(w);
        for (int w = 0; w < n2; ++w) right.set(n1 + w);
        ++result.checks;
        if (pf.r_image(left) != left) fail(i, j, "left block not generated");
        ++result.checks;
        if (pf.r_image(right) != right) fail(i, j, "right block not generated");
      }

      // Strong union is preserved and reflected by the embeddings.
      {
        StrongUnionEvaluator in_product(pf);
        StrongUnionEvaluator in_f1(f1), in_f2(f2);
        std::vector<int> w1s(n1), w2s(n2);
        for (int w = 0; w < n1; ++w) w1s[w] = w;
        for (int w = 0; w < n2; ++w) w2s[w] = w;
        for (int len = 2; len <= 3; ++len) {
          each_sorted_tuple_over(w1s, len, [&](const std::vector<int>& xs) {
            std::vector<int> embedded(xs);
            for (int u = 0; u < n1; ++u) {
              ++result.checks;
              if (in_f1.unites(u, xs) != in_product.unites(product.inj1(u), embedded))
                fail(i, j, "strong-union transfer broken on left block");
            }
          });
          each_sorted_tuple_over(w2s, len, [&](const std::vector<int>& xs) {
            std::vector<int> embedded;
            for (int x : xs) embedded.push_back(product.inj2(x));
            for (int u = 0; u < n2; ++u) {
              ++result.checks;
              if (in_f2.unites(u, xs) != in_product.unites(product.inj2(u), embedded))
                fail(i, j, "strong-union transfer broken on right block");
            }
          });
        }

        // The identity map on W1 x W2 is a normal hereditary union function,
        // and its outputs strongly unite their arguments.
        HereditaryUnionMap id_map = identity_union_map(product);
        ++result.checks;
        if (!is_hereditary_union_function(id_map))
          fail(i, j, "identity map not hereditary");
        ++result.checks;
        if (!is_normal(id_map)) fail(i, j, "identity map not normal");
        for (int w1 = 0; w1 < n1; ++w1)
          for (int w2 = 0; w2 < n2; ++w2) {
            ++result.checks;
            if (!in_product.unites(product.pair(w1, w2),
                                   {product.inj1(w1), product.inj2(w2)}))
              fail(i, j, "pair point does not unite its arguments");
          }

        // Pair points inherit strong unions componentwise: u1 uniting
        // a ++ x in the left block and u2 uniting b ++ y in the right block
        // make pair(u1,u2) unite a ++ pair(x,y) ++ b.
        struct Shape {
          int m, l, n;
        };
        for (Shape shape : {Shape{0, 1, 0}, Shape{1, 1, 0}, Shape{0, 1, 1},
                            Shape{1, 1, 1}, Shape{1, 0, 1}, Shape{0, 2, 0}}) {
          std::vector<int> lhs_tuple(shape.m + shape.l);
          std::vector<int> rhs_tuple(shape.n + shape.l);
          std::function<void(int)> sweep_lhs = [&](int pos) {
            if (pos < shape.m + shape.l) {
              for (int v = 0; v < n1; ++v) {
                lhs_tuple[pos] = v;
                sweep_lhs(pos + 1);
              }
              return;
            }
            std::function<void(int)> sweep_rhs = [&](int rpos) {
              if (rpos < shape.n + shape.l) {
                for (int v = 0; v < n2; ++v) {
                  rhs_tuple[rpos] = v;
                  sweep_rhs(rpos + 1);
                }
                return;
              }
              for (int u1 = 0; u1 < n1; ++u1) {
                std::vector<int> lhs_emb(lhs_tuple);
                if (!in_product.unites(product.inj1(u1), lhs_emb)) continue;
                for (int u2 = 0; u2 < n2; ++u2) {
                  std::vector<int> rhs_emb;
                  for (int x : rhs_tuple) rhs_emb.push_back(product.inj2(x));
                  if (!in_product.unites(product.inj2(u2), rhs_emb)) continue;
                  std::vector<int> conclusion;
                  for (int k = 0; k < shape.m; ++k)
                    conclusion.push_back(product.inj1(lhs_tuple[k]));
                  for (int k = 0; k < shape.l; ++k)
                    conclusion.push_back(product.pair(lhs_tuple[shape.m + k],
                                                      rhs_tuple[shape.n + k]));
                  for (int k = 0; k < shape.n; ++k)
                    conclusion.push_back(product.inj2(rhs_tuple[k]));
                  ++result.checks;
                  if (!in_product.unites(product.pair(u1, u2), conclusion))
                    fail(i, j, "pair point misses an inherited strong union");
                }
              }
            };
            sweep_rhs(0);
          };
          sweep_lhs(0);
        }
      }

      // (su_n) preservation.
      for (int n = 1; n <= max_n; ++n) {
        bool hypothesis = true;
        for (int m = 1; m <= n; ++m)
          hypothesis = hypothesis && su_profiles[i][m] && su_profiles[j][m];
        if (!hypothesis) continue;
        ++result.checks;
        if (!satisfies_su_n(pf, n))
          fail(i, j, "product fails (su_" + std::to_string(n) + ")");
      }
    }
  return result;
}

}  // namespace su
