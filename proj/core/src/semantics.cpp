#include "su/semantics.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "su/strong_union.hpp"

namespace su {

Model::Model(Frame frame, std::map<std::string, PointSet> valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  if (!frame_.is_s4())
    throw PreconditionError("model requires an S4 frame");
  for (const auto& [var, val] : valuation_) {
    if (static_cast<int>(val.size()) != frame_.size())
      throw PreconditionError("valuation of '" + var +
                              "' does not match the frame size");
    if (!frame_.is_upset(val))
      throw PreconditionError("valuation of '" + var + "' is not an upset");
  }
}

PointSet Model::value(const std::string& var) const {
  auto it = valuation_.find(var);
  if (it != valuation_.end()) return it->second;
  return PointSet(frame_.size());
}

PointSet truth_set(const Model& model, const Formula& f) {
  const Frame& frame = model.frame();
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return PointSet(frame.size());
    case Formula::Kind::Var:
      return model.value(f.var_name());
    case Formula::Kind::And:
      return truth_set(model, f.lhs()) & truth_set(model, f.rhs());
    case Formula::Kind::Or:
      return truth_set(model, f.lhs()) | truth_set(model, f.rhs());
    case Formula::Kind::Implies:
      return frame.box(~truth_set(model, f.lhs()) | truth_set(model, f.rhs()));
  }
  throw Error("unreachable formula kind");
}

bool satisfies(const Model& model, int w, const Formula& f) {
  if (w < 0 || w >= model.frame().size())
    throw PreconditionError("point " + std::to_string(w) + " out of range");
  return truth_set(model, f).test(w);
}

bool satisfies_all(const Model& model, int w,
                   const std::vector<Formula>& gamma) {
  for (const Formula& g : gamma)
    if (!satisfies(model, w, g)) return false;
  return true;
}

// --- compiled evaluation ------------------------------------------------
//
// A formula set is flattened once into value-numbered instructions; each
// instruction carries the loop nesting level of the deepest variable it
// depends on, so the assignment odometer only re-evaluates the suffix that
// changed.  Two engines share the program: single-word bitmasks for frames
// with at most 64 points, dynamic bitsets beyond that.

namespace {

enum class OpCode { Bottom, Var, And, Or, Implies };

struct Instr {
  OpCode op;
  int a = -1, b = -1;
  int var = -1;
  int level = 0;
};

struct Program {
  std::vector<Instr> instrs;        // topological, grouped by ascending level
  std::vector<std::string> vars;    // sorted
  std::vector<int> outputs;         // one slot per compiled formula
  std::vector<int> level_first;     // level -> first instruction index
};

struct ProgramBuilder {
  std::vector<Instr> instrs;
  std::map<std::string, int> var_level;
  std::map<std::tuple<OpCode, int, int, int>, int> memo;

  int emit(OpCode op, int a, int b, int var) {
    auto key = std::make_tuple(op, a, b, var);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int level = 0;
    if (op == OpCode::Var) {
      level = var;  // var already holds the level index, see below
    } else {
      if (a >= 0) level = std::max(level, instrs[a].level);
      if (b >= 0) level = std::max(level, instrs[b].level);
    }
    instrs.push_back(Instr{op, a, b, var, level});
    int slot = static_cast<int>(instrs.size()) - 1;
    memo.emplace(key, slot);
    return slot;
  }

  int compile(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Bottom:
        return emit(OpCode::Bottom, -1, -1, -1);
      case Formula::Kind::Var:
        return emit(OpCode::Var, -1, -1, var_level.at(f.var_name()));
      case Formula::Kind::And: {
        int a = compile(f.lhs()), b = compile(f.rhs());
        return emit(OpCode::And, a, b, -1);
      }
      case Formula::Kind::Or: {
        int a = compile(f.lhs()), b = compile(f.rhs());
        return emit(OpCode::Or, a, b, -1);
      }
      case Formula::Kind::Implies: {
        int a = compile(f.lhs()), b = compile(f.rhs());
        return emit(OpCode::Implies, a, b, -1);
      }
    }
    throw Error("unreachable formula kind");
  }
};

Program compile_program(const std::vector<Formula>& formulas) {
  Program prog;
  std::set<std::string> var_set;
  for (const Formula& f : formulas) {
    auto vars = variables(f);
    var_set.insert(vars.begin(), vars.end());
  }
  prog.vars.assign(var_set.begin(), var_set.end());

  ProgramBuilder builder;
  for (std::size_t i = 0; i < prog.vars.size(); ++i)
    builder.var_level[prog.vars[i]] = static_cast<int>(i) + 1;
  for (const Formula& f : formulas) prog.outputs.push_back(builder.compile(f));

  // Stable-sort by level; operands keep preceding their users.
  std::vector<int> order(builder.instrs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return builder.instrs[x].level < builder.instrs[y].level;
  });
  std::vector<int> remap(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<int>(i);
  prog.instrs.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    Instr ins = builder.instrs[order[i]];
    if (ins.a >= 0) ins.a = remap[ins.a];
    if (ins.b >= 0) ins.b = remap[ins.b];
    prog.instrs[i] = ins;
  }
  for (std::size_t i = 0; i < prog.outputs.size(); ++i)
    prog.outputs[i] = remap[prog.outputs[i]];

  const int levels = static_cast<int>(prog.vars.size()) + 1;
  prog.level_first.assign(levels + 1, static_cast<int>(prog.instrs.size()));
  for (int i = static_cast<int>(prog.instrs.size()) - 1; i >= 0; --i)
    prog.level_first[prog.instrs[i].level] = i;
  // Make level_first monotone: a level with no instruction starts where the
  // next one does.
  for (int l = levels - 1; l >= 0; --l)
    prog.level_first[l] = std::min(prog.level_first[l], prog.level_first[l + 1]);
  return prog;
}

struct MaskEngine {
  int n;
  std::uint64_t full;
  std::vector<std::uint64_t> succ;
  std::vector<std::uint64_t> slot;
  std::vector<std::uint64_t> var_val;

  MaskEngine(const Frame& frame, const Program& prog)
      : n(frame.size()), slot(prog.instrs.size(), 0), var_val(prog.vars.size() + 1, 0) {
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    succ.resize(n);
    for (int w = 0; w < n; ++w) {
      std::uint64_t m = 0;
      const PointSet& row = frame.successors(w);
      for (auto v = row.find_first(); v != PointSet::npos; v = row.find_next(v))
        m |= std::uint64_t{1} << v;
      succ[w] = m;
    }
  }

  static std::uint64_t to_mask(const PointSet& s) {
    std::uint64_t m = 0;
    for (auto v = s.find_first(); v != PointSet::npos; v = s.find_next(v))
      m |= std::uint64_t{1} << v;
    return m;
  }

  std::uint64_t box(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (int w = 0; w < n; ++w)
      if ((succ[w] & ~x) == 0) r |= std::uint64_t{1} << w;
    return r;
  }

  void set_var(int level, const PointSet& upset) { var_val[level] = to_mask(upset); }

  void run(const Program& prog, int from_level) {
    const auto& ins = prog.instrs;
    for (std::size_t i = prog.level_first[from_level]; i < ins.size(); ++i) {
      const Instr& c = ins[i];
      switch (c.op) {
        case OpCode::Bottom: slot[i] = 0; break;
        case OpCode::Var: slot[i] = var_val[c.var]; break;
        case OpCode::And: slot[i] = slot[c.a] & slot[c.b]; break;
        case OpCode::Or: slot[i] = slot[c.a] | slot[c.b]; break;
        case OpCode::Implies:
          slot[i] = box((~slot[c.a] | slot[c.b]) & full);
          break;
      }
    }
  }

  bool output_full(const Program& prog, int k) const {
    return slot[prog.outputs[k]] == full;
  }
  std::uint64_t output(const Program& prog, int k) const {
    return slot[prog.outputs[k]];
  }
  PointSet to_set(std::uint64_t m) const {
    PointSet s(n);
    for (int w = 0; w < n; ++w)
      if (m >> w & 1) s.set(w);
    return s;
  }
};

struct DynEngine {
  const Frame* frame;
  std::vector<PointSet> slot;
  std::vector<PointSet> var_val;

  DynEngine(const Frame& f, const Program& prog)
      : frame(&f),
        slot(prog.instrs.size(), PointSet(f.size())),
        var_val(prog.vars.size() + 1, PointSet(f.size())) {}

  void set_var(int level, const PointSet& upset) { var_val[level] = upset; }

  void run(const Program& prog, int from_level) {
    const auto& ins = prog.instrs;
    for (std::size_t i = prog.level_first[from_level]; i < ins.size(); ++i) {
      const Instr& c = ins[i];
      switch (c.op) {
        case OpCode::Bottom: slot[i].reset(); break;
        case OpCode::Var: slot[i] = var_val[c.var]; break;
        case OpCode::And: slot[i] = slot[c.a] & slot[c.b]; break;
        case OpCode::Or: slot[i] = slot[c.a] | slot[c.b]; break;
        case OpCode::Implies:
          slot[i] = frame->box(~slot[c.a] | slot[c.b]);
          break;
      }
    }
  }

  bool output_full(const Program& prog, int k) const {
    return slot[prog.outputs[k]].all();
  }
  const PointSet& output(const Program& prog, int k) const {
    return slot[prog.outputs[k]];
  }
};

// Runs `body` for every assignment of upsets to the program's variables in
// lexicographic order.  `body` is called after (re)evaluation and returns
// true to stop the sweep.
template <class Engine, class Body>
bool sweep_assignments(Engine& engine, const Program& prog,
                       const std::vector<PointSet>& upsets, Body body) {
  const int k = static_cast<int>(prog.vars.size());
  std::vector<std::size_t> idx(k, 0);
  for (int v = 0; v < k; ++v) engine.set_var(v + 1, upsets[0]);
  engine.run(prog, 0);
  while (true) {
    if (body(idx)) return true;
    int v = k - 1;
    while (v >= 0 && idx[v] + 1 == upsets.size()) {
      idx[v] = 0;
      engine.set_var(v + 1, upsets[0]);
      --v;
    }
    if (v < 0) return false;
    ++idx[v];
    engine.set_var(v + 1, upsets[idx[v]]);
    engine.run(prog, v + 1);
  }
}

}  // namespace

std::optional<Refutation> find_refuting_valuation(const Frame& frame,
                                                  const Formula& f,
                                                  std::size_t upset_cap) {
  if (!frame.is_s4())
    throw PreconditionError("frame validity requires an S4 frame");
  Program prog = compile_program({f});
  std::vector<PointSet> upsets = frame.upsets(upset_cap);

  auto build = [&](const std::vector<std::size_t>& idx,
                   const PointSet& truth) -> Refutation {
    Refutation r;
    for (std::size_t v = 0; v < prog.vars.size(); ++v)
      r.valuation[prog.vars[v]] = upsets[idx[v]];
    PointSet missing = ~truth;
    r.point = static_cast<int>(missing.find_first());
    return r;
  };

  std::optional<Refutation> found;
  if (frame.size() <= 64) {
    MaskEngine engine(frame, prog);
    sweep_assignments(engine, prog, upsets,
                      [&](const std::vector<std::size_t>& idx) {
                        if (engine.output_full(prog, 0)) return false;
                        found = build(idx, engine.to_set(engine.output(prog, 0)));
                        return true;
                      });
  } else {
    DynEngine engine(frame, prog);
    sweep_assignments(engine, prog, upsets,
                      [&](const std::vector<std::size_t>& idx) {
                        if (engine.output_full(prog, 0)) return false;
                        found = build(idx, engine.output(prog, 0));
                        return true;
                      });
  }
  return found;
}

bool frame_validates(const Frame& frame, const Formula& f,
                     std::size_t upset_cap) {
  return !find_refuting_valuation(frame, f, upset_cap).has_value();
}

bool consequence_on_frame(const Frame& frame, const std::vector<Formula>& gamma,
                          const Formula& alpha, std::size_t upset_cap) {
  if (!frame.is_s4())
    throw PreconditionError("consequence requires an S4 frame");
  std::vector<Formula> all = gamma;
  all.push_back(alpha);
  Program prog = compile_program(all);
  std::vector<PointSet> upsets = frame.upsets(upset_cap);
  const std::size_t m = gamma.size();

  bool violated = false;
  if (frame.size() <= 64) {
    MaskEngine engine(frame, prog);
    sweep_assignments(engine, prog, upsets,
                      [&](const std::vector<std::size_t>&) {
                        std::uint64_t premises = engine.full;
                        for (std::size_t i = 0; i < m; ++i)
                          premises &= engine.output(prog, static_cast<int>(i));
                        if ((premises & ~engine.output(prog, static_cast<int>(m))) == 0)
                          return false;
                        violated = true;
                        return true;
                      });
  } else {
    DynEngine engine(frame, prog);
    sweep_assignments(engine, prog, upsets,
                      [&](const std::vector<std::size_t>&) {
                        PointSet premises = frame.universe();
                        for (std::size_t i = 0; i < m; ++i)
                          premises &= engine.output(prog, static_cast<int>(i));
                        if (premises.is_subset_of(engine.output(prog, static_cast<int>(m))))
                          return false;
                        violated = true;
                        return true;
                      });
  }
  return !violated;
}

std::optional<SuCountermodel> find_su_countermodel(const Formula& f,
                                                   const SearchBounds& bounds) {
  if (bounds.max_points < 1)
    throw PreconditionError("search bounds require max_points >= 1");
  for (int n = 1; n <= bounds.max_points; ++n) {
    S4FrameEnumerator frames(n, bounds.max_points);
    while (auto frame = frames.next()) {
      if (!satisfies_su2(*frame)) continue;
      auto refutation = find_refuting_valuation(*frame, f, bounds.upset_cap);
      if (!refutation) continue;
      Model model(*frame, refutation->valuation);
      return SuCountermodel{std::move(model), refutation->point};
    }
  }
  return std::nullopt;
}

}  // namespace su
