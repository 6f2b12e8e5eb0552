#pragma once

/*
  Gate elimination engine: constant and circuit substitution, gate-to-constant
  replacement, and normalization to fixpoint.

  Normal form admits none of: a gate with a constant source, a gate whose two
  sources reduce to the same literal base (duplicate or complementary), a
  double negation, a degenerate B2 kind, a dead gate.

  Rule application order is pinned for reproducible logs: one forward pass
  resolves each gate with fully simplified sources (constant folding,
  fixing, passing, trivial reductions, B2 negation folding), then one sweep
  removes gates unreachable from the output. Sources are final before a gate
  is visited, so a single pass reaches the fixpoint.

  Every logged step removes exactly one gate, so (gate count) strictly
  decreases per step and replaying the steps reproduces the result.
*/

#include "circuit.hpp"
#include "errors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gatelim {

enum class rewrite_rule : std::uint8_t {
  fixing,     // gate forced to a constant by one source
  passing,    // gate replaced by one of its sources
  trivial,    // duplicate/complementary sources, double negation, degenerate kind
  const_fold, // all sources constant
  neg_fold,   // B2 pass-with-negation, absorbed by consumers
  dead_gate,  // unreachable from the output
};

inline const char* to_string(rewrite_rule r) {
  switch (r) {
  case rewrite_rule::fixing: return "fixing";
  case rewrite_rule::passing: return "passing";
  case rewrite_rule::trivial: return "trivial";
  case rewrite_rule::const_fold: return "const-fold";
  case rewrite_rule::neg_fold: return "neg-fold";
  case rewrite_rule::dead_gate: return "dead-gate";
  }
  return "?";
}

struct rewrite_step {
  rewrite_rule rule;
  std::uint32_t gate_id;
  std::optional<signal> result; // empty for dead_gate

  friend bool operator==(const rewrite_step&, const rewrite_step&) = default;
};

struct rewrite_log {
  std::vector<rewrite_step> steps;
  measure_set before;
  measure_set after;
};

struct rewrite_result {
  circuit ckt;
  rewrite_log log;
};

enum class slot : std::uint8_t { left, right };

struct fixing {
  bool input_value;
  bool output_value;
};

/// Constant for the given input slot that forces the gate's output, or
/// nullopt when none exists (both xor-type kinds). Lower input value wins
/// when both fix.
inline std::optional<fixing> fixing_value(gate_kind kind, slot s) {
  if (!kind.is_binary())
    throw input_error("fixing_value: kind must be binary");
  for (bool b : {false, true}) {
    const bool o0 = s == slot::left ? kind.eval(b, false) : kind.eval(false, b);
    const bool o1 = s == slot::left ? kind.eval(b, true) : kind.eval(true, b);
    if (o0 == o1)
      return fixing{b, o0};
  }
  return std::nullopt;
}

namespace detail {

// B2 table manipulation; bit (2x + y) = f(x, y).
inline std::uint8_t table_negate_slot(std::uint8_t t, slot s) {
  if (s == slot::left) // swap f(0,*) with f(1,*)
    return std::uint8_t(((t & 0b0011) << 2) | ((t >> 2) & 0b0011));
  // swap f(*,0) with f(*,1)
  return std::uint8_t(((t & 0b0101) << 1) | ((t >> 1) & 0b0101));
}

// Unary function left after restricting one slot to a constant, as the
// two bits (g(0), g(1)).
inline std::pair<bool, bool> table_restrict(std::uint8_t t, slot s, bool value) {
  if (s == slot::left)
    return {(t >> (unsigned(value) << 1)) & 1u, (t >> ((unsigned(value) << 1) | 1u)) & 1u};
  return {(t >> unsigned(value)) & 1u, (t >> (2u | unsigned(value))) & 1u};
}

inline std::pair<bool, bool> table_diagonal(std::uint8_t t) {
  return {t & 1u, (t >> 3) & 1u};
}

class rewrite_engine {
public:
  explicit rewrite_engine(circuit c) : c_(std::move(c)) {
    input_subst_.resize(c_.num_inputs + 1);
  }

  void substitute_input(std::uint32_t var, bool value) {
    if (var < 1 || var > c_.num_inputs)
      throw input_error("substitute: unknown input variable");
    input_subst_[var] = value;
  }

  void seed_gate_constant(std::uint32_t id, bool value) {
    if (!c_.find(id))
      throw input_error("replace_gate_with_const: unknown gate id");
    resolved_.emplace(id, signal{node_ref::constant(value), false});
    steps_.push_back({rewrite_rule::fixing, id, signal{node_ref::constant(value), false}});
  }

  rewrite_result run() {
    rewrite_log log;
    log.before = measures(c_);
    forward_pass();
    sweep_dead();
    circuit out = extract();
    log.after = measures(out);
    log.steps = std::move(steps_);
    return {std::move(out), std::move(log)};
  }

private:
  signal resolve(node_ref n) const {
    bool neg = false;
    while (true) {
      if (n.is_input() && input_subst_[n.index])
        return {node_ref::constant(*input_subst_[n.index] != neg), false};
      if (!n.is_gate())
        break;
      auto it = resolved_.find(n.index);
      if (it == resolved_.end())
        break;
      if (it->second.node.is_constant())
        return {node_ref::constant(it->second.node.const_value() != neg), false};
      neg = neg != it->second.negated;
      n = it->second.node;
    }
    if (n.is_constant() && neg)
      return {node_ref::constant(!n.const_value()), false};
    return {n, neg};
  }

  void record(rewrite_rule rule, std::uint32_t id, signal result) {
    resolved_[id] = result;
    steps_.push_back({rule, id, result});
  }

  bool alive(std::uint32_t id) const { return !resolved_.count(id); }

  void forward_pass() {
    for (auto& g : c_.gates) {
      if (resolved_.count(g.id))
        continue;
      if (g.kind.kind() == gate_kind::op::not_op)
        visit_not(g);
      else if (c_.base == basis::demorgan)
        visit_demorgan(g);
      else
        visit_b2(g);
    }
    signal out = resolve(c_.output);
    if (out.node.is_constant()) {
      c_.output = node_ref::constant(out.node.const_value() != c_.output_negated);
      c_.output_negated = false;
    } else if (c_.base == basis::b2) {
      c_.output = out.node;
      c_.output_negated = c_.output_negated != out.negated;
    } else {
      c_.output = out.node; // DeMorgan resolutions never negate
    }
  }

  void visit_not(gate& g) {
    signal s = resolve(g.in0);
    if (s.node.is_constant()) {
      record(rewrite_rule::const_fold, g.id,
             {node_ref::constant(!s.node.const_value()), false});
      return;
    }
    if (s.negated) { // source is a folded negation: NOT cancels it
      record(rewrite_rule::trivial, g.id, {s.node, false});
      return;
    }
    if (s.node.is_gate()) {
      const gate* below = c_.find(s.node.index);
      if (below->kind.kind() == gate_kind::op::not_op && alive(below->id)) {
        record(rewrite_rule::trivial, g.id, resolve(below->in0));
        return;
      }
    }
    g.in0 = s.node;
  }

  // Literal base/parity of a source, looking through alive NOT chains.
  signal literal_of(signal s) const {
    while (s.node.is_gate()) {
      const gate* g = c_.find(s.node.index);
      if (g->kind.kind() != gate_kind::op::not_op || !alive(g->id))
        break;
      signal below = resolve(g->in0);
      s = {below.node, !(s.negated != below.negated)};
    }
    return s;
  }

  void visit_demorgan(gate& g) {
    signal s0 = resolve(g.in0);
    signal s1 = resolve(g.in1);
    const bool is_and = g.kind.kind() == gate_kind::op::and_op;
    if (s0.node.is_constant() && s1.node.is_constant()) {
      record(rewrite_rule::const_fold, g.id,
             {node_ref::constant(g.kind.eval(s0.node.const_value(), s1.node.const_value())),
              false});
      return;
    }
    if (s0.node.is_constant() || s1.node.is_constant()) {
      const bool cval = (s0.node.is_constant() ? s0 : s1).node.const_value();
      const signal other = s0.node.is_constant() ? s1 : s0;
      if (cval == !is_and) { // absorbing constant
        record(rewrite_rule::fixing, g.id, {node_ref::constant(!is_and), false});
      } else {
        record(rewrite_rule::passing, g.id, {other.node, false});
      }
      return;
    }
    const signal l0 = literal_of(s0);
    const signal l1 = literal_of(s1);
    if (l0.node == l1.node) {
      if (l0.negated == l1.negated)
        record(rewrite_rule::trivial, g.id, {s0.node, false});
      else
        record(rewrite_rule::trivial, g.id, {node_ref::constant(!is_and), false});
      return;
    }
    g.in0 = s0.node;
    g.in1 = s1.node;
  }

  void visit_b2(gate& g) {
    signal s0 = resolve(g.in0);
    signal s1 = resolve(g.in1);
    std::uint8_t t = g.kind.table();
    if (s0.negated) {
      t = table_negate_slot(t, slot::left);
      s0.negated = false;
    }
    if (s1.negated) {
      t = table_negate_slot(t, slot::right);
      s1.negated = false;
    }
    if (s0.node.is_constant() && s1.node.is_constant()) {
      record(rewrite_rule::const_fold, g.id,
             {node_ref::constant(gate_kind::b2(t).eval(s0.node.const_value(),
                                                       s1.node.const_value())),
              false});
      return;
    }
    if (s0.node.is_constant() || s1.node.is_constant()) {
      const bool on_left = s0.node.is_constant();
      const auto fn = table_restrict(t, on_left ? slot::left : slot::right,
                                     (on_left ? s0 : s1).node.const_value());
      const signal other = on_left ? s1 : s0;
      if (fn.first == fn.second) {
        record(rewrite_rule::fixing, g.id, {node_ref::constant(fn.first), false});
      } else if (!fn.first) {
        record(rewrite_rule::passing, g.id, {other.node, false});
      } else {
        record(rewrite_rule::neg_fold, g.id, {other.node, true});
      }
      return;
    }
    if (s0.node == s1.node) {
      const auto fn = table_diagonal(t);
      if (fn.first == fn.second)
        record(rewrite_rule::trivial, g.id, {node_ref::constant(fn.first), false});
      else if (!fn.first)
        record(rewrite_rule::trivial, g.id, {s0.node, false});
      else
        record(rewrite_rule::neg_fold, g.id, {s0.node, true});
      return;
    }
    const gate_kind nk = gate_kind::b2(t);
    if (nk.classify() == gate_class::degenerate) {
      const bool dep_x = (t & 0b0011) != ((t >> 2) & 0b0011);
      const bool dep_y = ((t & 1u) != ((t >> 1) & 1u)) ||
                         (((t >> 2) & 1u) != ((t >> 3) & 1u));
      if (!dep_x && !dep_y) {
        record(rewrite_rule::trivial, g.id, {node_ref::constant(t & 1u), false});
      } else if (dep_x) {
        const bool f0 = t & 1u, f1 = (t >> 2) & 1u; // f(x, 0) as function of x
        if (!f0 && f1)
          record(rewrite_rule::trivial, g.id, {s0.node, false});
        else
          record(rewrite_rule::neg_fold, g.id, {s0.node, true});
      } else {
        const bool f0 = t & 1u, f1 = (t >> 1) & 1u; // f(0, y) as function of y
        if (!f0 && f1)
          record(rewrite_rule::trivial, g.id, {s1.node, false});
        else
          record(rewrite_rule::neg_fold, g.id, {s1.node, true});
      }
      return;
    }
    g.kind = nk;
    g.in0 = s0.node;
    g.in1 = s1.node;
  }

  void sweep_dead() {
    std::vector<node_ref> stack{c_.output};
    std::unordered_map<std::uint32_t, bool> reach;
    while (!stack.empty()) {
      node_ref n = stack.back();
      stack.pop_back();
      if (!n.is_gate() || reach.count(n.index))
        continue;
      reach[n.index] = true;
      const gate* g = c_.find(n.index);
      stack.push_back(g->in0);
      if (g->kind.is_binary())
        stack.push_back(g->in1);
    }
    for (const auto& g : c_.gates)
      if (alive(g.id) && !reach.count(g.id))
        steps_.push_back({rewrite_rule::dead_gate, g.id, std::nullopt});
  }

  circuit extract() const {
    std::unordered_map<std::uint32_t, bool> removed;
    for (const auto& st : steps_)
      removed.emplace(st.gate_id, true);
    circuit out;
    out.base = c_.base;
    out.num_inputs = c_.num_inputs;
    out.num_addr = c_.num_addr;
    out.output = c_.output;
    out.output_negated = c_.output_negated;
    for (const auto& g : c_.gates)
      if (!removed.count(g.id))
        out.gates.push_back(g);
    return out;
  }

  circuit c_;
  std::vector<std::optional<bool>> input_subst_;
  std::unordered_map<std::uint32_t, signal> resolved_;
  std::vector<rewrite_step> steps_;
};

} // namespace detail

inline rewrite_result normalize(const circuit& c) {
  detail::rewrite_engine eng(c);
  return eng.run();
}

inline circuit normalized(const circuit& c) { return normalize(c).ckt; }

/// Rewires every reader of the variable to the constant, then normalizes.
/// The variable keeps its slot in the input list with fanout zero.
inline rewrite_result substitute_const(const circuit& c, std::uint32_t var, bool value) {
  detail::rewrite_engine eng(c);
  eng.substitute_input(var, value);
  return eng.run();
}

/// Rewires every reader of the gate to the constant, then normalizes; the
/// gate's now-dead cone is swept.
inline rewrite_result replace_gate_with_const(const circuit& c, std::uint32_t id, bool value) {
  detail::rewrite_engine eng(c);
  eng.seed_gate_constant(id, value);
  return eng.run();
}

/// Splices a fresh copy of `sub` (same basis, same input space) in front of
/// the gate list and rewires every reader of `var` to its output. Not
/// normalized; gate ids of `c` are preserved, spliced gates get fresh ids.
inline circuit substitute_circuit(const circuit& c, std::uint32_t var, const circuit& sub) {
  if (var < 1 || var > c.num_inputs)
    throw input_error("substitute_circuit: unknown input variable");
  if (sub.base != c.base)
    throw input_error("substitute_circuit: basis mismatch");
  if (c.base == basis::demorgan && sub.output_negated)
    throw input_error("substitute_circuit: negated output on a DeMorgan substitution");
  if (sub.num_inputs > c.num_inputs)
    throw input_error("substitute_circuit: substitution reads unknown inputs");
  if (sub.num_inputs >= var && fanout(sub, node_ref::input(var)) != 0)
    throw input_error("substitute_circuit: substitution reads the substituted variable");

  std::uint32_t next_id = c.max_gate_id() + 1;
  std::unordered_map<std::uint32_t, std::uint32_t> id_map;
  circuit out;
  out.base = c.base;
  out.num_inputs = c.num_inputs;
  out.num_addr = c.num_addr;

  auto remap_sub = [&](node_ref n) {
    if (n.is_gate())
      return node_ref::gate(id_map.at(n.index));
    return n;
  };
  for (const auto& g : sub.gates) {
    gate fresh = g;
    fresh.id = next_id++;
    id_map.emplace(g.id, fresh.id);
    fresh.in0 = remap_sub(g.in0);
    if (g.kind.is_binary())
      fresh.in1 = remap_sub(g.in1);
    out.gates.push_back(fresh);
  }
  const node_ref sub_out = remap_sub(sub.output);
  const bool sub_neg = sub.output_negated;

  const node_ref target = node_ref::input(var);
  bool host_out_neg = c.output_negated;
  auto rewire = [&](node_ref n, bool& neg_flag) {
    if (n == target) {
      neg_flag = neg_flag != sub_neg;
      return sub_out;
    }
    return n;
  };
  for (const auto& g : c.gates) {
    gate h = g;
    if (h.in0 == target) {
      if (c.base == basis::b2 && sub_neg)
        h.kind = gate_kind::b2(detail::table_negate_slot(h.kind.table(), slot::left));
      h.in0 = sub_out;
    }
    if (h.kind.is_binary() && h.in1 == target) {
      if (c.base == basis::b2 && sub_neg)
        h.kind = gate_kind::b2(detail::table_negate_slot(h.kind.table(), slot::right));
      h.in1 = sub_out;
    }
    out.gates.push_back(h);
  }
  out.output = rewire(c.output, host_out_neg);
  out.output_negated = host_out_neg;
  return out;
}

} // namespace gatelim
