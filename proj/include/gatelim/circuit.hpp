#pragma once

/*
  Circuit IR shared by every algorithm in the library.

  Circuits are immutable values: a basis, a declared input count, a gate
  list in topological order and a designated output. Gate ids are stable
  labels (not list positions); transforms keep surviving ids intact so
  callers can refer to gates across rewrites.

  DeMorgan circuits use explicit, cost-free NOT gates. B2 circuits are
  NOT-free: every gate carries a 4-bit truth table and negations are folded
  into consumer tables, with a single optional negation flag on the output.
*/

#include "bits.hpp"
#include "errors.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gatelim {

enum class basis : std::uint8_t { demorgan, b2 };

enum class gate_class : std::uint8_t { degenerate, and_type, xor_type };

/// Gate function: NOT/AND/OR for DeMorgan, or an arbitrary 4-bit truth
/// table for B2. Table bit (2x + y) stores f(x, y); the string form reads
/// f(0,0) f(0,1) f(1,0) f(1,1).
class gate_kind {
public:
  enum class op : std::uint8_t { not_op, and_op, or_op, table_op };

  gate_kind() = default;

  static gate_kind not_gate() { return gate_kind(op::not_op, 0); }
  static gate_kind and_gate() { return gate_kind(op::and_op, 0b1000); }
  static gate_kind or_gate() { return gate_kind(op::or_op, 0b1110); }
  static gate_kind b2(std::uint8_t table) { return gate_kind(op::table_op, table & 0xF); }

  static gate_kind b2_from_string(std::string_view s) {
    if (s.size() != 4)
      throw parse_error("b2 truth table must have exactly 4 bits");
    std::uint8_t t = 0;
    for (int i = 0; i < 4; ++i) {
      if (s[i] == '1')
        t |= std::uint8_t(1u << i);
      else if (s[i] != '0')
        throw parse_error("b2 truth table must contain only 0/1");
    }
    return b2(t);
  }

  op kind() const { return op_; }
  std::uint8_t table() const { return table_; }
  bool is_binary() const { return op_ != op::not_op; }

  bool eval(bool x, bool y) const {
    switch (op_) {
    case op::and_op: return x && y;
    case op::or_op: return x || y;
    case op::table_op: return (table_ >> ((unsigned(x) << 1) | unsigned(y))) & 1u;
    case op::not_op: break;
    }
    throw input_error("eval(x, y) on a NOT gate");
  }

  bool eval(bool x) const {
    if (op_ != op::not_op)
      throw input_error("eval(x) on a binary gate");
    return !x;
  }

  gate_class classify() const {
    if (!is_binary())
      throw input_error("classify: NOT is not a binary kind");
    if (op_ == op::and_op || op_ == op::or_op)
      return gate_class::and_type;
    const std::uint8_t t = table_;
    if (t == 0b0110 || t == 0b1001)
      return gate_class::xor_type;
    const bool dep_x = (t & 0b0011) != ((t >> 2) & 0b0011);
    const bool dep_y = ((t & 1u) != ((t >> 1) & 1u)) || (((t >> 2) & 1u) != ((t >> 3) & 1u));
    if (!dep_x || !dep_y)
      return gate_class::degenerate;
    return gate_class::and_type;
  }

  std::string table_string() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i)
      if ((table_ >> i) & 1u)
        s[i] = '1';
    return s;
  }

  std::string to_string() const {
    switch (op_) {
    case op::not_op: return "NOT";
    case op::and_op: return "AND";
    case op::or_op: return "OR";
    case op::table_op: return "B2 " + table_string();
    }
    return {};
  }

  friend bool operator==(const gate_kind&, const gate_kind&) = default;

private:
  gate_kind(op o, std::uint8_t t) : op_(o), table_(t) {}

  op op_ = op::and_op;
  std::uint8_t table_ = 0b1000;
};

/// Reference to a constant, an input variable (1-based) or a gate (by id).
struct node_ref {
  enum class kind : std::uint8_t { constant, input, gate };

  kind k = kind::constant;
  std::uint32_t index = 0;

  static node_ref constant(bool v) { return {kind::constant, v ? 1u : 0u}; }
  static node_ref input(std::uint32_t var) { return {kind::input, var}; }
  static node_ref gate(std::uint32_t id) { return {kind::gate, id}; }

  bool is_constant() const { return k == kind::constant; }
  bool is_input() const { return k == kind::input; }
  bool is_gate() const { return k == kind::gate; }
  bool const_value() const { return index != 0; }

  friend bool operator==(const node_ref&, const node_ref&) = default;
};

/// A node reference together with a negation, i.e. a literal.
struct signal {
  node_ref node;
  bool negated = false;

  friend bool operator==(const signal&, const signal&) = default;
};

struct gate {
  std::uint32_t id = 0;
  gate_kind kind;
  node_ref in0;
  node_ref in1; // ignored for NOT

  friend bool operator==(const gate&, const gate&) = default;
};

struct circuit {
  gatelim::basis base = basis::demorgan;
  std::uint32_t num_inputs = 0;
  std::uint32_t num_addr = 0; // > 0 marks an address/data input split
  std::vector<gate> gates;    // topological order; ids unique and stable
  node_ref output = node_ref::constant(false);
  bool output_negated = false; // b2 only

  const gate* find(std::uint32_t id) const {
    for (const auto& g : gates)
      if (g.id == id)
        return &g;
    return nullptr;
  }

  std::uint32_t max_gate_id() const {
    std::uint32_t m = 0;
    for (const auto& g : gates)
      m = std::max(m, g.id);
    return m;
  }

  friend bool operator==(const circuit&, const circuit&) = default;
};

using assignment = bit_vector; // bit i-1 holds the value of input i

struct measure_set {
  std::size_t sigma = 0;
  std::size_t eta = 0;
  std::size_t mu = 0;
};

namespace detail {

inline std::unordered_map<std::uint32_t, std::size_t> position_map(const circuit& c) {
  std::unordered_map<std::uint32_t, std::size_t> pos;
  pos.reserve(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    pos.emplace(c.gates[i].id, i);
  return pos;
}

} // namespace detail

inline bool evaluate(const circuit& c, const assignment& x) {
  if (x.size() != c.num_inputs)
    throw input_error("evaluate: assignment length does not match input count");
  auto pos = detail::position_map(c);
  std::vector<std::uint8_t> val(c.gates.size(), 0);
  auto node_value = [&](node_ref n) -> bool {
    switch (n.k) {
    case node_ref::kind::constant: return n.const_value();
    case node_ref::kind::input: return x.get(n.index - 1);
    case node_ref::kind::gate: return val[pos.at(n.index)] != 0;
    }
    return false;
  };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    val[i] = g.kind.is_binary() ? g.kind.eval(node_value(g.in0), node_value(g.in1))
                                : g.kind.eval(node_value(g.in0));
  }
  return node_value(c.output) ^ c.output_negated;
}

/// Follows a chain of NOT gates down to the first non-NOT node, tracking
/// the accumulated negation. The "(not) alpha" view of a wire.
inline signal canonical(const circuit& c, node_ref n) {
  bool neg = false;
  while (n.is_gate()) {
    const gate* g = c.find(n.index);
    if (!g)
      throw input_error("canonical: unknown gate id");
    if (g->kind.kind() != gate_kind::op::not_op)
      break;
    neg = !neg;
    n = g->in0;
  }
  return {n, neg};
}

/// Number of binary-gate input slots reading the node, directly or through
/// NOT chains, plus one if the node (possibly under NOTs) is the output.
inline std::size_t fanout(const circuit& c, node_ref n) {
  if (n.is_gate() && c.find(n.index) == nullptr)
    throw input_error("fanout: unknown gate id");
  if (n.is_input() && (n.index < 1 || n.index > c.num_inputs))
    throw input_error("fanout: input index out of range");
  auto passes_through = [&](node_ref from) {
    node_ref cur = from;
    while (true) {
      if (cur == n)
        return true;
      if (!cur.is_gate())
        return false;
      const gate* g = c.find(cur.index);
      if (g->kind.kind() != gate_kind::op::not_op)
        return false;
      cur = g->in0;
    }
  };
  std::size_t count = 0;
  for (const auto& g : c.gates) {
    if (!g.kind.is_binary())
      continue;
    if (passes_through(g.in0))
      ++count;
    if (passes_through(g.in1))
      ++count;
  }
  if (passes_through(c.output))
    ++count;
  return count;
}

/// Slots referencing the node directly: binary slots, NOT slots, and the
/// output tap. Summed over all nodes this equals 2*sigma + #NOT + 1.
inline std::size_t direct_reads(const circuit& c, node_ref n) {
  std::size_t count = 0;
  for (const auto& g : c.gates) {
    if (g.in0 == n)
      ++count;
    if (g.kind.is_binary() && g.in1 == n)
      ++count;
  }
  if (c.output == n)
    ++count;
  return count;
}

inline bool reads_input(const circuit& c, std::uint32_t var) {
  return fanout(c, node_ref::input(var)) != 0;
}

inline std::vector<std::uint32_t> read_inputs(const circuit& c) {
  std::vector<std::uint32_t> vars;
  for (std::uint32_t v = 1; v <= c.num_inputs; ++v)
    if (reads_input(c, v))
      vars.push_back(v);
  return vars;
}

inline measure_set measures(const circuit& c) {
  measure_set m;
  for (const auto& g : c.gates)
    if (g.kind.is_binary())
      ++m.sigma;
  for (std::uint32_t v = 1; v <= c.num_inputs; ++v)
    if (reads_input(c, v))
      ++m.eta;
  m.mu = m.sigma + m.eta;
  return m;
}

/// First gate satisfying the predicate with no satisfying gate strictly in
/// its input cone; ties broken by (binary depth, gate id). Nullopt when no
/// gate satisfies the predicate.
template <typename Pred>
std::optional<std::uint32_t> minimal_gate(const circuit& c, Pred&& pred) {
  auto pos = detail::position_map(c);
  const std::size_t n = c.gates.size();
  std::vector<std::uint8_t> sat(n, 0), cone_sat(n, 0);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = c.gates[i];
    sat[i] = pred(g) ? 1 : 0;
    auto below = [&](node_ref src, std::size_t& d, bool& cs) {
      if (!src.is_gate())
        return;
      const std::size_t j = pos.at(src.index);
      d = std::max(d, depth[j]);
      cs = cs || sat[j] || cone_sat[j];
    };
    std::size_t d = 0;
    bool cs = false;
    below(g.in0, d, cs);
    if (g.kind.is_binary())
      below(g.in1, d, cs);
    depth[i] = d + (g.kind.is_binary() ? 1 : 0);
    cone_sat[i] = cs ? 1 : 0;
  }
  std::optional<std::uint32_t> best;
  std::size_t best_depth = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!sat[i] || cone_sat[i])
      continue;
    const auto& g = c.gates[i];
    if (!best || depth[i] < best_depth || (depth[i] == best_depth && g.id < *best)) {
      best = g.id;
      best_depth = depth[i];
    }
  }
  return best;
}

inline std::vector<std::string> validate(const circuit& c) {
  std::vector<std::string> errors;
  std::unordered_map<std::uint32_t, std::size_t> pos;
  auto check_ref = [&](node_ref n, const std::string& where) {
    switch (n.k) {
    case node_ref::kind::constant:
      if (n.index > 1)
        errors.push_back(where + ": constant value must be 0 or 1");
      break;
    case node_ref::kind::input:
      if (n.index < 1 || n.index > c.num_inputs)
        errors.push_back(where + ": input index out of range");
      break;
    case node_ref::kind::gate:
      if (!pos.count(n.index))
        errors.push_back(where + ": gate g" + std::to_string(n.index) +
                         " referenced before declaration (cycle or order violation)");
      break;
    }
  };
  if (c.num_addr > c.num_inputs)
    errors.push_back("address count exceeds input count");
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    const std::string where = "gate g" + std::to_string(g.id);
    if (pos.count(g.id))
      errors.push_back(where + ": duplicate gate id");
    if (c.base == basis::demorgan && g.kind.kind() == gate_kind::op::table_op)
      errors.push_back(where + ": B2 table kind in a DeMorgan circuit");
    if (c.base == basis::b2 && g.kind.kind() != gate_kind::op::table_op)
      errors.push_back(where + ": " + g.kind.to_string() + " gate in a B2 circuit");
    check_ref(g.in0, where);
    if (g.kind.is_binary())
      check_ref(g.in1, where);
    pos.emplace(g.id, i);
  }
  check_ref(c.output, "output");
  if (c.output_negated && c.base != basis::b2)
    errors.push_back("output negation flag is only valid for B2 circuits");
  return errors;
}

inline void validate_or_throw(const circuit& c) {
  auto errs = validate(c);
  if (!errs.empty()) {
    std::string msg = "invalid circuit:";
    for (const auto& e : errs)
      msg += "\n  " + e;
    throw input_error(msg);
  }
}

/// No simplification rule applies: no constant sources, no duplicate or
/// complementary source pair, no double negation, no degenerate B2 kind,
/// no dead gate.
inline bool is_normalized(const circuit& c) {
  if (!validate(c).empty())
    return false;
  for (const auto& g : c.gates) {
    if (g.in0.is_constant())
      return false;
    if (g.kind.kind() == gate_kind::op::not_op) {
      if (g.in0.is_gate() &&
          c.find(g.in0.index)->kind.kind() == gate_kind::op::not_op)
        return false;
      continue;
    }
    if (g.in1.is_constant())
      return false;
    if (g.kind.kind() == gate_kind::op::table_op &&
        g.kind.classify() == gate_class::degenerate)
      return false;
    const signal s0 = canonical(c, g.in0);
    const signal s1 = canonical(c, g.in1);
    if (s0.node == s1.node)
      return false;
  }
  // every gate must lie in the output's cone
  auto pos = detail::position_map(c);
  std::vector<std::uint8_t> live(c.gates.size(), 0);
  std::vector<node_ref> stack{c.output};
  while (!stack.empty()) {
    node_ref n = stack.back();
    stack.pop_back();
    if (!n.is_gate())
      continue;
    const std::size_t i = pos.at(n.index);
    if (live[i])
      continue;
    live[i] = 1;
    stack.push_back(c.gates[i].in0);
    if (c.gates[i].kind.is_binary())
      stack.push_back(c.gates[i].in1);
  }
  return std::all_of(live.begin(), live.end(), [](std::uint8_t b) { return b != 0; });
}

/// Induced subcircuit rooted at a node: the node's input cone over the same
/// declared input space, with gate ids and relative order preserved.
inline circuit extract_cone(const circuit& c, node_ref root) {
  auto pos = detail::position_map(c);
  std::vector<std::uint8_t> keep(c.gates.size(), 0);
  std::vector<node_ref> stack{root};
  while (!stack.empty()) {
    node_ref n = stack.back();
    stack.pop_back();
    if (!n.is_gate())
      continue;
    const std::size_t i = pos.at(n.index);
    if (keep[i])
      continue;
    keep[i] = 1;
    stack.push_back(c.gates[i].in0);
    if (c.gates[i].kind.is_binary())
      stack.push_back(c.gates[i].in1);
  }
  circuit out;
  out.base = c.base;
  out.num_inputs = c.num_inputs;
  out.num_addr = c.num_addr;
  for (std::size_t i = 0; i < c.gates.size(); ++i)
    if (keep[i])
      out.gates.push_back(c.gates[i]);
  out.output = root;
  return out;
}

} // namespace gatelim
