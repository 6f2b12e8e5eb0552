#pragma once

#include <gatelim/circuit.hpp>
#include <gatelim/oracle.hpp>
#include <gatelim/rewrite.hpp>

#include <random>
#include <vector>

namespace gatelim::test {

/// Deliberately messy random circuit: constant sources, duplicate literals,
/// NOT chains, degenerate tables and dead gates all allowed.
inline circuit raw_random_circuit(std::uint32_t inputs, std::size_t gate_target,
                                  basis base, std::mt19937_64& rng) {
  circuit c;
  c.base = base;
  c.num_inputs = inputs;
  std::vector<node_ref> pool;
  pool.push_back(node_ref::constant(false));
  pool.push_back(node_ref::constant(true));
  for (std::uint32_t v = 1; v <= inputs; ++v)
    pool.push_back(node_ref::input(v));
  auto pick = [&] { return pool[rng() % pool.size()]; };
  std::uint32_t id = 0;
  for (std::size_t i = 0; i < gate_target; ++i) {
    gate g;
    g.id = ++id;
    if (base == basis::demorgan) {
      switch (rng() % 4) {
      case 0:
        g.kind = gate_kind::not_gate();
        g.in0 = pick();
        break;
      case 1:
        g.kind = gate_kind::and_gate();
        g.in0 = pick();
        g.in1 = pick();
        break;
      default:
        g.kind = rng() % 2 ? gate_kind::and_gate() : gate_kind::or_gate();
        g.in0 = pick();
        g.in1 = pick();
        break;
      }
    } else {
      g.kind = gate_kind::b2(std::uint8_t(rng() % 16));
      g.in0 = pick();
      g.in1 = pick();
    }
    c.gates.push_back(g);
    pool.push_back(node_ref::gate(g.id));
  }
  c.output = pool[rng() % pool.size()];
  if (base == basis::b2)
    c.output_negated = rng() % 2;
  return c;
}

/// Mechanically applies a rewrite log to the starting circuit: each step
/// rewires the affected gate's readers to the recorded result and drops the
/// gate. Reproduces normalize()'s output without searching for rules.
inline circuit replay(const circuit& start, const rewrite_log& log) {
  circuit c = start;
  for (const auto& st : log.steps) {
    std::vector<gate> next;
    const node_ref dead = node_ref::gate(st.gate_id);
    for (auto g : c.gates) {
      if (g.id == st.gate_id)
        continue;
      if (st.result) {
        if (g.in0 == dead) {
          if (c.base == basis::b2 && st.result->negated)
            g.kind = gate_kind::b2(
                detail::table_negate_slot(g.kind.table(), slot::left));
          g.in0 = st.result->node;
        }
        if (g.kind.is_binary() && g.in1 == dead) {
          if (c.base == basis::b2 && st.result->negated)
            g.kind = gate_kind::b2(
                detail::table_negate_slot(g.kind.table(), slot::right));
          g.in1 = st.result->node;
        }
      }
      next.push_back(g);
    }
    if (st.result && c.output == dead) {
      if (st.result->node.is_constant()) {
        c.output = node_ref::constant(st.result->node.const_value() !=
                                      (st.result->negated != c.output_negated));
        c.output_negated = false;
      } else {
        c.output = st.result->node;
        c.output_negated = c.output_negated != st.result->negated;
      }
    }
    c.gates = std::move(next);
  }
  return c;
}

/// XOR of all inputs, as the reference parity function.
inline bool parity_of(const assignment& x) {
  bool v = false;
  for (std::size_t i = 0; i < x.size(); ++i)
    v ^= x.get(i);
  return v;
}

inline assignment random_assignment(std::uint32_t n, std::mt19937_64& rng) {
  assignment a(n);
  for (std::uint32_t i = 0; i < n; ++i)
    a.set(i, rng() & 1u);
  return a;
}

} // namespace gatelim::test
