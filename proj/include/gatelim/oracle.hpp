#pragma once

/*
  Brute-force spec oracles and witness verification. Everything here goes
  through plain evaluation only, so these functions stay independent of the
  structural algorithms they are used to check.
*/

#include "circuit.hpp"
#include "errors.hpp"
#include "gf2.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace gatelim {

/// Assignments enumerated in increasing integer value with x1 as the most
/// significant bit; entry k is the circuit value on assignment k.
inline bit_vector truth_table(const circuit& c, std::size_t input_cap = 16) {
  if (c.num_inputs > input_cap)
    throw resource_error("truth_table: input count exceeds cap");
  const std::uint64_t rows = std::uint64_t{1} << c.num_inputs;
  bit_vector table(rows);
  assignment x(c.num_inputs);
  for (std::uint64_t k = 0; k < rows; ++k) {
    for (std::uint32_t i = 0; i < c.num_inputs; ++i)
      x.set(i, (k >> (c.num_inputs - 1 - i)) & 1u);
    table.set(k, evaluate(c, x));
  }
  return table;
}

/// The parity of the inputs indexed by I, offset by c.
struct xor_spec {
  std::vector<std::uint32_t> indices; // 1-based
  bool offset = false;

  bool operator()(const assignment& x) const {
    bool v = offset;
    for (auto i : indices)
      v ^= x.get(i - 1);
    return v;
  }
};

/// The multiplexer on n address bits and 2^n data bits; a1 is the most
/// significant address bit and selects between data halves.
struct mux_spec_fn {
  std::uint32_t addr_bits = 0;

  bool operator()(const assignment& x) const {
    const std::uint32_t n = addr_bits;
    if (x.size() != n + (std::size_t{1} << n))
      throw input_error("mux spec: assignment length mismatch");
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      idx = (idx << 1) | (x.get(i) ? 1u : 0u);
    return x.get(n + idx);
  }
};

/// Claim that the circuit is constant on an affine subspace.
struct constant_on_subspace_spec {
  affine_subspace subspace;
  bool value = false;
};

using spec_function = std::variant<xor_spec, mux_spec_fn, constant_on_subspace_spec>;

/// True iff the witness exhibits a disagreement between the circuit and the
/// spec function. Cost is one evaluation.
inline bool verify_witness(const circuit& c, const spec_function& spec, const assignment& w) {
  if (w.size() != c.num_inputs)
    throw input_error("verify_witness: assignment length mismatch");
  if (const auto* x = std::get_if<xor_spec>(&spec))
    return evaluate(c, w) != (*x)(w);
  if (const auto* m = std::get_if<mux_spec_fn>(&spec))
    return evaluate(c, w) != (*m)(w);
  const auto& cs = std::get<constant_on_subspace_spec>(spec);
  if (!subspace_contains(cs.subspace, w))
    return false;
  return evaluate(c, w) != cs.value;
}

} // namespace gatelim
