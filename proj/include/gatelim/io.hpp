#pragma once

/*
  Text formats.

  Circuit files, line based:

    basis demorgan|b2
    inputs <n>              or  inputs addr=<n> data=<N>
    gate g<k> = NOT <src>
    gate g<k> = AND <src> <src>
    gate g<k> = OR <src> <src>
    gate g<k> = B2 <tttt> <src> <src>
    output <src>            or  output !<src>     (b2 only)

  Sources: 0, 1, x<i>, a<i> (address-split circuits), g<k>; declared before
  use. '#' starts a comment. tttt is f(0,0)f(0,1)f(1,0)f(1,1).

  Subspace files:

    ambient <n>
    dim <delta>
    <delta> lines of n-bit column strings
    offset <n-bit string>
*/

#include "circuit.hpp"
#include "errors.hpp"
#include "gf2.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gatelim {

namespace detail {

inline std::uint32_t parse_uint(std::string_view s, const std::string& what) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw parse_error("bad " + what + ": '" + std::string(s) + "'");
  return v;
}

inline std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#')
      break;
    toks.push_back(t);
  }
  return toks;
}

} // namespace detail

inline node_ref parse_source(std::string_view tok, const circuit& c) {
  if (tok == "0")
    return node_ref::constant(false);
  if (tok == "1")
    return node_ref::constant(true);
  if (tok.size() >= 2 && (tok[0] == 'x' || tok[0] == 'a' || tok[0] == 'g')) {
    const std::uint32_t k = detail::parse_uint(tok.substr(1), "source index");
    if (tok[0] == 'g') {
      if (!c.find(k))
        throw parse_error("source g" + std::to_string(k) + " used before declaration");
      return node_ref::gate(k);
    }
    std::uint32_t var = k;
    if (tok[0] == 'a') {
      if (c.num_addr == 0)
        throw parse_error("address source in a circuit without an address split");
      if (k < 1 || k > c.num_addr)
        throw parse_error("address index out of range: " + std::string(tok));
    } else {
      if (c.num_addr > 0)
        var = c.num_addr + k;
      if (k < 1 || var > c.num_inputs)
        throw parse_error("input index out of range: " + std::string(tok));
    }
    return node_ref::input(var);
  }
  throw parse_error("bad source token: '" + std::string(tok) + "'");
}

inline std::string source_name(node_ref n, const circuit& c) {
  switch (n.k) {
  case node_ref::kind::constant:
    return n.const_value() ? "1" : "0";
  case node_ref::kind::input:
    if (c.num_addr > 0) {
      if (n.index <= c.num_addr)
        return "a" + std::to_string(n.index);
      return "x" + std::to_string(n.index - c.num_addr);
    }
    return "x" + std::to_string(n.index);
  case node_ref::kind::gate:
    return "g" + std::to_string(n.index);
  }
  return {};
}

inline circuit parse_circuit(std::istream& in) {
  circuit c;
  bool saw_basis = false, saw_inputs = false, saw_output = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize(line);
    if (toks.empty())
      continue;
    auto fail = [&](const std::string& msg) {
      throw parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (toks[0] == "basis") {
      if (toks.size() != 2)
        fail("expected: basis demorgan|b2");
      if (toks[1] == "demorgan")
        c.base = basis::demorgan;
      else if (toks[1] == "b2")
        c.base = basis::b2;
      else
        fail("unknown basis '" + toks[1] + "'");
      saw_basis = true;
    } else if (toks[0] == "inputs") {
      if (toks.size() == 2 && toks[1].find('=') == std::string::npos) {
        c.num_inputs = detail::parse_uint(toks[1], "input count");
      } else if (toks.size() == 3 && toks[1].rfind("addr=", 0) == 0 &&
                 toks[2].rfind("data=", 0) == 0) {
        c.num_addr = detail::parse_uint(std::string_view(toks[1]).substr(5), "addr count");
        const std::uint32_t data =
            detail::parse_uint(std::string_view(toks[2]).substr(5), "data count");
        c.num_inputs = c.num_addr + data;
      } else {
        fail("expected: inputs <n> or inputs addr=<n> data=<N>");
      }
      saw_inputs = true;
    } else if (toks[0] == "gate") {
      if (!saw_inputs)
        fail("gate before inputs line");
      if (toks.size() < 5 || toks[2] != "=" || toks[1][0] != 'g')
        fail("expected: gate g<k> = KIND <sources>");
      gate g;
      g.id = detail::parse_uint(std::string_view(toks[1]).substr(1), "gate id");
      if (c.find(g.id))
        fail("duplicate gate id g" + std::to_string(g.id));
      const std::string& kind = toks[3];
      if (kind == "NOT") {
        if (toks.size() != 5)
          fail("NOT takes one source");
        g.kind = gate_kind::not_gate();
        g.in0 = parse_source(toks[4], c);
      } else if (kind == "AND" || kind == "OR") {
        if (toks.size() != 6)
          fail(kind + " takes two sources");
        g.kind = kind == "AND" ? gate_kind::and_gate() : gate_kind::or_gate();
        g.in0 = parse_source(toks[4], c);
        g.in1 = parse_source(toks[5], c);
      } else if (kind == "B2") {
        if (toks.size() != 7)
          fail("B2 takes a truth table and two sources");
        g.kind = gate_kind::b2_from_string(toks[4]);
        g.in0 = parse_source(toks[5], c);
        g.in1 = parse_source(toks[6], c);
      } else {
        fail("unknown gate kind '" + kind + "'");
      }
      c.gates.push_back(g);
    } else if (toks[0] == "output") {
      if (toks.size() != 2)
        fail("expected: output <src>");
      std::string_view src = toks[1];
      if (!src.empty() && src[0] == '!') {
        c.output_negated = true;
        src.remove_prefix(1);
      }
      c.output = parse_source(src, c);
      saw_output = true;
    } else {
      fail("unknown directive '" + toks[0] + "'");
    }
  }
  if (!saw_basis)
    throw parse_error("missing basis line");
  if (!saw_inputs)
    throw parse_error("missing inputs line");
  if (!saw_output)
    throw parse_error("missing output line");
  auto errs = validate(c);
  if (!errs.empty()) {
    std::string msg = "invalid circuit:";
    for (const auto& e : errs)
      msg += "\n  " + e;
    throw parse_error(msg);
  }
  return c;
}

inline circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

inline circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open circuit file: " + path);
  return parse_circuit(in);
}

inline std::string print_circuit(const circuit& c) {
  std::ostringstream out;
  out << "basis " << (c.base == basis::b2 ? "b2" : "demorgan") << "\n";
  if (c.num_addr > 0)
    out << "inputs addr=" << c.num_addr << " data=" << (c.num_inputs - c.num_addr) << "\n";
  else
    out << "inputs " << c.num_inputs << "\n";
  for (const auto& g : c.gates) {
    out << "gate g" << g.id << " = ";
    switch (g.kind.kind()) {
    case gate_kind::op::not_op:
      out << "NOT " << source_name(g.in0, c);
      break;
    case gate_kind::op::and_op:
    case gate_kind::op::or_op:
      out << (g.kind.kind() == gate_kind::op::and_op ? "AND " : "OR ")
          << source_name(g.in0, c) << " " << source_name(g.in1, c);
      break;
    case gate_kind::op::table_op:
      out << "B2 " << g.kind.table_string() << " " << source_name(g.in0, c) << " "
          << source_name(g.in1, c);
      break;
    }
    out << "\n";
  }
  out << "output " << (c.output_negated ? "!" : "") << source_name(c.output, c) << "\n";
  return out.str();
}

inline void save_circuit(const circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot open file for writing: " + path);
  out << print_circuit(c);
}

inline affine_subspace parse_subspace(std::istream& in) {
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    auto toks = detail::tokenize(line);
    if (!toks.empty())
      rows.push_back(std::move(toks));
  }
  if (rows.size() < 3 || rows[0].size() != 2 || rows[0][0] != "ambient" ||
      rows[1].size() != 2 || rows[1][0] != "dim")
    throw parse_error("subspace file must start with 'ambient <n>' and 'dim <d>'");
  const std::size_t n = detail::parse_uint(rows[0][1], "ambient dimension");
  const std::size_t dim = detail::parse_uint(rows[1][1], "dimension");
  if (rows.size() != 2 + dim + 1)
    throw parse_error("subspace file must have dim column lines plus an offset line");
  std::vector<bit_vector> cols;
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[2 + i].size() != 1 || rows[2 + i][0].size() != n)
      throw parse_error("column " + std::to_string(i + 1) + " must be an n-bit string");
    cols.push_back(bit_vector::from_string(rows[2 + i][0]));
  }
  const auto& off = rows[2 + dim];
  if (off.size() != 2 || off[0] != "offset" || off[1].size() != n)
    throw parse_error("last line must be 'offset <n-bit string>'");
  affine_subspace s{bit_matrix::from_columns(cols, n), bit_vector::from_string(off[1])};
  try {
    validate_subspace(s);
  } catch (const input_error& e) {
    throw parse_error(e.what());
  }
  return s;
}

inline affine_subspace load_subspace(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open subspace file: " + path);
  return parse_subspace(in);
}

inline std::string print_subspace(const affine_subspace& s) {
  std::ostringstream out;
  out << "ambient " << s.ambient() << "\n";
  out << "dim " << s.dim() << "\n";
  for (std::size_t c = 0; c < s.dim(); ++c)
    out << s.direction.column(c).to_string() << "\n";
  out << "offset " << s.offset.to_string() << "\n";
  return out.str();
}

} // namespace gatelim
