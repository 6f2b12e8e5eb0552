#pragma once

#include "bits.hpp"
#include "errors.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace gatelim {

namespace detail {

/// Row echelon form with leftmost-pivot selection. Returns the pivot column
/// of each pivot row, in row order. Mutates m in place to reduced row
/// echelon form (pivot columns cleared above and below).
inline std::vector<std::size_t> reduce(bit_matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && !m.get(sel, col))
      ++sel;
    if (sel == m.rows())
      continue;
    m.swap_rows(row, sel);
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != row && m.get(r, col))
        m.xor_rows(r, row);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace detail

inline std::size_t rank(bit_matrix m) { return detail::reduce(m).size(); }

/// Any x with Mx = v, or nullopt when the system is inconsistent.
/// Deterministic: leftmost pivots, free variables set to zero.
inline std::optional<bit_vector> solve(const bit_matrix& m, const bit_vector& v) {
  if (v.size() != m.rows())
    throw input_error("solve: right-hand side length does not match row count");
  bit_matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      aug.set(r, c, m.get(r, c));
    aug.set(r, m.cols(), v.get(r));
  }
  auto pivots = detail::reduce(aug);
  bit_vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols())
      return std::nullopt; // pivot in the augmented column
    x.set(pivots[i], aug.get(i, m.cols()));
  }
  return x;
}

/// Linearly independent vectors spanning {x : Mx = 0}. Basis size equals
/// cols - rank(M); vectors are emitted in ascending free-column order.
inline std::vector<bit_vector> kernel_basis(const bit_matrix& m) {
  bit_matrix r = m;
  auto pivots = detail::reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<bit_vector> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col])
      continue;
    bit_vector b(m.cols());
    b.set(free_col, true);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (r.get(i, free_col))
        b.set(pivots[i], true);
    basis.push_back(std::move(b));
  }
  return basis;
}

/// Affine subspace {direction * z + offset : z in GF(2)^dim} of GF(2)^n.
/// The direction matrix is n x dim with full column rank.
struct affine_subspace {
  bit_matrix direction;
  bit_vector offset;

  std::size_t ambient() const { return offset.size(); }
  std::size_t dim() const { return direction.cols(); }

  static affine_subspace full(std::size_t n) {
    return {bit_matrix::identity(n), bit_vector(n)};
  }

  bit_vector point(const bit_vector& z) const {
    return direction.apply(z) ^ offset;
  }
};

inline void validate_subspace(const affine_subspace& s) {
  if (s.direction.rows() != s.ambient())
    throw input_error("subspace: direction row count does not match ambient dimension");
  if (s.dim() > s.ambient())
    throw input_error("subspace: dimension exceeds ambient dimension");
  if (rank(s.direction) != s.dim())
    throw input_error("subspace: direction matrix is not full column rank");
}

inline bool subspace_contains(const affine_subspace& s, const bit_vector& p) {
  if (p.size() != s.ambient())
    throw input_error("subspace_contains: ambient dimension mismatch");
  return solve(s.direction, p ^ s.offset).has_value();
}

inline bool subspace_subset(const affine_subspace& a, const affine_subspace& b) {
  if (a.ambient() != b.ambient())
    throw input_error("subspace_subset: ambient dimension mismatch");
  if (!solve(b.direction, a.offset ^ b.offset))
    return false;
  for (std::size_t c = 0; c < a.dim(); ++c)
    if (!solve(b.direction, a.direction.column(c)))
      return false;
  return true;
}

/// All 2^dim points, z enumerated in increasing integer value (z_1 is the
/// least significant coordinate).
inline std::vector<bit_vector> enumerate_points(const affine_subspace& s,
                                                std::size_t dim_cap = 20) {
  if (s.dim() > dim_cap)
    throw resource_error("enumerate_points: subspace dimension exceeds cap");
  std::vector<bit_vector> pts;
  pts.reserve(std::size_t{1} << s.dim());
  for (std::uint64_t z = 0; z < (std::uint64_t{1} << s.dim()); ++z) {
    bit_vector zv(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      zv.set(i, (z >> i) & 1u);
    pts.push_back(s.point(zv));
  }
  return pts;
}

template <typename Rng>
bit_vector random_point(const affine_subspace& s, Rng& rng) {
  bit_vector z(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    z.set(i, rng() & 1u);
  return s.point(z);
}

/// Intersection of a subspace with a hyperplane (dimension n-1), as a
/// subspace description. The result has dimension d' or d'-1, derived from
/// rank([U | V]); its direction matrix is full column rank.
inline affine_subspace affine_intersect(const affine_subspace& s1,
                                        const affine_subspace& s2) {
  const std::size_t n = s1.ambient();
  if (s2.ambient() != n)
    throw input_error("affine_intersect: ambient dimension mismatch");
  if (s2.dim() != n - 1)
    throw input_error("affine_intersect: second operand must be a hyperplane");

  const std::size_t d1 = s1.dim();
  bit_matrix joint(n, d1 + s2.dim());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d1; ++c)
      joint.set(r, c, s1.direction.get(r, c));
    for (std::size_t c = 0; c < s2.dim(); ++c)
      joint.set(r, d1 + c, s2.direction.get(r, c));
  }

  auto sol = solve(joint, s1.offset ^ s2.offset);
  if (!sol)
    throw input_error("affine_intersect: intersection is empty");

  auto kernel = kernel_basis(joint);
  // kernel vectors project injectively onto their first d1 coordinates, so
  // the projected columns stay independent and W = U * X keeps full rank.
  std::vector<bit_vector> x_cols;
  x_cols.reserve(kernel.size());
  for (const auto& k : kernel) {
    bit_vector x(d1);
    for (std::size_t i = 0; i < d1; ++i)
      x.set(i, k.get(i));
    x_cols.push_back(std::move(x));
  }

  bit_vector x0(d1);
  for (std::size_t i = 0; i < d1; ++i)
    x0.set(i, sol->get(i));

  affine_subspace out;
  out.direction = s1.direction.multiply(bit_matrix::from_columns(x_cols, d1));
  out.offset = s1.direction.apply(x0) ^ s1.offset;
  return out;
}

/// The hyperplane {x in GF(2)^n : xor of x_i over i in I equals c}.
/// Indices are 1-based.
inline affine_subspace constraint_to_affine(const std::vector<std::uint32_t>& indices,
                                            bool c, std::size_t n) {
  if (indices.empty())
    throw input_error("constraint_to_affine: index set must be non-empty");
  bit_matrix indicator(1, n);
  for (auto i : indices) {
    if (i < 1 || i > n)
      throw input_error("constraint_to_affine: index out of range");
    indicator.set(0, i - 1, true);
  }
  bit_vector rhs(1);
  rhs.set(0, c);
  auto z0 = solve(indicator, rhs);
  auto kernel = kernel_basis(indicator);
  affine_subspace out;
  out.direction = bit_matrix::from_columns(kernel, n);
  out.offset = *z0;
  return out;
}

} // namespace gatelim
