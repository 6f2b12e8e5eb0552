#pragma once

#include "errors.hpp"

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gatelim {

/// Dense bit vector over GF(2), packed into 64-bit words.
/// Unused high bits of the last word are kept zero so that operator== is
/// plain word comparison.
class bit_vector {
public:
  bit_vector() = default;

  explicit bit_vector(std::size_t n, bool fill = false)
      : n_(n), words_((n + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static bit_vector from_string(std::string_view s) {
    bit_vector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(i, true);
      else if (s[i] != '0')
        throw parse_error("bit string must contain only 0/1 characters");
    }
    return v;
  }

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bit_vector& operator^=(const bit_vector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] ^= o.words_[w];
    return *this;
  }

  friend bit_vector operator^(bit_vector a, const bit_vector& b) { return a ^= b; }

  bool none() const {
    for (auto w : words_)
      if (w)
        return false;
    return true;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool parity() const { return popcount() & 1u; }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i))
        s[i] = '1';
    return s;
  }

  friend bool operator==(const bit_vector& a, const bit_vector& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major bit matrix over GF(2).
class bit_matrix {
public:
  bit_matrix() = default;

  bit_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + 63) / 64),
        words_(rows * stride_, 0) {}

  static bit_matrix identity(std::size_t n) {
    bit_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.set(i, i, true);
    return m;
  }

  static bit_matrix from_columns(const std::vector<bit_vector>& cols, std::size_t rows) {
    bit_matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows)
        throw input_error("column length does not match row count");
      for (std::size_t r = 0; r < rows; ++r)
        m.set(r, c, cols[c].get(r));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }

  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    if (v)
      words_[r * stride_ + c / 64] |= mask;
    else
      words_[r * stride_ + c / 64] &= ~mask;
  }

  void xor_rows(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < stride_; ++w)
      words_[dst * stride_ + w] ^= words_[src * stride_ + w];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t w = 0; w < stride_; ++w)
      std::swap(words_[a * stride_ + w], words_[b * stride_ + w]);
  }

  bit_vector row(std::size_t r) const {
    bit_vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
      v.set(c, get(r, c));
    return v;
  }

  bit_vector column(std::size_t c) const {
    bit_vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      v.set(r, get(r, c));
    return v;
  }

  /// M * x over GF(2).
  bit_vector apply(const bit_vector& x) const {
    if (x.size() != cols_)
      throw input_error("matrix-vector dimension mismatch");
    bit_vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      bool acc = false;
      for (std::size_t c = 0; c < cols_; ++c)
        acc ^= get(r, c) && x.get(c);
      y.set(r, acc);
    }
    return y;
  }

  bit_matrix multiply(const bit_matrix& o) const {
    if (cols_ != o.rows_)
      throw input_error("matrix-matrix dimension mismatch");
    bit_matrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k)
        if (get(r, k))
          for (std::size_t c = 0; c < o.cols_; ++c)
            if (o.get(k, c))
              out.set(r, c, !out.get(r, c));
    return out;
  }

  friend bool operator==(const bit_matrix& a, const bit_matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace gatelim
