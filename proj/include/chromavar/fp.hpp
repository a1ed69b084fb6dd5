#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "chromavar/common.hpp"

namespace chromavar {

// Matrix over F_p with `rows`x`cols` entries, row-major. A k x j matrix is
// the morphism F_p^j -> F_p^k. Dimension 0 gives a genuinely empty matrix.
struct FpMat {
  int p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> a;

  FpMat() = default;
  FpMat(int p_, int rows_, int cols_)
      : p(p_), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_) * cols_, 0) {}

  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }

  friend bool operator==(const FpMat& x, const FpMat& y) {
    return x.p == y.p && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend auto operator<=>(const FpMat& x, const FpMat& y) = default;
};

inline FpMat fp_identity(int p, int n) {
  FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

// x (k x j) composed with y (j x i): the morphism F^i -> F^k.
inline FpMat fp_mul(const FpMat& x, const FpMat& y) {
  if (x.cols != y.rows || x.p != y.p)
    throw internal_error("fp_mul: dimension or prime mismatch");
  FpMat r(x.p, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      int s = 0;
      for (int t = 0; t < x.cols; ++t) s += x.at(i, t) * y.at(t, j);
      r.at(i, j) = static_cast<uint8_t>(s % x.p);
    }
  return r;
}

inline std::vector<uint8_t> fp_apply(const FpMat& m, const std::vector<uint8_t>& v) {
  std::vector<uint8_t> r(m.rows, 0);
  for (int i = 0; i < m.rows; ++i) {
    int s = 0;
    for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
    r[i] = static_cast<uint8_t>(s % m.p);
  }
  return r;
}

inline int fp_rank(FpMat m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    // scale pivot row to 1
    int inv = 1;
    while ((m.at(rank, col) * inv) % m.p != 1) ++inv;
    for (int c = 0; c < m.cols; ++c)
      m.at(rank, c) = static_cast<uint8_t>((m.at(rank, c) * inv) % m.p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      int f = m.at(r, col);
      for (int c = 0; c < m.cols; ++c)
        m.at(r, c) = static_cast<uint8_t>((m.at(r, c) + (m.p - f) * m.at(rank, c)) % m.p);
    }
    ++rank;
  }
  return rank;
}

inline bool fp_invertible(const FpMat& m) {
  return m.rows == m.cols && fp_rank(m) == m.rows;
}

// Number of k x j matrices: p^(k*j). Throws cap_exceeded past the cap.
inline long long hom_count(int p, int rows, int cols, long long cap = Caps{}.max_enum) {
  return checked_pow(p, rows * cols, cap, "hom_count");
}

// Matrices are enumerated lexicographically on the row-major entry vector:
// index 0 is the zero matrix, the last entry varies fastest.
inline FpMat mat_of_index(int p, int rows, int cols, long long idx) {
  FpMat m(p, rows, cols);
  for (int i = rows * cols - 1; i >= 0; --i) {
    m.a[i] = static_cast<uint8_t>(idx % p);
    idx /= p;
  }
  return m;
}

inline long long index_of_mat(const FpMat& m) {
  long long idx = 0;
  for (uint8_t e : m.a) idx = idx * m.p + e;
  return idx;
}

inline std::string mat_entries_string(const FpMat& m) {
  std::string s;
  s.reserve(m.a.size());
  for (uint8_t e : m.a) s += static_cast<char>('0' + e);
  return s;
}

// All p^(j*k) matrices representing morphisms F^j -> F^k, index order.
inline std::vector<FpMat> enumerate_linear_maps(int p, int j, int k,
                                                const Caps& caps = {}) {
  long long n = hom_count(p, k, j, caps.max_enum);
  std::vector<FpMat> out;
  out.reserve(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) out.push_back(mat_of_index(p, k, j, i));
  return out;
}

// Indices (into the k x k enumeration) of the invertible matrices.
inline std::vector<long long> enumerate_gl_indices(int p, int k,
                                                   const Caps& caps = {}) {
  long long n = hom_count(p, k, k, caps.max_enum);
  std::vector<long long> out;
  for (long long i = 0; i < n; ++i)
    if (fp_invertible(mat_of_index(p, k, k, i))) out.push_back(i);
  return out;
}

}  // namespace chromavar
