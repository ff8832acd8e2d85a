#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "vbraid/bigint.hpp"

namespace vbraid {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }
  void add_row(std::size_t dst, std::size_t src, const Int& q) {  // row dst += q * row src
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SmithForm {
  IntMatrix S, U, V;  // U * A * V = S, U and V unimodular
  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
      if (S.at(i, i) != 0) d.push_back(S.at(i, i));
    return d;
  }
};

namespace detail {

// Standard elimination with minimal-absolute-value pivot; clarity over speed
// at desk scale. Both transforms are accumulated.
inline SmithForm smith_unchecked(const IntMatrix& A) {
  SmithForm f{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
  IntMatrix& S = f.S;
  std::size_t t = 0;
  const std::size_t R = S.rows(), C = S.cols();
  while (t < R && t < C) {
    // locate minimal nonzero pivot in the trailing block
    std::size_t pi = 0, pj = 0;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        if (S.at(i, j) == 0) continue;
        Int v = abs(S.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    if (pi != t) {
      S.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
    }
    if (pj != t) {
      S.swap_cols(t, pj);
      f.V.swap_cols(t, pj);
    }
    bool clean = true;
    for (std::size_t i = t + 1; i < R; ++i)
      if (S.at(i, t) != 0) {
        Int q = S.at(i, t) / S.at(t, t);
        if (q != 0) {
          S.add_row(i, t, -q);
          f.U.add_row(i, t, -q);
        }
        if (S.at(i, t) != 0) clean = false;
      }
    for (std::size_t j = t + 1; j < C; ++j)
      if (S.at(t, j) != 0) {
        Int q = S.at(t, j) / S.at(t, t);
        if (q != 0) {
          S.add_col(j, t, -q);
          f.V.add_col(j, t, -q);
        }
        if (S.at(t, j) != 0) clean = false;
      }
    if (!clean) continue;  // smaller pivot now exists in the block
    ++t;
  }
  // positive diagonal
  for (std::size_t i = 0; i < std::min(R, C); ++i)
    if (S.at(i, i) < 0) {
      S.negate_row(i);
      f.U.negate_row(i);
    }
  // divisibility chain d_i | d_{i+1}
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < std::min(R, C); ++i) {
      Int a = S.at(i, i), b = S.at(i + 1, i + 1);
      if (a != 0 && b != 0 && b % a != 0) {
        // fold row i+1 into row i and re-eliminate the 2x2 block
        S.add_row(i, i + 1, 1);
        f.U.add_row(i, i + 1, 1);
        while (S.at(i, i + 1) != 0 || S.at(i + 1, i) != 0) {
          if (S.at(i, i + 1) != 0) {
            if (abs(S.at(i, i + 1)) < abs(S.at(i, i))) {
              S.swap_cols(i, i + 1);
              f.V.swap_cols(i, i + 1);
            }
            Int q = S.at(i, i + 1) / S.at(i, i);
            S.add_col(i + 1, i, -q);
            f.V.add_col(i + 1, i, -q);
          }
          if (S.at(i + 1, i) != 0) {
            if (abs(S.at(i + 1, i)) < abs(S.at(i, i))) {
              S.swap_rows(i, i + 1);
              f.U.swap_rows(i, i + 1);
            }
            Int q = S.at(i + 1, i) / S.at(i, i);
            S.add_row(i + 1, i, -q);
            f.U.add_row(i + 1, i, -q);
          }
        }
        if (S.at(i, i) < 0) {
          S.negate_row(i);
          f.U.negate_row(i);
        }
        if (S.at(i + 1, i + 1) < 0) {
          S.negate_row(i + 1);
          f.U.negate_row(i + 1);
        }
        changed = true;
      } else if (a == 0 && b != 0) {
        S.swap_rows(i, i + 1);
        f.U.swap_rows(i, i + 1);
        S.swap_cols(i, i + 1);
        f.V.swap_cols(i, i + 1);
        changed = true;
      }
    }
  }
  return f;
}

inline bool is_identity(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace detail

// Smith normal form with the postcondition verified on every call:
// U·A·V = S diagonal with d_i | d_{i+1}, U and V unimodular (their own
// Smith forms are the identity).
inline SmithForm smith_normal_form(const IntMatrix& A) {
  SmithForm f = detail::smith_unchecked(A);
  if (!(f.U * A * f.V == f.S)) throw std::logic_error("SNF postcondition failed: U*A*V != S");
  auto d = f.diagonal();
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i + 1] % d[i] != 0) throw std::logic_error("SNF postcondition failed: divisibility");
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j && f.S.at(i, j) != 0) throw std::logic_error("SNF postcondition failed: not diagonal");
  if (!detail::is_identity(detail::smith_unchecked(f.U).S) ||
      !detail::is_identity(detail::smith_unchecked(f.V).S))
    throw std::logic_error("SNF postcondition failed: transform not unimodular");
  return f;
}

// Integer row echelon (Hermite-style) basis of the row lattice; pivots
// positive, rows sorted by pivot column, entries above pivots reduced.
class RowEchelon {
public:
  explicit RowEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }

  void insert(std::vector<Int> row) {
    std::size_t c = 0;
    while (c < width_) {
      if (row[c] == 0) {
        ++c;
        continue;
      }
      auto it = pivot_of_col_.find(c);
      if (it == pivot_of_col_.end()) {
        if (row[c] < 0)
          for (Int& x : row) x = -x;
        pivot_of_col_[c] = rows_.size();
        rows_.push_back(std::move(row));
        return;
      }
      std::vector<Int>& b = rows_[it->second];
      if (row[c] % b[c] == 0) {
        Int q = row[c] / b[c];
        for (std::size_t j = c; j < width_; ++j) row[j] -= q * b[j];
      } else {
        // gcd-combine: replace the basis row, keep reducing the remainder
        Int g, x, y;
        xgcd(b[c], row[c], g, x, y);
        Int bc = b[c] / g, rc = row[c] / g;
        std::vector<Int> nb(width_), rem(width_);
        for (std::size_t j = 0; j < width_; ++j) {
          nb[j] = x * b[j] + y * row[j];
          rem[j] = bc * row[j] - rc * b[j];
        }
        if (nb[c] < 0)
          for (Int& v : nb) v = -v;
        b = std::move(nb);
        row = std::move(rem);
      }
    }
  }

  // rows sorted by pivot column
  std::vector<std::vector<Int>> sorted_rows() const {
    std::vector<std::vector<Int>> out;
    for (auto& [c, idx] : pivot_of_col_) out.push_back(rows_[idx]);
    return out;
  }

  std::size_t rank() const { return rows_.size(); }

  static void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      Int q = old_r / r;
      Int tmp = old_r - q * r;
      old_r = r;
      r = tmp;
      tmp = old_s - q * s;
      old_s = s;
      s = tmp;
      tmp = old_t - q * t;
      old_t = t;
      t = tmp;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    g = old_r;
    x = old_s;
    y = old_t;
  }

private:
  std::size_t width_;
  std::vector<std::vector<Int>> rows_;
  std::map<std::size_t, std::size_t> pivot_of_col_;
};

}  // namespace vbraid
