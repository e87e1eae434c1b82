#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "quiverstrat/errors.hpp"

namespace quiverstrat {

// Dense row-major matrix over an exact field F.  The field object travels
// with the matrix so all arithmetic stays parameter-correct (this matters
// for F_p, where the modulus is runtime data).
template <class F>
struct Mat {
  using Elem = typename F::Elem;

  F fld{};
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(F f, std::size_t r, std::size_t c)
      : fld(f), rows(r), cols(c), a(r * c, f.zero()) {}

  static Mat zero(F f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

  static Mat identity(F f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  static Mat from_rows(F f, const std::vector<std::vector<Elem>>& rws,
                       std::size_t c) {
    Mat m(f, rws.size(), c);
    for (std::size_t i = 0; i < rws.size(); ++i) {
      internal_check(rws[i].size() == c, "row length mismatch");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
  }

  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  std::vector<Elem> row(std::size_t i) const {
    return std::vector<Elem>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
  }

  bool is_zero() const {
    for (const auto& x : a) {
      if (!fld.is_zero(x)) return false;
    }
    return true;
  }

  bool operator==(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!fld.eq(a[k], o.a[k])) return false;
    }
    return true;
  }

  Mat mul(const Mat& o) const {
    internal_check(cols == o.rows, "matrix product shape mismatch");
    Mat r(fld, rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < cols; ++k) {
        const Elem& x = at(i, k);
        if (fld.is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols; ++j) {
          r.at(i, j) = fld.add(r.at(i, j), fld.mul(x, o.at(k, j)));
        }
      }
    }
    return r;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    internal_check(v.size() == cols, "matrix-vector shape mismatch");
    std::vector<Elem> r(rows, fld.zero());
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!fld.is_zero(at(i, j))) {
          r[i] = fld.add(r[i], fld.mul(at(i, j), v[j]));
        }
      }
    }
    return r;
  }

  Mat add(const Mat& o) const {
    internal_check(rows == o.rows && cols == o.cols, "matrix sum shape");
    Mat r = *this;
    for (std::size_t k = 0; k < a.size(); ++k) r.a[k] = fld.add(r.a[k], o.a[k]);
    return r;
  }

  Mat scale(const Elem& c) const {
    Mat r = *this;
    for (auto& x : r.a) x = fld.mul(x, c);
    return r;
  }

  Mat transpose() const {
    Mat r(fld, cols, rows);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    }
    return r;
  }

  // Vertical stack: this on top of o.
  Mat vstack(const Mat& o) const {
    internal_check(cols == o.cols, "vstack column mismatch");
    Mat r(fld, rows + o.rows, cols);
    std::copy(a.begin(), a.end(), r.a.begin());
    std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
    return r;
  }

  // Horizontal stack: this on the left of o.
  Mat hstack(const Mat& o) const {
    internal_check(rows == o.rows, "hstack row mismatch");
    Mat r(fld, rows, cols + o.cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
  }
};

// In-place Gauss-Jordan reduction to reduced row echelon form.  Pivots are
// chosen scanning columns left to right, rows top to bottom, so the result
// is canonical for the row space.  Zero rows are trimmed.  Returns the pivot
// column indices in ascending order.
template <class F>
std::vector<std::size_t> rref_in_place(Mat<F>& m) {
  const F& f = m.fld;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (!f.is_zero(m.at(i, c))) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    }
    typename F::Elem invp = f.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), invp);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || f.is_zero(m.at(i, c))) continue;
      typename F::Elem coef = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(coef, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.a.resize(r * m.cols);
  m.rows = r;
  return pivots;
}

template <class F>
std::size_t rank(Mat<F> m) {
  return rref_in_place(m).size();
}

// Basis of the right null space { x : m x = 0 }, one vector per row, in the
// canonical form induced by the reduced echelon form of m (free coordinates
// ascending, each basis vector has a 1 in its free coordinate).
template <class F>
Mat<F> kernel_basis(Mat<F> m) {
  const F f = m.fld;
  std::size_t n = m.cols;
  std::vector<std::size_t> piv = rref_in_place(m);
  std::vector<bool> is_piv(n, false);
  for (std::size_t c : piv) is_piv[c] = true;
  Mat<F> k(f, n - piv.size(), n);
  std::size_t out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_piv[c]) continue;
    k.at(out, c) = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) {
      k.at(out, piv[i]) = f.neg(m.at(i, c));
    }
    ++out;
  }
  return k;
}

// One solution of A x = b, or nullopt if the system is inconsistent.  Free
// coordinates are set to zero.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(
    const Mat<F>& A, const std::vector<typename F::Elem>& b) {
  const F& f = A.fld;
  internal_check(b.size() == A.rows, "solve shape mismatch");
  Mat<F> aug(f, A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<std::size_t> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
  std::vector<typename F::Elem> x(A.cols, f.zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, A.cols);
  return x;
}

}  // namespace quiverstrat
