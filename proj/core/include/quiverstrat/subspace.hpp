#pragma once

#include <cstddef>
#include <vector>

#include "quiverstrat/errors.hpp"
#include "quiverstrat/matrix.hpp"

namespace quiverstrat {

// A subspace of F^n, stored by the reduced row echelon basis of its row
// space.  Because the stored basis is canonical, two subspaces are equal as
// sets exactly when their stored matrices are equal, and every quotient
// F^n / U gets canonical coordinates (the non-pivot positions of U).
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() = default;

  static Subspace zero(F f, std::size_t ambient) {
    Subspace s;
    s.basis_ = Mat<F>(f, 0, ambient);
    return s;
  }

  static Subspace full(F f, std::size_t ambient) {
    return from_rows(Mat<F>::identity(f, ambient));
  }

  static Subspace from_rows(Mat<F> rows) {
    Subspace s;
    s.pivots_ = rref_in_place(rows);
    s.basis_ = std::move(rows);
    return s;
  }

  static Subspace span_of(F f, const std::vector<std::vector<Elem>>& vecs,
                          std::size_t ambient) {
    return from_rows(Mat<F>::from_rows(f, vecs, ambient));
  }

  std::size_t ambient() const { return basis_.cols; }
  std::size_t dim() const { return basis_.rows; }
  const Mat<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return basis_.fld; }

  // Ambient coordinates not used as pivots, ascending.  They index a
  // canonical complement, hence canonical coordinates on F^n / this.
  std::vector<std::size_t> copivots() const {
    std::vector<bool> is_piv(ambient(), false);
    for (std::size_t c : pivots_) is_piv[c] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient(); ++c) {
      if (!is_piv[c]) out.push_back(c);
    }
    return out;
  }

  // Canonical representative of v modulo this subspace: subtract basis rows
  // until every pivot coordinate vanishes.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    const F& f = basis_.fld;
    internal_check(v.size() == ambient(), "reduce: ambient mismatch");
    for (std::size_t i = 0; i < dim(); ++i) {
      const Elem& c = v[pivots_[i]];
      if (f.is_zero(c)) continue;
      Elem coef = c;
      for (std::size_t j = 0; j < ambient(); ++j) {
        v[j] = f.sub(v[j], f.mul(coef, basis_.at(i, j)));
      }
    }
    return v;
  }

  bool contains(const std::vector<Elem>& v) const {
    const F& f = basis_.fld;
    std::vector<Elem> r = reduce(v);
    for (const auto& x : r) {
      if (!f.is_zero(x)) return false;
    }
    return true;
  }

  bool contains(const Subspace& other) const {
    internal_check(ambient() == other.ambient(), "contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_.row(i))) return false;
    }
    return true;
  }

  // Coordinates of v in the stored basis; v must lie in the subspace.
  std::vector<Elem> coords_in_basis(const std::vector<Elem>& v) const {
    const F& f = basis_.fld;
    std::vector<Elem> c(dim(), f.zero());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    internal_check(contains(v), "coords_in_basis: vector outside subspace");
    return c;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    internal_check(a.ambient() == b.ambient(), "sum: ambient mismatch");
    return from_rows(a.basis_.vstack(b.basis_));
  }

  // Zassenhaus: row-reduce [A|A; B|0]; rows whose left half vanished carry a
  // basis of the intersection in their right half.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    internal_check(a.ambient() == b.ambient(), "intersect: ambient mismatch");
    const F f = a.basis_.fld;
    std::size_t n = a.ambient();
    Mat<F> top = a.basis_.hstack(a.basis_);
    Mat<F> bot = b.basis_.hstack(Mat<F>::zero(f, b.dim(), n));
    Mat<F> z = top.vstack(bot);
    rref_in_place(z);
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < z.rows; ++i) {
      bool left_zero = true;
      for (std::size_t j = 0; j < n; ++j) {
        if (!f.is_zero(z.at(i, j))) {
          left_zero = false;
          break;
        }
      }
      if (!left_zero) continue;
      std::vector<Elem> r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = z.at(i, n + j);
      rows.push_back(std::move(r));
    }
    return span_of(f, rows, n);
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Mat<F> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace quiverstrat
