#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverstrat/errors.hpp"
#include "quiverstrat/matrix.hpp"
#include "quiverstrat/quiver.hpp"
#include "quiverstrat/subspace.hpp"

namespace quiverstrat {

// One summand of a relation: coeff * path.  A relation is a k-linear
// combination of parallel paths (all terms share source and target), each of
// length at least one, that is declared to vanish in the algebra.
template <class F>
struct RelTerm {
  typename F::Elem coeff;
  PathWord path;
};

template <class F>
using Relation = std::vector<RelTerm<F>>;

struct TableBasisElem {
  std::string label;
  int src = 0;
  int dst = 0;
  int degree = 0;  // path length (or grading degree for graded tables)
};

// A finite-dimensional algebra with a distinguished complete set of
// orthogonal primitive-by-construction idempotents, given by structure
// constants over an explicit basis.
//
// Invariants every constructor maintains:
//   * basis[0 .. nv) are the vertex idempotents, in vertex order;
//   * basis[nv .. dim) span the Jacobson radical, and products of any
//     `nilpotency` of them vanish;
//   * every basis element b satisfies e_{dst(b)} * b = b = b * e_{src(b)}.
template <class F>
struct AlgebraTable {
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  F fld{};
  std::vector<std::string> vertices;
  std::vector<TableBasisElem> basis;
  std::vector<Vec> prod;  // prod[i * dim + j] = coordinates of basis[i] * basis[j]
  int nilpotency = 1;

  int dim() const { return static_cast<int>(basis.size()); }
  int nv() const { return static_cast<int>(vertices.size()); }

  Vec zero_vec() const { return Vec(basis.size(), fld.zero()); }

  Vec unit(int i) const {
    Vec v = zero_vec();
    v[i] = fld.one();
    return v;
  }

  const Vec& basis_product(int i, int j) const { return prod[i * dim() + j]; }

  Vec mult(const Vec& x, const Vec& y) const {
    internal_check(static_cast<int>(x.size()) == dim() &&
                       static_cast<int>(y.size()) == dim(),
                   "mult: coordinate length mismatch");
    Vec r = zero_vec();
    for (int i = 0; i < dim(); ++i) {
      if (fld.is_zero(x[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (fld.is_zero(y[j])) continue;
        const Elem c = fld.mul(x[i], y[j]);
        const Vec& p = basis_product(i, j);
        for (int k = 0; k < dim(); ++k) {
          if (!fld.is_zero(p[k])) r[k] = fld.add(r[k], fld.mul(c, p[k]));
        }
      }
    }
    return r;
  }

  // Basis indices of e_mu * A * e_lam (elements supported from lam to mu).
  std::vector<int> block(int mu, int lam) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i) {
      if (basis[i].dst == mu && basis[i].src == lam) out.push_back(i);
    }
    return out;
  }

  // x |-> b_i * x as a dim x dim matrix (columns indexed by x-coordinates).
  Mat<F> left_mult_matrix(int i) const {
    Mat<F> m(fld, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      const Vec& p = basis_product(i, j);
      for (int k = 0; k < dim(); ++k) m.at(k, j) = p[k];
    }
    return m;
  }

  // x |-> x * b_i.
  Mat<F> right_mult_matrix(int i) const {
    Mat<F> m(fld, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      const Vec& p = basis_product(j, i);
      for (int k = 0; k < dim(); ++k) m.at(k, j) = p[k];
    }
    return m;
  }

  std::string format(const Vec& v) const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
      if (fld.is_zero(v[i])) continue;
      if (!s.empty()) s += " + ";
      if (!fld.eq(v[i], fld.one())) s += fld.str(v[i]) + "*";
      s += basis[i].label;
    }
    return s.empty() ? "0" : s;
  }
};

template <class F>
using TablePtr = std::shared_ptr<const AlgebraTable<F>>;

// Triangular eliminator over sparse vectors indexed by integers, with the
// convention that the pivot of a vector is its LARGEST coordinate.  Reducing
// a vector eliminates every pivot coordinate, so normal forms are supported
// on non-pivot coordinates and are canonical for the stored span.  Used
// where "keep the smallest monomials" is the desired normal form.
template <class F>
class LinearRewriter {
 public:
  using Elem = typename F::Elem;
  using SpVec = std::map<int, Elem>;

  explicit LinearRewriter(F f) : fld_(f) {}

  void reduce(SpVec& v) const {
    while (true) {
      int hit = -1;
      Elem c{};
      for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (fld_.is_zero(it->second)) continue;
        if (rows_.count(it->first)) {
          hit = it->first;
          c = it->second;
          break;
        }
      }
      if (hit < 0) break;
      axpy(v, fld_.neg(c), rows_.at(hit));
    }
    prune(v);
  }

  // Adds v to the span; returns the new pivot coordinate, or -1 when v was
  // already in the span.
  int insert(SpVec v) {
    reduce(v);
    if (v.empty()) return -1;
    int lead = v.rbegin()->first;
    Elem inv = fld_.inv(v.rbegin()->second);
    for (auto& [k, x] : v) x = fld_.mul(x, inv);
    rows_.emplace(lead, std::move(v));
    return lead;
  }

  bool in_span(SpVec v) const {
    reduce(v);
    return v.empty();
  }

  bool is_pivot(int coord) const { return rows_.count(coord) > 0; }
  std::size_t rank() const { return rows_.size(); }
  const SpVec& row(int lead) const { return rows_.at(lead); }

 private:
  void axpy(SpVec& v, const Elem& c, const SpVec& w) const {
    for (const auto& [k, x] : w) {
      auto it = v.find(k);
      if (it == v.end()) {
        Elem nx = fld_.mul(c, x);
        if (!fld_.is_zero(nx)) v.emplace(k, std::move(nx));
      } else {
        it->second = fld_.add(it->second, fld_.mul(c, x));
        if (fld_.is_zero(it->second)) v.erase(it);
      }
    }
  }

  void prune(SpVec& v) const {
    for (auto it = v.begin(); it != v.end();) {
      if (fld_.is_zero(it->second)) {
        it = v.erase(it);
      } else {
        ++it;
      }
    }
  }

  F fld_;
  std::map<int, SpVec> rows_;
};

struct BuildLimits {
  int max_path_length = 32;
  long long max_paths = 500000;
};

namespace detail {

// Shortlex path enumeration: ids are assigned in order of (length, then the
// left-to-right sequence of arrow names), so larger id = later in shortlex.
struct PathEnum {
  std::vector<PathWord> paths;
  std::map<std::pair<int, std::vector<int>>, int> ids;
  std::vector<std::vector<int>> by_length;

  int id_of(const PathWord& p) const {
    auto it = ids.find({p.src, p.word});
    internal_check(it != ids.end(), "path id lookup failed");
    return it->second;
  }

  int try_id(int src, const std::vector<int>& word) const {
    auto it = ids.find({src, word});
    return it == ids.end() ? -1 : it->second;
  }
};

}  // namespace detail

// Builds the structure-constant table of kQ / <relations> by certified
// truncation.  The procedure:
//
//   1. Enumerate paths level by level.  R_L denotes the span of all products
//      p * r * q (r a relation, p and q paths) whose every term has length
//      at most L; it is grown incrementally by multiplying the previous
//      level's new rows by arrows on both sides and adding the relations
//      that first fit at level L.
//   2. Certify the least N >= 1 such that every path of length N lies in
//      R_N.  Then every path of length >= N lies in the relation ideal, so
//      the algebra is spanned by paths of length < N.  If no such N exists
//      within the cap, the presentation is rejected (it cannot be shown
//      finite dimensional within the budget).
//   3. The ideal's intersection with the span of paths of length < N is
//      exactly the truncation of the products p * r * q in which p, q and
//      the shortest term of r together fit below N; row-reduce those
//      truncations with shortlex-largest pivots.  The surviving (non-pivot)
//      monomials of length < N form the table basis, necessarily containing
//      every trivial path.
//
// Products of basis monomials reduce by the same rewriter; concatenations of
// length >= N vanish outright.
template <class F>
TablePtr<F> build_table(F fld, const Quiver& q,
                        const std::vector<Relation<F>>& relations,
                        BuildLimits lim = {}) {
  q.validate();

  // Normalise relations: merge duplicate paths, drop zero terms, check that
  // all terms are parallel and of length >= 1.
  struct NormRel {
    std::vector<std::pair<PathWord, typename F::Elem>> terms;
    int src = 0, dst = 0, min_len = 0, max_len = 0;
  };
  std::vector<NormRel> rels;
  for (const Relation<F>& rel : relations) {
    std::map<std::pair<int, std::vector<int>>, typename F::Elem> merged;
    int src = -1, dst = -1;
    for (const RelTerm<F>& t : rel) {
      if (t.path.length() < 1) {
        fail(errc::parse, "relation term '" + path_label(q, t.path) +
                              "' has length 0; terms must be genuine paths");
      }
      if (src < 0) {
        src = t.path.src;
        dst = t.path.dst;
      } else if (t.path.src != src || t.path.dst != dst) {
        fail(errc::parse, "relation mixes non-parallel paths ('" +
                              path_label(q, t.path) + "')");
      }
      auto [it, fresh] = merged.try_emplace({t.path.src, t.path.word}, t.coeff);
      if (!fresh) it->second = fld.add(it->second, t.coeff);
    }
    NormRel nr;
    nr.src = src;
    nr.dst = dst;
    nr.min_len = lim.max_path_length + 1;
    nr.max_len = 0;
    for (auto& [key, c] : merged) {
      if (fld.is_zero(c)) continue;
      PathWord p;
      p.src = key.first;
      p.word = key.second;
      p.dst = dst;
      nr.min_len = std::min(nr.min_len, p.length());
      nr.max_len = std::max(nr.max_len, p.length());
      nr.terms.emplace_back(std::move(p), c);
    }
    if (nr.terms.empty()) continue;  // the zero relation
    if (nr.max_len > lim.max_path_length) {
      fail(errc::budget, "relation term exceeds the path length cap");
    }
    rels.push_back(std::move(nr));
  }

  detail::PathEnum pe;
  long long total_paths = 0;
  auto add_path = [&](PathWord p) {
    int id = static_cast<int>(pe.paths.size());
    pe.ids.emplace(std::make_pair(p.src, p.word), id);
    int len = p.length();
    if (static_cast<int>(pe.by_length.size()) <= len) pe.by_length.resize(len + 1);
    pe.by_length[len].push_back(id);
    pe.paths.push_back(std::move(p));
    if (++total_paths > lim.max_paths) {
      fail(errc::budget, "path enumeration exceeded " +
                             std::to_string(lim.max_paths) + " paths");
    }
    return id;
  };

  for (int v = 0; v < q.num_vertices(); ++v) add_path(PathWord::trivial(v));
  const std::vector<int> arrow_order = q.arrows_by_name();

  using SpVec = typename LinearRewriter<F>::SpVec;
  LinearRewriter<F> W(fld);
  std::vector<SpVec> frontier;

  auto arrow_multiples = [&](const SpVec& row, int max_len) {
    std::vector<SpVec> out;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrows[a];
      SpVec left, right;
      for (const auto& [id, c] : row) {
        const PathWord& p = pe.paths[id];
        internal_check(p.length() + 1 <= max_len,
                       "arrow multiple exceeded the current level");
        if (p.dst == ar.src) {
          // apply the arrow after p
          std::vector<int> w;
          w.reserve(p.word.size() + 1);
          w.push_back(a);
          w.insert(w.end(), p.word.begin(), p.word.end());
          int nid = pe.try_id(p.src, w);
          internal_check(nid >= 0, "left multiple not enumerated");
          left[nid] = c;
        }
        if (p.src == ar.dst) {
          // apply the arrow before p
          std::vector<int> w = p.word;
          w.push_back(a);
          int nid = pe.try_id(ar.src, w);
          internal_check(nid >= 0, "right multiple not enumerated");
          right[nid] = c;
        }
      }
      if (!left.empty()) out.push_back(std::move(left));
      if (!right.empty()) out.push_back(std::move(right));
    }
    return out;
  };

  int N = -1;
  for (int L = 1; L <= lim.max_path_length; ++L) {
    // Enumerate level L in shortlex order: new first arrow (by name) outer,
    // parent in its own order inner.
    if (static_cast<int>(pe.by_length.size()) <= L) pe.by_length.resize(L + 1);
    std::vector<int> parents = pe.by_length[L - 1];
    for (int a : arrow_order) {
      const Arrow& ar = q.arrows[a];
      for (int pid : parents) {
        const PathWord& p = pe.paths[pid];
        if (p.dst != ar.src) continue;
        PathWord np;
        np.word.reserve(p.word.size() + 1);
        np.word.push_back(a);
        np.word.insert(np.word.end(), p.word.begin(), p.word.end());
        np.src = p.src;
        np.dst = ar.dst;
        add_path(std::move(np));
      }
    }

    // Grow the span: arrow multiples of the last level's new rows, then the
    // relations whose longest term first fits at this level.
    std::vector<SpVec> next_frontier;
    for (const SpVec& row : frontier) {
      for (SpVec& m : arrow_multiples(row, L)) {
        int lead = W.insert(std::move(m));
        if (lead >= 0) next_frontier.push_back(W.row(lead));
      }
    }
    for (const NormRel& r : rels) {
      if (r.max_len != L) continue;
      SpVec v;
      for (const auto& [p, c] : r.terms) v[pe.id_of(p)] = c;
      int lead = W.insert(std::move(v));
      if (lead >= 0) next_frontier.push_back(W.row(lead));
    }
    frontier = std::move(next_frontier);

    bool all_vanish = true;
    for (int id : pe.by_length[L]) {
      if (!W.in_span(SpVec{{id, fld.one()}})) {
        all_vanish = false;
        break;
      }
    }
    if (all_vanish) {
      N = L;
      break;
    }
  }
  if (N < 0) {
    fail(errc::budget,
         "no nilpotency certificate up to path length " +
             std::to_string(lim.max_path_length) +
             "; the presentation may not define a finite-dimensional algebra");
  }

  // Truncated ideal span over paths of length < N.
  LinearRewriter<F> Wf(fld);
  std::vector<std::vector<int>> by_len_src(N, std::vector<int>());
  for (int len = 0; len < N; ++len) {
    if (len < static_cast<int>(pe.by_length.size())) {
      by_len_src[len] = pe.by_length[len];
    }
  }
  for (const NormRel& r : rels) {
    int budget = N - 1 - r.min_len;  // len(p) + len(q) allowed
    if (budget < 0) continue;        // truncates to zero
    for (int lp = 0; lp <= budget; ++lp) {
      for (int p_id : by_len_src[lp]) {
        const PathWord& p = pe.paths[p_id];
        if (p.src != r.dst) continue;  // p is applied after the relation
        for (int lq = 0; lp + lq <= budget; ++lq) {
          for (int q_id : by_len_src[lq]) {
            const PathWord& qq = pe.paths[q_id];
            if (qq.dst != r.src) continue;  // q is applied before
            SpVec g;
            for (const auto& [term, c] : r.terms) {
              int total = lp + term.length() + lq;
              if (total >= N) continue;
              std::vector<int> w;
              w.reserve(total);
              w.insert(w.end(), p.word.begin(), p.word.end());
              w.insert(w.end(), term.word.begin(), term.word.end());
              w.insert(w.end(), qq.word.begin(), qq.word.end());
              int id = pe.try_id(qq.src, w);
              internal_check(id >= 0, "truncated product not enumerated");
              auto it = g.find(id);
              if (it == g.end()) {
                g.emplace(id, c);
              } else {
                it->second = fld.add(it->second, c);
              }
            }
            if (!g.empty()) Wf.insert(std::move(g));
          }
        }
      }
    }
  }

  // Surviving monomials, in shortlex order.
  auto table = std::make_shared<AlgebraTable<F>>();
  table->fld = fld;
  table->vertices = q.vertices;
  table->nilpotency = N;
  std::map<int, int> pos_of_id;
  for (int id = 0; id < static_cast<int>(pe.paths.size()); ++id) {
    if (pe.paths[id].length() >= N) break;  // ids are shortlex-sorted
    if (Wf.is_pivot(id)) continue;
    int pos = static_cast<int>(table->basis.size());
    pos_of_id[id] = pos;
    const PathWord& p = pe.paths[id];
    table->basis.push_back(
        TableBasisElem{path_label(q, p), p.src, p.dst, p.length()});
  }
  for (int v = 0; v < q.num_vertices(); ++v) {
    internal_check(pos_of_id.count(v) && pos_of_id[v] == v,
                   "a trivial path left the basis");
  }

  const int dim = table->dim();
  table->prod.assign(static_cast<std::size_t>(dim) * dim, table->zero_vec());
  std::vector<int> id_of_pos;
  for (const auto& [id, pos] : pos_of_id) {
    id_of_pos.push_back(id);
    internal_check(pos == static_cast<int>(id_of_pos.size()) - 1,
                   "basis position order");
  }
  for (int i = 0; i < dim; ++i) {
    const PathWord& pi = pe.paths[id_of_pos[i]];
    for (int j = 0; j < dim; ++j) {
      const PathWord& pj = pe.paths[id_of_pos[j]];
      if (pj.dst != pi.src) continue;  // orthogonal pieces
      if (pi.length() + pj.length() >= N) continue;  // dies in the truncation
      std::vector<int> w;
      w.reserve(pi.word.size() + pj.word.size());
      w.insert(w.end(), pi.word.begin(), pi.word.end());
      w.insert(w.end(), pj.word.begin(), pj.word.end());
      int wid = pe.try_id(pj.src, w);
      internal_check(wid >= 0, "product path not enumerated");
      SpVec nf{{wid, fld.one()}};
      Wf.reduce(nf);
      auto& out = table->prod[static_cast<std::size_t>(i) * dim + j];
      for (const auto& [id, c] : nf) {
        auto it = pos_of_id.find(id);
        internal_check(it != pos_of_id.end(), "normal form hit a pivot");
        out[it->second] = c;
      }
    }
  }
  return table;
}

// Structural sanity of a table: idempotents are orthogonal and act as local
// units.  Cheap; called by the non-presentation constructors and by tests.
template <class F>
void check_table_units(const AlgebraTable<F>& t) {
  const F& f = t.fld;
  for (int u = 0; u < t.nv(); ++u) {
    internal_check(t.basis[u].src == u && t.basis[u].dst == u &&
                       t.basis[u].degree == 0,
                   "idempotent block layout");
    for (int v = 0; v < t.nv(); ++v) {
      auto p = t.basis_product(u, v);
      auto expect = (u == v) ? t.unit(u) : t.zero_vec();
      for (int k = 0; k < t.dim(); ++k) {
        internal_check(f.eq(p[k], expect[k]), "idempotents not orthogonal");
      }
    }
  }
  for (int i = 0; i < t.dim(); ++i) {
    const auto& b = t.basis[i];
    auto left = t.basis_product(b.dst, i);
    auto right = t.basis_product(i, b.src);
    for (int k = 0; k < t.dim(); ++k) {
      typename F::Elem expect = (k == i) ? f.one() : f.zero();
      internal_check(f.eq(left[k], expect) && f.eq(right[k], expect),
                     "idempotent does not act as a unit on its block");
    }
  }
}

template <class F>
bool is_associative(const AlgebraTable<F>& t) {
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = 0; j < t.dim(); ++j) {
      for (int k = 0; k < t.dim(); ++k) {
        auto ab_c = t.mult(t.basis_product(i, j), t.unit(k));
        auto a_bc = t.mult(t.unit(i), t.basis_product(j, k));
        for (int l = 0; l < t.dim(); ++l) {
          if (!t.fld.eq(ab_c[l], a_bc[l])) return false;
        }
      }
    }
  }
  return true;
}

template <class F>
TablePtr<F> opposite(const TablePtr<F>& t) {
  auto op = std::make_shared<AlgebraTable<F>>();
  op->fld = t->fld;
  op->vertices = t->vertices;
  op->nilpotency = t->nilpotency;
  op->basis = t->basis;
  for (auto& b : op->basis) std::swap(b.src, b.dst);
  const int d = t->dim();
  op->prod.assign(static_cast<std::size_t>(d) * d, t->zero_vec());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      op->prod[static_cast<std::size_t>(i) * d + j] = t->basis_product(j, i);
    }
  }
  return op;
}

// The two-sided ideal generated by the idempotents of `killed`, as a
// subspace of the table's coordinate space, together with the quotient
// algebra presented on the surviving basis monomials.
template <class F>
struct VertexQuotient {
  TablePtr<F> table;
  std::vector<int> killed;          // vertex ids in the parent
  std::vector<int> kept_vertices;   // vertex ids in the parent, ascending
  std::vector<int> kept_basis;      // basis ids in the parent, ascending
  Subspace<F> ideal;                // of the parent coordinate space
  std::shared_ptr<LinearRewriter<F>> rewriter;  // descending-pivot form of the ideal

  // Parent coordinates -> quotient coordinates (canonical representative).
  typename AlgebraTable<F>::Vec project(typename AlgebraTable<F>::Vec v) const {
    typename LinearRewriter<F>::SpVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (!table->fld.is_zero(v[i])) s[i] = v[i];
    }
    rewriter->reduce(s);
    typename AlgebraTable<F>::Vec out(kept_basis.size(), table->fld.zero());
    for (const auto& [id, c] : s) {
      auto it = std::lower_bound(kept_basis.begin(), kept_basis.end(), id);
      internal_check(it != kept_basis.end() && *it == id,
                     "projection left the kept span");
      out[it - kept_basis.begin()] = c;
    }
    return out;
  }
};

template <class F>
VertexQuotient<F> quotient_by_vertices(const TablePtr<F>& t,
                                       const std::vector<int>& killed) {
  const F& f = t->fld;
  VertexQuotient<F> qt;
  qt.killed = killed;
  std::vector<bool> is_killed(t->nv(), false);
  for (int v : killed) {
    internal_check(v >= 0 && v < t->nv(), "quotient: vertex out of range");
    is_killed[v] = true;
  }

  auto rw = std::make_shared<LinearRewriter<F>>(f);
  std::vector<std::vector<typename F::Elem>> ideal_rows;
  for (int v : killed) {
    for (int x = 0; x < t->dim(); ++x) {
      if (t->basis[x].src != v) continue;
      for (int y = 0; y < t->dim(); ++y) {
        if (t->basis[y].dst != v) continue;
        auto p = t->basis_product(x, y);
        typename LinearRewriter<F>::SpVec s;
        for (int k = 0; k < t->dim(); ++k) {
          if (!f.is_zero(p[k])) s[k] = p[k];
        }
        if (s.empty()) continue;
        if (rw->insert(std::move(s)) >= 0) ideal_rows.push_back(p);
      }
    }
  }
  qt.ideal = Subspace<F>::span_of(f, ideal_rows, t->dim());
  internal_check(qt.ideal.dim() == rw->rank(), "ideal rank disagreement");

  for (int v = 0; v < t->nv(); ++v) {
    bool pivot = rw->is_pivot(v);
    internal_check(pivot == is_killed[v], "idempotent survival mismatch");
    if (!is_killed[v]) qt.kept_vertices.push_back(v);
  }
  for (int i = 0; i < t->dim(); ++i) {
    if (!rw->is_pivot(i)) qt.kept_basis.push_back(i);
  }

  auto nt = std::make_shared<AlgebraTable<F>>();
  nt->fld = f;
  nt->nilpotency = t->nilpotency;
  std::vector<int> new_vertex(t->nv(), -1);
  for (int v : qt.kept_vertices) {
    new_vertex[v] = static_cast<int>(nt->vertices.size());
    nt->vertices.push_back(t->vertices[v]);
  }
  for (int id : qt.kept_basis) {
    const TableBasisElem& b = t->basis[id];
    internal_check(!is_killed[b.src] && !is_killed[b.dst],
                   "kept monomial touches a killed vertex");
    nt->basis.push_back(
        TableBasisElem{b.label, new_vertex[b.src], new_vertex[b.dst], b.degree});
  }
  qt.rewriter = rw;
  qt.table = nt;  // temporarily incomplete; products filled below

  const int d = static_cast<int>(qt.kept_basis.size());
  nt->prod.assign(static_cast<std::size_t>(d) * d, nt->zero_vec());
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto p = t->basis_product(qt.kept_basis[i], qt.kept_basis[j]);
      nt->prod[static_cast<std::size_t>(i) * d + j] = qt.project(std::move(p));
    }
  }
  check_table_units(*nt);
  return qt;
}

// Directedness of the block digraph: an edge lam -> mu whenever some basis
// element other than an idempotent runs from lam to mu.
template <class F>
AcyclicityReport block_digraph_acyclicity(const AlgebraTable<F>& t) {
  Quiver shape;
  shape.vertices = t.vertices;
  std::vector<std::pair<int, int>> edges;
  for (int mu = 0; mu < t.nv(); ++mu) {
    for (int lam = 0; lam < t.nv(); ++lam) {
      if (mu == lam) continue;
      if (!t.block(mu, lam).empty()) edges.emplace_back(lam, mu);
    }
  }
  return digraph_acyclicity(shape, edges);
}

// Convenience form for killing a single vertex idempotent.
template <class F>
VertexQuotient<F> quotient_by_idempotent(const TablePtr<F>& t, int vertex) {
  return quotient_by_vertices(t, std::vector<int>{vertex});
}

// True when every off-diagonal block e_mu A e_lam vanishes, i.e. the algebra
// decomposes as a direct product of the local vertex algebras.
template <class F>
bool is_local_direct_sum(const AlgebraTable<F>& t) {
  for (int i = t.nv(); i < t.dim(); ++i) {
    if (t.basis[i].src != t.basis[i].dst) return false;
  }
  return true;
}

// Span of the radical basis elements, as a subspace of the coordinate space.
template <class F>
Subspace<F> radical_subspace(const AlgebraTable<F>& t) {
  std::vector<std::vector<typename F::Elem>> rows;
  for (int i = t.nv(); i < t.dim(); ++i) rows.push_back(t.unit(i));
  return Subspace<F>::span_of(t.fld, rows, t.dim());
}

template <class F>
int center_dim(const AlgebraTable<F>& t) {
  const int d = t.dim();
  if (d == 0) return 0;
  Mat<F> big(t.fld, 0, d);
  for (int i = 0; i < d; ++i) {
    Mat<F> diff = t.left_mult_matrix(i).add(t.right_mult_matrix(i).scale(
        t.fld.neg(t.fld.one())));
    big = big.vstack(diff);
  }
  return static_cast<int>(kernel_basis(big).rows);
}

// Dimensions of the radical filtration rad^0 >= rad^1 >= ... of the regular
// bimodule, refined per vertex block; a cheap isomorphism invariant.
template <class F>
std::vector<std::vector<std::vector<int>>> radical_block_profile(
    const AlgebraTable<F>& t) {
  const F& f = t.fld;
  const int d = t.dim();
  const int n = t.nv();
  // rad^k as subspaces of the coordinate space
  std::vector<Subspace<F>> pows;
  std::vector<std::vector<typename F::Elem>> rows;
  for (int i = n; i < d; ++i) rows.push_back(t.unit(i));
  pows.push_back(Subspace<F>::span_of(f, rows, d));
  while (pows.back().dim() > 0) {
    std::vector<std::vector<typename F::Elem>> nxt;
    const Mat<F>& bs = pows.back().basis();
    for (std::size_t r = 0; r < bs.rows; ++r) {
      for (int i = n; i < d; ++i) {
        nxt.push_back(t.mult(t.unit(i), bs.row(r)));
      }
    }
    pows.push_back(Subspace<F>::span_of(f, nxt, d));
  }
  // per power, per (mu, lam) block dimension; blocks are coordinate-aligned
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& s : pows) {
    std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
    // the subspace is spanned by block-homogeneous monomial combinations;
    // count pivots per block
    for (std::size_t r = 0; r < s.basis().rows; ++r) {
      std::size_t pc = s.pivots()[r];
      const TableBasisElem& b = t.basis[pc];
      ++grid[b.dst][b.src];
    }
    out.push_back(std::move(grid));
  }
  return out;
}

enum class Trilean { no = 0, yes = 1, undecided = 2 };

inline const char* trilean_name(Trilean t) {
  switch (t) {
    case Trilean::no: return "no";
    case Trilean::yes: return "yes";
    default: return "undecided";
  }
}

template <class F>
struct AlgebraIsoResult {
  Trilean verdict = Trilean::undecided;
  std::string detail;
  std::vector<int> vertex_map;  // when verdict == yes: a -> b vertex images
};

// Decides isomorphism of two tables when cheap certificates exist.
// "no" comes from an invariant mismatch (dimension, number of vertices,
// center dimension, or the per-block radical filtration profile up to a
// vertex bijection).  "yes" comes from an explicit basis-respecting match.
// Anything else is reported as undecided.
template <class F>
AlgebraIsoResult<F> algebra_isomorphic(const AlgebraTable<F>& a,
                                       const AlgebraTable<F>& b) {
  AlgebraIsoResult<F> res;
  if (!(a.fld == b.fld)) {
    res.verdict = Trilean::no;
    res.detail = "different coefficient fields";
    return res;
  }
  if (a.dim() != b.dim() || a.nv() != b.nv()) {
    res.verdict = Trilean::no;
    res.detail = "dimension or vertex count differs";
    return res;
  }
  int ca = center_dim(a), cb = center_dim(b);
  if (ca != cb) {
    res.verdict = Trilean::no;
    res.detail = "center dimensions differ (" + std::to_string(ca) + " vs " +
                 std::to_string(cb) + ")";
    return res;
  }
  auto pa = radical_block_profile(a);
  auto pb = radical_block_profile(b);
  if (pa.size() != pb.size()) {
    res.verdict = Trilean::no;
    res.detail = "radical filtration lengths differ";
    return res;
  }

  const int n = a.nv();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  bool any_profile_match = false;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t k = 0; ok && k < pa.size(); ++k) {
      for (int mu = 0; ok && mu < n; ++mu) {
        for (int lam = 0; ok && lam < n; ++lam) {
          if (pa[k][mu][lam] != pb[k][perm[mu]][perm[lam]]) ok = false;
        }
      }
    }
    if (!ok) continue;
    any_profile_match = true;

    // Attempt an explicit monomial match: within each (block, degree) slot
    // that holds exactly one basis element on both sides, the pairing is
    // forced; if every slot is like that, verify the structure constants.
    std::vector<int> map_ab(a.dim(), -1);
    bool forced = true;
    for (int i = 0; i < a.dim() && forced; ++i) {
      const auto& e = a.basis[i];
      std::vector<int> cand;
      for (int j = 0; j < b.dim(); ++j) {
        const auto& g = b.basis[j];
        if (g.src == perm[e.src] && g.dst == perm[e.dst] && g.degree == e.degree) {
          cand.push_back(j);
        }
      }
      std::vector<int> same_slot;
      for (int i2 = 0; i2 < a.dim(); ++i2) {
        const auto& e2 = a.basis[i2];
        if (e2.src == e.src && e2.dst == e.dst && e2.degree == e.degree) {
          same_slot.push_back(i2);
        }
      }
      if (cand.size() != 1 || same_slot.size() != 1) {
        forced = false;
        break;
      }
      map_ab[i] = cand[0];
    }
    if (!forced) continue;

    bool match = true;
    for (int i = 0; i < a.dim() && match; ++i) {
      for (int j = 0; j < a.dim() && match; ++j) {
        const auto& pij = a.basis_product(i, j);
        const auto& qij = b.basis_product(map_ab[i], map_ab[j]);
        for (int k = 0; k < a.dim(); ++k) {
          if (!a.fld.eq(pij[k], qij[map_ab[k]])) {
            match = false;
            break;
          }
        }
      }
    }
    if (match) {
      res.verdict = Trilean::yes;
      res.detail = "explicit monomial correspondence";
      res.vertex_map = perm;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!any_profile_match) {
    res.verdict = Trilean::no;
    res.detail = "no vertex bijection matches the radical block profile";
    return res;
  }
  res.verdict = Trilean::undecided;
  res.detail = "invariants agree but no explicit correspondence was found";
  return res;
}

}  // namespace quiverstrat
