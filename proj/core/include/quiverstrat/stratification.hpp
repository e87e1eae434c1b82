#pragma once

// Stratification machinery for a fixed structure-constant table.
//
// A linear order on the vertex set is stored max-first.  For each vertex
// lam and each set `mask` of vertices strictly greater than lam, the
// standard module for lam is the indecomposable projective at lam of the
// quotient algebra A / sum_{mu in mask} A e_mu A.  The context below
// memoises these vertex quotients and the per-step verdicts, so scanning
// many orders shares all the real work: a step depends only on (mask, lam),
// not on how the order arranges the rest.
//
// Two independent routes decide whether the algebra is standardly
// stratified for an order, and the public entry point insists they agree:
//   * inductively, peeling maximal vertices and testing that every trace
//     of the peeled projective in the remaining projectives is free over
//     it (quotient-table route);
//   * greedily filtering the left regular module by standard modules
//     (representation route).

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quiverstrat/algebra.hpp"
#include "quiverstrat/errors.hpp"
#include "quiverstrat/rep.hpp"

namespace quiverstrat {

// A linear order on the vertices, stored as a permutation of the vertex
// indices with the largest element first.
struct LinearOrder {
  std::vector<int> max_first;

  int size() const { return static_cast<int>(max_first.size()); }

  // position of each vertex in max_first (0 = maximal)
  std::vector<int> positions() const {
    std::vector<int> pos(max_first.size());
    for (int i = 0; i < size(); ++i) pos[max_first[i]] = i;
    return pos;
  }

  bool operator==(const LinearOrder& o) const = default;
};

// Parses "a,b,c" (largest first) against the vertex names; every vertex
// must appear exactly once.  The empty string denotes the empty order of a
// vertexless algebra.
inline LinearOrder parse_order(const std::vector<std::string>& vertices,
                               const std::string& text) {
  LinearOrder ord;
  std::vector<bool> seen(vertices.size(), false);
  std::string cur;
  std::vector<std::string> parts;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (text.find(',') != std::string::npos && parts.size() <= 1) {
    fail(errc::parse, "malformed order '" + text + "'");
  }
  for (const auto& name : parts) {
    int v = -1;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == name) v = static_cast<int>(i);
    }
    if (v < 0) fail(errc::parse, "order names unknown vertex '" + name + "'");
    if (seen[v]) fail(errc::parse, "order repeats vertex '" + name + "'");
    seen[v] = true;
    ord.max_first.push_back(v);
  }
  if (ord.max_first.size() != vertices.size()) {
    fail(errc::parse, "order must list every vertex exactly once");
  }
  return ord;
}

inline std::string format_order(const std::vector<std::string>& vertices,
                                const LinearOrder& ord) {
  std::string s;
  for (int i = 0; i < ord.size(); ++i) {
    if (i) s += " > ";
    s += vertices[ord.max_first[i]];
  }
  return s;
}

template <class F>
class StratContext {
 public:
  explicit StratContext(TablePtr<F> t) : t_(std::move(t)) {
    internal_check(t_->nv() <= 31, "vertex masks need fewer than 32 vertices");
  }

  const TablePtr<F>& table() const { return t_; }

  // Quotient by the two-sided ideal generated by the idempotents in mask.
  const VertexQuotient<F>& quotient(unsigned mask) {
    auto it = quotients_.find(mask);
    if (it != quotients_.end()) return it->second;
    std::vector<int> killed;
    for (int v = 0; v < t_->nv(); ++v) {
      if (mask & (1u << v)) killed.push_back(v);
    }
    return quotients_.emplace(mask, quotient_by_vertices(t_, killed))
        .first->second;
  }

  // Per-root-vertex dimensions of the standard module at lam whose set of
  // strictly greater vertices is mask.
  std::vector<int> standard_dims(unsigned mask, int lam) {
    internal_check(!(mask & (1u << lam)), "standard vertex inside its mask");
    const VertexQuotient<F>& q = quotient(mask);
    const AlgebraTable<F>& T = *q.table;
    int laml = local_index(q, lam);
    std::vector<int> dims(t_->nv(), 0);
    for (int i = 0; i < T.dim(); ++i) {
      if (T.basis[i].src == laml) ++dims[q.kept_vertices[T.basis[i].dst]];
    }
    return dims;
  }

  // Dimension of the endomorphism algebra of that standard module.
  int standard_end_dim(unsigned mask, int lam) {
    const VertexQuotient<F>& q = quotient(mask);
    int laml = local_index(q, lam);
    return static_cast<int>(q.table->block(laml, laml).size());
  }

  // One peeling step of the inductive test: in A/ideal(mask), is the trace
  // of the projective at lam inside every other remaining projective free
  // over that projective?
  bool step_ok(unsigned mask, int lam) {
    auto key = std::make_pair(mask, lam);
    auto it = steps_.find(key);
    if (it != steps_.end()) return it->second;
    bool ok = compute_step(mask, lam);
    steps_.emplace(key, ok);
    return ok;
  }

  // Inductive route: peel the order from its maximum.
  bool is_ss(const LinearOrder& ord) {
    check_order(ord);
    unsigned mask = 0;
    for (int k = 0; k < ord.size(); ++k) {
      int lam = ord.max_first[k];
      if (!step_ok(mask, lam)) return false;
      mask |= 1u << lam;
    }
    return true;
  }

  // Lazily constructed context over the opposite table (same vertex ids).
  StratContext& op() {
    if (!op_) op_ = std::make_unique<StratContext>(opposite(t_));
    return *op_;
  }

  void check_order(const LinearOrder& ord) const {
    std::vector<bool> seen(t_->nv(), false);
    if (ord.size() != t_->nv()) {
      fail(errc::parse, "order must list every vertex exactly once");
    }
    for (int v : ord.max_first) {
      internal_check(v >= 0 && v < t_->nv() && !seen[v],
                     "order is not a permutation of the vertices");
      seen[v] = true;
    }
  }

 private:
  int local_index(const VertexQuotient<F>& q, int root_vertex) const {
    for (std::size_t i = 0; i < q.kept_vertices.size(); ++i) {
      if (q.kept_vertices[i] == root_vertex) return static_cast<int>(i);
    }
    internal_check(false, "vertex was killed by the mask");
    return -1;
  }

  bool compute_step(unsigned mask, int lam) {
    const VertexQuotient<F>& q = quotient(mask);
    const AlgebraTable<F>& T = *q.table;
    const F& f = T.fld;
    const int laml = local_index(q, lam);
    std::vector<int> plam;  // basis of the projective at lam
    for (int i = 0; i < T.dim(); ++i) {
      if (T.basis[i].src == laml) plam.push_back(i);
    }
    const int dimP = static_cast<int>(plam.size());
    for (int mul = 0; mul < T.nv(); ++mul) {
      if (mul == laml) continue;
      std::vector<int> gens = T.block(laml, mul);
      if (gens.empty()) continue;
      // the trace submodule: left multiples of the generators
      std::vector<std::vector<typename F::Elem>> rows;
      for (int u : plam) {
        for (int g : gens) {
          const auto& p = T.basis_product(u, g);
          bool nz = false;
          for (const auto& e : p) {
            if (!f.is_zero(e)) { nz = true; break; }
          }
          if (nz) rows.push_back(p);
        }
      }
      Subspace<F> tr = Subspace<F>::span_of(f, rows, T.dim());
      std::vector<std::vector<typename F::Elem>> radrows;
      for (int r = T.nv(); r < T.dim(); ++r) {
        for (std::size_t w = 0; w < tr.basis().rows; ++w) {
          auto p = T.mult(T.unit(r), tr.basis().row(w));
          bool nz = false;
          for (const auto& e : p) {
            if (!f.is_zero(e)) { nz = true; break; }
          }
          if (nz) radrows.push_back(std::move(p));
        }
      }
      Subspace<F> rad = Subspace<F>::span_of(f, radrows, T.dim());
      // all spanning vectors are block-homogeneous, so counting pivots per
      // destination vertex reads off the per-vertex dimensions
      auto dims_at = [&](const Subspace<F>& s, int v) {
        int d = 0;
        for (std::size_t r = 0; r < s.dim(); ++r) {
          if (T.basis[s.pivots()[r]].dst == v) ++d;
        }
        return d;
      };
      const int k = dims_at(tr, laml) - dims_at(rad, laml);
      const int top_total = static_cast<int>(tr.dim() - rad.dim());
      if (top_total != k) return false;  // the top leaks off lam
      if (static_cast<int>(tr.dim()) != k * dimP) return false;  // not free
    }
    return true;
  }

  TablePtr<F> t_;
  std::map<unsigned, VertexQuotient<F>> quotients_;
  std::map<std::pair<unsigned, int>, bool> steps_;
  std::unique_ptr<StratContext> op_;
};

// Standard modules and their defining exact sequences, computed on genuine
// representations of the root table.
template <class F>
struct StandardFamily {
  LinearOrder order;
  std::vector<Rep<F>> delta;        // indexed by root vertex
  std::vector<Rep<F>> kernel;       // the kernel of P_lam -> Delta_lam
  std::vector<Mat<F>> projection;   // P_lam -> Delta_lam, intertwining
};

template <class F>
StandardFamily<F> standard_modules(StratContext<F>& ctx,
                                   const LinearOrder& ord) {
  ctx.check_order(ord);
  const TablePtr<F>& t = ctx.table();
  StandardFamily<F> out;
  out.order = ord;
  auto pos = ord.positions();
  for (int lam = 0; lam < t->nv(); ++lam) {
    unsigned mask = 0;
    for (int mu = 0; mu < t->nv(); ++mu) {
      if (pos[mu] < pos[lam]) mask |= 1u << mu;
    }
    Rep<F> p = projective_rep(t, lam);
    Submodule<F> tracesum = zero_submodule(p);
    for (int mu = 0; mu < t->nv(); ++mu) {
      if (!(mask & (1u << mu))) continue;
      Submodule<F> tr = trace_of_projective(t, mu, p);
      for (int v = 0; v < t->nv(); ++v) {
        tracesum.comp[v] = sum(tracesum.comp[v], tr.comp[v]);
      }
    }
    out.kernel.push_back(sub_rep(p, tracesum));
    QuotientRep<F> q = quotient_rep(p, tracesum);
    // the quotient-table route must produce the same dimension vector
    if (q.rep.vdim != ctx.standard_dims(mask, lam)) {
      fail(errc::alarm,
           "standard module dimensions disagree between the quotient-table "
           "and representation routes");
    }
    out.delta.push_back(q.rep);
    out.projection.push_back(std::move(q.proj));
  }
  return out;
}

template <class F>
struct FiltrationResult {
  bool member = false;
  std::vector<int> multiplicities;  // copies of Delta_lam, by root vertex
  std::string detail;

  // filtration length: total number of standard factors
  int length() const {
    int l = 0;
    for (int m : multiplicities) l += m;
    return l;
  }
};

// rad(A) * T for a submodule T of m (helper for the greedy layer test).
template <class F>
Submodule<F> radical_of_submodule(const Rep<F>& m, const Submodule<F>& s) {
  std::vector<typename Rep<F>::Vec> rows;
  for (int v = 0; v < m.nv(); ++v) {
    const auto& bs = s.comp[v].basis();
    for (std::size_t r = 0; r < bs.rows; ++r) {
      typename Rep<F>::Vec amb = m.zero_vec();
      for (int c = 0; c < m.vdim[v]; ++c) amb[m.off[v] + c] = bs.at(r, c);
      for (const auto& a : m.act) rows.push_back(a.apply(amb));
    }
  }
  return detail::split_span(m, rows);
}

// Greedy filtration: repeatedly split off the largest-vertex layer.  The
// candidate layer at lam is the submodule generated by the vertex-lam
// component; membership requires it to be a direct sum of copies of the
// standard module at lam.  Correct whenever the algebra is standardly
// stratified for the order (the public wrapper enforces that; the raw
// routine is also run on the regular module as an independent check of the
// inductive route).
template <class F>
FiltrationResult<F> filtration_greedy(const Rep<F>& m, const LinearOrder& ord,
                                      const std::vector<std::vector<int>>&
                                          delta_dims) {
  const auto& t = m.t;
  FiltrationResult<F> res;
  res.multiplicities.assign(t->nv(), 0);
  Rep<F> cur = m;
  for (int k = 0; k < ord.size(); ++k) {
    const int lam = ord.max_first[k];
    std::vector<typename Rep<F>::Vec> gens;
    for (int c = cur.off[lam]; c < cur.off[lam + 1]; ++c)
      gens.push_back(cur.unit(c));
    Submodule<F> layer = submodule_generated(cur, gens);
    if (layer.dim() == 0) continue;
    Submodule<F> rad = radical_of_submodule(cur, layer);
    int top_at_lam = layer.comp[lam].dim() - rad.comp[lam].dim();
    int top_total = layer.dim() - rad.dim();
    if (top_total != top_at_lam) {
      res.detail = "layer at vertex " + t->vertices[lam] +
                   " is not generated purely at that vertex";
      return res;
    }
    const int kmult = top_at_lam;
    bool dims_ok = true;
    for (int v = 0; v < t->nv(); ++v) {
      if (layer.comp[v].dim() != kmult * delta_dims[lam][v]) dims_ok = false;
    }
    if (!dims_ok) {
      res.detail = "layer at vertex " + t->vertices[lam] +
                   " is not a multiple of the standard module";
      return res;
    }
    res.multiplicities[lam] = kmult;
    cur = quotient_rep(cur, layer).rep;
  }
  internal_check(cur.total() == 0, "greedy filtration left a residue");
  res.member = true;
  return res;
}

// Public verdict: inductive route, cross-checked against the greedy
// filtration of the regular module.  Any disagreement is a hard alarm.
template <class F>
bool is_standardly_stratified(StratContext<F>& ctx, const LinearOrder& ord) {
  bool inductive = ctx.is_ss(ord);
  // representation-route standard modules (alarm-checked against the
  // quotient tables inside) feed the greedy filtration
  std::vector<std::vector<int>> ddims;
  {
    StandardFamily<F> sm = standard_modules(ctx, ord);
    for (int v = 0; v < ctx.table()->nv(); ++v)
      ddims.push_back(sm.delta[v].vdim);
  }
  FiltrationResult<F> greedy =
      filtration_greedy(left_regular_rep(ctx.table()), ord, ddims);
  if (greedy.member != inductive) {
    fail(errc::alarm,
         "standard stratification verdicts disagree: inductive route says " +
             std::string(inductive ? "yes" : "no") +
             ", greedy filtration of the regular module says " +
             std::string(greedy.member ? "yes" : "no") + " for order " +
             format_order(ctx.table()->vertices, ord));
  }
  return inductive;
}

// Membership of an arbitrary module in the filtration category of the
// order's standard modules.  Only defined over standardly stratified
// orders; callers outside that domain get a precondition failure.
template <class F>
FiltrationResult<F> filtration_membership(StratContext<F>& ctx,
                                          const Rep<F>& m,
                                          const LinearOrder& ord) {
  internal_check(m.t == ctx.table(), "module lives over a different table");
  if (!ctx.is_ss(ord)) {
    fail(errc::precondition,
         "filtration membership is only defined for orders where the "
         "algebra is standardly stratified");
  }
  std::vector<std::vector<int>> ddims;
  {
    StandardFamily<F> sm = standard_modules(ctx, ord);
    for (int v = 0; v < ctx.table()->nv(); ++v)
      ddims.push_back(sm.delta[v].vdim);
  }
  return filtration_greedy(m, ord, ddims);
}

// Properly stratified: standardly stratified on both sides.
template <class F>
bool is_properly_stratified(StratContext<F>& ctx, const LinearOrder& ord) {
  return is_standardly_stratified(ctx, ord) &&
         is_standardly_stratified(ctx.op(), ord);
}

// Quasi-hereditary: standardly stratified with one-dimensional standard
// endomorphism algebras.
template <class F>
bool is_quasi_hereditary(StratContext<F>& ctx, const LinearOrder& ord) {
  if (!is_standardly_stratified(ctx, ord)) return false;
  auto pos = ord.positions();
  for (int lam = 0; lam < ctx.table()->nv(); ++lam) {
    unsigned mask = 0;
    for (int mu = 0; mu < ctx.table()->nv(); ++mu) {
      if (pos[mu] < pos[lam]) mask |= 1u << mu;
    }
    if (ctx.standard_end_dim(mask, lam) != 1) return false;
  }
  return true;
}

// Membership against an already-computed standard family (saves the
// recomputation when many modules are tested for one order).
template <class F>
FiltrationResult<F> filtration_membership(StratContext<F>& ctx,
                                          const StandardFamily<F>& fam,
                                          const Rep<F>& m) {
  internal_check(m.t == ctx.table(), "module lives over a different table");
  if (!ctx.is_ss(fam.order)) {
    fail(errc::precondition,
         "filtration membership is only defined for orders where the "
         "algebra is standardly stratified");
  }
  std::vector<std::vector<int>> ddims;
  for (const auto& d : fam.delta) ddims.push_back(d.vdim);
  return filtration_greedy(m, fam.order, ddims);
}

// All single-order verdicts bundled, with the per-step standard data.
struct StratificationVerdict {
  bool standardly_stratified = false;
  bool properly_stratified = false;
  bool quasi_hereditary = false;
  std::vector<int> standard_dims;      // total dim of Delta_lam, by vertex
  std::vector<int> standard_end_dims;  // dim End(Delta_lam), by vertex
};

template <class F>
StratificationVerdict stratification_verdict(StratContext<F>& ctx,
                                             const LinearOrder& ord) {
  StratificationVerdict v;
  v.standardly_stratified = is_standardly_stratified(ctx, ord);
  v.properly_stratified =
      v.standardly_stratified && is_standardly_stratified(ctx.op(), ord);
  auto pos = ord.positions();
  const int nv = ctx.table()->nv();
  v.standard_dims.assign(nv, 0);
  v.standard_end_dims.assign(nv, 0);
  bool ends_ok = true;
  for (int lam = 0; lam < nv; ++lam) {
    unsigned mask = 0;
    for (int mu = 0; mu < nv; ++mu) {
      if (pos[mu] < pos[lam]) mask |= 1u << mu;
    }
    for (int d : ctx.standard_dims(mask, lam)) v.standard_dims[lam] += d;
    v.standard_end_dims[lam] = ctx.standard_end_dim(mask, lam);
    if (v.standard_end_dims[lam] != 1) ends_ok = false;
  }
  v.quasi_hereditary = v.standardly_stratified && ends_ok;
  return v;
}

// Is the block e_mu A e_lam free as a left module over the local algebra
// e_mu A e_mu?  Decided by the dimension count dim M = dim L * dim top(M),
// which is exact because L is local with residue field the ground field.
template <class F>
bool block_free_over_local(const AlgebraTable<F>& t, int mu, int lam) {
  const F& f = t.fld;
  std::vector<int> m_ids = t.block(mu, lam);
  if (m_ids.empty()) return true;  // the zero module is free
  std::vector<int> l_ids = t.block(mu, mu);
  // radical of the local block times the module
  std::vector<std::vector<typename F::Elem>> rows;
  for (int r : l_ids) {
    if (r == mu) continue;  // skip the idempotent
    for (int m : m_ids) {
      const auto& p = t.basis_product(r, m);
      bool nz = false;
      for (const auto& e : p) {
        if (!f.is_zero(e)) { nz = true; break; }
      }
      if (nz) rows.push_back(p);
    }
  }
  Subspace<F> radm = Subspace<F>::span_of(f, rows, t.dim());
  int top = static_cast<int>(m_ids.size() - radm.dim());
  return static_cast<int>(m_ids.size()) ==
         static_cast<int>(l_ids.size()) * top;
}

// Convenience wrappers building a throwaway context.
template <class F>
bool is_standardly_stratified(const TablePtr<F>& t, const LinearOrder& ord) {
  StratContext<F> ctx(t);
  return is_standardly_stratified(ctx, ord);
}

template <class F>
bool is_properly_stratified(const TablePtr<F>& t, const LinearOrder& ord) {
  StratContext<F> ctx(t);
  return is_properly_stratified(ctx, ord);
}

template <class F>
bool is_quasi_hereditary(const TablePtr<F>& t, const LinearOrder& ord) {
  StratContext<F> ctx(t);
  return is_quasi_hereditary(ctx, ord);
}

}  // namespace quiverstrat
