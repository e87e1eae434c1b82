#pragma once

// Cokernel-closure analysis for the filtration categories of standard
// modules.  Three tools:
//   * an exact criterion available for quasi-hereditary orders (ordinary
//     quiver acyclic and every standard module one-dimensional),
//   * a bounded enumeration of monomorphisms from standard modules into
//     finite direct sums of projectives, exhaustive over a prime field and
//     sampling over the rationals, which reports the first cokernel that
//     falls outside the filtration category,
//   * a containment comparison between the categories of two orders.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "quiverstrat/algebra.hpp"
#include "quiverstrat/rep.hpp"
#include "quiverstrat/stratification.hpp"

namespace quiverstrat {

enum class ClosureMode { exact_qh, bounded_search };

// The exact criterion decides closed / not closed.  The bounded search can
// only falsify: a counterexample disproves closure, while a clean sweep of
// the bounded enumeration is evidence recorded as the weaker third value.
enum class Closedness { closed, not_closed, no_counterexample_up_to_bound };

inline const char* closedness_name(Closedness c) {
  switch (c) {
    case Closedness::closed: return "closed";
    case Closedness::not_closed: return "not closed";
    case Closedness::no_counterexample_up_to_bound:
      return "no counterexample up to the search bounds";
  }
  return "?";
}

// A monomorphism from the standard module at `lambda` into the direct sum
// of projectives with the given multiplicities whose cokernel has no
// standard filtration.  `coeffs` are coordinates in the concatenated hom
// bases (vertices ascending, copies in order, hom basis elements in order),
// so the instance can be reconstructed and re-verified from this data.
template <class F>
struct ClosureCounterexample {
  int lambda = -1;
  std::vector<int> mults;
  std::vector<typename F::Elem> coeffs;
  Rep<F> cokernel;
  FiltrationResult<F> membership;  // the failed verdict, member == false
};

template <class F>
struct ClosureVerdict {
  ClosureMode mode = ClosureMode::bounded_search;
  Closedness closed = Closedness::no_counterexample_up_to_bound;
  std::optional<ClosureCounterexample<F>> counterexample;
};

// Bounds for the monomorphism search.  Target multiplicities are always
// capped by dim Hom(Delta_lambda, P_mu): a base-field automorphism of
// P_mu^k column-reduces any hom against one with at most that many nonzero
// components per vertex, so larger targets add no new cokernels.  `caps`
// may lower (never raise) those defaults per vertex.
struct SearchBounds {
  std::uint64_t prime = 2;    // expected characteristic in exhaustive mode
  std::vector<int> caps;      // optional per-vertex cap overrides
  std::uint64_t budget = 1'000'000;  // maximum number of tested candidates
  int samples = 200;          // per (lambda, target) in sampling mode
  std::uint64_t seed = 20260814;     // sampling seed
};

// The ordinary quiver of the algebra: arrow counts between vertices are the
// block dimensions of rad/rad^2, loops included.  The algebra is a quotient
// of a finite-dimensional hereditary algebra exactly when this quiver is
// acyclic.
struct OrdinaryQuiverReport {
  std::vector<std::vector<int>> arrow_counts;  // [dst][src]
  AcyclicityReport acyclicity;
};

template <class F>
OrdinaryQuiverReport ordinary_quiver(const AlgebraTable<F>& t) {
  OrdinaryQuiverReport rep;
  const int n = t.nv();
  auto prof = radical_block_profile(t);
  rep.arrow_counts.assign(n, std::vector<int>(n, 0));
  std::vector<std::pair<int, int>> edges;
  for (int mu = 0; mu < n; ++mu) {
    for (int lam = 0; lam < n; ++lam) {
      int d = prof[0][mu][lam];
      if (prof.size() > 1) d -= prof[1][mu][lam];
      rep.arrow_counts[mu][lam] = d;
      if (d > 0) edges.emplace_back(lam, mu);
    }
  }
  Quiver shape;
  shape.vertices = t.vertices;
  rep.acyclicity = digraph_acyclicity(shape, edges);
  return rep;
}

// Exact decision in the quasi-hereditary case: the filtration category is
// closed under cokernels of monomorphisms iff the ordinary quiver is
// acyclic and every standard module is simple.  No monomorphism witness is
// attached on a negative answer; explicit witnesses come from the bounded
// search.
template <class F>
ClosureVerdict<F> qh_closure_criterion(StratContext<F>& ctx,
                                       const LinearOrder& ord) {
  if (!is_quasi_hereditary(ctx, ord)) {
    fail(errc::precondition,
         "the exact closure criterion requires a quasi-hereditary order");
  }
  StratificationVerdict sv = stratification_verdict(ctx, ord);
  bool all_simple = true;
  for (int d : sv.standard_dims) {
    if (d != 1) all_simple = false;
  }
  OrdinaryQuiverReport oq = ordinary_quiver(*ctx.table());
  ClosureVerdict<F> v;
  v.mode = ClosureMode::exact_qh;
  v.closed = (oq.acyclicity.acyclic && all_simple) ? Closedness::closed
                                                   : Closedness::not_closed;
  return v;
}

namespace detail {

// The direct sum ⊕_mu P_mu^{k_mu} together with the hom matrices from a
// fixed source module, each hom basis element of Hom(source, P_mu) embedded
// into one copy.  Summands are laid out vertices ascending, copies in
// order; inside each vertex block of the target the summands appear in that
// same sequence.
template <class F>
struct StandardHomTarget {
  Rep<F> target;
  std::vector<Mat<F>> homs;
};

template <class F>
StandardHomTarget<F> standard_hom_target(
    const Rep<F>& source, const std::vector<Rep<F>>& proj,
    const std::vector<std::vector<Mat<F>>>& hom_bases,
    const std::vector<int>& mults) {
  const F& f = source.t->fld;
  StandardHomTarget<F> out;
  std::vector<int> summands;
  for (int mu = 0; mu < source.nv(); ++mu) {
    for (int c = 0; c < mults[mu]; ++c) summands.push_back(mu);
  }
  out.target = zero_rep(source.t);
  for (int mu : summands) out.target = direct_sum(out.target, proj[mu]);
  std::vector<int> shift(source.nv(), 0);
  for (int mu : summands) {
    const Rep<F>& p = proj[mu];
    for (const Mat<F>& h : hom_bases[mu]) {
      Mat<F> big = Mat<F>::zero(f, out.target.total(), source.total());
      for (int v = 0; v < source.nv(); ++v) {
        for (int r = 0; r < p.vdim[v]; ++r) {
          for (int c = 0; c < source.total(); ++c) {
            big.at(out.target.off[v] + shift[v] + r, c) =
                h.at(p.off[v] + r, c);
          }
        }
      }
      internal_check(is_intertwiner(big, source, out.target),
                     "embedded hom basis element is not a module map");
      out.homs.push_back(std::move(big));
    }
    for (int v = 0; v < source.nv(); ++v) shift[v] += p.vdim[v];
  }
  return out;
}

// All multiplicity tuples 0 <= k_mu <= cap_mu except all-zero, ordered by
// total target dimension ascending, ties broken lexicographically; the
// first counterexample of the search is therefore deterministic and minimal
// in this ordering.
inline std::vector<std::vector<int>> multiplicity_tuples(
    const std::vector<int>& cap, const std::vector<int>& pdim) {
  const int n = static_cast<int>(cap.size());
  std::vector<std::vector<int>> out;
  std::vector<int> k(n, 0);
  while (true) {
    int i = n - 1;
    while (i >= 0 && k[i] == cap[i]) {
      k[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++k[i];
    out.push_back(k);
  }
  auto total = [&](const std::vector<int>& m) {
    int d = 0;
    for (int mu = 0; mu < n; ++mu) d += m[mu] * pdim[mu];
    return d;
  };
  std::sort(out.begin(), out.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              int da = total(a), db = total(b);
              if (da != db) return da < db;
              return a < b;
            });
  return out;
}

}  // namespace detail

// One explicit hom candidate, fully evaluated: the matrix of the map, its
// injectivity, and for injective candidates the cokernel and its membership
// verdict.  Used to re-verify counterexamples and to probe hand-chosen
// instances.
template <class F>
struct HomProbe {
  Rep<F> target;
  Mat<F> matrix;  // total target x total source, intertwining
  bool injective = false;
  Rep<F> cokernel;
  FiltrationResult<F> membership;
};

template <class F>
HomProbe<F> probe_standard_hom(StratContext<F>& ctx,
                               const StandardFamily<F>& fam, int lambda,
                               const std::vector<int>& mults,
                               const std::vector<typename F::Elem>& coeffs) {
  const TablePtr<F>& t = ctx.table();
  const F& f = t->fld;
  internal_check(lambda >= 0 && lambda < t->nv(), "bad source vertex");
  internal_check(static_cast<int>(mults.size()) == t->nv(),
                 "multiplicity tuple must list every vertex");
  const Rep<F>& delta = fam.delta[lambda];
  std::vector<Rep<F>> proj;
  for (int mu = 0; mu < t->nv(); ++mu) proj.push_back(projective_rep(t, mu));
  std::vector<std::vector<Mat<F>>> hom_bases;
  for (int mu = 0; mu < t->nv(); ++mu)
    hom_bases.push_back(hom_space(delta, proj[mu]));
  detail::StandardHomTarget<F> ts =
      detail::standard_hom_target(delta, proj, hom_bases, mults);

  HomProbe<F> pr;
  pr.target = ts.target;
  internal_check(coeffs.size() == ts.homs.size(),
                 "coefficient count differs from the hom-space dimension");
  Mat<F> phi = Mat<F>::zero(f, ts.target.total(), delta.total());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    phi = phi.add(ts.homs[i].scale(coeffs[i]));
  }
  internal_check(is_intertwiner(phi, delta, ts.target),
                 "hom candidate is not a module map");
  pr.matrix = phi;
  pr.injective = kernel_basis(phi).rows == 0;
  if (!pr.injective) return pr;

  std::vector<typename Rep<F>::Vec> cols;
  for (int j = 0; j < delta.total(); ++j) {
    typename Rep<F>::Vec col(ts.target.total(), f.zero());
    for (int r = 0; r < ts.target.total(); ++r) col[r] = phi.at(r, j);
    cols.push_back(std::move(col));
  }
  Submodule<F> image = detail::split_span(ts.target, cols);
  internal_check(image.dim() == delta.total(),
                 "image dimension disagrees with injectivity");
  pr.cokernel = quotient_rep(ts.target, image).rep;
  internal_check(pr.cokernel.total() == ts.target.total() - delta.total(),
                 "cokernel dimension violates exactness");
  pr.membership = filtration_membership(ctx, fam, pr.cokernel);
  return pr;
}

// Re-derives every claim of a counterexample from scratch: the map must be
// an injective module hom, the cokernel must have the recorded dimensions
// (and total dim target - dim standard), and membership must fail.  Any
// mismatch means two routes disagreed.
template <class F>
void verify_counterexample(StratContext<F>& ctx, const LinearOrder& ord,
                           const ClosureCounterexample<F>& cex) {
  StandardFamily<F> fam = standard_modules(ctx, ord);
  HomProbe<F> pr =
      probe_standard_hom(ctx, fam, cex.lambda, cex.mults, cex.coeffs);
  bool ok = pr.injective && pr.cokernel.vdim == cex.cokernel.vdim &&
            !pr.membership.member;
  if (!ok) {
    fail(errc::alarm,
         "a reported cokernel counterexample failed re-verification at "
         "vertex " +
             ctx.table()->vertices[cex.lambda]);
  }
}

namespace detail {

template <class F>
struct mono_search_state {
  std::uint64_t used = 0;
  const SearchBounds* bounds = nullptr;

  void charge(const AlgebraTable<F>& t, int lambda,
              const std::vector<int>& mults) {
    if (++used <= bounds->budget) return;
    std::string frontier = "lambda=" + t.vertices[lambda] + ", target=(";
    for (int mu = 0; mu < t.nv(); ++mu) {
      if (mu) frontier += ",";
      frontier += std::to_string(mults[mu]);
    }
    frontier += ")";
    fail(errc::budget, "cokernel search budget of " +
                           std::to_string(bounds->budget) +
                           " candidates exhausted at frontier " + frontier);
  }
};

// Lightweight inner evaluation: build the map, test injectivity, and only
// for injective candidates compute the cokernel and its membership verdict.
template <class F>
bool candidate_fails(StratContext<F>& ctx, const StandardFamily<F>& fam,
                     const Rep<F>& delta, const StandardHomTarget<F>& ts,
                     const std::vector<typename F::Elem>& coeffs) {
  const F& f = ctx.table()->fld;
  Mat<F> phi = Mat<F>::zero(f, ts.target.total(), delta.total());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (f.is_zero(coeffs[i])) continue;
    phi = phi.add(ts.homs[i].scale(coeffs[i]));
  }
  if (kernel_basis(phi).rows != 0) return false;  // not injective
  std::vector<typename Rep<F>::Vec> cols;
  for (int j = 0; j < delta.total(); ++j) {
    typename Rep<F>::Vec col(ts.target.total(), f.zero());
    for (int r = 0; r < ts.target.total(); ++r) col[r] = phi.at(r, j);
    cols.push_back(std::move(col));
  }
  Submodule<F> image = split_span(ts.target, cols);
  Rep<F> coker = quotient_rep(ts.target, image).rep;
  return !filtration_membership(ctx, fam, coker).member;
}

}  // namespace detail

// Bounded search for a monomorphism from a standard module into a direct
// sum of projectives whose cokernel leaves the filtration category.  Source
// vertices follow the given order (largest first), targets are enumerated
// by total dimension ascending, and coefficient vectors lexicographically
// over the hom basis, so the first counterexample is deterministic.  Over a
// prime field the enumeration is exhaustive within the multiplicity caps
// (scalar multiples share image and cokernel, so only candidates whose
// first nonzero coefficient is 1 are tested); over the rationals random
// candidates are sampled and the search acts as a falsifier only.
template <class F>
ClosureVerdict<F> bounded_mono_search(StratContext<F>& ctx,
                                      const LinearOrder& ord,
                                      const SearchBounds& bounds = {}) {
  const TablePtr<F>& t = ctx.table();
  const F& f = t->fld;
  if constexpr (F::is_finite) {
    if (f.order() != bounds.prime) {
      fail(errc::precondition,
           "exhaustive search expects the algebra over F_" +
               std::to_string(bounds.prime) + ", got " + f.name());
    }
  }
  if (!is_standardly_stratified(ctx, ord)) {
    fail(errc::precondition,
         "the cokernel search is only defined for orders where the algebra "
         "is standardly stratified");
  }
  if (!bounds.caps.empty() &&
      static_cast<int>(bounds.caps.size()) != t->nv()) {
    fail(errc::parse, "multiplicity caps must list one bound per vertex");
  }

  StandardFamily<F> fam = standard_modules(ctx, ord);
  std::vector<Rep<F>> proj;
  std::vector<int> pdim;
  for (int mu = 0; mu < t->nv(); ++mu) {
    proj.push_back(projective_rep(t, mu));
    pdim.push_back(proj.back().total());
  }

  ClosureVerdict<F> out;
  detail::mono_search_state<F> state;
  state.bounds = &bounds;
  std::mt19937_64 rng(bounds.seed);
  std::uniform_int_distribution<int> small(-2, 2);

  for (int li = 0; li < ord.size(); ++li) {
    const int lambda = ord.max_first[li];
    const Rep<F>& delta = fam.delta[lambda];
    std::vector<std::vector<Mat<F>>> hom_bases;
    std::vector<int> cap(t->nv(), 0);
    for (int mu = 0; mu < t->nv(); ++mu) {
      hom_bases.push_back(hom_space(delta, proj[mu]));
      cap[mu] = static_cast<int>(hom_bases[mu].size());
      if (!bounds.caps.empty()) cap[mu] = std::min(cap[mu], bounds.caps[mu]);
    }
    for (const auto& mults : detail::multiplicity_tuples(cap, pdim)) {
      int hom_dim = 0;
      int target_dim = 0;
      for (int mu = 0; mu < t->nv(); ++mu) {
        hom_dim += mults[mu] * static_cast<int>(hom_bases[mu].size());
        target_dim += mults[mu] * pdim[mu];
      }
      if (hom_dim == 0 || target_dim < delta.total()) continue;
      detail::StandardHomTarget<F> ts =
          detail::standard_hom_target(delta, proj, hom_bases, mults);
      std::optional<std::vector<typename F::Elem>> hit;
      if constexpr (F::is_finite) {
        const std::uint64_t p = f.order();
        std::vector<std::uint64_t> c(hom_dim, 0);
        while (true) {
          int i = hom_dim - 1;
          while (i >= 0 && c[i] == p - 1) {
            c[i] = 0;
            --i;
          }
          if (i < 0) break;
          ++c[i];
          std::size_t first = 0;
          while (first < c.size() && c[first] == 0) ++first;
          if (c[first] != 1) continue;  // scalar multiple of an earlier map
          std::vector<typename F::Elem> coeffs(c.begin(), c.end());
          state.charge(*t, lambda, mults);
          if (detail::candidate_fails(ctx, fam, delta, ts, coeffs)) {
            hit = std::move(coeffs);
            break;
          }
        }
      } else {
        for (int s = 0; s < bounds.samples; ++s) {
          std::vector<typename F::Elem> coeffs;
          bool nonzero = false;
          for (int i = 0; i < hom_dim; ++i) {
            int v = small(rng);
            if (v != 0) nonzero = true;
            coeffs.push_back(f.from_int(v));
          }
          if (!nonzero) continue;
          state.charge(*t, lambda, mults);
          if (detail::candidate_fails(ctx, fam, delta, ts, coeffs)) {
            hit = std::move(coeffs);
            break;
          }
        }
      }
      if (hit) {
        HomProbe<F> pr = probe_standard_hom(ctx, fam, lambda, mults, *hit);
        internal_check(pr.injective && !pr.membership.member,
                       "probe disagrees with the search inner loop");
        ClosureCounterexample<F> cex;
        cex.lambda = lambda;
        cex.mults = mults;
        cex.coeffs = *hit;
        cex.cokernel = pr.cokernel;
        cex.membership = pr.membership;
        verify_counterexample(ctx, ord, cex);
        out.closed = Closedness::not_closed;
        out.counterexample = std::move(cex);
        return out;
      }
    }
  }
  return out;
}

// Containment of filtration categories: every standard module of
// `ord_other` must itself be filtered by the standard modules of
// `ord_closed`.  Because the categories are closed under extensions, this
// is equivalent to containment of the full categories.
template <class F>
struct ContainmentReport {
  bool contained = true;
  int failing_vertex = -1;
  FiltrationResult<F> failure;
};

template <class F>
ContainmentReport<F> containment_check(StratContext<F>& ctx,
                                       const LinearOrder& ord_closed,
                                       const LinearOrder& ord_other) {
  if (!is_standardly_stratified(ctx, ord_closed) ||
      !is_standardly_stratified(ctx, ord_other)) {
    fail(errc::precondition,
         "containment comparison requires both orders to be standardly "
         "stratified");
  }
  StandardFamily<F> outer = standard_modules(ctx, ord_closed);
  StandardFamily<F> inner = standard_modules(ctx, ord_other);
  ContainmentReport<F> rep;
  for (int lam = 0; lam < ctx.table()->nv(); ++lam) {
    FiltrationResult<F> res =
        filtration_membership(ctx, outer, inner.delta[lam]);
    if (!res.member) {
      rep.contained = false;
      rep.failing_vertex = lam;
      rep.failure = std::move(res);
      return rep;
    }
  }
  return rep;
}

// For a directed algebra whose directed order (sources smallest) is
// standardly stratified, the filtration category of that order is closed
// under cokernels of monomorphisms; this runs the bounded search on it and
// raises an alarm if a counterexample appears.
template <class F>
struct DirectedClosureReport {
  LinearOrder order;
  ClosureVerdict<F> verdict;
};

template <class F>
DirectedClosureReport<F> directed_order_closure_spotcheck(
    StratContext<F>& ctx, const SearchBounds& bounds = {}) {
  AcyclicityReport acy = block_digraph_acyclicity(*ctx.table());
  if (!acy.acyclic) {
    fail(errc::precondition,
         "the closure spot-check requires a directed algebra");
  }
  DirectedClosureReport<F> rep;
  rep.order.max_first.assign(acy.topological_order.rbegin(),
                             acy.topological_order.rend());
  if (!is_standardly_stratified(ctx, rep.order)) {
    fail(errc::precondition,
         "the algebra is not standardly stratified for its directed order");
  }
  rep.verdict = bounded_mono_search(ctx, rep.order, bounds);
  if (rep.verdict.counterexample) {
    fail(errc::alarm,
         "a directed order produced a cokernel outside its filtration "
         "category");
  }
  return rep;
}

// Convenience wrappers building a throwaway context.
template <class F>
ClosureVerdict<F> qh_closure_criterion(const TablePtr<F>& t,
                                       const LinearOrder& ord) {
  StratContext<F> ctx(t);
  return qh_closure_criterion(ctx, ord);
}

template <class F>
ClosureVerdict<F> bounded_mono_search(const TablePtr<F>& t,
                                      const LinearOrder& ord,
                                      const SearchBounds& bounds = {}) {
  StratContext<F> ctx(t);
  return bounded_mono_search(ctx, ord, bounds);
}

template <class F>
ContainmentReport<F> containment_check(const TablePtr<F>& t,
                                       const LinearOrder& ord_closed,
                                       const LinearOrder& ord_other) {
  StratContext<F> ctx(t);
  return containment_check(ctx, ord_closed, ord_other);
}

template <class F>
DirectedClosureReport<F> directed_order_closure_spotcheck(
    const TablePtr<F>& t, const SearchBounds& bounds = {}) {
  StratContext<F> ctx(t);
  return directed_order_closure_spotcheck(ctx, bounds);
}

}  // namespace quiverstrat
