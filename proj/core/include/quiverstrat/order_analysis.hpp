#pragma once

// Whole-order-set analysis of one algebra:
//   * brute-force scan of all |Lambda|! linear orders;
//   * the four-way equivalence check for being standardly stratified for
//     every order (brute force / directedness + projectivity of the
//     off-diagonal ideal / projectivity of all pairwise traces / a global
//     projective-dimension bound on standard modules), with a hard alarm
//     if the four verdicts ever disagree;
//   * the recursive order-search algorithm that branches over admissible
//     maximal vertices and collects the stratifying orders it certifies;
//   * consistency verification of the search output.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "quiverstrat/algebra.hpp"
#include "quiverstrat/errors.hpp"
#include "quiverstrat/rep.hpp"
#include "quiverstrat/stratification.hpp"

namespace quiverstrat {

// All linear orders, enumerated lexicographically by vertex name
// (max-first reading).
template <class F>
std::vector<LinearOrder> enumerate_orders(const AlgebraTable<F>& t) {
  std::vector<int> idx(t.nv());
  std::iota(idx.begin(), idx.end(), 0);
  auto byname = [&](int a, int b) { return t.vertices[a] < t.vertices[b]; };
  std::sort(idx.begin(), idx.end(), byname);
  std::vector<LinearOrder> out;
  do {
    out.push_back(LinearOrder{idx});
  } while (std::next_permutation(idx.begin(), idx.end(), byname));
  return out;
}

struct ScanLimits {
  int max_vertices = 8;  // the scan visits |Lambda|! orders
};

template <class F>
struct AllOrdersReport {
  std::vector<LinearOrder> orders;
  std::vector<char> ss;        // per-order verdict
  std::vector<char> properly;  // filled when requested
  bool with_properly = false;
  bool ss_all_orders = true;
  bool properly_all_orders = true;
};

template <class F>
AllOrdersReport<F> all_orders_scan(StratContext<F>& ctx,
                                   bool with_properly = true,
                                   ScanLimits lim = {}) {
  const TablePtr<F>& t = ctx.table();
  if (t->nv() > lim.max_vertices) {
    fail(errc::budget, "all-orders scan over " + std::to_string(t->nv()) +
                           " vertices exceeds the configured bound of " +
                           std::to_string(lim.max_vertices));
  }
  AllOrdersReport<F> rep;
  rep.orders = enumerate_orders(*t);
  rep.with_properly = with_properly;
  for (const auto& o : rep.orders) {
    bool s = is_standardly_stratified(ctx, o);
    rep.ss.push_back(s ? 1 : 0);
    rep.ss_all_orders = rep.ss_all_orders && s;
    if (with_properly) {
      bool p = s && is_standardly_stratified(ctx.op(), o);
      rep.properly.push_back(p ? 1 : 0);
      rep.properly_all_orders = rep.properly_all_orders && p;
    }
  }
  if (!with_properly) rep.properly_all_orders = false;
  return rep;
}

// The ideal spanned by all basis elements between distinct vertices, as a
// submodule representation of the left regular module.  It is only a
// left module when the block digraph is acyclic; callers must check.
template <class F>
Rep<F> off_diagonal_ideal(const TablePtr<F>& t) {
  internal_check(block_digraph_acyclicity(*t).acyclic,
                 "off-diagonal part is not an ideal: block digraph has a "
                 "cycle");
  Rep<F> reg = left_regular_rep(t);
  // regular-module coordinates are table ids grouped by destination vertex
  std::vector<std::pair<int, int>> order;  // (dst, id)
  for (int i = 0; i < t->dim(); ++i) {
    order.emplace_back(t->basis[i].dst, i);
  }
  std::stable_sort(order.begin(), order.end());
  std::vector<typename Rep<F>::Vec> gens;
  int offdiag = 0;
  for (int c = 0; c < t->dim(); ++c) {
    int id = order[c].second;
    if (t->basis[id].src != t->basis[id].dst) {
      gens.push_back(reg.unit(c));
      ++offdiag;
    }
  }
  Submodule<F> s = submodule_generated(reg, gens);
  internal_check(s.dim() == offdiag,
                 "off-diagonal span is not closed under the action");
  return sub_rep(reg, s);
}

struct TheoremOneCheck {
  bool cond1_bruteforce = false;
  bool cond2_directed_and_J_projective = false;
  bool cond3_all_traces_projective = false;
  bool cond4_pd_bound = false;
  std::string witness1, witness2, witness3, witness4;
  bool agree = false;
};

template <class F>
TheoremOneCheck theorem01_check(StratContext<F>& ctx, ScanLimits lim = {}) {
  const TablePtr<F>& t = ctx.table();
  const int nv = t->nv();
  TheoremOneCheck out;

  // (1) brute force over every order
  {
    AllOrdersReport<F> rep = all_orders_scan(ctx, /*with_properly=*/false,
                                             lim);
    out.cond1_bruteforce = rep.ss_all_orders;
    for (std::size_t i = 0; i < rep.orders.size(); ++i) {
      if (!rep.ss[i]) {
        out.witness1 = "not stratified for " +
                       format_order(t->vertices, rep.orders[i]);
        break;
      }
    }
  }

  // (2) directedness plus left projectivity of the off-diagonal ideal
  {
    AcyclicityReport acy = block_digraph_acyclicity(*t);
    if (!acy.acyclic) {
      out.cond2_directed_and_J_projective = false;
      out.witness2 = "block digraph has a cycle through";
      for (int v : acy.cycle) out.witness2 += " " + t->vertices[v];
    } else {
      Rep<F> j = off_diagonal_ideal(t);
      ProjectiveVerdict pv = is_projective(j);
      out.cond2_directed_and_J_projective = pv.projective;
      if (!pv.projective) {
        out.witness2 = "off-diagonal ideal is not left projective";
      }
    }
  }

  // (3) every pairwise trace projective (representation route)
  {
    out.cond3_all_traces_projective = true;
    for (int lam = 0; lam < nv && out.cond3_all_traces_projective; ++lam) {
      for (int mu = 0; mu < nv; ++mu) {
        Rep<F> p = projective_rep(t, mu);
        Submodule<F> tr = trace_of_projective(t, lam, p);
        if (tr.dim() == 0) continue;
        if (!is_projective(sub_rep(p, tr)).projective) {
          out.cond3_all_traces_projective = false;
          out.witness3 = "trace of the projective at " + t->vertices[lam] +
                         " inside the projective at " + t->vertices[mu] +
                         " is not projective";
          break;
        }
      }
    }
  }

  // (4) every standard module of every order has projective dimension at
  // most one; standards depend only on (vertex, set of greater vertices),
  // and the bound extends to all filtered modules along filtrations
  {
    out.cond4_pd_bound = true;
    for (int lam = 0; lam < nv && out.cond4_pd_bound; ++lam) {
      const unsigned full = (nv >= 32) ? 0u : ((1u << nv) - 1);
      const unsigned others = full & ~(1u << lam);
      // iterate over subsets of the complement
      unsigned sub = 0;
      while (true) {
        Rep<F> p = projective_rep(t, lam);
        Submodule<F> acc = zero_submodule(p);
        for (int mu = 0; mu < nv; ++mu) {
          if (!(sub & (1u << mu))) continue;
          Submodule<F> tr = trace_of_projective(t, mu, p);
          for (int v = 0; v < nv; ++v) {
            acc.comp[v] = sum(acc.comp[v], tr.comp[v]);
          }
        }
        Rep<F> delta = quotient_rep(p, acc).rep;
        if (!pd_at_most(delta, 1)) {
          out.cond4_pd_bound = false;
          out.witness4 = "standard module at " + t->vertices[lam] +
                         " with greater set {";
          bool first = true;
          for (int mu = 0; mu < nv; ++mu) {
            if (sub & (1u << mu)) {
              if (!first) out.witness4 += ", ";
              out.witness4 += t->vertices[mu];
              first = false;
            }
          }
          out.witness4 += "} has projective dimension at least 2";
          break;
        }
        if (sub == others) break;
        sub = (sub - others) & others;  // next subset of `others`
      }
    }
  }

  out.agree = out.cond1_bruteforce == out.cond2_directed_and_J_projective &&
              out.cond1_bruteforce == out.cond3_all_traces_projective &&
              out.cond1_bruteforce == out.cond4_pd_bound;
  if (!out.agree) {
    auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    fail(errc::alarm,
         "equivalence check failed: brute force " + yn(out.cond1_bruteforce) +
             "; directed with projective off-diagonal ideal " +
             yn(out.cond2_directed_and_J_projective) +
             "; all traces projective " +
             yn(out.cond3_all_traces_projective) +
             "; projective-dimension bound " + yn(out.cond4_pd_bound) +
             ". " + out.witness1 + " " + out.witness2 + " " + out.witness3 +
             " " + out.witness4);
  }
  return out;
}

// One node of the order-search recursion, for diagnostics.
struct OrderSearchStep {
  unsigned mask = 0;                          // vertices already removed
  std::vector<int> admissible;                // the O-set at this node
  std::vector<std::pair<int, int>> below;     // (lam, mu) with lam <' mu
  std::vector<int> maximal;                   // branched-on elements
};

struct OrderSearchResult {
  std::vector<std::vector<int>> chains;  // all terminated chains (max-first)
  std::vector<LinearOrder> full;         // chains of full length
  std::vector<OrderSearchStep> steps;    // one per distinct visited node
};

namespace detail {

template <class F>
const OrderSearchStep& order_search_node(StratContext<F>& ctx, unsigned mask,
                                         std::map<unsigned, OrderSearchStep>&
                                             nodes) {
  auto it = nodes.find(mask);
  if (it != nodes.end()) return it->second;
  const TablePtr<F>& t = ctx.table();
  OrderSearchStep node;
  node.mask = mask;
  for (int lam = 0; lam < t->nv(); ++lam) {
    if (mask & (1u << lam)) continue;
    if (ctx.step_ok(mask, lam)) node.admissible.push_back(lam);
  }
  // lam <= mu exactly when the trace of the projective at mu inside the
  // projective at lam is nonzero, i.e. the (mu, lam) block survives
  const VertexQuotient<F>& q = ctx.quotient(mask);
  auto local = [&](int root) {
    for (std::size_t i = 0; i < q.kept_vertices.size(); ++i) {
      if (q.kept_vertices[i] == root) return static_cast<int>(i);
    }
    internal_check(false, "vertex was killed by the mask");
    return -1;
  };
  auto strictly_below = [&](int lam, int mu) {
    return lam != mu && !q.table->block(local(mu), local(lam)).empty();
  };
  for (int lam : node.admissible) {
    for (int mu : node.admissible) {
      if (strictly_below(lam, mu)) node.below.emplace_back(lam, mu);
    }
  }
  // the relation must be a genuine strict partial order on the candidates
  for (auto [lam, mu] : node.below) {
    if (strictly_below(mu, lam)) {
      fail(errc::alarm, "candidate comparison is not antisymmetric between " +
                            t->vertices[lam] + " and " + t->vertices[mu]);
    }
    for (int nu : node.admissible) {
      if (strictly_below(mu, nu) && !strictly_below(lam, nu)) {
        fail(errc::alarm, "candidate comparison is not transitive through " +
                              t->vertices[mu]);
      }
    }
  }
  for (int lam : node.admissible) {
    bool topmost = true;
    for (int mu : node.admissible) {
      if (strictly_below(lam, mu)) topmost = false;
    }
    if (topmost) node.maximal.push_back(lam);
  }
  return nodes.emplace(mask, std::move(node)).first->second;
}

template <class F>
void order_search_walk(StratContext<F>& ctx, unsigned mask,
                       std::vector<int>& chain,
                       std::map<unsigned, OrderSearchStep>& nodes,
                       OrderSearchResult& out) {
  const int nv = ctx.table()->nv();
  if (static_cast<int>(chain.size()) == nv) {
    out.chains.push_back(chain);
    out.full.push_back(LinearOrder{chain});
    return;
  }
  const OrderSearchStep node = order_search_node(ctx, mask, nodes);
  if (node.admissible.empty()) {
    out.chains.push_back(chain);  // dead end: keep the partial chain
    return;
  }
  for (int lam : node.maximal) {
    chain.push_back(lam);
    order_search_walk(ctx, mask | (1u << lam), chain, nodes, out);
    chain.pop_back();
  }
}

}  // namespace detail

template <class F>
OrderSearchResult orders_algorithm(StratContext<F>& ctx) {
  OrderSearchResult out;
  std::map<unsigned, OrderSearchStep> nodes;
  std::vector<int> chain;
  detail::order_search_walk(ctx, 0u, chain, nodes, out);
  for (const auto& kv : nodes) out.steps.push_back(kv.second);
  return out;
}

// Verification of the search output: the algebra must be standardly
// stratified for every full-length order found, and every externally
// certified cokernel-closed stratifying order must have been found.
struct LVerification {
  int stratified_orders_checked = 0;
  int closed_orders_checked = 0;
};

template <class F>
LVerification verify_L_properties(StratContext<F>& ctx,
                                  const OrderSearchResult& res,
                                  const std::vector<LinearOrder>&
                                      certified_closed = {}) {
  LVerification v;
  for (const auto& o : res.full) {
    if (!is_standardly_stratified(ctx, o)) {
      fail(errc::alarm, "order search produced " +
                            format_order(ctx.table()->vertices, o) +
                            " but the algebra is not standardly stratified "
                            "for it");
    }
    ++v.stratified_orders_checked;
  }
  for (const auto& o : certified_closed) {
    bool found = false;
    for (const auto& l : res.full) {
      if (l == o) found = true;
    }
    if (!found) {
      fail(errc::alarm, "order " + format_order(ctx.table()->vertices, o) +
                            " is stratifying with a cokernel-closed filtered "
                            "category but was not produced by the search");
    }
    ++v.closed_orders_checked;
  }
  return v;
}

// Convenience wrappers.
template <class F>
AllOrdersReport<F> all_orders_scan(const TablePtr<F>& t,
                                   bool with_properly = true,
                                   ScanLimits lim = {}) {
  StratContext<F> ctx(t);
  return all_orders_scan(ctx, with_properly, lim);
}

template <class F>
TheoremOneCheck theorem01_check(const TablePtr<F>& t, ScanLimits lim = {}) {
  StratContext<F> ctx(t);
  return theorem01_check(ctx, lim);
}

template <class F>
OrderSearchResult orders_algorithm(const TablePtr<F>& t) {
  StratContext<F> ctx(t);
  return orders_algorithm(ctx);
}

}  // namespace quiverstrat
