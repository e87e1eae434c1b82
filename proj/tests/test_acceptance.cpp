// Acceptance suite: nine numbered end-to-end scenarios over the shipped
// fixture corpus plus the cross-cutting property suites.  Unlike the unit
// binaries this is a plain main() that prints exactly one PASS/FAIL line
// per criterion and exits nonzero if any of them fail.  A disagreement
// between the four equivalent all-orders characterizations (criterion 2)
// exits with code 10, the same code the CLI uses for that alarm.

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quiverstrat/closure.hpp"
#include "quiverstrat/field.hpp"
#include "quiverstrat/fixtures.hpp"
#include "quiverstrat/graded.hpp"
#include "quiverstrat/order_analysis.hpp"
#include "quiverstrat/presentation.hpp"
#include "quiverstrat/stratification.hpp"
#include "quiverstrat/subspace.hpp"
#include "testutil.hpp"

using namespace quiverstrat;

namespace {

using QF = RationalField;
using PF = PrimeField;

TablePtr<QF> TQ(const std::string& name) {
  return build_presentation(QF{}, fixture(name));
}

TablePtr<PF> TP(const std::string& name, std::uint64_t p = 2) {
  return build_presentation(PF(p), fixture(name));
}

template <class F>
LinearOrder ord(const TablePtr<F>& t, const std::string& text) {
  return parse_order(t->vertices, text);
}

std::string tup(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// Collects human-readable reasons for every assertion that fails inside a
// criterion body, so the single FAIL line can say what went wrong.
struct Checker {
  std::vector<std::string> reasons;

  void expect(bool ok, const std::string& what) {
    if (!ok) reasons.push_back(what);
  }

  void eq(int got, int want, const std::string& what) {
    if (got != want) {
      reasons.push_back(what + ": got " + std::to_string(got) + ", want " +
                        std::to_string(want));
    }
  }

  void eq_vec(const std::vector<int>& got, const std::vector<int>& want,
              const std::string& what) {
    if (got != want) {
      reasons.push_back(what + ": got " + tup(got) + ", want " + tup(want));
    }
  }
};

int g_failures = 0;
bool g_route_disagreement = false;

void run_criterion(int num, const std::string& label,
                   const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const error& e) {
    c.reasons.push_back("error (code " + std::to_string(e.exit_code()) +
                        "): " + e.what());
  } catch (const std::exception& e) {
    c.reasons.push_back(std::string("exception: ") + e.what());
  }
  if (c.reasons.empty()) {
    std::cout << "criterion " << num << ": PASS — " << label << "\n";
  } else {
    ++g_failures;
    std::cout << "criterion " << num << ": FAIL — " << label << "\n";
    for (const auto& r : c.reasons) {
      std::cout << "    - " << r << "\n";
    }
  }
  std::cout.flush();
}

// --- criterion 1: the three-vertex loop algebra ------------------------

void crit_loop_algebra(Checker& c) {
  auto t = TQ("ex1_10");
  c.eq(t->dim(), 8, "algebra dimension");

  Rep<QF> j = off_diagonal_ideal(t);
  ProjectiveVerdict<QF> left = is_projective(j);
  c.expect(left.projective, "the off-diagonal left ideal must be projective");
  c.eq_vec(left.multiplicities, {0, 1, 2},
           "left ideal decomposition (copies of P_x, P_y, P_z)");

  StratContext<QF> ctx(t);
  AllOrdersReport<QF> rep = all_orders_scan(ctx);
  c.expect(rep.ss_all_orders,
           "must be standardly stratified for every linear order");
  c.expect(!rep.properly_all_orders,
           "must not be properly stratified for every linear order");

  ProjectiveVerdict<QF> right = is_projective(off_diagonal_ideal(opposite(t)));
  c.expect(!right.projective,
           "the off-diagonal right ideal must not be projective");
}

// --- criterion 2: four-way equivalence on corpus + random algebras -----

void crit_four_routes(Checker& c) {
  for (const auto& name : fixture_names()) {
    TheoremOneCheck tc = theorem01_check(TQ(name));
    if (!tc.agree) {
      g_route_disagreement = true;
      c.expect(false, "four routes disagree on fixture " + name);
    }
  }
  std::mt19937_64 rng(271828182);
  for (int iter = 0; iter < 100; ++iter) {
    auto t = qstest::random_table(QF{}, rng, 12);
    TheoremOneCheck tc = theorem01_check(t);
    if (!tc.agree) {
      g_route_disagreement = true;
      c.expect(false,
               "four routes disagree on random algebra #" +
                   std::to_string(iter) + " (dim " + std::to_string(t->dim()) +
                   ")");
      return;  // one counterexample is already fatal
    }
  }
}

// --- criterion 3: grading the loop algebra -----------------------------

void crit_graded_loop(Checker& c) {
  auto t = TQ("ex1_10");
  GradedAlgebra<QF> g = associated_graded(t);
  c.eq_vec(g.component_dims(), {4, 3, 1}, "graded component dimensions");

  TensorAlgebraCheck tc = tensor_algebra_check(g);
  c.expect(tc.left, "must be a left tensor algebra over its diagonal");
  c.expect(!tc.right, "must not be a right tensor algebra");

  // raises an alarm internally if any pair of its routes disagrees
  graded_equivalence_check(t);

  AlgebraIsoResult<QF> iso = algebra_isomorphic(*g.table, *t);
  c.expect(iso.verdict == Trilean::no,
           "the graded algebra must be certifiably non-isomorphic to the "
           "original (got: " +
               iso.detail + ")");
  c.eq(center_dim(*t), 1, "center dimension of the original");
  c.eq(center_dim(*g.table), 2, "center dimension of the graded algebra");
}

// --- criterion 4: four-vertex algebra with three loops -----------------

void crit_six_orders(Checker& c) {
  auto t = TQ("s4_2");
  StratContext<QF> ctx(t);

  OrderSearchResult res = orders_algorithm(ctx);
  std::set<std::string> got;
  for (const auto& o : res.full) got.insert(format_order(t->vertices, o));
  const std::set<std::string> want = {
      "y > x > z > w", "y > x > w > z", "y > z > x > w",
      "y > z > w > x", "y > w > z > x", "y > w > x > z"};
  if (got != want) {
    std::string s;
    for (const auto& o : got) s += "[" + o + "] ";
    c.expect(false, "order search must find exactly the six orders with y "
                    "maximal; found: " + s);
  }

  for (const auto& o : res.full) {
    StratificationVerdict sv = stratification_verdict(ctx, o);
    c.expect(sv.standardly_stratified,
             "must be standardly stratified for " +
                 format_order(t->vertices, o));
    c.eq_vec(sv.standard_dims, {2, 3, 2, 2},
             "standard dims (by vertex x,y,z,w) for " +
                 format_order(t->vertices, o));
  }

  auto tp = TP("s4_2", 2);
  StratContext<PF> pctx(tp);
  for (const auto& o : res.full) {
    ClosureVerdict<PF> v = bounded_mono_search(pctx, o);
    c.expect(v.closed == Closedness::no_counterexample_up_to_bound &&
                 !v.counterexample.has_value(),
             "exhaustive mod-2 search must be clean for " +
                 format_order(t->vertices, o));
  }

  int pairs = 0;
  for (const auto& a : res.full) {
    for (const auto& b : res.full) {
      if (a == b) continue;
      ContainmentReport<QF> rep = containment_check(ctx, a, b);
      c.expect(rep.contained,
               "filtration category of " + format_order(t->vertices, b) +
                   " must sit inside that of " + format_order(t->vertices, a));
      ++pairs;
    }
  }
  c.eq(pairs, 30, "ordered containment pairs checked");
}

// --- criterion 5: two orders with different standard dims --------------

void crit_two_orders(Checker& c) {
  auto t = TQ("s4_3");
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);

  LinearOrder xzy = ord(t, "x,z,y");
  LinearOrder yxz = ord(t, "y,x,z");
  bool has_xzy = false, has_yxz = false;
  for (const auto& o : res.full) {
    if (o == xzy) has_xzy = true;
    if (o == yxz) has_yxz = true;
  }
  c.expect(has_xzy, "x > z > y must be found by the order search");
  c.expect(has_yxz, "y > x > z must be found by the order search");

  c.eq_vec(stratification_verdict(ctx, xzy).standard_dims, {2, 1, 2},
           "standard dims (by vertex x,y,z) for x > z > y");
  c.eq_vec(stratification_verdict(ctx, yxz).standard_dims, {2, 3, 2},
           "standard dims (by vertex x,y,z) for y > x > z");

  auto tp = TP("s4_3", 2);
  StratContext<PF> pctx(tp);
  ClosureVerdict<PF> v = bounded_mono_search(pctx, xzy);
  c.expect(v.closed == Closedness::no_counterexample_up_to_bound,
           "exhaustive mod-2 search must be clean for x > z > y");
}

// --- criterion 6: a stratifying order the search must reject -----------

void crit_rejected_order(Checker& c) {
  auto t = TQ("s4_4");
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);

  LinearOrder yxz = ord(t, "y,x,z");
  LinearOrder xzy = ord(t, "x,z,y");
  c.eq(static_cast<int>(res.full.size()), 1,
       "the search must produce exactly one full-length order");
  c.expect(!res.full.empty() && res.full.front() == yxz,
           "the full-length order must be y > x > z");

  c.expect(is_standardly_stratified(ctx, xzy),
           "x > z > y must be standardly stratified");
  for (const auto& o : res.full) {
    c.expect(!(o == xzy), "x > z > y must not be produced by the search");
  }

  ContainmentReport<QF> ab = containment_check(ctx, xzy, yxz);
  ContainmentReport<QF> ba = containment_check(ctx, yxz, xzy);
  c.expect(!ab.contained,
           "the y > x > z standards must not all be filtered by the "
           "x > z > y family");
  c.expect(!ba.contained,
           "the x > z > y standards must not all be filtered by the "
           "y > x > z family");

  auto tp = TP("s4_4", 2);
  StratContext<PF> pctx(tp);
  for (const LinearOrder& o : {xzy, yxz}) {
    ClosureVerdict<PF> v = bounded_mono_search(pctx, o);
    bool found = v.closed == Closedness::not_closed &&
                 v.counterexample.has_value() &&
                 !v.counterexample->membership.member;
    c.expect(found, "the mod-2 search must find a counterexample for " +
                        format_order(t->vertices, o));
  }
}

// --- criterion 7: standards equal projectives, yet not closed ----------

void crit_standards_equal_projectives(Checker& c) {
  auto t = TQ("s4_5");
  StratContext<QF> ctx(t);
  std::vector<int> pdims = qstest::projective_dims(*t);
  c.eq_vec(pdims, {6, 3, 2}, "projective dimensions (by vertex x,y,z)");

  AllOrdersReport<QF> rep = all_orders_scan(ctx, /*with_properly=*/false);
  int ss_count = 0;
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    if (!rep.ss[i]) continue;
    ++ss_count;
    StratificationVerdict sv = stratification_verdict(ctx, rep.orders[i]);
    c.eq_vec(sv.standard_dims, pdims,
             "standard dims must equal projective dims for " +
                 format_order(t->vertices, rep.orders[i]));
  }
  c.expect(ss_count >= 1, "at least one order must be standardly stratified");

  auto tp = TP("s4_5", 2);
  StratContext<PF> pctx(tp);
  ClosureVerdict<PF> v = bounded_mono_search(pctx, ord(tp, "x,y,z"));
  bool found = v.closed == Closedness::not_closed &&
               v.counterexample.has_value();
  c.expect(found, "the mod-2 search must find a counterexample");
  if (found) {
    c.eq_vec(v.counterexample->cokernel.vdim, {1, 2, 0},
             "counterexample cokernel dimension vector (by vertex x,y,z)");
    c.expect(!v.counterexample->membership.member,
             "the cokernel must fail filtration membership");
  }
}

// --- criterion 8: the oriented triangle with a loop ---------------------

void crit_oriented_triangle(Checker& c) {
  auto t = TQ("s4_6");
  AcyclicityReport acy = block_digraph_acyclicity(*t);
  c.expect(!acy.acyclic, "the block digraph must contain a cycle");
  c.expect(acy.cycle.size() >= 3,
           "the cycle witness must visit at least three vertices");
  std::set<int> on_cycle(acy.cycle.begin(), acy.cycle.end());
  c.eq(static_cast<int>(on_cycle.size()), 3,
       "distinct vertices on the witness cycle");

  StratContext<QF> ctx(t);
  LinearOrder xzy = ord(t, "x,z,y");
  StratificationVerdict sv = stratification_verdict(ctx, xzy);
  c.expect(sv.standardly_stratified,
           "x > z > y must be standardly stratified");
  c.eq_vec(sv.standard_dims, {2, 2, 1},
           "standard dims (by vertex x,y,z) for x > z > y");
  std::vector<int> positional;
  for (int v : xzy.max_first) positional.push_back(sv.standard_dims[v]);
  c.eq_vec(positional, {2, 1, 2},
           "standard dims read along the order (maximal first)");

  for (std::uint64_t p : {2ull, 3ull}) {
    auto tp = TP("s4_6", p);
    StratContext<PF> pctx(tp);
    SearchBounds b;
    b.prime = p;
    ClosureVerdict<PF> v = bounded_mono_search(pctx, ord(tp, "x,z,y"), b);
    c.expect(v.closed == Closedness::no_counterexample_up_to_bound,
             "exhaustive mod-" + std::to_string(p) +
                 " search must be clean for x > z > y");
  }

  OrderSearchResult res = orders_algorithm(ctx);
  LVerification lv = verify_L_properties(ctx, res, {xzy});
  c.eq(lv.closed_orders_checked, 1,
       "x > z > y must be certified as found by the order search");
}

// --- criterion 9: cross-cutting property suites -------------------------

void crit_property_suites(Checker& c) {
  // trace oracle pair: generated-submodule route vs hom-image route, on
  // the regular module and on every projective, for every source vertex
  for (const auto& name : fixture_names()) {
    auto t = TQ(name);
    Rep<QF> reg = left_regular_rep(t);
    for (int lam = 0; lam < t->nv(); ++lam) {
      trace_of_projective(t, lam, reg, /*crosscheck=*/true);
      for (int mu = 0; mu < t->nv(); ++mu) {
        Rep<QF> p = projective_rep(t, mu);
        trace_of_projective(t, lam, p, /*crosscheck=*/true);
      }
    }
  }

  // stratification oracle pair: the scan below runs the inductive
  // quotient criterion and the greedy filtration of the regular module
  // for every order of every fixture; it raises an alarm on disagreement
  for (const auto& name : fixture_names()) {
    auto t = TQ(name);
    StratContext<QF> ctx(t);
    all_orders_scan(ctx, /*with_properly=*/true);
  }

  // directed fixtures: standards over the descending order live on the
  // diagonal, and stratification reduces to block freeness
  int directed = 0;
  for (const auto& name : fixture_names()) {
    auto t = TQ(name);
    AcyclicityReport acy = block_digraph_acyclicity(*t);
    if (!acy.acyclic) continue;
    ++directed;
    std::vector<int> mf(acy.topological_order.rbegin(),
                        acy.topological_order.rend());
    LinearOrder o{mf};
    StratContext<QF> ctx(t);
    StandardFamily<QF> fam = standard_modules(ctx, o);
    for (int lam = 0; lam < t->nv(); ++lam) {
      for (int v = 0; v < t->nv(); ++v) {
        int expect =
            v == lam ? static_cast<int>(t->block(lam, lam).size()) : 0;
        if (fam.delta[lam].vdim[v] != expect) {
          c.expect(false, name + ": standard module at vertex " +
                              t->vertices[lam] +
                              " must be the diagonal block");
        }
      }
    }
    bool allfree = true;
    for (int mu = 0; mu < t->nv(); ++mu) {
      for (int lam = 0; lam < t->nv(); ++lam) {
        if (mu != lam && !block_free_over_local(*t, mu, lam)) allfree = false;
      }
    }
    c.expect(is_standardly_stratified(ctx, o) == allfree,
             name + ": stratification over the descending order must match "
                    "block freeness");
  }
  c.eq(directed, 9, "directed fixtures covered");

  // grading preserves and reflects projectivity on the spot-check list:
  // the off-diagonal ideal, every projective, every simple
  {
    auto t = TQ("ex1_10");
    GradedAlgebra<QF> g = associated_graded(t);
    Rep<QF> j = off_diagonal_ideal(t);
    c.expect(is_projective(graded_module(g, j)).projective ==
                 is_projective(j).projective,
             "graded off-diagonal ideal projectivity must match");
    for (int lam = 0; lam < t->nv(); ++lam) {
      c.expect(is_projective(graded_module(g, projective_rep(t, lam)))
                   .projective,
               "graded projectives must stay projective");
      c.expect(is_projective(graded_module(g, simple_rep(t, lam))).projective ==
                   is_projective(simple_rep(t, lam)).projective,
               "graded simples must match the ungraded verdict");
    }
    c.expect(is_isomorphic(graded_module(g, left_regular_rep(t)),
                           left_regular_rep(g.table))
                     .verdict == Trilean::yes,
             "the graded regular module must be the graded algebra's "
             "regular module");
  }

  // lift independence: building the graded table re-derives its structure
  // constants from a second, independently chosen set of lift
  // representatives and alarms on any mismatch
  for (const auto& name : fixture_names()) {
    auto t = TQ(name);
    if (!block_digraph_acyclicity(*t).acyclic) continue;
    GradedAlgebra<QF> g = associated_graded(t);
    int total = 0;
    for (int d : g.component_dims()) total += d;
    c.eq(total, t->dim(), name + ": graded components must sum to the "
                                 "algebra dimension");
  }
  {
    // the loop survives grading in degree zero, so products into it die
    auto t = TQ("ex1_10");
    GradedAlgebra<QF> g = associated_graded(t);
    const AlgebraTable<QF>& gt = *g.table;
    int al = qstest::basis_index(gt, "alpha");
    int de = qstest::basis_index(gt, "delta");
    int ga = qstest::basis_index(gt, "gamma");
    int be = qstest::basis_index(gt, "beta");
    bool parent_nonzero = false;
    {
      auto prod = t->mult(qstest::unit_of(*t, "alpha"),
                          qstest::unit_of(*t, "delta"));
      for (const auto& x : prod) parent_nonzero |= !t->fld.is_zero(x);
    }
    c.expect(parent_nonzero, "alpha * delta must be nonzero before grading");
    bool graded_zero = true;
    for (const auto& x : gt.basis_product(al, de)) {
      graded_zero &= gt.fld.is_zero(x);
    }
    c.expect(graded_zero, "alpha * delta must vanish after grading");
    bool comp_nonzero = false;
    for (const auto& x : gt.basis_product(ga, be)) {
      comp_nonzero |= !gt.fld.is_zero(x);
    }
    c.expect(comp_nonzero, "gamma * beta must survive grading");
  }

  // subspace dimension formula: dim(U + W) + dim(U ∩ W) = dim U + dim W
  {
    std::mt19937_64 rng(160493);
    auto fuzz = [&](auto fld, int rounds) {
      using F = decltype(fld);
      for (int it = 0; it < rounds; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto sample = [&]() {
          int k = static_cast<int>(rng() % (n + 1));
          std::vector<std::vector<typename F::Elem>> rows;
          for (int i = 0; i < k; ++i) {
            std::vector<typename F::Elem> r(n);
            for (int j = 0; j < n; ++j) {
              r[j] = fld.from_int(static_cast<long long>(rng() % 5) - 2);
            }
            rows.push_back(std::move(r));
          }
          return Subspace<F>::span_of(fld, rows, n);
        };
        Subspace<F> u = sample();
        Subspace<F> w = sample();
        Subspace<F> s = sum(u, w);
        Subspace<F> i = intersect(u, w);
        if (s.dim() + i.dim() != u.dim() + w.dim()) {
          c.expect(false, "dimension formula failed at ambient " +
                              std::to_string(n));
          return;
        }
        if (!s.contains(u) || !s.contains(w) || !u.contains(i) ||
            !w.contains(i)) {
          c.expect(false, "sum/intersection containments failed at ambient " +
                              std::to_string(n));
          return;
        }
      }
    };
    fuzz(QF{}, 120);
    fuzz(PF(2), 120);
  }
}

}  // namespace

int main() {
  run_criterion(1, "loop algebra: dimension, ideal decomposition, "
                   "one-sided stratification",
                crit_loop_algebra);
  run_criterion(2, "four-way equivalence on the corpus and 100 random "
                   "algebras",
                crit_four_routes);
  run_criterion(3, "graded loop algebra: components, tensor form, "
                   "non-isomorphism",
                crit_graded_loop);
  run_criterion(4, "six-order family: search, dims, clean searches, mutual "
                   "containment",
                crit_six_orders);
  run_criterion(5, "two found orders with distinct standard dimensions",
                crit_two_orders);
  run_criterion(6, "stratifying order rejected by the search, with "
                   "counterexamples",
                crit_rejected_order);
  run_criterion(7, "standards equal projectives yet a counterexample exists",
                crit_standards_equal_projectives);
  run_criterion(8, "oriented triangle: cycle witness, dims, clean searches, "
                   "membership in the found set",
                crit_oriented_triangle);
  run_criterion(9, "property suites: traces, stratification routes, "
                   "freeness, grading, subspaces",
                crit_property_suites);

  if (g_route_disagreement) {
    std::cout << "acceptance: equivalence-route disagreement\n";
    return 10;
  }
  if (g_failures > 0) {
    std::cout << "acceptance: " << (9 - g_failures) << "/9 criteria passed\n";
    return 1;
  }
  std::cout << "acceptance: 9/9 criteria passed\n";
  return 0;
}
