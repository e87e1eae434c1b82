#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "quiverstrat/field.hpp"
#include "quiverstrat/fixtures.hpp"
#include "quiverstrat/graded.hpp"
#include "quiverstrat/presentation.hpp"
#include "testutil.hpp"

using namespace quiverstrat;

namespace {

using QF = RationalField;

TablePtr<QF> T(const std::string& name) {
  return build_presentation(QF{}, fixture(name));
}

int id_of(const AlgebraTable<QF>& t, const std::string& label) {
  int i = qstest::basis_index(t, label);
  REQUIRE(i >= 0);
  return i;
}

bool is_zero_vec(const AlgebraTable<QF>& t,
                 const typename AlgebraTable<QF>::Vec& v) {
  for (const auto& x : v) {
    if (!t.fld.is_zero(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("grading the loop fixture: components, relations, products") {
  auto t = T("ex1_10");
  GradedAlgebra<QF> g = associated_graded(t);
  CHECK(g.component_dims() == std::vector<int>{4, 3, 1});
  const AlgebraTable<QF>& gt = *g.table;
  REQUIRE(gt.dim() == 8);
  CHECK(gt.vertices == t->vertices);

  // the loop survives in degree zero; the three arrows sit in degree one
  CHECK(gt.basis[id_of(gt, "delta")].degree == 0);
  for (const char* a : {"alpha", "beta", "gamma"}) {
    CHECK(gt.basis[id_of(gt, a)].degree == 1);
  }

  // the product of the arrow into the loop vertex with the loop dies after
  // grading although it is nonzero in the original algebra
  int al = id_of(gt, "alpha"), de = id_of(gt, "delta");
  CHECK_FALSE(is_zero_vec(*t, t->mult(t->unit(id_of(*t, "alpha")),
                                      t->unit(id_of(*t, "delta")))));
  CHECK(is_zero_vec(gt, gt.basis_product(al, de)));
  CHECK(is_zero_vec(gt, gt.basis_product(id_of(gt, "beta"), de)));

  // the two-arrow composite spans the top degree
  auto deg2 = g.ids_of_degree(2);
  REQUIRE(deg2.size() == 1);
  CHECK(gt.basis_product(id_of(gt, "gamma"), id_of(gt, "beta")) ==
        gt.unit(deg2.front()));

  // grading changes the isomorphism class: the loop becomes central
  CHECK(center_dim(*t) == 1);
  CHECK(center_dim(gt) == 2);
}

TEST_CASE("grading the loop fixture: tensor form and bimodule quiver") {
  auto t = T("ex1_10");
  GradedAlgebra<QF> g = associated_graded(t);

  TensorAlgebraCheck tc = tensor_algebra_check(g);
  CHECK(tc.chain);
  CHECK(tc.chain_dims == std::vector<int>{1, 0});
  CHECK(tc.left_generator_projective);
  CHECK_FALSE(tc.right_generator_projective);
  CHECK(tc.left);
  CHECK_FALSE(tc.right);

  BimoduleQuiver bq = bimodule_quiver(g);
  CHECK(bq.local_dims == std::vector<int>{2, 1, 1});
  REQUIRE(bq.arrows.size() == 3);
  // arrows are listed by (source, target) pairs: x->y, x->z, y->z
  CHECK(bq.arrows[0].src == 0);
  CHECK(bq.arrows[0].dst == 1);
  CHECK(bq.arrows[1].src == 0);
  CHECK(bq.arrows[1].dst == 2);
  CHECK(bq.arrows[2].src == 1);
  CHECK(bq.arrows[2].dst == 2);
  for (const auto& a : bq.arrows) {
    CHECK(a.dim == 1);
    CHECK(a.left_free);
  }
  CHECK_FALSE(bq.arrows[0].right_free);  // the loop kills the right action
  CHECK_FALSE(bq.arrows[1].right_free);
  CHECK(bq.arrows[2].right_free);
  CHECK(bq.free_chain);
  CHECK(bq.left_regular);
  CHECK_FALSE(bq.right_regular);
  CHECK_FALSE(bq.regular);

  std::string dot = to_dot(bq);
  CHECK(dot.find("x (dim 2)") != std::string::npos);
  CHECK(dot.find("\"x\" -> \"y\"") != std::string::npos);
}

TEST_CASE("grading an algebra that is already graded changes nothing") {
  auto t = T("hereditary_a2");
  GradedAlgebra<QF> g = associated_graded(t);
  CHECK(g.component_dims() == std::vector<int>{2, 1});
  const AlgebraTable<QF>& gt = *g.table;
  REQUIRE(gt.dim() == t->dim());
  for (int i = 0; i < t->dim(); ++i) {
    CHECK(gt.basis[i].label == t->basis[i].label);
    for (int j = 0; j < t->dim(); ++j) {
      CHECK(gt.basis_product(i, j) == t->basis_product(i, j));
    }
  }
  TensorAlgebraCheck tc = tensor_algebra_check(g);
  CHECK(tc.left);
  CHECK(tc.right);
}

TEST_CASE("grading fixtures with trivial off-diagonal part") {
  for (const char* name : {"local_dual_numbers", "semisimple_2", "zero"}) {
    CAPTURE(name);
    auto t = T(name);
    GradedAlgebra<QF> g = associated_graded(t);
    CHECK(g.top_degree() == 0);
    CHECK(g.component_dims() == std::vector<int>{t->dim()});
    TensorAlgebraCheck tc = tensor_algebra_check(g);
    CHECK(tc.left);
    CHECK(tc.right);
    BimoduleQuiver bq = bimodule_quiver(g);
    CHECK(bq.arrows.empty());
    CHECK(bq.regular);
  }
}

TEST_CASE("grading refuses an undirected algebra") {
  auto t = T("s4_6");
  try {
    associated_graded(t);
    FAIL("expected a precondition error");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition);
  }
  try {
    graded_equivalence_check(t);
    FAIL("expected a precondition error");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition);
  }
}

TEST_CASE("tree fixture: grading keeps the failing block unfree") {
  auto t = T("s4_2");
  GradedAlgebra<QF> g = associated_graded(t);
  CHECK(g.component_dims() == std::vector<int>{7, 3, 2});
  TensorAlgebraCheck tc = tensor_algebra_check(g);
  CHECK(tc.chain);
  CHECK(tc.chain_dims == std::vector<int>{2, 0});
  CHECK_FALSE(tc.left_generator_projective);
  CHECK_FALSE(tc.left);
  CHECK_FALSE(tc.right);
  BimoduleQuiver bq = bimodule_quiver(g);
  CHECK(bq.local_dims == std::vector<int>{2, 1, 2, 2});
  REQUIRE(bq.arrows.size() == 3);
  CHECK_FALSE(bq.left_regular);
}

TEST_CASE("stratification verdicts survive grading on every directed fixture") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto t = T(name);
    if (!block_digraph_acyclicity(*t).acyclic) continue;
    // raises an alarm internally if any pair of routes disagrees
    GradedEquivalenceReport<QF> rep = graded_equivalence_check(t);
    bool expect = name == "ex1_10" || name == "hereditary_a2" ||
                  name == "local_dual_numbers" || name == "semisimple_2" ||
                  name == "zero";
    CHECK(rep.ss_all_orders == expect);
    CHECK(rep.graded_ss_all_orders == expect);
    CHECK(rep.tensor.left == expect);
  }
}

TEST_CASE("loop fixture equivalence report: one-sided projectivity") {
  auto t = T("ex1_10");
  GradedEquivalenceReport<QF> rep = graded_equivalence_check(t);
  CHECK(rep.ss_all_orders);
  CHECK_FALSE(rep.properly_all_orders);
  CHECK(rep.j_left_projective);
  CHECK_FALSE(rep.j_right_projective);
  CHECK(rep.tensor.left);
  CHECK_FALSE(rep.tensor.right);

  auto t2 = T("hereditary_a2");
  GradedEquivalenceReport<QF> rep2 = graded_equivalence_check(t2);
  CHECK(rep2.properly_all_orders);
  CHECK(rep2.graded_properly_all_orders);
  CHECK(rep2.j_right_projective);
}

TEST_CASE("graded modules: projectivity is preserved and reflected") {
  auto t = T("ex1_10");
  GradedAlgebra<QF> g = associated_graded(t);

  Rep<QF> reg = graded_module(g, left_regular_rep(t));
  check_rep(reg);
  CHECK(is_isomorphic(reg, left_regular_rep(g.table)).verdict ==
        Trilean::yes);

  for (int lam = 0; lam < t->nv(); ++lam) {
    CAPTURE(lam);
    Rep<QF> gp = graded_module(g, projective_rep(t, lam));
    check_rep(gp);
    CHECK(is_projective(gp).projective);

    Rep<QF> gs = graded_module(g, simple_rep(t, lam));
    check_rep(gs);
    CHECK(is_projective(gs).projective ==
          is_projective(simple_rep(t, lam)).projective);
  }

  Rep<QF> j = off_diagonal_ideal(t);
  Rep<QF> gj = graded_module(g, j);
  check_rep(gj);
  CHECK(is_projective(j).projective);
  CHECK(is_projective(gj).projective);
}

TEST_CASE("randomized: grading agrees with the equivalence theorem") {
  std::mt19937_64 rng(424242);
  int directed_seen = 0;
  for (int iter = 0; iter < 30 && directed_seen < 6; ++iter) {
    auto t = qstest::random_table(QF{}, rng, 10);
    if (!block_digraph_acyclicity(*t).acyclic) continue;
    ++directed_seen;
    CAPTURE(iter);

    GradedEquivalenceReport<QF> rep = graded_equivalence_check(t);
    int total = 0;
    for (int d : rep.graded.component_dims()) total += d;
    CHECK(total == t->dim());

    // degree-one skeleton regularity against the whole-order-set check
    BimoduleQuiver bq = bimodule_quiver(rep.graded);
    StratContext<QF> gctx(rep.graded.table);
    CHECK(bq.left_regular == theorem01_check(gctx).cond1_bruteforce);

    // grading preserves and reflects projectivity
    Rep<QF> greg = graded_module(rep.graded, left_regular_rep(t));
    check_rep(greg);
    CHECK(is_isomorphic(greg, left_regular_rep(rep.graded.table)).verdict ==
          Trilean::yes);
    for (int lam = 0; lam < t->nv(); ++lam) {
      Rep<QF> gs = graded_module(rep.graded, simple_rep(t, lam));
      CHECK(is_projective(gs).projective ==
            is_projective(simple_rep(t, lam)).projective);
    }
    Rep<QF> gj = graded_module(rep.graded, off_diagonal_ideal(t));
    check_rep(gj);
    CHECK(is_projective(gj).projective ==
          is_projective(off_diagonal_ideal(t)).projective);
  }
  CHECK(directed_seen == 6);
}
