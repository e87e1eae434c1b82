#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "quiverstrat/field.hpp"
#include "quiverstrat/fixtures.hpp"
#include "quiverstrat/order_analysis.hpp"
#include "quiverstrat/presentation.hpp"
#include "quiverstrat/stratification.hpp"
#include "testutil.hpp"

using namespace quiverstrat;

namespace {

using QF = RationalField;

TablePtr<QF> T(const std::string& name) {
  return build_presentation(QF{}, fixture(name));
}

LinearOrder ord(const TablePtr<QF>& t, const std::string& text) {
  return parse_order(t->vertices, text);
}

std::set<std::string> found_orders(const TablePtr<QF>& t,
                                   const OrderSearchResult& res) {
  std::set<std::string> out;
  for (const auto& o : res.full) out.insert(format_order(t->vertices, o));
  return out;
}

std::set<std::string> search(const std::string& name,
                             OrderSearchResult* keep = nullptr) {
  auto t = T(name);
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);
  verify_L_properties(ctx, res);  // every produced order must stratify
  if (keep) *keep = res;
  return found_orders(t, res);
}

// a two-vertex cycle with both composites zero; no order stratifies it
Presentation two_cycle() {
  Presentation p;
  p.name = "two_cycle";
  p.quiver.vertices = {"x", "y"};
  p.quiver.arrows = {Arrow{"alpha", 0, 1}, Arrow{"beta", 1, 0}};
  TermSpec ab;
  ab.coeff = "1";
  ab.arrows = {"alpha", "beta"};
  TermSpec ba;
  ba.coeff = "1";
  ba.arrows = {"beta", "alpha"};
  p.relations = {RelationSpec{{ab}}, RelationSpec{{ba}}};
  return p;
}

}  // namespace

TEST_CASE("order enumeration is lexicographic in the vertex names") {
  auto t3 = T("ex1_10");
  auto orders3 = enumerate_orders(*t3);
  REQUIRE(orders3.size() == 6);
  CHECK(format_order(t3->vertices, orders3.front()) == "x > y > z");
  CHECK(format_order(t3->vertices, orders3.back()) == "z > y > x");

  auto t4 = T("s4_2");
  auto orders4 = enumerate_orders(*t4);
  REQUIRE(orders4.size() == 24);
  // 'w' sorts before 'x' even though it is the last vertex of the quiver
  CHECK(format_order(t4->vertices, orders4.front()) == "w > x > y > z");

  auto t0 = T("zero");
  auto orders0 = enumerate_orders(*t0);
  REQUIRE(orders0.size() == 1);
  CHECK(orders0.front().max_first.empty());
}

TEST_CASE("all-orders scan: stratified everywhere but not properly") {
  auto t = T("ex1_10");
  StratContext<QF> ctx(t);
  AllOrdersReport<QF> rep = all_orders_scan(ctx);
  REQUIRE(rep.orders.size() == 6);
  CHECK(rep.ss_all_orders);
  CHECK_FALSE(rep.properly_all_orders);
  int properly = 0;
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    CHECK(rep.ss[i] == 1);
    properly += rep.properly[i];
  }
  CHECK(properly == 2);  // only the orders putting the loop vertex last
}

TEST_CASE("all-orders scan: tree with loops is stratified for 8 of 24") {
  auto t = T("s4_2");
  StratContext<QF> ctx(t);
  AllOrdersReport<QF> rep = all_orders_scan(ctx, /*with_properly=*/false);
  REQUIRE(rep.orders.size() == 24);
  CHECK_FALSE(rep.ss_all_orders);
  CHECK(rep.properly.empty());
  int count = 0;
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    const auto& mf = rep.orders[i].max_first;
    // stratifying orders start with the branch vertex, possibly after the
    // source vertex of the tree
    bool expect = mf[0] == 1 || (mf[0] == 0 && mf[1] == 1);
    CHECK(rep.ss[i] == (expect ? 1 : 0));
    count += rep.ss[i];
  }
  CHECK(count == 8);
}

TEST_CASE("all-orders scan refuses oversized vertex sets") {
  auto t = T("s4_2");
  StratContext<QF> ctx(t);
  ScanLimits lim;
  lim.max_vertices = 3;
  try {
    all_orders_scan(ctx, true, lim);
    FAIL("expected a budget error");
  } catch (const error& e) {
    CHECK(e.code() == errc::budget);
  }
}

TEST_CASE("four-way equivalence: algebras stratified for every order") {
  for (const char* name : {"ex1_10", "hereditary_a2", "local_dual_numbers",
                           "semisimple_2", "zero"}) {
    CAPTURE(name);
    auto t = T(name);
    StratContext<QF> ctx(t);
    TheoremOneCheck c = theorem01_check(ctx);
    CHECK(c.cond1_bruteforce);
    CHECK(c.cond2_directed_and_J_projective);
    CHECK(c.cond3_all_traces_projective);
    CHECK(c.cond4_pd_bound);
    CHECK(c.agree);
    CHECK(c.witness1.empty());
    CHECK(c.witness2.empty());
    CHECK(c.witness3.empty());
    CHECK(c.witness4.empty());
  }
}

TEST_CASE("four-way equivalence: algebras with a non-stratifying order") {
  for (const char* name : {"s4_2", "s4_3", "s4_4", "s4_5", "s4_6"}) {
    CAPTURE(name);
    auto t = T(name);
    StratContext<QF> ctx(t);
    TheoremOneCheck c = theorem01_check(ctx);
    CHECK_FALSE(c.cond1_bruteforce);
    CHECK_FALSE(c.cond2_directed_and_J_projective);
    CHECK_FALSE(c.cond3_all_traces_projective);
    CHECK_FALSE(c.cond4_pd_bound);
    CHECK(c.agree);
    CHECK_FALSE(c.witness1.empty());
    CHECK_FALSE(c.witness2.empty());
    CHECK_FALSE(c.witness3.empty());
    CHECK_FALSE(c.witness4.empty());
  }
}

TEST_CASE("four-way equivalence: witnesses name the failure") {
  auto t = T("s4_2");
  StratContext<QF> ctx(t);
  TheoremOneCheck c = theorem01_check(ctx);
  // the off-diagonal ideal is a direct check, not a cycle failure
  CHECK(c.witness2.find("not left projective") != std::string::npos);
  CHECK(c.witness4.find("projective dimension") != std::string::npos);

  auto t6 = T("s4_6");
  StratContext<QF> ctx6(t6);
  TheoremOneCheck c6 = theorem01_check(ctx6);
  CHECK(c6.witness2.find("cycle") != std::string::npos);
}

TEST_CASE("off-diagonal ideal of a directed algebra") {
  auto t = T("ex1_10");
  Rep<QF> j = off_diagonal_ideal(t);
  CHECK(j.total() == 4);
  CHECK(j.vdim == std::vector<int>{0, 1, 3});
  CHECK(is_projective(j).projective);
  check_rep(j);
}

TEST_CASE("order search: loop fixture finds the single directed order") {
  OrderSearchResult res;
  CHECK(search("ex1_10", &res) == std::set<std::string>{"z > y > x"});
  CHECK(res.chains.size() == 1);       // no dead ends
  REQUIRE(res.steps.size() == 3);      // one node per visited vertex subset
  const OrderSearchStep& root = res.steps.front();
  CHECK(root.mask == 0u);
  CHECK(root.admissible == std::vector<int>{0, 1, 2});
  CHECK(root.below ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(root.maximal == std::vector<int>{2});
}

TEST_CASE("order search: tree fixture branches over three loose vertices") {
  OrderSearchResult res;
  auto found = search("s4_2", &res);
  CHECK(found == std::set<std::string>{"y > x > z > w", "y > x > w > z",
                                       "y > z > x > w", "y > z > w > x",
                                       "y > w > x > z", "y > w > z > x"});
  CHECK(res.chains.size() == 6);
  CHECK(res.steps.size() == 8);  // subsets reached: {}, {y}, 3 pairs, 3 triples
  const OrderSearchStep& root = res.steps.front();
  CHECK(root.admissible == std::vector<int>{0, 1});
  CHECK(root.below == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(root.maximal == std::vector<int>{1});

  // every found order assigns the same dimension to each standard module
  auto t = T("s4_2");
  StratContext<QF> ctx(t);
  for (const auto& o : res.full) {
    StratificationVerdict v = stratification_verdict(ctx, o);
    CHECK(v.standardly_stratified);
    CHECK(v.standard_dims == std::vector<int>{2, 3, 2, 2});
  }
}

TEST_CASE("order search: remaining fixtures") {
  CHECK(search("s4_3") ==
        std::set<std::string>{"x > z > y", "y > x > z"});
  CHECK(search("s4_4") == std::set<std::string>{"y > x > z"});
  CHECK(search("s4_5") == std::set<std::string>{"x > y > z"});
  CHECK(search("s4_6") == std::set<std::string>{"x > z > y"});
  CHECK(search("hereditary_a2") == std::set<std::string>{"y > x"});
  CHECK(search("local_dual_numbers") == std::set<std::string>{"v"});
  CHECK(search("semisimple_2") ==
        std::set<std::string>{"u > v", "v > u"});
  CHECK(search("zero") == std::set<std::string>{""});
}

TEST_CASE("order search: found orders need not exhaust stratifying ones") {
  // the tree fixture stratifies for 8 orders but the search certifies 6
  auto t = T("s4_2");
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);
  LinearOrder extra = ord(t, "x,y,z,w");
  CHECK(is_standardly_stratified(ctx, extra));
  CHECK(std::none_of(res.full.begin(), res.full.end(),
                     [&](const LinearOrder& o) { return o == extra; }));
}

TEST_CASE("order search: cyclic algebra terminates with no candidates") {
  auto t = build_presentation(QF{}, two_cycle());
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);
  CHECK(res.full.empty());
  REQUIRE(res.chains.size() == 1);
  CHECK(res.chains.front().empty());  // the empty chain is the only output
  REQUIRE(res.steps.size() == 1);
  CHECK(res.steps.front().admissible.empty());

  AllOrdersReport<QF> rep = all_orders_scan(ctx);
  CHECK_FALSE(rep.ss_all_orders);
  for (auto s : rep.ss) CHECK(s == 0);

  TheoremOneCheck c = theorem01_check(ctx);
  CHECK_FALSE(c.cond1_bruteforce);
  CHECK(c.agree);
  CHECK(c.witness2.find("cycle") != std::string::npos);
}

TEST_CASE("search verification accepts certified orders it found") {
  auto t = T("ex1_10");
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);
  LVerification v = verify_L_properties(ctx, res, {ord(t, "z,y,x")});
  CHECK(v.stratified_orders_checked == 1);
  CHECK(v.closed_orders_checked == 1);
}

TEST_CASE("search verification raises on a missed certified order") {
  auto t = T("ex1_10");
  StratContext<QF> ctx(t);
  OrderSearchResult res = orders_algorithm(ctx);
  try {
    verify_L_properties(ctx, res, {ord(t, "x,y,z")});
    FAIL("expected an alarm");
  } catch (const error& e) {
    CHECK(e.code() == errc::alarm);
  }
}

TEST_CASE("search verification raises on a non-stratifying order") {
  auto t = T("s4_5");
  StratContext<QF> ctx(t);
  OrderSearchResult fabricated;
  fabricated.full.push_back(ord(t, "z,y,x"));
  try {
    verify_L_properties(ctx, fabricated);
    FAIL("expected an alarm");
  } catch (const error& e) {
    CHECK(e.code() == errc::alarm);
  }
}

TEST_CASE("directed algebras: standards are the diagonal blocks and "
          "stratification reduces to block freeness") {
  int directed = 0;
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    auto t = T(name);
    AcyclicityReport acy = block_digraph_acyclicity(*t);
    if (!acy.acyclic) {
      CHECK(name == "s4_6");  // the oriented triangle is the only one
      continue;
    }
    ++directed;
    // descending: vertices reachable from a given one come earlier
    std::vector<int> mf(acy.topological_order.rbegin(),
                        acy.topological_order.rend());
    LinearOrder o{mf};
    StratContext<QF> ctx(t);
    StandardFamily<QF> fam = standard_modules(ctx, o);
    for (int lam = 0; lam < t->nv(); ++lam) {
      for (int v = 0; v < t->nv(); ++v) {
        int expect = v == lam ? static_cast<int>(t->block(lam, lam).size()) : 0;
        CHECK(fam.delta[lam].vdim[v] == expect);
      }
    }
    bool allfree = true;
    for (int mu = 0; mu < t->nv(); ++mu) {
      for (int lam = 0; lam < t->nv(); ++lam) {
        if (mu != lam && !block_free_over_local(*t, mu, lam)) allfree = false;
      }
    }
    CHECK(is_standardly_stratified(ctx, o) == allfree);
  }
  CHECK(directed == 9);
}

TEST_CASE("stratified-for-every-order passes to vertex quotients") {
  for (const char* name : {"ex1_10", "hereditary_a2"}) {
    CAPTURE(name);
    auto t = T(name);
    StratContext<QF> ctx(t);
    REQUIRE(theorem01_check(ctx).cond1_bruteforce);
    for (int lam = 0; lam < t->nv(); ++lam) {
      StratContext<QF> qctx(ctx.quotient(1u << lam).table);
      CHECK(theorem01_check(qctx).cond1_bruteforce);
    }
  }
}

TEST_CASE("randomized: the four routes agree and found orders stratify") {
  std::mt19937_64 rng(20260814);
  for (int iter = 0; iter < 8; ++iter) {
    CAPTURE(iter);
    auto t = qstest::random_table(QF{}, rng, 10);
    StratContext<QF> ctx(t);

    // the check itself raises if its four routes disagree
    TheoremOneCheck c = theorem01_check(ctx);
    CHECK(c.agree);

    AllOrdersReport<QF> rep = all_orders_scan(ctx, /*with_properly=*/false);
    CHECK(rep.ss_all_orders == c.cond1_bruteforce);

    OrderSearchResult res = orders_algorithm(ctx);
    verify_L_properties(ctx, res);
    std::set<std::vector<int>> seen;
    for (const auto& o : res.full) {
      REQUIRE(static_cast<int>(o.max_first.size()) == t->nv());
      std::vector<int> sorted = o.max_first;
      std::sort(sorted.begin(), sorted.end());
      for (int v = 0; v < t->nv(); ++v) CHECK(sorted[v] == v);
      CHECK(seen.insert(o.max_first).second);  // no duplicate branches
    }

    // stratified for every order is inherited by every vertex quotient
    if (c.cond1_bruteforce && t->nv() > 1) {
      for (int lam = 0; lam < t->nv(); ++lam) {
        StratContext<QF> qctx(ctx.quotient(1u << lam).table);
        CHECK(theorem01_check(qctx).cond1_bruteforce);
      }
    }
  }
}

TEST_CASE("randomized over a small prime field: routes agree") {
  std::mt19937_64 rng(77);
  PrimeField f2(2);
  for (int iter = 0; iter < 5; ++iter) {
    CAPTURE(iter);
    auto t = qstest::random_table(f2, rng, 9);
    StratContext<PrimeField> ctx(t);
    TheoremOneCheck c = theorem01_check(ctx);
    CHECK(c.agree);
    OrderSearchResult res = orders_algorithm(ctx);
    verify_L_properties(ctx, res);
  }
}
