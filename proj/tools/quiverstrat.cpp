// Command-line driver: exact analysis of finite-dimensional quiver algebras
// given as JSON descriptions (or by the name of a built-in example).
//
// Exit codes: 0 success, 2 parse error, 3 budget exhausted, 4 precondition
// violated, 10 internal cross-check alarm.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quiverstrat/closure.hpp"
#include "quiverstrat/fixtures.hpp"
#include "quiverstrat/graded.hpp"
#include "quiverstrat/io.hpp"
#include "quiverstrat/order_analysis.hpp"
#include "quiverstrat/report.hpp"
#include "quiverstrat/stratification.hpp"

namespace qs = quiverstrat;

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string int_tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// One Loewy layer as vertex names repeated by multiplicity.
std::string layer_text(const std::vector<int>& dims,
                       const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t v = 0; v < dims.size(); ++v) {
    for (int k = 0; k < dims[v]; ++k) {
      if (!s.empty()) s += " ";
      s += names[v];
    }
  }
  return s.empty() ? "." : s;
}

std::string vertex_set(const std::vector<std::string>& names, unsigned mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t v = 0; v < names.size(); ++v) {
    if (!(mask & (1u << v))) continue;
    if (!first) s += ", ";
    s += names[v];
    first = false;
  }
  return s + "}";
}

template <class F>
void print_block_table(std::ostream& os, const qs::AlgebraTable<F>& t) {
  const int nv = t.nv();
  std::size_t w = 1;
  for (const auto& v : t.vertices) w = std::max(w, v.size());
  os << "blocks (entry = dim of target.A.source):\n";
  os << std::string(w + 4, ' ');
  for (int lam = 0; lam < nv; ++lam) {
    os << t.vertices[lam] << std::string(w + 1 - t.vertices[lam].size(), ' ');
  }
  os << "\n";
  for (int mu = 0; mu < nv; ++mu) {
    os << "  " << t.vertices[mu]
       << std::string(w - t.vertices[mu].size(), ' ') << " |";
    for (int lam = 0; lam < nv; ++lam) {
      std::string e = std::to_string(t.block(mu, lam).size());
      os << " " << e << std::string(w > e.size() ? w - e.size() : 0, ' ');
    }
    os << "\n";
  }
}

template <class F>
int run_basis(const qs::TablePtr<F>& t, const std::string& name) {
  std::cout << (name.empty() ? std::string("algebra") : name) << ": dimension "
            << t->dim() << " over " << t->fld.name() << " (" << t->nv()
            << " vertices, " << t->dim() - t->nv()
            << " radical basis elements)\n";
  std::cout << "basis:";
  for (const auto& b : t->basis) std::cout << " " << b.label;
  std::cout << "\n";
  print_block_table(std::cout, *t);
  std::cout << "projective dims:";
  for (int lam = 0; lam < t->nv(); ++lam) {
    int d = 0;
    for (int mu = 0; mu < t->nv(); ++mu) {
      d += static_cast<int>(t->block(mu, lam).size());
    }
    std::cout << (lam ? "," : "") << " P_" << t->vertices[lam] << " = " << d;
  }
  std::cout << "\n";
  return 0;
}

template <class F>
int run_projectives(const qs::TablePtr<F>& t, bool right) {
  qs::TablePtr<F> side = right ? qs::opposite(t) : t;
  std::cout << (right ? "right" : "left") << " projectives over "
            << t->fld.name() << ":\n";
  for (int lam = 0; lam < side->nv(); ++lam) {
    qs::Rep<F> p = qs::projective_rep(side, lam);
    std::cout << "P_" << side->vertices[lam] << (right ? " (right)" : "")
              << ": dim " << p.total() << ", Loewy layers:\n";
    for (const auto& layer : qs::loewy_layers(p)) {
      std::cout << "  " << layer_text(layer, side->vertices) << "\n";
    }
  }
  return 0;
}

template <class F>
int run_stratify(const qs::TablePtr<F>& t, const std::string& order_text,
                 bool with_proper, bool with_qh) {
  qs::LinearOrder o = qs::parse_order(t->vertices, order_text);
  qs::StratContext<F> ctx(t);
  qs::StratificationVerdict v = qs::stratification_verdict(ctx, o);
  std::cout << "order: " << qs::format_order(t->vertices, o) << "\n";
  std::cout << "standardly stratified: " << yn(v.standardly_stratified)
            << "\n";
  std::cout << "standard module dims (maximal vertex first):";
  for (int lam : o.max_first) {
    std::cout << " Delta_" << t->vertices[lam] << " = "
              << v.standard_dims[lam];
  }
  std::cout << "\n";
  if (with_proper) {
    std::cout << "properly stratified: " << yn(v.properly_stratified) << "\n";
  }
  if (with_qh) {
    std::cout << "standard endomorphism dims (maximal vertex first):";
    for (int lam : o.max_first) {
      std::cout << " " << t->vertices[lam] << ": "
                << v.standard_end_dims[lam];
    }
    std::cout << "\n";
    std::cout << "quasi-hereditary: " << yn(v.quasi_hereditary) << "\n";
  }
  return 0;
}

template <class F>
int run_all_orders(const qs::TablePtr<F>& t, bool with_properly) {
  qs::StratContext<F> ctx(t);
  qs::AllOrdersReport<F> rep = qs::all_orders_scan(ctx, with_properly);
  std::cout << rep.orders.size() << " orders scanned:\n";
  for (std::size_t i = 0; i < rep.orders.size(); ++i) {
    std::cout << "  " << qs::format_order(t->vertices, rep.orders[i]) << "  "
              << (rep.ss[i] ? "SS" : "not SS");
    if (with_properly && rep.ss[i]) {
      std::cout << (rep.properly[i] ? ", properly" : ", not properly");
    }
    std::cout << "\n";
  }
  std::cout << "ss_all_orders: " << yn(rep.ss_all_orders) << "\n";
  if (with_properly) {
    std::cout << "properly_all_orders: " << yn(rep.properly_all_orders)
              << "\n";
  }
  return 0;
}

template <class F>
int run_check_theorem1(const qs::TablePtr<F>& t) {
  qs::StratContext<F> ctx(t);
  qs::TheoremOneCheck tc = qs::theorem01_check(ctx);
  auto line = [](const char* label, bool v, const std::string& w) {
    std::cout << label << yn(v);
    if (!w.empty()) std::cout << "  [" << w << "]";
    std::cout << "\n";
  };
  line("(1) stratified for every linear order: ", tc.cond1_bruteforce,
       tc.witness1);
  line("(2) directed with projective one-sided ideal: ",
       tc.cond2_directed_and_J_projective, tc.witness2);
  line("(3) all projective-trace ideals projective: ",
       tc.cond3_all_traces_projective, tc.witness3);
  line("(4) projective dimension bound on the diagonal part: ",
       tc.cond4_pd_bound, tc.witness4);
  std::cout << "all four routes agree: " << yn(tc.agree) << "\n";
  if (!tc.agree) {
    qs::fail(qs::errc::alarm,
             "the four characterizations disagree on this algebra");
  }
  return 0;
}

template <class F>
int run_orders_algorithm(const qs::TablePtr<F>& t) {
  qs::StratContext<F> ctx(t);
  qs::OrderSearchResult res = qs::orders_algorithm(ctx);
  std::cout << "search steps:\n";
  for (const qs::OrderSearchStep& s : res.steps) {
    std::cout << "  removed " << vertex_set(t->vertices, s.mask)
              << ": candidates {";
    for (std::size_t i = 0; i < s.admissible.size(); ++i) {
      std::cout << (i ? ", " : "") << t->vertices[s.admissible[i]];
    }
    std::cout << "}";
    if (!s.below.empty()) {
      std::cout << "; comparisons:";
      for (auto [lam, mu] : s.below) {
        std::cout << " " << t->vertices[lam] << " <' " << t->vertices[mu];
      }
    }
    std::cout << "; maximal {";
    for (std::size_t i = 0; i < s.maximal.size(); ++i) {
      std::cout << (i ? ", " : "") << t->vertices[s.maximal[i]];
    }
    std::cout << "}\n";
  }
  std::cout << "candidate chains (" << res.chains.size() << "):\n";
  for (const auto& chain : res.chains) {
    qs::LinearOrder o{chain};
    bool full = static_cast<int>(chain.size()) == t->nv();
    std::cout << "  " << qs::format_order(t->vertices, o)
              << (full ? "" : "  (dead end)") << "\n";
  }
  qs::verify_L_properties(ctx, res);
  std::cout << "orders found (" << res.full.size() << "):\n";
  for (const auto& o : res.full) {
    std::cout << "  " << qs::format_order(t->vertices, o) << "\n";
  }
  std::cout << "verified: the algebra is standardly stratified for all "
            << res.full.size() << " orders found\n";
  return 0;
}

template <class F>
int run_graded(const qs::TablePtr<F>& t, const std::string& dot_path) {
  qs::GradedAlgebra<F> g = qs::associated_graded(t);
  std::cout << "graded component dims: " << int_tuple(g.component_dims())
            << "\n";
  qs::TensorAlgebraCheck tc = qs::tensor_algebra_check(g);
  std::cout << "tensor algebra over the diagonal part: left " << yn(tc.left)
            << ", right " << yn(tc.right) << "\n";
  std::cout << "  degree-1 generator projective: left "
            << yn(tc.left_generator_projective) << ", right "
            << yn(tc.right_generator_projective)
            << "; chain filled: " << yn(tc.chain) << " "
            << int_tuple(tc.chain_dims) << "\n";
  qs::BimoduleQuiver bq = qs::bimodule_quiver(g);
  std::cout << "bimodule quiver: local dims " << int_tuple(bq.local_dims)
            << "; arrows:\n";
  for (const qs::BimoduleArrow& a : bq.arrows) {
    std::cout << "  " << bq.vertices[a.src] << " -> " << bq.vertices[a.dst]
              << " (dim " << a.dim << ", left " << (a.left_free ? "free" : "not free")
              << ", right " << (a.right_free ? "free" : "not free") << ")\n";
  }
  std::cout << "regular as a quiver of bimodules: left "
            << yn(bq.left_regular) << ", right " << yn(bq.right_regular)
            << "\n";
  if (!dot_path.empty()) {
    qs::write_text_file(dot_path, qs::to_dot(bq));
    std::cout << "wrote DOT to " << dot_path << "\n";
  }
  return 0;
}

template <class F>
int run_closure(const qs::TablePtr<F>& t, const std::string& order_text,
                qs::SearchBounds bounds) {
  if constexpr (F::is_finite) bounds.prime = t->fld.order();
  qs::LinearOrder o = qs::parse_order(t->vertices, order_text);
  qs::StratContext<F> ctx(t);
  qs::ClosureVerdict<F> v = qs::bounded_mono_search(ctx, o, bounds);
  std::cout << "order: " << qs::format_order(t->vertices, o) << "\n";
  std::cout << "mode: " << qs::closure_mode_text(v.mode) << " ("
            << (F::is_finite
                    ? "exhaustive over " + t->fld.name()
                    : "sampling " + std::to_string(bounds.samples) +
                          " maps per target over " + t->fld.name())
            << ")\n";
  std::cout << "verdict: " << qs::closedness_text(v.closed) << "\n";
  if (v.counterexample) {
    const auto& cex = *v.counterexample;
    std::cout << "counterexample: injective map from the standard module at "
              << t->vertices[cex.lambda] << " into ";
    bool first = true;
    for (std::size_t mu = 0; mu < cex.mults.size(); ++mu) {
      for (int k = 0; k < cex.mults[mu]; ++k) {
        std::cout << (first ? "" : " + ") << "P_" << t->vertices[mu];
        first = false;
      }
    }
    std::cout << "\n  cokernel dims by vertex: " << int_tuple(cex.cokernel.vdim)
              << "\n  filtration: " << cex.membership.detail << "\n";
  }
  return 0;
}

template <class F>
int run_report(const qs::TablePtr<F>& t, const std::string& name,
               const std::string& json_path) {
  qs::AnalysisReport r = qs::analyze(t);
  r.name = name;
  std::cout << (name.empty() ? std::string("algebra") : name) << ": dim "
            << r.dim << " over " << r.field << "\n";
  std::cout << "directed: " << yn(r.directed);
  if (!r.directed) {
    std::cout << "  [cycle:";
    for (const auto& v : r.cycle) std::cout << " " << v;
    std::cout << "]";
  }
  std::cout << "\n";
  std::cout << "ss_all_orders: " << yn(r.ss_all_orders) << "\n";
  std::cout << "properly_all_orders: " << yn(r.properly_all_orders) << "\n";
  std::cout << "theorem-1 routes agree: " << yn(r.theorem1.agree) << "\n";
  std::cout << "orders found by the search: " << r.full_orders.size() << "\n";
  for (const auto& o : r.full_orders) std::cout << "  " << o << "\n";
  if (r.graded) {
    std::cout << "graded component dims: " << int_tuple(r.graded->component_dims)
              << "; tensor form: left " << yn(r.graded->tensor_left)
              << ", right " << yn(r.graded->tensor_right) << "\n";
  }
  for (const auto& c : r.closure) {
    std::cout << "closure for " << c.order << ": " << c.verdict;
    if (c.counterexample) {
      std::cout << "  [counterexample at " << c.counterexample->vertex
                << ", cokernel dims "
                << int_tuple(c.counterexample->cokernel_dims) << "]";
    }
    std::cout << "\n";
  }
  if (!json_path.empty()) {
    qs::write_text_file(json_path, qs::serialize_report(r));
    std::cout << "wrote JSON report to " << json_path << "\n";
  }
  return 0;
}

int run_fixtures(const std::string& out_dir) {
  if (!out_dir.empty()) {
    auto paths = qs::write_fixture_corpus(out_dir);
    std::cout << "wrote " << paths.size() << " files to " << out_dir << "\n";
    return 0;
  }
  std::cout << "built-in examples:\n";
  for (const std::string& n : qs::fixture_names()) {
    auto t = qs::build_presentation(qs::RationalField{}, qs::fixture(n));
    std::cout << "  " << n << ": dim " << t->dim() << ", " << t->nv()
              << " vertices\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computations for finite-dimensional quiver algebras: "
      "stratifying orders, associated graded structure, and "
      "cokernel-closedness of standard-filtration categories"};
  app.require_subcommand(1);

  std::string input, order_text, json_path, dot_path, out_dir;
  bool right = false, proper = false, qh = false, properly = false;
  std::uint64_t prime = 0;
  std::vector<int> caps;
  qs::SearchBounds default_bounds;
  int samples = default_bounds.samples;
  std::uint64_t budget = default_bounds.budget;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("algebra", input,
                    "JSON description file or built-in example name")
        ->required();
  };

  CLI::App* c_basis = app.add_subcommand(
      "basis", "dimension, chosen basis paths, and the block table");
  add_input(c_basis);

  CLI::App* c_proj = app.add_subcommand(
      "projectives", "dims and Loewy layers of the projectives");
  add_input(c_proj);
  c_proj->add_flag("--right", right, "use right modules");

  CLI::App* c_strat = app.add_subcommand(
      "stratify", "stratification verdicts for one linear order");
  add_input(c_strat);
  c_strat
      ->add_option("--order", order_text,
                   "comma-separated vertex names, maximal first")
      ->required();
  c_strat->add_flag("--proper", proper, "also decide proper stratification");
  c_strat->add_flag("--qh", qh, "also decide quasi-heredity");

  CLI::App* c_all = app.add_subcommand(
      "all-orders", "stratification verdicts for every linear order");
  add_input(c_all);
  c_all->add_flag("--properly", properly, "also scan the opposite side");

  CLI::App* c_thm = app.add_subcommand(
      "check-theorem1",
      "four equivalent characterizations of all-orders stratification");
  add_input(c_thm);

  CLI::App* c_orders = app.add_subcommand(
      "orders-algorithm", "search for stratifying orders with diagnostics");
  add_input(c_orders);

  CLI::App* c_graded = app.add_subcommand(
      "graded", "associated graded algebra and tensor-algebra form");
  add_input(c_graded);
  c_graded->add_option("--dot", dot_path, "write the bimodule quiver as DOT");

  CLI::App* c_closure = app.add_subcommand(
      "cokernel-closure",
      "search for a standard-module monomorphism with unfiltered cokernel");
  add_input(c_closure);
  c_closure
      ->add_option("--order", order_text,
                   "comma-separated vertex names, maximal first")
      ->required();
  c_closure->add_option(
      "--prime", prime,
      "build over this prime field and search exhaustively");
  c_closure->add_option("--caps", caps,
                        "per-vertex multiplicity caps for the target");
  c_closure->add_option("--samples", samples,
                        "maps sampled per target over an infinite field");
  c_closure->add_option("--budget", budget, "candidate-map budget");

  CLI::App* c_report = app.add_subcommand(
      "report", "full machine-readable analysis report");
  add_input(c_report);
  c_report->add_option("--json", json_path, "write the JSON report here");

  CLI::App* c_fixtures = app.add_subcommand(
      "fixtures", "list the built-in corpus or write it as JSON files");
  c_fixtures->add_option("--out", out_dir, "write one JSON file per example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_fixtures)) return run_fixtures(out_dir);

    qs::AlgebraFile af = qs::load_algebra_arg(input);
    const std::string name = af.presentation.name;

    if (app.got_subcommand(c_closure)) {
      qs::SearchBounds bounds;
      bounds.caps = caps;
      bounds.samples = samples;
      bounds.budget = budget;
      if (prime != 0) {
        qs::PrimeField f(prime);
        bounds.prime = prime;
        return run_closure(qs::build_presentation(f, af.presentation),
                           order_text, bounds);
      }
      return qs::with_field(af.field, [&](auto fld) {
        return run_closure(qs::build_presentation(fld, af.presentation),
                           order_text, bounds);
      });
    }

    return qs::with_field(af.field, [&](auto fld) {
      auto t = qs::build_presentation(fld, af.presentation);
      if (app.got_subcommand(c_basis)) return run_basis(t, name);
      if (app.got_subcommand(c_proj)) return run_projectives(t, right);
      if (app.got_subcommand(c_strat)) {
        return run_stratify(t, order_text, proper, qh);
      }
      if (app.got_subcommand(c_all)) return run_all_orders(t, properly);
      if (app.got_subcommand(c_thm)) return run_check_theorem1(t);
      if (app.got_subcommand(c_orders)) return run_orders_algorithm(t);
      if (app.got_subcommand(c_graded)) return run_graded(t, dot_path);
      if (app.got_subcommand(c_report)) return run_report(t, name, json_path);
      return 0;
    });
  } catch (const qs::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
