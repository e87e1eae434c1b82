#pragma once

// The machine-readable analysis report: one JSON document that bundles the
// algebra summary, directedness, the per-order stratification verdicts, the
// order-search output, the four-way equivalence check, the graded summary
// (when the algebra is directed), and the cokernel-closure verdicts for the
// orders found by the search.
//
// Serialization is canonical — keys in a fixed order, arrays in deterministic
// order — so repeated runs produce byte-identical documents, and
// `report_from_json` restores every field (`serialize_report` after a
// round-trip is the identity).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "quiverstrat/closure.hpp"
#include "quiverstrat/graded.hpp"
#include "quiverstrat/io.hpp"
#include "quiverstrat/order_analysis.hpp"
#include "quiverstrat/stratification.hpp"

namespace quiverstrat {

inline constexpr int kReportSchemaVersion = 1;

struct OrderVerdictEntry {
  std::string order;  // formatted maximal-first
  bool standardly_stratified = false;
  bool properly_stratified = false;
  bool quasi_hereditary = false;
  std::vector<int> standard_dims;      // by vertex
  std::vector<int> standard_end_dims;  // by vertex
};

struct TheoremOneSummary {
  bool brute_force = false;
  bool directed_with_projective_ideal = false;
  bool all_traces_projective = false;
  bool projective_dimension_bound = false;
  bool agree = false;
  std::vector<std::string> witnesses;  // one per route
};

struct GradedSummary {
  std::vector<int> component_dims;
  bool tensor_left = false;
  bool tensor_right = false;
  bool graded_ss_all_orders = false;
  bool graded_properly_all_orders = false;
  std::vector<std::string> bimodule_arrows;  // "src -> dst (dim d)"
  bool bimodule_left_regular = false;
  bool bimodule_right_regular = false;
};

struct ClosureCexSummary {
  std::string vertex;  // vertex of the failing standard module
  std::vector<int> multiplicities;  // projective multiplicities of the target
  std::vector<int> cokernel_dims;   // by vertex
};

struct ClosureEntry {
  std::string order;
  std::string mode;     // "exact-quasi-hereditary" or "bounded-search"
  std::string verdict;  // closed / not-closed / no-counterexample-up-to-bound
  std::optional<ClosureCexSummary> counterexample;
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  std::string name;
  std::string field;
  int dim = 0;
  std::vector<std::string> vertices;
  std::vector<int> projective_dims;      // dim of P_lam, by vertex
  std::vector<std::vector<int>> blocks;  // dim of e_mu A e_lam, [mu][lam]
  bool directed = false;
  std::vector<std::string> cycle;  // a block-digraph cycle when not directed
  bool ss_all_orders = false;
  bool properly_all_orders = false;
  std::vector<OrderVerdictEntry> orders;
  TheoremOneSummary theorem1;
  std::vector<std::string> candidate_chains;  // every terminated search chain
  std::vector<std::string> full_orders;       // the full-length ones
  std::optional<GradedSummary> graded;        // present when directed
  std::vector<ClosureEntry> closure;          // one per full-length order
};

inline std::string closedness_text(Closedness c) {
  switch (c) {
    case Closedness::closed:
      return "closed";
    case Closedness::not_closed:
      return "not-closed";
    default:
      return "no-counterexample-up-to-bound";
  }
}

inline std::string closure_mode_text(ClosureMode m) {
  return m == ClosureMode::exact_qh ? "exact-quasi-hereditary"
                                    : "bounded-search";
}

template <class F>
ClosureEntry closure_entry_for(StratContext<F>& ctx, const LinearOrder& o,
                               SearchBounds bounds = {}) {
  const TablePtr<F>& t = ctx.table();
  if constexpr (F::is_finite) bounds.prime = t->fld.order();
  ClosureEntry e;
  e.order = format_order(t->vertices, o);
  ClosureVerdict<F> v = bounded_mono_search(ctx, o, bounds);
  e.mode = closure_mode_text(v.mode);
  e.verdict = closedness_text(v.closed);
  if (v.counterexample) {
    ClosureCexSummary s;
    s.vertex = t->vertices[v.counterexample->lambda];
    s.multiplicities = v.counterexample->mults;
    s.cokernel_dims = v.counterexample->cokernel.vdim;
    e.counterexample = std::move(s);
  }
  return e;
}

template <class F>
AnalysisReport analyze(const TablePtr<F>& t, ScanLimits lim = {}) {
  AnalysisReport r;
  r.name = "";
  r.field = t->fld.name();
  r.dim = t->dim();
  r.vertices = t->vertices;
  const int nv = t->nv();
  r.projective_dims.assign(nv, 0);
  for (int mu = 0; mu < nv; ++mu) {
    std::vector<int> row;
    for (int lam = 0; lam < nv; ++lam) {
      row.push_back(static_cast<int>(t->block(mu, lam).size()));
    }
    r.blocks.push_back(row);
  }
  for (int lam = 0; lam < nv; ++lam) {
    for (int mu = 0; mu < nv; ++mu) r.projective_dims[lam] += r.blocks[mu][lam];
  }

  AcyclicityReport ac = block_digraph_acyclicity(*t);
  r.directed = ac.acyclic;
  for (int v : ac.cycle) r.cycle.push_back(t->vertices[v]);

  StratContext<F> ctx(t);
  r.ss_all_orders = true;
  r.properly_all_orders = true;
  if (nv > lim.max_vertices) {
    fail(errc::budget,
         "per-order report over " + std::to_string(nv) +
             " vertices exceeds the configured bound of " +
             std::to_string(lim.max_vertices));
  }
  for (const LinearOrder& o : enumerate_orders(*t)) {
    StratificationVerdict sv = stratification_verdict(ctx, o);
    OrderVerdictEntry e;
    e.order = format_order(t->vertices, o);
    e.standardly_stratified = sv.standardly_stratified;
    e.properly_stratified = sv.properly_stratified;
    e.quasi_hereditary = sv.quasi_hereditary;
    e.standard_dims = sv.standard_dims;
    e.standard_end_dims = sv.standard_end_dims;
    r.ss_all_orders = r.ss_all_orders && sv.standardly_stratified;
    r.properly_all_orders = r.properly_all_orders && sv.properly_stratified;
    r.orders.push_back(std::move(e));
  }

  TheoremOneCheck tc = theorem01_check(ctx, lim);
  r.theorem1.brute_force = tc.cond1_bruteforce;
  r.theorem1.directed_with_projective_ideal =
      tc.cond2_directed_and_J_projective;
  r.theorem1.all_traces_projective = tc.cond3_all_traces_projective;
  r.theorem1.projective_dimension_bound = tc.cond4_pd_bound;
  r.theorem1.agree = tc.agree;
  r.theorem1.witnesses = {tc.witness1, tc.witness2, tc.witness3, tc.witness4};

  OrderSearchResult sr = orders_algorithm(ctx);
  verify_L_properties(ctx, sr);  // alarms if a found order fails to stratify
  for (const auto& chain : sr.chains) {
    LinearOrder partial{chain};
    r.candidate_chains.push_back(format_order(t->vertices, partial));
  }
  for (const LinearOrder& o : sr.full) {
    r.full_orders.push_back(format_order(t->vertices, o));
  }

  if (r.directed) {
    GradedEquivalenceReport<F> ge = graded_equivalence_check(t, lim);
    GradedSummary gs;
    gs.component_dims = ge.graded.component_dims();
    gs.tensor_left = ge.tensor.left;
    gs.tensor_right = ge.tensor.right;
    gs.graded_ss_all_orders = ge.graded_ss_all_orders;
    gs.graded_properly_all_orders = ge.graded_properly_all_orders;
    BimoduleQuiver bq = bimodule_quiver(ge.graded);
    for (const BimoduleArrow& a : bq.arrows) {
      gs.bimodule_arrows.push_back(bq.vertices[a.src] + " -> " +
                                   bq.vertices[a.dst] + " (dim " +
                                   std::to_string(a.dim) + ")");
    }
    gs.bimodule_left_regular = bq.left_regular;
    gs.bimodule_right_regular = bq.right_regular;
    r.graded = std::move(gs);
  }

  for (const LinearOrder& o : sr.full) {
    r.closure.push_back(closure_entry_for(ctx, o));
  }
  return r;
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json report_to_json(const AnalysisReport& r) {
  using J = nlohmann::ordered_json;
  J j;
  j["schema_version"] = r.schema_version;
  j["name"] = r.name;
  j["field"] = r.field;
  j["dim"] = r.dim;
  j["vertices"] = r.vertices;
  j["projective_dims"] = r.projective_dims;
  j["blocks"] = r.blocks;
  j["directed"] = r.directed;
  j["cycle"] = r.cycle;
  j["ss_all_orders"] = r.ss_all_orders;
  j["properly_all_orders"] = r.properly_all_orders;
  j["orders"] = J::array();
  for (const auto& e : r.orders) {
    J je;
    je["order"] = e.order;
    je["standardly_stratified"] = e.standardly_stratified;
    je["properly_stratified"] = e.properly_stratified;
    je["quasi_hereditary"] = e.quasi_hereditary;
    je["standard_dims"] = e.standard_dims;
    je["standard_end_dims"] = e.standard_end_dims;
    j["orders"].push_back(std::move(je));
  }
  j["theorem1"] = {{"brute_force", r.theorem1.brute_force},
                   {"directed_with_projective_ideal",
                    r.theorem1.directed_with_projective_ideal},
                   {"all_traces_projective", r.theorem1.all_traces_projective},
                   {"projective_dimension_bound",
                    r.theorem1.projective_dimension_bound},
                   {"agree", r.theorem1.agree},
                   {"witnesses", r.theorem1.witnesses}};
  j["candidate_chains"] = r.candidate_chains;
  j["full_orders"] = r.full_orders;
  if (r.graded) {
    j["graded"] = {{"component_dims", r.graded->component_dims},
                   {"tensor_left", r.graded->tensor_left},
                   {"tensor_right", r.graded->tensor_right},
                   {"graded_ss_all_orders", r.graded->graded_ss_all_orders},
                   {"graded_properly_all_orders",
                    r.graded->graded_properly_all_orders},
                   {"bimodule_arrows", r.graded->bimodule_arrows},
                   {"bimodule_left_regular", r.graded->bimodule_left_regular},
                   {"bimodule_right_regular",
                    r.graded->bimodule_right_regular}};
  } else {
    j["graded"] = nullptr;
  }
  j["closure"] = J::array();
  for (const auto& c : r.closure) {
    J jc;
    jc["order"] = c.order;
    jc["mode"] = c.mode;
    jc["verdict"] = c.verdict;
    if (c.counterexample) {
      jc["counterexample"] = {
          {"vertex", c.counterexample->vertex},
          {"multiplicities", c.counterexample->multiplicities},
          {"cokernel_dims", c.counterexample->cokernel_dims}};
    } else {
      jc["counterexample"] = nullptr;
    }
    j["closure"].push_back(std::move(jc));
  }
  return j;
}

inline AnalysisReport report_from_json(const nlohmann::ordered_json& j) {
  try {
    AnalysisReport r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != kReportSchemaVersion) {
      fail(errc::parse, "unsupported report schema version " +
                            std::to_string(r.schema_version));
    }
    r.name = j.at("name").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.dim = j.at("dim").get<int>();
    r.vertices = j.at("vertices").get<std::vector<std::string>>();
    r.projective_dims = j.at("projective_dims").get<std::vector<int>>();
    r.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    r.directed = j.at("directed").get<bool>();
    r.cycle = j.at("cycle").get<std::vector<std::string>>();
    r.ss_all_orders = j.at("ss_all_orders").get<bool>();
    r.properly_all_orders = j.at("properly_all_orders").get<bool>();
    for (const auto& je : j.at("orders")) {
      OrderVerdictEntry e;
      e.order = je.at("order").get<std::string>();
      e.standardly_stratified = je.at("standardly_stratified").get<bool>();
      e.properly_stratified = je.at("properly_stratified").get<bool>();
      e.quasi_hereditary = je.at("quasi_hereditary").get<bool>();
      e.standard_dims = je.at("standard_dims").get<std::vector<int>>();
      e.standard_end_dims = je.at("standard_end_dims").get<std::vector<int>>();
      r.orders.push_back(std::move(e));
    }
    const auto& t1 = j.at("theorem1");
    r.theorem1.brute_force = t1.at("brute_force").get<bool>();
    r.theorem1.directed_with_projective_ideal =
        t1.at("directed_with_projective_ideal").get<bool>();
    r.theorem1.all_traces_projective =
        t1.at("all_traces_projective").get<bool>();
    r.theorem1.projective_dimension_bound =
        t1.at("projective_dimension_bound").get<bool>();
    r.theorem1.agree = t1.at("agree").get<bool>();
    r.theorem1.witnesses = t1.at("witnesses").get<std::vector<std::string>>();
    r.candidate_chains =
        j.at("candidate_chains").get<std::vector<std::string>>();
    r.full_orders = j.at("full_orders").get<std::vector<std::string>>();
    if (!j.at("graded").is_null()) {
      const auto& jg = j.at("graded");
      GradedSummary gs;
      gs.component_dims = jg.at("component_dims").get<std::vector<int>>();
      gs.tensor_left = jg.at("tensor_left").get<bool>();
      gs.tensor_right = jg.at("tensor_right").get<bool>();
      gs.graded_ss_all_orders = jg.at("graded_ss_all_orders").get<bool>();
      gs.graded_properly_all_orders =
          jg.at("graded_properly_all_orders").get<bool>();
      gs.bimodule_arrows =
          jg.at("bimodule_arrows").get<std::vector<std::string>>();
      gs.bimodule_left_regular = jg.at("bimodule_left_regular").get<bool>();
      gs.bimodule_right_regular = jg.at("bimodule_right_regular").get<bool>();
      r.graded = std::move(gs);
    }
    for (const auto& jc : j.at("closure")) {
      ClosureEntry c;
      c.order = jc.at("order").get<std::string>();
      c.mode = jc.at("mode").get<std::string>();
      c.verdict = jc.at("verdict").get<std::string>();
      if (!jc.at("counterexample").is_null()) {
        const auto& jx = jc.at("counterexample");
        ClosureCexSummary s;
        s.vertex = jx.at("vertex").get<std::string>();
        s.multiplicities = jx.at("multiplicities").get<std::vector<int>>();
        s.cokernel_dims = jx.at("cokernel_dims").get<std::vector<int>>();
        c.counterexample = std::move(s);
      }
      r.closure.push_back(std::move(c));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("analysis report: ") + e.what());
  }
}

inline std::string serialize_report(const AnalysisReport& r) {
  return report_to_json(r).dump(2) + "\n";
}

inline AnalysisReport parse_report(const std::string& text) {
  try {
    return report_from_json(nlohmann::ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("analysis report: ") + e.what());
  }
}

}  // namespace quiverstrat
