#pragma once

// A field-independent presentation of a quiver algebra: the quiver plus
// relations whose coefficients are kept as strings, to be parsed by whichever
// field the table is eventually built over.  Arrow lists inside a term are in
// composition order: element 0 is applied last, matching the usual
// right-to-left reading of composed maps.

#include <string>
#include <vector>

#include "quiverstrat/algebra.hpp"
#include "quiverstrat/quiver.hpp"

namespace quiverstrat {

struct TermSpec {
  std::string coeff;
  std::vector<std::string> arrows;
};

struct RelationSpec {
  std::vector<TermSpec> terms;
};

struct Presentation {
  std::string name;
  std::string notes;
  Quiver quiver;
  std::vector<RelationSpec> relations;
};

template <class F>
std::vector<Relation<F>> instantiate_relations(const F& fld,
                                               const Presentation& p) {
  std::vector<Relation<F>> out;
  for (const RelationSpec& rs : p.relations) {
    Relation<F> rel;
    for (const TermSpec& ts : rs.terms) {
      RelTerm<F> t;
      t.coeff = fld.parse(ts.coeff);
      if (ts.arrows.empty()) {
        fail(errc::parse, "relation term with no arrows");
      }
      PathWord w;
      for (std::size_t k = 0; k < ts.arrows.size(); ++k) {
        int a = p.quiver.arrow_index(ts.arrows[k]);
        if (a < 0) {
          fail(errc::parse, "unknown arrow '" + ts.arrows[k] + "' in relation");
        }
        w.word.push_back(a);
      }
      w.dst = p.quiver.arrows[w.word.front()].dst;
      w.src = p.quiver.arrows[w.word.back()].src;
      for (std::size_t k = 0; k + 1 < w.word.size(); ++k) {
        if (p.quiver.arrows[w.word[k]].src != p.quiver.arrows[w.word[k + 1]].dst) {
          fail(errc::parse, "relation term is not a composable path");
        }
      }
      t.path = std::move(w);
      rel.push_back(std::move(t));
    }
    out.push_back(std::move(rel));
  }
  return out;
}

template <class F>
TablePtr<F> build_presentation(const F& fld, const Presentation& p,
                               BuildLimits lim = {}) {
  return build_table(fld, p.quiver, instantiate_relations(fld, p), lim);
}

}  // namespace quiverstrat
