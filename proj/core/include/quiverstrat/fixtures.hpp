#pragma once

// The built-in corpus of example algebras used throughout the tests and the
// command-line driver.  Each entry is a complete presentation; names are
// stable identifiers that other tooling may rely on.

#include <string>
#include <vector>

#include "quiverstrat/errors.hpp"
#include "quiverstrat/presentation.hpp"

namespace quiverstrat {

inline std::vector<std::string> fixture_names() {
  return {"ex1_10",  "s4_2",          "s4_3",
          "s4_4",    "s4_5",          "s4_6",
          "hereditary_a2", "local_dual_numbers", "semisimple_2", "zero"};
}

inline Presentation fixture(const std::string& name) {
  auto V = [](std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    for (auto* n : names) v.emplace_back(n);
    return v;
  };
  auto A = [](const char* n, int s, int d) { return Arrow{n, s, d}; };
  auto T = [](const char* c, std::initializer_list<const char*> arrows) {
    TermSpec t;
    t.coeff = c;
    for (auto* a : arrows) t.arrows.emplace_back(a);
    return t;
  };
  auto R = [](std::initializer_list<TermSpec> terms) {
    return RelationSpec{std::vector<TermSpec>(terms)};
  };

  Presentation p;
  p.name = name;
  if (name == "ex1_10") {
    // three vertices, a loop at the source, and one commuting square
    // collapsed to the relation alpha*delta = gamma*beta
    p.quiver.vertices = V({"x", "y", "z"});
    p.quiver.arrows = {A("delta", 0, 0), A("beta", 0, 1), A("alpha", 0, 2),
                       A("gamma", 1, 2)};
    p.relations = {R({T("1", {"delta", "delta"})}),
                   R({T("1", {"beta", "delta"})}),
                   R({T("1", {"alpha", "delta"}), T("-1", {"gamma", "beta"})})};
  } else if (name == "s4_2") {
    // a tree x -> y -> {z, w} with a square-zero loop at every vertex
    // except y, and the loops annihilating the incoming arrows
    p.quiver.vertices = V({"x", "y", "z", "w"});
    p.quiver.arrows = {A("alpha", 0, 0), A("beta", 0, 1), A("gamma", 1, 2),
                       A("phi", 1, 3),   A("delta", 2, 2), A("rho", 3, 3)};
    p.relations = {R({T("1", {"alpha", "alpha"})}),
                   R({T("1", {"delta", "delta"})}),
                   R({T("1", {"beta", "alpha"})}),
                   R({T("1", {"delta", "gamma"})}),
                   R({T("1", {"rho", "rho"})}),
                   R({T("1", {"rho", "phi"})})};
  } else if (name == "s4_3") {
    p.quiver.vertices = V({"x", "y", "z"});
    p.quiver.arrows = {A("alpha", 0, 2), A("delta", 2, 2), A("beta", 1, 2),
                       A("betap", 1, 2)};
    p.relations = {R({T("1", {"delta", "delta"})}),
                   R({T("1", {"delta", "alpha"})}),
                   R({T("1", {"delta", "beta"}), T("-1", {"betap"})})};
    p.notes =
        "the identity delta*beta = betap is stated with the factors in "
        "composition order (delta applied after beta)";
  } else if (name == "s4_4") {
    p.quiver.vertices = V({"x", "y", "z"});
    p.quiver.arrows = {A("alpha", 0, 1), A("gamma", 0, 2), A("beta", 1, 2),
                       A("betap", 1, 2), A("delta", 2, 2)};
    p.relations = {R({T("1", {"delta", "delta"})}),
                   R({T("1", {"delta", "gamma"})}),
                   R({T("1", {"delta", "beta"}), T("-1", {"betap"})})};
    p.notes =
        "the identity delta*beta = betap is stated with the factors in "
        "composition order (delta applied after beta)";
  } else if (name == "s4_5") {
    p.quiver.vertices = V({"x", "y", "z"});
    p.quiver.arrows = {A("alpha", 0, 1),  A("alphap", 0, 1), A("beta", 0, 1),
                       A("betap", 0, 1),  A("gamma", 1, 1),  A("delta", 1, 2),
                       A("rho", 2, 2)};
    p.relations = {R({T("1", {"gamma", "gamma"})}),
                   R({T("1", {"rho", "rho"})}),
                   R({T("1", {"delta", "gamma"})}),
                   R({T("1", {"rho", "delta"})}),
                   R({T("1", {"gamma", "alpha"}), T("-1", {"alphap"})}),
                   R({T("1", {"gamma", "beta"}), T("-1", {"betap"})}),
                   R({T("1", {"delta", "alpha"}), T("-1", {"delta", "beta"})})};
  } else if (name == "s4_6") {
    // an oriented triangle x -> y -> z -> x with a square-zero loop at y;
    // consecutive arrows compose to zero
    p.quiver.vertices = V({"x", "y", "z"});
    p.quiver.arrows = {A("alpha", 0, 1), A("beta", 1, 2), A("gamma", 2, 0),
                       A("delta", 1, 1)};
    p.relations = {R({T("1", {"delta", "delta"})}),
                   R({T("1", {"delta", "alpha"})}),
                   R({T("1", {"beta", "delta"})}),
                   R({T("1", {"beta", "alpha"})}),
                   R({T("1", {"gamma", "beta"})})};
  } else if (name == "hereditary_a2") {
    p.quiver.vertices = V({"x", "y"});
    p.quiver.arrows = {A("a", 0, 1)};
  } else if (name == "local_dual_numbers") {
    p.quiver.vertices = V({"v"});
    p.quiver.arrows = {A("t", 0, 0)};
    p.relations = {R({T("1", {"t", "t"})})};
  } else if (name == "semisimple_2") {
    p.quiver.vertices = V({"u", "v"});
  } else if (name == "zero") {
    // the empty algebra: no vertices, no arrows, dimension zero
  } else {
    fail(errc::parse, "unknown fixture '" + name + "'");
  }
  return p;
}

}  // namespace quiverstrat
