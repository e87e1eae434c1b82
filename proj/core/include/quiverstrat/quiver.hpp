#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "quiverstrat/errors.hpp"

namespace quiverstrat {

struct Arrow {
  std::string name;
  int src = 0;
  int dst = 0;
};

// A finite quiver: named vertices and named arrows, loops and parallel
// arrows allowed.  Vertex and arrow order is the input order and is part of
// every deterministic convention downstream.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }

  int vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i) {
      if (vertices[i] == name) return i;
    }
    return -1;
  }

  int arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i) {
      if (arrows[i].name == name) return i;
    }
    return -1;
  }

  void validate() const {
    if (vertices.empty() && !arrows.empty()) {
      fail(errc::parse, "arrows without vertices");
    }
    for (int i = 0; i < num_vertices(); ++i) {
      if (vertices[i].empty()) fail(errc::parse, "empty vertex name");
      for (int j = i + 1; j < num_vertices(); ++j) {
        if (vertices[i] == vertices[j]) {
          fail(errc::parse, "duplicate vertex name '" + vertices[i] + "'");
        }
      }
    }
    for (int i = 0; i < num_arrows(); ++i) {
      const Arrow& a = arrows[i];
      if (a.name.empty()) fail(errc::parse, "empty arrow name");
      if (a.src < 0 || a.src >= num_vertices() || a.dst < 0 ||
          a.dst >= num_vertices()) {
        fail(errc::parse, "arrow '" + a.name + "' has an unknown endpoint");
      }
      for (int j = i + 1; j < num_arrows(); ++j) {
        if (arrows[i].name == arrows[j].name) {
          fail(errc::parse, "duplicate arrow name '" + arrows[i].name + "'");
        }
      }
      if (vertex_index(a.name) >= 0) {
        fail(errc::parse, "name '" + a.name + "' used for both a vertex and an arrow");
      }
    }
  }

  // Arrow indices sorted by arrow name; the tie-free ordering used whenever
  // paths are enumerated.
  std::vector<int> arrows_by_name() const {
    std::vector<int> idx(arrows.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return arrows[a].name < arrows[b].name;
    });
    return idx;
  }
};

// A path written in composition order: word[0] is applied last and
// word.back() first, matching how the product of the corresponding algebra
// elements is read.  The empty word is the trivial path at a vertex.
struct PathWord {
  std::vector<int> word;  // arrow indices
  int src = 0;
  int dst = 0;

  static PathWord trivial(int v) { return PathWord{{}, v, v}; }

  static PathWord of_arrow(const Quiver& q, int a) {
    return PathWord{{a}, q.arrows[a].src, q.arrows[a].dst};
  }

  int length() const { return static_cast<int>(word.size()); }

  bool operator==(const PathWord& o) const {
    return word == o.word && src == o.src && dst == o.dst;
  }
};

// first_applied . then second: compose(q, late, early) is "early, then late",
// i.e. the product late * early.
inline PathWord compose(const Quiver& q, const PathWord& late,
                        const PathWord& early) {
  internal_check(early.dst == late.src, "composing non-adjacent paths");
  PathWord r;
  r.word = late.word;
  r.word.insert(r.word.end(), early.word.begin(), early.word.end());
  r.src = early.src;
  r.dst = late.dst;
  (void)q;
  return r;
}

inline std::string path_label(const Quiver& q, const PathWord& p) {
  if (p.word.empty()) return "e(" + q.vertices[p.src] + ")";
  std::string s;
  for (std::size_t i = 0; i < p.word.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.word[i]].name;
  }
  return s;
}

// Acyclicity of the underlying digraph, ignoring which arrow realises an
// edge.  On failure, `cycle` lists the vertices of a directed cycle.
struct AcyclicityReport {
  bool acyclic = true;
  std::vector<int> topological_order;  // sources first, only when acyclic
  std::vector<int> cycle;
};

inline AcyclicityReport digraph_acyclicity(const Quiver& q,
                                           const std::vector<std::pair<int, int>>& edges) {
  int n = q.num_vertices();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [s, d] : edges) {
    out[s].push_back(d);
    ++indeg[d];
  }
  AcyclicityReport rep;
  std::vector<int> indeg_work = indeg;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!done[v] && indeg_work[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) break;
    done[pick] = true;
    rep.topological_order.push_back(pick);
    for (int d : out[pick]) --indeg_work[d];
  }
  if (static_cast<int>(rep.topological_order.size()) == n) return rep;

  // Kahn's peel removed everything upstream of the cycles; strip the
  // downstream part symmetrically so that every remaining vertex keeps a
  // successor inside the remainder.  Cycle vertices always survive both
  // peels, so the remainder is nonempty and the walk below must repeat.
  rep.acyclic = false;
  rep.topological_order.clear();
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int u = 0; u < n; ++u) {
      if (done[u]) continue;
      bool has_succ = false;
      for (int d : out[u]) {
        if (!done[d]) {
          has_succ = true;
          break;
        }
      }
      if (!has_succ) {
        done[u] = true;
        shrunk = true;
      }
    }
  }
  std::vector<int> seen_at(n, -1);
  std::vector<int> walk;
  int v = 0;
  while (v < n && done[v]) ++v;
  internal_check(v < n, "cyclic digraph peeled to nothing");
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int next = -1;
    for (int d : out[v]) {
      if (!done[d]) {
        next = d;
        break;
      }
    }
    internal_check(next >= 0, "cycle walk escaped the cyclic part");
    v = next;
  }
  rep.cycle.assign(walk.begin() + seen_at[v], walk.end());
  return rep;
}

inline AcyclicityReport quiver_acyclicity(const Quiver& q) {
  std::vector<std::pair<int, int>> edges;
  for (const Arrow& a : q.arrows) edges.emplace_back(a.src, a.dst);
  return digraph_acyclicity(q, edges);
}

}  // namespace quiverstrat
