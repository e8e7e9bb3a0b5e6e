#include "ualg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ualg {

std::vector<std::vector<int>> validate_diagram(const Diagram& d) {
  int nv = d.vertex_count();
  if (nv == 0) fail(ErrorCode::shape, "diagram has no vertices");
  for (int v : d.vertex_algebra)
    if (v < 0 || v >= static_cast<int>(d.algebras.size()))
      fail(ErrorCode::shape, "vertex references unknown algebra");
  for (const auto& e : d.edges) {
    if (e.from < 0 || e.from >= nv || e.to < 0 || e.to >= nv)
      fail(ErrorCode::shape, "edge endpoint out of range");
    if (e.rep.actor() != d.vertex(e.from))
      fail(ErrorCode::structure, "edge representation actor differs from source algebra");
    if (e.rep.space() != d.vertex(e.to))
      fail(ErrorCode::structure, "edge representation space differs from target algebra");
    auto r = validate(e.rep);
    if (!r.ok) fail(ErrorCode::structure, "edge representation invalid: " + r.message);
  }

  // Connectivity in the undirected sense.
  if (nv > 1) {
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& e : d.edges) {
        int w = -1;
        if (e.from == v) w = e.to;
        if (e.to == v) w = e.from;
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int v = 0; v < nv; ++v)
      if (!seen[v]) fail(ErrorCode::structure, "diagram graph is not connected");
  }

  // Acyclicity and longest path from the sources (Kahn with distance).
  std::vector<int> indeg(nv, 0);
  for (const auto& e : d.edges) {
    if (e.from == e.to) fail(ErrorCode::structure, "diagram has a self-loop");
    indeg[e.to]++;
  }
  std::vector<int> depth(nv, 0), order;
  std::vector<int> remaining = indeg;
  for (int v = 0; v < nv; ++v)
    if (remaining[v] == 0) order.push_back(v);
  for (size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (const auto& e : d.edges)
      if (e.from == v) {
        depth[e.to] = std::max(depth[e.to], depth[v] + 1);
        if (--remaining[e.to] == 0) order.push_back(e.to);
      }
  }
  if (static_cast<int>(order.size()) != nv)
    fail(ErrorCode::structure, "diagram graph has a cycle");

  int max_depth = *std::max_element(depth.begin(), depth.end());
  std::vector<std::vector<int>> layers(max_depth + 1);
  for (int v = 0; v < nv; ++v) layers[depth[v]].push_back(v);
  return layers;
}

DiagramCommutativity is_commutative(const Diagram& d) {
  validate_diagram(d);
  for (size_t e1 = 0; e1 < d.edges.size(); ++e1)
    for (size_t e2 = e1 + 1; e2 < d.edges.size(); ++e2) {
      const auto& f = d.edges[e1];
      const auto& g = d.edges[e2];
      if (f.to != g.to) continue;
      int n = f.rep.space().size();
      for (int a = 0; a < f.rep.actor().size(); ++a)
        for (int b = 0; b < g.rep.actor().size(); ++b)
          for (int x = 0; x < n; ++x)
            if (f.rep.apply(a, g.rep.apply(b, x)) != g.rep.apply(b, f.rep.apply(a, x))) {
              std::ostringstream os;
              os << "edges " << e1 << " and " << e2 << " disagree at actor elements (" << a
                 << ", " << b << ") and space point " << x;
              return DiagramCommutativity{false, os.str()};
            }
    }
  return DiagramCommutativity{true, {}};
}

ComposedTower compose_tower(const Representation& f_ij, const Representation& f_jk) {
  if (f_ij.space() != f_jk.actor())
    fail(ErrorCode::structure, "edges do not form a path");
  if (!properties(f_jk).effective)
    fail(ErrorCode::structure, "lower edge must be effective");
  if (!properties(f_ij).free)
    fail(ErrorCode::structure, "upper edge must be free");

  int ni = f_ij.actor().size();
  int nj = f_ij.space().size();
  ComposedTower out;
  // Effectiveness makes a_j <-> table f_jk(a_j) a bijection, so the action on
  // tables is the f_ij action read through that indexing.
  for (int a = 0; a < ni; ++a) {
    std::vector<int> img(nj);
    for (int b = 0; b < nj; ++b) img[b] = f_ij.apply(a, b);
    out.on_tables.emplace_back(nj, nj, std::move(img));
  }
  for (int a = 0; a < ni; ++a)
    for (int b = 0; b < nj; ++b) out.pair_action.push_back(f_jk.transform(f_ij.apply(a, b)));
  return out;
}

bool is_diagram_morphism(const Diagram& d, const Diagram& e, const std::vector<ElementMap>& h) {
  if (d.vertex_count() != e.vertex_count() || d.edges.size() != e.edges.size())
    fail(ErrorCode::shape, "diagram shapes differ");
  for (size_t i = 0; i < d.edges.size(); ++i)
    if (d.edges[i].from != e.edges[i].from || d.edges[i].to != e.edges[i].to)
      fail(ErrorCode::shape, "diagram shapes differ");
  if (d.algebras.size() != e.algebras.size() || h.size() != d.algebras.size())
    fail(ErrorCode::shape, "one map per distinct algebra required");
  for (int v = 0; v < d.vertex_count(); ++v)
    if (d.vertex_algebra[v] != e.vertex_algebra[v])
      fail(ErrorCode::shape, "vertex sharing patterns differ");

  for (size_t i = 0; i < h.size(); ++i)
    if (!is_homomorphism(h[i], d.algebras[i], e.algebras[i]))
      fail(ErrorCode::precondition, "component map is not a homomorphism");

  for (size_t ei = 0; ei < d.edges.size(); ++ei) {
    const auto& de = d.edges[ei];
    const auto& ee = e.edges[ei];
    const ElementMap& hi = h[d.vertex_algebra[de.from]];
    const ElementMap& hj = h[d.vertex_algebra[de.to]];
    for (int a = 0; a < de.rep.actor().size(); ++a)
      for (int m = 0; m < de.rep.space().size(); ++m)
        if (hj(de.rep.apply(a, m)) != ee.rep.apply(hi(a), hj(m))) return false;
  }
  return true;
}

std::string to_string(const DiagramWord& w) {
  switch (w.kind) {
    case DiagramWord::Kind::gen:
      return "Gen(" + std::to_string(w.algebra) + ":" + std::to_string(w.index) + ")";
    case DiagramWord::Kind::act:
      return "Act(e" + std::to_string(w.edge) + ", " + to_string(w.children[0]) + ", " +
             to_string(w.children[1]) + ")";
    case DiagramWord::Kind::op: {
      std::string s = "Op(" + w.op + ", [";
      for (size_t i = 0; i < w.children.size(); ++i) {
        if (i) s += ", ";
        s += to_string(w.children[i]);
      }
      return s + "])";
    }
  }
  return {};
}

int eval_diagram_word(const Diagram& d, const std::vector<std::vector<int>>& gens,
                      const DiagramWord& w) {
  switch (w.kind) {
    case DiagramWord::Kind::gen:
      return gens[w.algebra][w.index];
    case DiagramWord::Kind::op: {
      const FiniteAlgebra& a = d.algebras[w.algebra];
      size_t oi = a.domain().require(w.op);
      std::vector<int> vals;
      for (const auto& c : w.children) vals.push_back(eval_diagram_word(d, gens, c));
      return a.apply(oi, vals);
    }
    case DiagramWord::Kind::act: {
      const auto& e = d.edges[w.edge];
      int actor = eval_diagram_word(d, gens, w.children[0]);
      int space = eval_diagram_word(d, gens, w.children[1]);
      return e.rep.apply(actor, space);
    }
  }
  fail(ErrorCode::shape, "malformed diagram word");
}

bool DiagramClosure::full(const Diagram& d) const {
  for (size_t i = 0; i < d.algebras.size(); ++i)
    if (static_cast<int>(members[i].size()) != d.algebras[i].size()) return false;
  return true;
}

DiagramClosure diagram_closure(const Diagram& d, const std::vector<std::vector<int>>& seed) {
  validate_diagram(d);
  size_t na = d.algebras.size();
  if (seed.size() != na) fail(ErrorCode::shape, "one seed set per distinct algebra required");

  DiagramClosure out;
  out.members.resize(na);
  out.witness.resize(na);
  std::vector<std::vector<char>> in(na);
  for (size_t i = 0; i < na; ++i) {
    in[i].assign(d.algebras[i].size(), 0);
    for (size_t gi = 0; gi < seed[i].size(); ++gi) {
      int v = seed[i][gi];
      if (v < 0 || v >= d.algebras[i].size()) fail(ErrorCode::index, "seed out of carrier");
      if (!in[i][v]) {
        in[i][v] = 1;
        out.witness[i].emplace(v, DiagramWord::gen(static_cast<int>(i), static_cast<int>(gi)));
      }
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Vertex operations.
    for (size_t ai = 0; ai < na; ++ai) {
      const FiniteAlgebra& alg = d.algebras[ai];
      std::vector<int> current;
      for (int v = 0; v < alg.size(); ++v)
        if (in[ai][v]) current.push_back(v);
      int m = static_cast<int>(current.size());
      for (size_t oi = 0; oi < alg.domain().size(); ++oi) {
        int k = alg.domain().op(oi).arity;
        if (k > 0 && m == 0) continue;
        long long cnt = power_count(std::max(m, 1), k);
        std::vector<int> args(k);
        for (long long idx = 0; idx < cnt; ++idx) {
          long long rest = idx;
          for (int i = k - 1; i >= 0; --i) {
            args[i] = current[rest % std::max(m, 1)];
            rest /= std::max(m, 1);
          }
          int r = alg.apply(oi, args);
          if (in[ai][r]) continue;
          std::vector<DiagramWord> kids;
          for (int v : args) kids.push_back(out.witness[ai].at(v));
          in[ai][r] = 1;
          out.witness[ai].emplace(
              r, DiagramWord::make_op(static_cast<int>(ai), alg.domain().op(oi).symbol,
                                      std::move(kids)));
          changed = true;
        }
      }
    }
    // Cross-edge actions.
    for (size_t ei = 0; ei < d.edges.size(); ++ei) {
      const auto& e = d.edges[ei];
      int src = d.vertex_algebra[e.from];
      int dst = d.vertex_algebra[e.to];
      std::vector<int> actors, spaces;
      for (int v = 0; v < d.algebras[src].size(); ++v)
        if (in[src][v]) actors.push_back(v);
      for (int v = 0; v < d.algebras[dst].size(); ++v)
        if (in[dst][v]) spaces.push_back(v);
      for (int a : actors)
        for (int x : spaces) {
          int r = e.rep.apply(a, x);
          if (in[dst][r]) continue;
          in[dst][r] = 1;
          out.witness[dst].emplace(
              r, DiagramWord::act(dst, static_cast<int>(ei), out.witness[src].at(a),
                                  out.witness[dst].at(x)));
          changed = true;
        }
    }
  }

  for (size_t i = 0; i < na; ++i)
    for (int v = 0; v < d.algebras[i].size(); ++v)
      if (in[i][v]) out.members[i].push_back(v);
  return out;
}

std::vector<std::vector<int>> diagram_quasibasis(const Diagram& d,
                                                 std::vector<std::vector<int>> seed) {
  auto layers = validate_diagram(d);
  for (auto& s : seed) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  if (!diagram_closure(d, seed).full(d))
    fail(ErrorCode::precondition, "seed tuple does not generate the diagram");

  std::vector<char> minimized(d.algebras.size(), 0);
  for (const auto& layer : layers)
    for (int v : layer) {
      int ai = d.vertex_algebra[v];
      if (minimized[ai]) continue;
      minimized[ai] = 1;
      for (int i = static_cast<int>(seed[ai].size()) - 1; i >= 0; --i) {
        auto trial = seed;
        trial[ai].erase(trial[ai].begin() + i);
        if (diagram_closure(d, trial).full(d)) seed[ai].erase(seed[ai].begin() + i);
      }
    }
  return seed;
}

std::vector<std::vector<ElementMap>> diagram_automorphism_group(const Diagram& d,
                                                                long long budget) {
  validate_diagram(d);
  size_t na = d.algebras.size();
  std::vector<std::vector<ElementMap>> per_algebra;
  long long total = 1;
  for (const auto& a : d.algebras) {
    per_algebra.push_back(algebra_automorphisms(a, budget));
    total *= static_cast<long long>(per_algebra.back().size());
    if (total > budget) fail(ErrorCode::resource, "diagram automorphism search exceeds budget");
  }

  std::vector<std::vector<ElementMap>> out;
  std::vector<size_t> pick(na, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long rest = idx;
    for (size_t i = na; i-- > 0;) {
      pick[i] = static_cast<size_t>(rest % per_algebra[i].size());
      rest /= per_algebra[i].size();
    }
    std::vector<ElementMap> h;
    for (size_t i = 0; i < na; ++i) h.push_back(per_algebra[i][pick[i]]);
    if (is_diagram_morphism(d, d, h)) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());

  // Group closure sanity.
  auto member = [&](const std::vector<ElementMap>& m) {
    return std::binary_search(out.begin(), out.end(), m);
  };
  for (const auto& r : out) {
    std::vector<ElementMap> inv;
    for (const auto& m : r) inv.push_back(inverse(m));
    if (!member(inv)) fail(ErrorCode::structure, "diagram automorphisms not inverse-closed");
  }
  return out;
}

}  // namespace ualg
