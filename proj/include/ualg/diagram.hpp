#pragma once

#include <map>
#include <string>
#include <vector>

#include "ualg/representation.hpp"

namespace ualg {

// A connected loop-free directed multigraph of algebras whose edges are
// representations. Vertices referencing the same algebra share one entry in
// `algebras`; morphism tuples and generating tuples are indexed by distinct
// algebra, so equal vertices automatically receive equal maps and seeds.
struct DiagramEdge {
  int from = 0;
  int to = 0;
  Representation rep;
};

struct Diagram {
  std::vector<FiniteAlgebra> algebras;  // distinct algebras
  std::vector<int> vertex_algebra;      // per vertex, index into algebras
  std::vector<DiagramEdge> edges;

  int vertex_count() const { return static_cast<int>(vertex_algebra.size()); }
  const FiniteAlgebra& vertex(int v) const { return algebras[vertex_algebra[v]]; }
};

// Checks connectivity, acyclicity, endpoint/representation agreement, and
// validates every edge; returns the layers A_[0], A_[1], ... where a vertex
// sits at the length of the longest path from the sources.
std::vector<std::vector<int>> validate_diagram(const Diagram& d);

struct DiagramCommutativity {
  bool ok = true;
  std::string counterexample;
};
// Every pair of edges into one vertex commutes pointwise.
DiagramCommutativity is_commutative(const Diagram& d);

struct ComposedTower {
  // Per actor element of the top algebra, the action on the faithful set of
  // transformation tables of the lower edge (indexed by the middle carrier).
  std::vector<ElementMap> on_tables;
  // Pair action f_{ij,k}(a_i, a_j) as a transformation of the bottom carrier,
  // flattened row-major over (a_i, a_j).
  std::vector<ElementMap> pair_action;
};
// Requires the lower edge effective and the upper edge free.
ComposedTower compose_tower(const Representation& f_ij, const Representation& f_jk);

// h is given per distinct algebra of d; shape (vertex pattern, edge
// endpoints) must match e.
bool is_diagram_morphism(const Diagram& d, const Diagram& e, const std::vector<ElementMap>& h);

// A term over the per-algebra generating tuple: generator leaf, vertex
// operation, or cross-edge action whose actor is itself a word.
struct DiagramWord {
  enum class Kind { gen, op, act };
  Kind kind = Kind::gen;
  int algebra = 0;                    // owning distinct algebra
  int index = 0;                      // generator index within the seed list
  std::string op;                     // vertex operator (op)
  int edge = 0;                       // edge index (act)
  std::vector<DiagramWord> children;  // op: arity; act: [actor word, space word]

  static DiagramWord gen(int alg, int i) { return DiagramWord{Kind::gen, alg, i, {}, 0, {}}; }
  static DiagramWord make_op(int alg, std::string symbol, std::vector<DiagramWord> kids) {
    return DiagramWord{Kind::op, alg, 0, std::move(symbol), 0, std::move(kids)};
  }
  static DiagramWord act(int alg, int edge, DiagramWord actor, DiagramWord space) {
    return DiagramWord{Kind::act, alg, 0, {}, edge, {std::move(actor), std::move(space)}};
  }
};

std::string to_string(const DiagramWord& w);
int eval_diagram_word(const Diagram& d, const std::vector<std::vector<int>>& gens,
                      const DiagramWord& w);

struct DiagramClosure {
  std::vector<std::vector<int>> members;            // per distinct algebra, sorted
  std::vector<std::map<int, DiagramWord>> witness;  // per distinct algebra
  bool full(const Diagram& d) const;
};

// Simultaneous fixpoint under vertex operations and cross-edge actions.
DiagramClosure diagram_closure(const Diagram& d, const std::vector<std::vector<int>>& seed);

// Layer-by-layer greedy minimization: sources first, element removal in
// descending index order; a shared algebra is minimized at its first layer.
std::vector<std::vector<int>> diagram_quasibasis(const Diagram& d,
                                                 std::vector<std::vector<int>> seed);

// All tuples of per-algebra automorphisms that are diagram morphisms d -> d;
// canonical order, group closure verified.
std::vector<std::vector<ElementMap>> diagram_automorphism_group(
    const Diagram& d, long long budget = kDefaultBudget);

}  // namespace ualg
