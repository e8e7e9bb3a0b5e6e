#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ualg/representation.hpp"

namespace ualg {

// A term over an ordered generating list: generator leaf, space-operation
// node, or actor-action node.
struct OmegaWord {
  enum class Kind { gen, op, act };
  Kind kind = Kind::gen;
  int index = 0;                    // generator index (gen) or actor element (act)
  std::string op;                   // space operator symbol (op)
  std::vector<OmegaWord> children;  // op: arity children; act: one child

  static OmegaWord gen(int i) { return OmegaWord{Kind::gen, i, {}, {}}; }
  static OmegaWord make_op(std::string symbol, std::vector<OmegaWord> kids) {
    return OmegaWord{Kind::op, 0, std::move(symbol), std::move(kids)};
  }
  static OmegaWord act(int actor_elem, OmegaWord child) {
    return OmegaWord{Kind::act, actor_elem, {}, {std::move(child)}};
  }

  bool operator==(const OmegaWord&) const = default;
};

std::string to_string(const OmegaWord& w);

int eval_word(const Representation& rep, std::span<const int> gens, const OmegaWord& w);

struct ClosureResult {
  std::vector<int> members;           // sorted ascending
  std::map<int, OmegaWord> witness;   // element -> first word found (breadth-first)
};

// J[f, X]: fixpoint of the chain X_k under space operations and actor
// actions. Witnesses are discovered breadth-first; within a round space
// operators come in signature order with argument tuples ascending, then
// actions by actor element then argument.
ClosureResult closure(const Representation& rep, std::span<const int> gens);

bool is_generating(const Representation& rep, std::span<const int> gens);

// Greedy removal in descending element order; the survivor set is minimal.
std::vector<int> quasibasis(const Representation& rep, std::vector<int> gens);

// Replace each Gen(i) by assignment[i].
OmegaWord substitute(const OmegaWord& w, std::span<const OmegaWord> assignment);

// Extend a generator assignment to the reduced morphism it determines;
// well-definedness is established by re-checking the morphism equations on
// the full carrier, naming a violated word pair on failure.
ElementMap extend_map(const Representation& f, const Representation& g,
                      std::span<const int> gens, std::span<const int> images);

// Endomorphism regular on a generating set: the image set still generates.
bool regular_on(const Representation& rep, std::span<const int> gens, const ElementMap& endo);

// Orbit of a quasibasis under the automorphism group, each member verified
// minimal; canonically sorted set of sets.
std::vector<std::vector<int>> basis_orbit(const Representation& rep,
                                          std::span<const int> basis,
                                          long long budget = kDefaultBudget);

}  // namespace ualg
