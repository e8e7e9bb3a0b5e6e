#pragma once

#include <optional>
#include <vector>

#include "ualg/finite_algebra.hpp"

namespace ualg {

// f is compatible with every operator: f(w_A(a1..ak)) = w_B(f(a1)..f(ak)).
bool is_homomorphism(const ElementMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b);

// First isomorphism data for a homomorphism f : A -> B.
// quotient carrier is numbered by ascending canonical block id;
// image carrier by ascending element of B. r(q(p(x))) = f(x) for all x.
struct FirstIsomorphism {
  EquivalenceRelation kernel;
  FiniteAlgebra quotient;
  FiniteAlgebra image;
  ElementMap projection;  // A -> quotient
  ElementMap bijection;   // quotient -> image
  ElementMap inclusion;   // image -> B
};

FirstIsomorphism kernel_and_quotient(const ElementMap& f, const FiniteAlgebra& a,
                                     const FiniteAlgebra& b);

bool is_congruence(const EquivalenceRelation& e, const FiniteAlgebra& a);

// Quotient algebra A/E for a congruence E; carrier numbered by ascending
// canonical block id.
FiniteAlgebra quotient_algebra(const FiniteAlgebra& a, const EquivalenceRelation& e);

struct ProductResult {
  FiniteAlgebra algebra;
  std::vector<ElementMap> projections;
};

// Cartesian product in mixed-radix order (leftmost factor most significant).
// The empty product is the one-element algebra over the given domain.
ProductResult product(const OperatorDomain& domain, const std::vector<FiniteAlgebra>& factors);

// Least subset of the carrier containing x and closed under every operation
// (constants included automatically). Sorted ascending.
std::vector<int> generated_subalgebra(const FiniteAlgebra& a, const std::vector<int>& x);

// Renumber a closed subset (sorted ascending) into a standalone algebra.
FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const std::vector<int>& closed_sorted);

// Deterministic search for an isomorphism: the lexicographically least image
// array among bijective homomorphisms, or nullopt.
std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

// All homomorphisms A -> B by backtracking, lexicographically ordered.
// The budget caps visited search nodes.
std::vector<ElementMap> all_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                          long long budget = kDefaultBudget);

// All automorphisms, lexicographically ordered.
std::vector<ElementMap> algebra_automorphisms(const FiniteAlgebra& a,
                                              long long budget = kDefaultBudget);

}  // namespace ualg
