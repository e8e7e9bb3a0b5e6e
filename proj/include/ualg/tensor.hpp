#pragma once

#include <string>
#include <vector>

#include "ualg/algebra_ops.hpp"

namespace ualg {

// A finitely presented abelian group: relations are integer rows over the
// generators. All arithmetic is exact.
struct AbelianPresentation {
  int generator_count = 0;
  std::vector<std::vector<long long>> relations;
};

// Invariant factors (> 1, divisibility chain) of the quotient Z^g / rows.
// The quotient must be finite.
std::vector<long long> presentation_invariant_factors(const AbelianPresentation& p);

struct TensorProduct {
  std::vector<FiniteAlgebra> factors;
  FiniteAlgebra group;                       // carrier of the quotient, op "+"
  std::vector<int> canonical;                // tuple index -> group element
  std::vector<long long> invariant_factors;  // > 1, ascending divisibility
  long long actor_modulus = 1;               // the integer actor acts through Z_e
};

// Tensor product of finite abelian groups (designated op "+"), built from
// the generated-relations presentation: one generator per tuple, slot
// additivity plus integer-action balancing, quotient computed by exact
// integer elimination.
TensorProduct tensor_abelian(const std::vector<FiniteAlgebra>& factors,
                             long long budget = kDefaultBudget);

// Factor a reduced polymorphism g (tuple index -> target element) through the
// canonical map: returns the unique homomorphism h with h . canonical = g.
// Polymorphism slot-linearity is verified first; for |T| <= 16 uniqueness is
// re-verified by exhausting homomorphisms.
ElementMap verify_universal(const TensorProduct& t, const std::vector<int>& g,
                            const FiniteAlgebra& target, long long budget = kDefaultBudget);

struct TensorLawReport {
  bool additivity = false;
  bool balancing = false;
  bool associativity_checked = false;
  bool associativity = false;
  std::vector<std::string> lines;
};

// Slot additivity and integer balancing of the canonical map over all
// tuples; for three or more factors, associativity against the left-nested
// construction via isomorphism search.
TensorLawReport check_tensor_laws(const TensorProduct& t, long long budget = kDefaultBudget);

// The integer action on an abelian group: k * x = x + ... + x (k times).
int integer_multiple(const FiniteAlgebra& group, size_t add_index, int k, int x);
// Least e > 0 with e * x = 0 for all x.
long long group_exponent(const FiniteAlgebra& group, size_t add_index);

}  // namespace ualg
