#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ualg/algebra_ops.hpp"

namespace ualg {

struct StructureFlags {
  // Per binary operator, in signature order over binary operators only.
  std::vector<std::pair<std::string, bool>> is_group_under;
  std::vector<std::pair<std::string, bool>> abelian_wrt;
  std::optional<std::string> omega_group_wrt;
  std::optional<std::string> multiplicative_omega_group_wrt;
  std::optional<std::pair<std::string, std::string>> omega_ring_wrt;
};

// Every operator other than `add` is additive in each argument slot.
bool op_is_polyadditive(const FiniteAlgebra& a, size_t op_index, size_t add_index);

// product two-sided distributive over op: a*(w(b1..bn)) = w(a*b1,..,a*bn)
// and symmetric on the right.
bool product_distributes_over(const FiniteAlgebra& a, size_t product_index, size_t op_index);

// Group under add plus polyadditivity of every other operator.
bool is_omega_group(const FiniteAlgebra& a, size_t add_index);

// Group under product plus two-sided distributivity over every other
// operator.
bool is_multiplicative_omega_group(const FiniteAlgebra& a, size_t product_index);

// Group under add, every other operator polyadditive, and the product
// two-sided distributive over the remaining operators. No group axiom on the
// product: rings and matrix birings are the intended instances.
bool is_omega_ring(const FiniteAlgebra& a, size_t add_index, size_t product_index);

StructureFlags classify(const FiniteAlgebra& a,
                        std::optional<std::pair<std::string, std::string>> designated = {});

// Interchange law between two operators (arity m and n): applying w2 along
// rows then w1, versus w1 along columns then w2, on every m x n matrix of
// elements. Returns the first failing matrix (row-major) or empty.
struct InterchangeResult {
  bool holds = true;
  std::vector<int> counterexample;  // m*n entries, row-major
};
InterchangeResult interchange(const FiniteAlgebra& b, std::string_view op1, std::string_view op2);

// Hom(A -> B) closed under the pointwise operation op of B.
bool hom_set_closed(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string_view op,
                    long long budget = kDefaultBudget);

// Witness search for a non-abelian-semigroup instance where Hom(A -> B) is
// still closed under op: returns the first (i, j) pair of indices into the
// family for which closure holds while op on B is not both commutative and
// associative.
std::optional<std::pair<size_t, size_t>> search_closed_noncommutative(
    const std::vector<FiniteAlgebra>& family, std::string_view op,
    long long budget = kDefaultBudget);

}  // namespace ualg
