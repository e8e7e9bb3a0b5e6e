#pragma once

#include <vector>

#include "ualg/representation.hpp"

namespace ualg {

// r2 maps the Cartesian product of the factor spaces (mixed-radix indexed,
// leftmost factor most significant) into the target space. A reduced
// polymorphism is a reduced morphism in each slot separately: fixing the
// other slots, the slice is a homomorphism of space algebras commuting with
// every action. The slot-swap identity is verified afterwards as a sanity
// invariant.
bool reduced_polymorphism_check(const std::vector<Representation>& factors,
                                const Representation& target, const std::vector<int>& r2);

}  // namespace ualg
