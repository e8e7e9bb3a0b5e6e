#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/structures.hpp"

namespace ualg {

enum class Side { left, right };

// How an actor operator combines the endomorphisms in its arguments.
// The product on the endomorphism set is not composition in general
// (the Lie shift uses the commutator), so each operator carries its own
// combiner.
struct EndCombiner {
  enum class Kind { pointwise, composition, commutator };
  Kind kind = Kind::composition;
  std::string op;  // space operator for pointwise / commutator

  static EndCombiner pointwise(std::string space_op) {
    return EndCombiner{Kind::pointwise, std::move(space_op)};
  }
  static EndCombiner composition() { return EndCombiner{Kind::composition, {}}; }
  static EndCombiner commutator(std::string group_op) {
    return EndCombiner{Kind::commutator, std::move(group_op)};
  }

  bool operator==(const EndCombiner&) const = default;
};

// A representation of one finite algebra in another: per actor element a
// transformation of the space carrier, plus per actor operator the combiner
// realizing the actor structure on the image.
class Representation {
public:
  Representation(FiniteAlgebra actor, FiniteAlgebra space, std::vector<ElementMap> action,
                 std::vector<EndCombiner> combiners, Side side = Side::left);

  const FiniteAlgebra& actor() const { return actor_; }
  const FiniteAlgebra& space() const { return space_; }
  const std::vector<ElementMap>& action() const { return action_; }
  const ElementMap& transform(int a) const { return action_[a]; }
  const std::vector<EndCombiner>& combiners() const { return combiners_; }
  Side side() const { return side_; }

  int apply(int a, int m) const { return action_[a](m); }

  bool operator==(const Representation&) const = default;

private:
  FiniteAlgebra actor_;
  FiniteAlgebra space_;
  std::vector<ElementMap> action_;
  std::vector<EndCombiner> combiners_;
  Side side_;
};

// Representation whose actor is the one-element algebra with empty signature;
// lets bare algebras ride through the word/closure machinery.
Representation trivial_representation(FiniteAlgebra space);

struct ValidationReport {
  bool ok = true;
  std::string message;
};

// Checks that every transform is an endomorphism of the space and that each
// actor operator's combiner equation holds pointwise; on failure names the
// operator, tuple, and space point.
ValidationReport validate(const Representation& rep);
void require_valid(const Representation& rep);

struct RepProperties {
  bool effective = false;
  bool free = false;
  bool transitive = false;
  bool single_transitive = false;
};
RepProperties properties(const Representation& rep);

struct OrbitsResult {
  EquivalenceRelation partition;
  std::vector<std::vector<int>> stabilizers;  // per space element, sorted actor subset
};
// Requires the actor to be a multiplicative Omega-group under product_op with
// the composition combiner.
OrbitsResult orbits_and_stabilizers(const Representation& rep, std::string_view product_op);

enum class MorphismKind { full, reduced };

// full: r2(f(a)(m)) = g(r1(a))(r2(m)), r1/r2 homomorphisms.
// reduced: shared actor, r2 . f(a) = g(a) . r2.
// Precondition failures (non-homomorphism r1/r2, actor mismatch) raise
// errors; a failing commuting square returns false.
bool morphism_check(MorphismKind kind, const Representation& f, const Representation& g,
                    const std::optional<ElementMap>& r1, const ElementMap& r2);

// All space automorphisms commuting with every transform, sorted
// lexicographically; closure under composition and inverse is verified.
std::vector<ElementMap> automorphism_group(const Representation& rep,
                                           long long budget = kDefaultBudget);

struct EffectivizeResult {
  std::vector<int> kernel_of_inefficiency;  // sorted actor subset
  Representation rep;
  ElementMap actor_projection;
};
EffectivizeResult effectivize(const Representation& rep, std::string_view product_op);

struct QuotientRepResult {
  Representation rep;
  ElementMap nat;
};
// Space quotient by a congruence with which every transform is coordinated.
QuotientRepResult quotient_representation(const Representation& rep,
                                          const EquivalenceRelation& n);

// Single transitive representation induces the actor structure on the space
// through the chosen base point.
FiniteAlgebra induce_structure(const Representation& rep, int base);

// Pointwise sum of transforms, pulled back to the actor when every sum is
// again a transform; requires an effective representation into a space whose
// add_op is commutative and associative.
std::optional<std::vector<int>> induce_sum(const Representation& rep, std::string_view add_op);

struct ShiftPair {
  Representation left;
  Representation right;
};
// Left and right shift representations of a multiplicative Omega-group on
// its own carrier (product operator stripped from the space signature).
ShiftPair shifts(const FiniteAlgebra& g, std::string_view product_op);

// The commuting right-side twin of a single transitive left-side
// representation, built through group coordinates at base point 0.
Representation twin(const Representation& left_rep, std::string_view product_op);

}  // namespace ualg
