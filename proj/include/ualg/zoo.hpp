#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ualg/diagram.hpp"

namespace ualg {

// Elementary builders reused across the toolkit.
FiniteAlgebra cyclic_group(int n);                      // (Z_n, +)
FiniteAlgebra cyclic_ring(int n);                       // (Z_n, +, *)
FiniteAlgebra bare_set(int n);                          // empty signature
FiniteAlgebra group_from_table(const std::vector<int>& table, std::string_view op = "*");
FiniteAlgebra product_of_cyclics(const std::vector<int>& moduli);  // (+)
// The sub-rng d*Z_n of Z_n, renumbered, ops {+, *}.
FiniteAlgebra sub_rng(int n, int d);
// Z_p^dim with componentwise + and the cross-product bracket (dim must be 3).
FiniteAlgebra cross_product_algebra(int p);
// The quaternion algebra over Z_p: carrier p^4, ops {+, *}.
FiniteAlgebra quaternion_algebra(int p);

// Representation of the ring Z_e on an abelian group by integer multiples.
Representation integer_action(const FiniteAlgebra& abelian_group, int modulus);

struct ZooObject {
  std::string kind;
  std::vector<int> params;
  std::variant<FiniteAlgebra, Representation, Diagram> value;
  std::vector<std::string> notes;
};

// kinds: z_action (moduli...), module (m), unital_extension (m d),
// d_algebra (p), left_module (m), right_module (m), quaternion (p),
// lie_cross (p), group_on_set (n), affine_space (p).
ZooObject zoo_build(const std::string& kind, const std::vector<int>& params);

// General left/right module diagram over a commutative ring: the product of
// the acting algebra is supplied as an explicit bilinear table on the module
// carrier; a nonassociative product is accepted under the bilinear reading
// and flagged as nonstandard.
ZooObject build_side_module(const FiniteAlgebra& ring, const FiniteAlgebra& module_group,
                            const std::vector<int>& scalar_action,
                            const std::vector<int>& product_table, Side side);

struct LawReport {
  bool ok = true;
  std::vector<std::string> lines;
};

LawReport zoo_check(const ZooObject& obj);

}  // namespace ualg
