#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ualg/operator_domain.hpp"

namespace ualg {

// n^k with an overflow guard; table shapes stay well inside long long.
long long power_count(int n, int k);

// Row-major tuple encoding, leftmost argument most significant.
// This encoding is part of the file-format contract.
int tuple_to_index(std::span<const int> tuple, int n);
std::vector<int> index_to_tuple(long long index, int n, int k);

// Mixed-radix encoding for heterogeneous carriers (Cartesian products),
// again leftmost factor most significant.
long long mixed_radix_count(std::span<const int> radices);
long long mixed_radix_index(std::span<const int> tuple, std::span<const int> radices);
std::vector<int> mixed_radix_tuple(long long index, std::span<const int> radices);

// A finite Omega-algebra: carrier {0..n-1} plus one dense operation table
// per operator, in row-major tuple order.
class FiniteAlgebra {
public:
  FiniteAlgebra(OperatorDomain domain, int size, std::vector<std::vector<int>> tables);

  int size() const { return size_; }
  const OperatorDomain& domain() const { return domain_; }
  const std::vector<int>& table(size_t op_index) const { return tables_[op_index]; }

  int apply(size_t op_index, std::span<const int> args) const;
  int apply2(size_t op_index, int a, int b) const {
    return tables_[op_index][static_cast<size_t>(a) * size_ + b];
  }

  bool operator==(const FiniteAlgebra&) const = default;

private:
  OperatorDomain domain_;
  int size_ = 0;
  std::vector<std::vector<int>> tables_;
};

// A total map between carriers, stored as its image array.
struct ElementMap {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> image;

  ElementMap() = default;
  ElementMap(int source, int target, std::vector<int> img);

  int operator()(int x) const { return image[x]; }

  static ElementMap identity(int n);

  bool is_bijective() const;

  bool operator==(const ElementMap&) const = default;
  auto operator<=>(const ElementMap&) const = default;
};

// (f after g)(x) = f(g(x))
ElementMap compose(const ElementMap& f, const ElementMap& g);
ElementMap inverse(const ElementMap& f);  // f must be bijective

// A partition of {0..n-1}; block identifiers are canonical: each block's
// identifier is its minimum element.
class EquivalenceRelation {
public:
  explicit EquivalenceRelation(std::vector<int> block_assignment);

  static EquivalenceRelation discrete(int n);
  static EquivalenceRelation indiscrete(int n);

  int carrier_size() const { return static_cast<int>(block_of_.size()); }
  int block_of(int x) const { return block_of_[x]; }
  bool same_block(int a, int b) const { return block_of_[a] == block_of_[b]; }

  // Canonical ids in ascending order.
  std::vector<int> block_ids() const;
  // Blocks listed by ascending canonical id; members ascending.
  std::vector<std::vector<int>> blocks() const;
  int block_count() const;

  // Dense renumbering: block id -> position in ascending id order.
  int block_index(int x) const;

  bool operator==(const EquivalenceRelation&) const = default;

private:
  std::vector<int> block_of_;
};

// Basic single-operator predicates used across the toolkit.
bool op_is_associative(const FiniteAlgebra& a, size_t op_index);
bool op_is_commutative(const FiniteAlgebra& a, size_t op_index);
// Two-sided neutral element, or -1.
int op_neutral(const FiniteAlgebra& a, size_t op_index);
// Group by table exhaustion: associative, two-sided identity, inverses.
bool op_is_group(const FiniteAlgebra& a, size_t op_index);
// Inverse of x under a group operation (asserts neutral exists), or -1.
int op_group_inverse(const FiniteAlgebra& a, size_t op_index, int x);

}  // namespace ualg
