#include "ualg/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ualg {

long long power_count(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (1LL << 56) / std::max(n, 1))
      fail(ErrorCode::resource, "table size overflow");
    r *= n;
  }
  return r;
}

int tuple_to_index(std::span<const int> tuple, int n) {
  long long idx = 0;
  for (int v : tuple) idx = idx * n + v;
  return static_cast<int>(idx);
}

std::vector<int> index_to_tuple(long long index, int n, int k) {
  std::vector<int> t(k);
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % n);
    index /= n;
  }
  return t;
}

long long mixed_radix_count(std::span<const int> radices) {
  long long r = 1;
  for (int m : radices) {
    if (m <= 0) fail(ErrorCode::shape, "nonpositive radix");
    if (r > (1LL << 56) / m) fail(ErrorCode::resource, "product size overflow");
    r *= m;
  }
  return r;
}

long long mixed_radix_index(std::span<const int> tuple, std::span<const int> radices) {
  long long idx = 0;
  for (size_t i = 0; i < radices.size(); ++i) idx = idx * radices[i] + tuple[i];
  return idx;
}

std::vector<int> mixed_radix_tuple(long long index, std::span<const int> radices) {
  std::vector<int> t(radices.size());
  for (size_t i = radices.size(); i-- > 0;) {
    t[i] = static_cast<int>(index % radices[i]);
    index /= radices[i];
  }
  return t;
}

FiniteAlgebra::FiniteAlgebra(OperatorDomain domain, int size,
                             std::vector<std::vector<int>> tables)
    : domain_(std::move(domain)), size_(size), tables_(std::move(tables)) {
  if (size_ <= 0) fail(ErrorCode::shape, "carrier size must be positive");
  if (tables_.size() != domain_.size())
    fail(ErrorCode::shape, "expected one table per operator");
  for (size_t i = 0; i < tables_.size(); ++i) {
    long long want = power_count(size_, domain_.op(i).arity);
    if (static_cast<long long>(tables_[i].size()) != want)
      fail(ErrorCode::shape, "table for " + domain_.op(i).symbol + " has wrong length");
    for (int v : tables_[i])
      if (v < 0 || v >= size_)
        fail(ErrorCode::shape, "table entry out of carrier for " + domain_.op(i).symbol);
  }
}

int FiniteAlgebra::apply(size_t op_index, std::span<const int> args) const {
  const Operator& op = domain_.op(op_index);
  if (static_cast<int>(args.size()) != op.arity)
    fail(ErrorCode::shape, "arity mismatch applying " + op.symbol);
  return tables_[op_index][tuple_to_index(args, size_)];
}

ElementMap::ElementMap(int source, int target, std::vector<int> img)
    : source_size(source), target_size(target), image(std::move(img)) {
  if (source_size <= 0 || target_size <= 0)
    fail(ErrorCode::shape, "map sizes must be positive");
  if (static_cast<int>(image.size()) != source_size)
    fail(ErrorCode::shape, "image array length mismatch");
  for (int v : image)
    if (v < 0 || v >= target_size) fail(ErrorCode::shape, "image entry out of range");
}

ElementMap ElementMap::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return ElementMap(n, n, std::move(img));
}

bool ElementMap::is_bijective() const {
  if (source_size != target_size) return false;
  std::vector<char> seen(target_size, 0);
  for (int v : image) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

ElementMap compose(const ElementMap& f, const ElementMap& g) {
  if (g.target_size != f.source_size) fail(ErrorCode::shape, "compose: size mismatch");
  std::vector<int> img(g.source_size);
  for (int x = 0; x < g.source_size; ++x) img[x] = f(g(x));
  return ElementMap(g.source_size, f.target_size, std::move(img));
}

ElementMap inverse(const ElementMap& f) {
  if (!f.is_bijective()) fail(ErrorCode::shape, "inverse of non-bijective map");
  std::vector<int> img(f.source_size);
  for (int x = 0; x < f.source_size; ++x) img[f(x)] = x;
  return ElementMap(f.target_size, f.source_size, std::move(img));
}

EquivalenceRelation::EquivalenceRelation(std::vector<int> block_assignment)
    : block_of_(std::move(block_assignment)) {
  int n = static_cast<int>(block_of_.size());
  if (n <= 0) fail(ErrorCode::shape, "empty carrier for equivalence");
  // Renumber so each block's id is its minimum element.
  std::map<int, int> canon;
  for (int x = 0; x < n; ++x) {
    int b = block_of_[x];
    if (b < 0) fail(ErrorCode::shape, "negative block id");
    if (!canon.count(b)) canon[b] = x;
  }
  for (int x = 0; x < n; ++x) block_of_[x] = canon[block_of_[x]];
}

EquivalenceRelation EquivalenceRelation::discrete(int n) {
  std::vector<int> b(n);
  std::iota(b.begin(), b.end(), 0);
  return EquivalenceRelation(std::move(b));
}

EquivalenceRelation EquivalenceRelation::indiscrete(int n) {
  return EquivalenceRelation(std::vector<int>(n, 0));
}

std::vector<int> EquivalenceRelation::block_ids() const {
  std::vector<int> ids;
  for (int x = 0; x < carrier_size(); ++x)
    if (block_of_[x] == x) ids.push_back(x);
  return ids;
}

std::vector<std::vector<int>> EquivalenceRelation::blocks() const {
  auto ids = block_ids();
  std::vector<std::vector<int>> out(ids.size());
  for (int x = 0; x < carrier_size(); ++x) {
    auto it = std::lower_bound(ids.begin(), ids.end(), block_of_[x]);
    out[it - ids.begin()].push_back(x);
  }
  return out;
}

int EquivalenceRelation::block_count() const {
  return static_cast<int>(block_ids().size());
}

int EquivalenceRelation::block_index(int x) const {
  auto ids = block_ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), block_of_[x]);
  return static_cast<int>(it - ids.begin());
}

bool op_is_associative(const FiniteAlgebra& a, size_t op_index) {
  if (a.domain().op(op_index).arity != 2) return false;
  int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (a.apply2(op_index, a.apply2(op_index, x, y), z) !=
            a.apply2(op_index, x, a.apply2(op_index, y, z)))
          return false;
  return true;
}

bool op_is_commutative(const FiniteAlgebra& a, size_t op_index) {
  if (a.domain().op(op_index).arity != 2) return false;
  int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (a.apply2(op_index, x, y) != a.apply2(op_index, y, x)) return false;
  return true;
}

int op_neutral(const FiniteAlgebra& a, size_t op_index) {
  if (a.domain().op(op_index).arity != 2) return -1;
  int n = a.size();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = a.apply2(op_index, e, x) == x && a.apply2(op_index, x, e) == x;
    if (ok) return e;
  }
  return -1;
}

bool op_is_group(const FiniteAlgebra& a, size_t op_index) {
  if (a.domain().op(op_index).arity != 2) return false;
  if (!op_is_associative(a, op_index)) return false;
  int e = op_neutral(a, op_index);
  if (e < 0) return false;
  int n = a.size();
  for (int x = 0; x < n; ++x) {
    bool found = false;
    for (int y = 0; y < n && !found; ++y)
      found = a.apply2(op_index, x, y) == e && a.apply2(op_index, y, x) == e;
    if (!found) return false;
  }
  return true;
}

int op_group_inverse(const FiniteAlgebra& a, size_t op_index, int x) {
  int e = op_neutral(a, op_index);
  if (e < 0) return -1;
  for (int y = 0; y < a.size(); ++y)
    if (a.apply2(op_index, x, y) == e && a.apply2(op_index, y, x) == e) return y;
  return -1;
}

}  // namespace ualg
