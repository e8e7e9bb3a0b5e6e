#include "ualg/algebra_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ualg {

namespace {

void require_same_domain(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.domain() != b.domain())
    fail(ErrorCode::domain_mismatch, "algebras have different signatures");
}

void require_map_shape(const ElementMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (f.source_size != a.size() || f.target_size != b.size())
    fail(ErrorCode::shape, "map shape does not match algebra carriers");
}

}  // namespace

bool is_homomorphism(const ElementMap& f, const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_domain(a, b);
  require_map_shape(f, a, b);
  int n = a.size();
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    int k = a.domain().op(oi).arity;
    long long cnt = power_count(n, k);
    std::vector<int> args(k), mapped(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = 0; i < k; ++i) mapped[i] = f(args[i]);
      if (f(a.table(oi)[idx]) != b.apply(oi, mapped)) return false;
    }
  }
  return true;
}

bool is_congruence(const EquivalenceRelation& e, const FiniteAlgebra& a) {
  if (e.carrier_size() != a.size())
    fail(ErrorCode::shape, "equivalence carrier does not match algebra");
  int n = a.size();
  // Single-coordinate substitution suffices: chaining coordinates gives the
  // full componentwise condition.
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    int k = a.domain().op(oi).arity;
    long long cnt = power_count(n, k);
    std::vector<int> args(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      int base = a.table(oi)[idx];
      for (int pos = 0; pos < k; ++pos) {
        int orig = args[pos];
        for (int alt = 0; alt < n; ++alt) {
          if (!e.same_block(orig, alt) || alt == orig) continue;
          args[pos] = alt;
          if (!e.same_block(base, a.apply(oi, args))) {
            args[pos] = orig;
            return false;
          }
        }
        args[pos] = orig;
      }
    }
  }
  return true;
}

FiniteAlgebra quotient_algebra(const FiniteAlgebra& a, const EquivalenceRelation& e) {
  if (!is_congruence(e, a)) fail(ErrorCode::precondition, "relation is not a congruence");
  auto ids = e.block_ids();
  int q = static_cast<int>(ids.size());
  // ids[i] is the representative of quotient element i.
  std::vector<std::vector<int>> tables(a.domain().size());
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    int k = a.domain().op(oi).arity;
    long long cnt = power_count(q, k);
    tables[oi].resize(cnt);
    std::vector<int> args(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = ids[rest % q];
        rest /= q;
      }
      tables[oi][idx] = e.block_index(a.apply(oi, args));
    }
  }
  return FiniteAlgebra(a.domain(), q, std::move(tables));
}

FirstIsomorphism kernel_and_quotient(const ElementMap& f, const FiniteAlgebra& a,
                                     const FiniteAlgebra& b) {
  if (!is_homomorphism(f, a, b))
    fail(ErrorCode::precondition, "map is not a homomorphism");

  std::vector<int> block(a.size());
  {
    std::map<int, int> first_seen;
    for (int x = 0; x < a.size(); ++x) {
      auto [it, fresh] = first_seen.emplace(f(x), x);
      block[x] = it->second;
    }
  }
  EquivalenceRelation kernel(std::move(block));
  FiniteAlgebra quotient = quotient_algebra(a, kernel);

  // Image subalgebra of B, renumbered ascending.
  std::vector<int> image_elems(f.image.begin(), f.image.end());
  std::sort(image_elems.begin(), image_elems.end());
  image_elems.erase(std::unique(image_elems.begin(), image_elems.end()), image_elems.end());
  FiniteAlgebra image = induced_subalgebra(b, image_elems);

  std::vector<int> proj(a.size());
  for (int x = 0; x < a.size(); ++x) proj[x] = kernel.block_index(x);
  ElementMap p(a.size(), quotient.size(), std::move(proj));

  auto ids = kernel.block_ids();
  std::vector<int> bij(quotient.size());
  for (int i = 0; i < quotient.size(); ++i) {
    int rep = ids[i];
    int img = f(rep);
    bij[i] = static_cast<int>(
        std::lower_bound(image_elems.begin(), image_elems.end(), img) - image_elems.begin());
  }
  ElementMap q(quotient.size(), image.size(), std::move(bij));

  ElementMap r(image.size(), b.size(), image_elems);

  return FirstIsomorphism{std::move(kernel), std::move(quotient), std::move(image),
                          std::move(p), std::move(q), std::move(r)};
}

ProductResult product(const OperatorDomain& domain, const std::vector<FiniteAlgebra>& factors) {
  for (const auto& f : factors)
    if (f.domain() != domain)
      fail(ErrorCode::domain_mismatch, "product factor has different signature");

  std::vector<int> radices;
  for (const auto& f : factors) radices.push_back(f.size());
  long long n = mixed_radix_count(radices);

  std::vector<std::vector<int>> tables(domain.size());
  for (size_t oi = 0; oi < domain.size(); ++oi) {
    int k = domain.op(oi).arity;
    long long cnt = power_count(static_cast<int>(n), k);
    tables[oi].resize(cnt);
    std::vector<std::vector<int>> arg_tuples(k);
    std::vector<int> args(k), comp(k), result(factors.size());
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int i = 0; i < k; ++i) arg_tuples[i] = mixed_radix_tuple(args[i], radices);
      for (size_t fi = 0; fi < factors.size(); ++fi) {
        for (int i = 0; i < k; ++i) comp[i] = arg_tuples[i][fi];
        result[fi] = factors[fi].apply(oi, comp);
      }
      tables[oi][idx] = static_cast<int>(mixed_radix_index(result, radices));
    }
  }
  FiniteAlgebra alg(domain, static_cast<int>(n), std::move(tables));

  std::vector<ElementMap> projections;
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    std::vector<int> img(n);
    for (long long x = 0; x < n; ++x) img[x] = mixed_radix_tuple(x, radices)[fi];
    projections.emplace_back(static_cast<int>(n), factors[fi].size(), std::move(img));
  }
  return ProductResult{std::move(alg), std::move(projections)};
}

std::vector<int> generated_subalgebra(const FiniteAlgebra& a, const std::vector<int>& x) {
  int n = a.size();
  std::vector<char> in(n, 0);
  for (int v : x) {
    if (v < 0 || v >= n) fail(ErrorCode::index, "generator out of carrier");
    in[v] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> current;
    for (int v = 0; v < n; ++v)
      if (in[v]) current.push_back(v);
    int m = static_cast<int>(current.size());
    for (size_t oi = 0; oi < a.domain().size(); ++oi) {
      int k = a.domain().op(oi).arity;
      long long cnt = power_count(std::max(m, 1), k);
      if (k > 0 && m == 0) continue;
      std::vector<int> args(k);
      for (long long idx = 0; idx < cnt; ++idx) {
        long long rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = current[rest % m];
          rest /= m;
        }
        int r = a.apply(oi, args);
        if (!in[r]) {
          in[r] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (in[v]) out.push_back(v);
  return out;
}

FiniteAlgebra induced_subalgebra(const FiniteAlgebra& a, const std::vector<int>& closed_sorted) {
  int m = static_cast<int>(closed_sorted.size());
  if (m == 0) fail(ErrorCode::shape, "empty subalgebra carrier");
  auto pos = [&](int v) {
    auto it = std::lower_bound(closed_sorted.begin(), closed_sorted.end(), v);
    if (it == closed_sorted.end() || *it != v)
      fail(ErrorCode::structure, "subset is not closed under operations");
    return static_cast<int>(it - closed_sorted.begin());
  };
  std::vector<std::vector<int>> tables(a.domain().size());
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    int k = a.domain().op(oi).arity;
    long long cnt = power_count(m, k);
    tables[oi].resize(cnt);
    std::vector<int> args(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = closed_sorted[rest % m];
        rest /= m;
      }
      tables[oi][idx] = pos(a.apply(oi, args));
    }
  }
  return FiniteAlgebra(a.domain(), m, std::move(tables));
}

namespace {

// Cheap isomorphism-invariant per element: for each operator, how often the
// element occurs as a table result, plus the diagonal fixed-point flag for
// binary operators.
std::vector<std::vector<int>> element_signatures(const FiniteAlgebra& a) {
  int n = a.size();
  std::vector<std::vector<int>> sig(n);
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    std::vector<int> out_count(n, 0);
    for (int v : a.table(oi)) out_count[v]++;
    for (int x = 0; x < n; ++x) sig[x].push_back(out_count[x]);
    if (a.domain().op(oi).arity == 2)
      for (int x = 0; x < n; ++x) sig[x].push_back(a.apply2(oi, x, x) == x ? 1 : 0);
  }
  return sig;
}

struct MapSearch {
  const FiniteAlgebra& a;
  const FiniteAlgebra& b;
  bool bijective;
  bool stop_at_first;
  long long budget;
  long long nodes = 0;
  std::vector<int> img;
  std::vector<char> assigned;
  std::vector<char> used;
  std::vector<std::vector<int>> sig_a, sig_b;
  std::vector<ElementMap> found;

  MapSearch(const FiniteAlgebra& a_, const FiniteAlgebra& b_, bool bij, bool first,
            long long budget_)
      : a(a_), b(b_), bijective(bij), stop_at_first(first), budget(budget_),
        img(a_.size(), -1), assigned(a_.size(), 0), used(b_.size(), 0) {
    if (bijective) {
      sig_a = element_signatures(a_);
      sig_b = element_signatures(b_);
    }
  }

  // Check every tuple whose arguments and result are all assigned and which
  // involves element v somewhere.
  bool consistent_after(int v) {
    int n = a.size();
    for (size_t oi = 0; oi < a.domain().size(); ++oi) {
      int k = a.domain().op(oi).arity;
      if (k == 0) {
        int r = a.table(oi)[0];
        if (assigned[r] && img[r] != b.table(oi)[0]) return false;
        continue;
      }
      long long cnt = power_count(n, k);
      std::vector<int> args(k), mapped(k);
      for (long long idx = 0; idx < cnt; ++idx) {
        long long rest = idx;
        bool touches = false, all_assigned = true;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = static_cast<int>(rest % n);
          rest /= n;
          if (args[i] == v) touches = true;
          if (!assigned[args[i]]) all_assigned = false;
        }
        int r = a.table(oi)[idx];
        if (r == v) touches = true;
        if (!touches || !all_assigned || !assigned[r]) continue;
        for (int i = 0; i < k; ++i) mapped[i] = img[args[i]];
        if (img[r] != b.apply(oi, mapped)) return false;
      }
    }
    return true;
  }

  bool run(int v) {
    if (v == a.size()) {
      found.emplace_back(a.size(), b.size(), img);
      return stop_at_first;
    }
    for (int w = 0; w < b.size(); ++w) {
      if (bijective && used[w]) continue;
      if (bijective && sig_a[v] != sig_b[w]) continue;
      if (++nodes > budget) fail(ErrorCode::resource, "map search budget exceeded");
      img[v] = w;
      assigned[v] = 1;
      if (bijective) used[w] = 1;
      if (consistent_after(v) && run(v + 1)) return true;
      assigned[v] = 0;
      if (bijective) used[w] = 0;
    }
    img[v] = -1;
    return false;
  }
};

}  // namespace

std::optional<ElementMap> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  require_same_domain(a, b);
  if (a.size() != b.size()) return std::nullopt;
  MapSearch s(a, b, /*bij=*/true, /*first=*/true, /*budget=*/1LL << 40);
  s.run(0);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<ElementMap> all_homomorphisms(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                          long long budget) {
  require_same_domain(a, b);
  MapSearch s(a, b, /*bij=*/false, /*first=*/false, budget);
  s.run(0);
  return s.found;
}

std::vector<ElementMap> algebra_automorphisms(const FiniteAlgebra& a, long long budget) {
  MapSearch s(a, a, /*bij=*/true, /*first=*/false, budget);
  s.run(0);
  return s.found;
}

}  // namespace ualg
