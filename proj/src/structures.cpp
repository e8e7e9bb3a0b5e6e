#include "ualg/structures.hpp"

#include <algorithm>

namespace ualg {

bool op_is_polyadditive(const FiniteAlgebra& a, size_t op_index, size_t add_index) {
  int n = a.size();
  int k = a.domain().op(op_index).arity;
  long long cnt = power_count(n, k);
  std::vector<int> args(k), alt(k);
  for (long long idx = 0; idx < cnt; ++idx) {
    long long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      args[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    int base = a.table(op_index)[idx];
    for (int pos = 0; pos < k; ++pos) {
      for (int b = 0; b < n; ++b) {
        alt = args;
        alt[pos] = a.apply2(add_index, args[pos], b);
        int lhs = a.apply(op_index, alt);
        alt[pos] = b;
        int rhs = a.apply2(add_index, base, a.apply(op_index, alt));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool product_distributes_over(const FiniteAlgebra& a, size_t product_index, size_t op_index) {
  int n = a.size();
  int k = a.domain().op(op_index).arity;
  long long cnt = power_count(n, k);
  std::vector<int> args(k), mapped(k);
  for (long long idx = 0; idx < cnt; ++idx) {
    long long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      args[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    int w = a.table(op_index)[idx];
    for (int x = 0; x < n; ++x) {
      for (int i = 0; i < k; ++i) mapped[i] = a.apply2(product_index, x, args[i]);
      if (a.apply2(product_index, x, w) != a.apply(op_index, mapped)) return false;
      for (int i = 0; i < k; ++i) mapped[i] = a.apply2(product_index, args[i], x);
      if (a.apply2(product_index, w, x) != a.apply(op_index, mapped)) return false;
    }
  }
  return true;
}

bool is_omega_group(const FiniteAlgebra& a, size_t add_index) {
  if (!op_is_group(a, add_index)) return false;
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    if (oi == add_index) continue;
    if (!op_is_polyadditive(a, oi, add_index)) return false;
  }
  return true;
}

bool is_multiplicative_omega_group(const FiniteAlgebra& a, size_t product_index) {
  if (!op_is_group(a, product_index)) return false;
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    if (oi == product_index) continue;
    if (!product_distributes_over(a, product_index, oi)) return false;
  }
  return true;
}

bool is_omega_ring(const FiniteAlgebra& a, size_t add_index, size_t product_index) {
  if (add_index == product_index) return false;
  if (a.domain().op(product_index).arity != 2) return false;
  if (!is_omega_group(a, add_index)) return false;
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    if (oi == add_index || oi == product_index) continue;
    if (!product_distributes_over(a, product_index, oi)) return false;
  }
  return true;
}

StructureFlags classify(const FiniteAlgebra& a,
                        std::optional<std::pair<std::string, std::string>> designated) {
  StructureFlags flags;
  std::vector<size_t> binary_ops;
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    if (a.domain().op(oi).arity != 2) continue;
    binary_ops.push_back(oi);
    flags.is_group_under.emplace_back(a.domain().op(oi).symbol, op_is_group(a, oi));
    flags.abelian_wrt.emplace_back(a.domain().op(oi).symbol, op_is_commutative(a, oi));
  }

  if (designated) {
    size_t add = a.domain().require(designated->first);
    size_t prod = a.domain().require(designated->second);
    if (a.domain().op(add).arity != 2 || a.domain().op(prod).arity != 2)
      fail(ErrorCode::shape, "designated symbols must be binary");
    if (is_omega_group(a, add)) flags.omega_group_wrt = designated->first;
    if (is_multiplicative_omega_group(a, prod))
      flags.multiplicative_omega_group_wrt = designated->second;
    if (is_omega_ring(a, add, prod)) flags.omega_ring_wrt = *designated;
    return flags;
  }

  for (size_t oi : binary_ops) {
    if (!flags.omega_group_wrt && is_omega_group(a, oi))
      flags.omega_group_wrt = a.domain().op(oi).symbol;
    if (!flags.multiplicative_omega_group_wrt && is_multiplicative_omega_group(a, oi))
      flags.multiplicative_omega_group_wrt = a.domain().op(oi).symbol;
  }
  for (size_t ai : binary_ops) {
    for (size_t pi : binary_ops) {
      if (ai == pi || flags.omega_ring_wrt) continue;
      if (is_omega_ring(a, ai, pi))
        flags.omega_ring_wrt = std::make_pair(a.domain().op(ai).symbol, a.domain().op(pi).symbol);
    }
  }
  return flags;
}

InterchangeResult interchange(const FiniteAlgebra& b, std::string_view op1, std::string_view op2) {
  size_t o1 = b.domain().require(op1);
  size_t o2 = b.domain().require(op2);
  int m = b.domain().op(o1).arity;
  int n = b.domain().op(o2).arity;
  int size = b.size();
  long long cnt = power_count(size, m * n);
  std::vector<int> mat(static_cast<size_t>(std::max(m * n, 1)));
  std::vector<int> rows(m), cols(n);
  for (long long idx = 0; idx < cnt; ++idx) {
    long long rest = idx;
    for (int i = m * n - 1; i >= 0; --i) {
      mat[i] = static_cast<int>(rest % size);
      rest /= size;
    }
    // w1 over the row results of w2.
    for (int i = 0; i < m; ++i)
      rows[i] = b.apply(o2, std::span<const int>(mat.data() + i * n, n));
    int lhs = b.apply(o1, rows);
    // w2 over the column results of w1.
    std::vector<int> col(m);
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < m; ++i) col[i] = mat[i * n + j];
      cols[j] = b.apply(o1, col);
    }
    int rhs = b.apply(o2, cols);
    if (lhs != rhs) return InterchangeResult{false, mat};
  }
  return InterchangeResult{true, {}};
}

bool hom_set_closed(const FiniteAlgebra& a, const FiniteAlgebra& b, std::string_view op,
                    long long budget) {
  size_t oi = b.domain().require(op);
  int k = b.domain().op(oi).arity;
  auto homs = all_homomorphisms(a, b, budget);
  long long cnt = power_count(static_cast<int>(std::max<size_t>(homs.size(), 1)), k);
  if (homs.empty() && k > 0) return true;
  std::vector<int> pick(k);
  for (long long idx = 0; idx < cnt; ++idx) {
    long long rest = idx;
    for (int i = k - 1; i >= 0; --i) {
      pick[i] = static_cast<int>(rest % homs.size());
      rest /= homs.size();
    }
    std::vector<int> img(a.size());
    std::vector<int> vals(k);
    for (int x = 0; x < a.size(); ++x) {
      for (int i = 0; i < k; ++i) vals[i] = homs[pick[i]](x);
      img[x] = b.apply(oi, vals);
    }
    if (!is_homomorphism(ElementMap(a.size(), b.size(), std::move(img)), a, b)) return false;
  }
  return true;
}

std::optional<std::pair<size_t, size_t>> search_closed_noncommutative(
    const std::vector<FiniteAlgebra>& family, std::string_view op, long long budget) {
  for (size_t i = 0; i < family.size(); ++i) {
    auto bi = family[i].domain().index_of(op);
    if (!bi) continue;
    bool tame = op_is_commutative(family[i], *bi) && op_is_associative(family[i], *bi);
    if (tame) continue;
    for (size_t j = 0; j < family.size(); ++j) {
      if (family[j].domain() != family[i].domain()) continue;
      if (hom_set_closed(family[j], family[i], op, budget)) return std::make_pair(j, i);
    }
  }
  return std::nullopt;
}

}  // namespace ualg
