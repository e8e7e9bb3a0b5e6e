#include "ualg/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "ualg/polymorphism.hpp"
#include "ualg/zoo.hpp"

namespace ualg {

namespace {

long long checked_mul(long long a, long long b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > INT64_MAX / 4 || p < INT64_MIN / 4)
    fail(ErrorCode::resource, "integer elimination overflow");
  return static_cast<long long>(p);
}

// row -= q * other
void row_submul(std::vector<long long>& row, const std::vector<long long>& other, long long q) {
  if (q == 0) return;
  for (size_t i = 0; i < row.size(); ++i)
    if (other[i] != 0) row[i] -= checked_mul(q, other[i]);
}

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

struct ExtGcd {
  long long g, x, y;
};
ExtGcd extgcd(long long a, long long b) {
  if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1LL : 1LL, 0};
  ExtGcd e = extgcd(b, a % b);
  return {e.g, e.y, e.x - (a / b) * e.y};
}

// Row-echelon integer basis with one pivot row per column (full column rank
// once the torsion relations have arrived). Spanned lattice is preserved by
// every step.
class EchelonLattice {
public:
  explicit EchelonLattice(int cols) : cols_(cols), rows_(cols) {}

  void add(std::vector<long long> row) {
    for (int c = 0; c < cols_; ++c) {
      if (row[c] == 0) continue;
      if (rows_[c].empty()) {
        if (row[c] < 0)
          for (auto& v : row) v = -v;
        rows_[c] = std::move(row);
        return;
      }
      long long a = rows_[c][c], b = row[c];
      if (b % a == 0) {
        row_submul(row, rows_[c], b / a);
        continue;
      }
      ExtGcd e = extgcd(a, b);
      std::vector<long long> pivot(cols_, 0);
      for (int i = c; i < cols_; ++i)
        pivot[i] = checked_mul(e.x, rows_[c][i]) + checked_mul(e.y, row[i]);
      std::vector<long long> rest(cols_, 0);
      for (int i = c; i < cols_; ++i)
        rest[i] = checked_mul(a / e.g, row[i]) - checked_mul(b / e.g, rows_[c][i]);
      rows_[c] = std::move(pivot);
      row = std::move(rest);
    }
  }

  bool full_rank() const {
    for (const auto& r : rows_)
      if (r.empty()) return false;
    return true;
  }

  long long pivot(int c) const { return rows_[c][c]; }

  // Canonical coset representative: entries reduced left to right mod pivots.
  std::vector<long long> canonicalize(std::vector<long long> z) const {
    for (int c = 0; c < cols_; ++c) {
      if (z[c] == 0) continue;
      row_submul(z, rows_[c], floordiv(z[c], rows_[c][c]));
    }
    return z;
  }

  // Dense square matrix of the basis rows, for invariant factors.
  std::vector<std::vector<long long>> matrix() const { return rows_; }

private:
  int cols_;
  std::vector<std::vector<long long>> rows_;
};

// Classic Smith reduction (diagonal only, no transform tracking).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
  size_t rows = m.size();
  if (rows == 0) return {};
  size_t cols = m[0].size();
  std::vector<long long> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot of least magnitude.
    size_t pi = t, pj = t;
    long long best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        long long q = floordiv(m[i][t], m[t][t]);
        for (size_t j = t; j < cols; ++j) m[i][j] -= checked_mul(q, m[t][j]);
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        long long q = floordiv(m[t][j], m[t][t]);
        for (size_t i = t; i < rows; ++i) m[i][j] -= checked_mul(q, m[i][t]);
        if (m[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }
    if (m[t][t] < 0) {
      for (size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
    }
    // Enforce divisibility of the remaining block.
    bool restart = false;
    for (size_t i = t + 1; i < rows && !restart; ++i)
      for (size_t j = t + 1; j < cols && !restart; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
          restart = true;
        }
    if (restart) continue;
    diag.push_back(m[t][t]);
    ++t;
  }
  return diag;
}

std::vector<long long> factors_from_diagonal(std::vector<long long> diag) {
  std::vector<long long> out;
  for (long long d : diag)
    if (d > 1) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<long long> presentation_invariant_factors(const AbelianPresentation& p) {
  if (p.generator_count <= 0) return {};
  EchelonLattice lat(p.generator_count);
  for (auto row : p.relations) {
    if (static_cast<int>(row.size()) != p.generator_count)
      fail(ErrorCode::shape, "relation row length mismatch");
    lat.add(std::move(row));
  }
  if (!lat.full_rank()) fail(ErrorCode::structure, "presentation has infinite quotient");
  return factors_from_diagonal(smith_diagonal(lat.matrix()));
}

int integer_multiple(const FiniteAlgebra& group, size_t add_index, int k, int x) {
  int zero = op_neutral(group, add_index);
  if (zero < 0) fail(ErrorCode::structure, "operation has no neutral element");
  int acc = zero;
  for (int i = 0; i < k; ++i) acc = group.apply2(add_index, acc, x);
  return acc;
}

long long group_exponent(const FiniteAlgebra& group, size_t add_index) {
  long long e = 1;
  for (int x = 0; x < group.size(); ++x) {
    int zero = op_neutral(group, add_index);
    int acc = group.apply2(add_index, zero, x);
    long long order = 1;
    while (acc != zero) {
      acc = group.apply2(add_index, acc, x);
      ++order;
    }
    e = std::lcm(e, order);
  }
  return e;
}

TensorProduct tensor_abelian(const std::vector<FiniteAlgebra>& factors, long long budget) {
  if (factors.size() < 2) fail(ErrorCode::shape, "tensor product needs at least two factors");
  std::vector<size_t> add(factors.size());
  std::vector<int> radices;
  for (size_t i = 0; i < factors.size(); ++i) {
    add[i] = factors[i].domain().require("+");
    if (!op_is_group(factors[i], add[i]) || !op_is_commutative(factors[i], add[i]))
      fail(ErrorCode::structure, "tensor factor is not an abelian group under +");
    radices.push_back(factors[i].size());
  }
  long long g = mixed_radix_count(radices);
  if (g > budget) fail(ErrorCode::resource, "tensor presentation exceeds budget");
  long long exponent = 1;
  for (size_t i = 0; i < factors.size(); ++i)
    exponent = std::lcm(exponent, group_exponent(factors[i], add[i]));

  EchelonLattice lat(static_cast<int>(g));
  std::vector<long long> row(g, 0);
  auto emit3 = [&](long long target, long long left, long long right) {
    std::fill(row.begin(), row.end(), 0);
    row[target] += 1;
    row[left] -= 1;
    row[right] -= 1;
    lat.add(row);
  };
  auto emit_balance = [&](long long image, long long source, long long k) {
    std::fill(row.begin(), row.end(), 0);
    row[image] += 1;
    row[source] -= k;
    lat.add(row);
  };

  size_t n = factors.size();
  for (size_t slot = 0; slot < n; ++slot) {
    for (long long idx = 0; idx < g; ++idx) {
      auto tuple = mixed_radix_tuple(idx, radices);
      int b = tuple[slot];
      // Slot additivity: (.., b + b', ..) = (.., b, ..) + (.., b', ..).
      for (int b2 = 0; b2 < radices[slot]; ++b2) {
        auto t_sum = tuple;
        t_sum[slot] = factors[slot].apply2(add[slot], b, b2);
        auto t_right = tuple;
        t_right[slot] = b2;
        emit3(mixed_radix_index(t_sum, radices), idx, mixed_radix_index(t_right, radices));
      }
      // Integer-action balancing: (.., k*b, ..) = k * (.., b, ..).
      for (long long k = 0; k < exponent; ++k) {
        auto t_mul = tuple;
        t_mul[slot] = integer_multiple(factors[slot], add[slot], static_cast<int>(k), b);
        emit_balance(mixed_radix_index(t_mul, radices), idx, k);
      }
    }
  }
  if (!lat.full_rank()) fail(ErrorCode::structure, "tensor presentation has infinite quotient");

  // Enumerate the quotient as canonical residue vectors.
  std::vector<int> live_cols;
  std::vector<int> live_radix;
  long long qsize = 1;
  for (int c = 0; c < static_cast<int>(g); ++c)
    if (lat.pivot(c) > 1) {
      live_cols.push_back(c);
      live_radix.push_back(static_cast<int>(lat.pivot(c)));
      qsize *= lat.pivot(c);
      if (qsize > budget) fail(ErrorCode::resource, "tensor quotient exceeds budget");
    }

  auto residue_of = [&](std::vector<long long> z) {
    z = lat.canonicalize(std::move(z));
    std::vector<int> r(live_cols.size());
    for (size_t i = 0; i < live_cols.size(); ++i) r[i] = static_cast<int>(z[live_cols[i]]);
    return r;
  };
  auto residue_index = [&](const std::vector<int>& r) {
    return static_cast<int>(mixed_radix_index(r, live_radix));
  };

  int qn = static_cast<int>(qsize);
  // Addition table via representative vectors.
  std::vector<std::vector<long long>> rep_vec(qn, std::vector<long long>(g, 0));
  for (int q = 0; q < qn; ++q) {
    auto digits = mixed_radix_tuple(q, live_radix);
    for (size_t i = 0; i < live_cols.size(); ++i) rep_vec[q][live_cols[i]] = digits[i];
  }
  std::vector<int> table(static_cast<size_t>(qn) * qn);
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y) {
      std::vector<long long> z = rep_vec[x];
      for (int c = 0; c < static_cast<int>(g); ++c) z[c] += rep_vec[y][c];
      table[static_cast<size_t>(x) * qn + y] = residue_index(residue_of(std::move(z)));
    }
  FiniteAlgebra group(OperatorDomain({{"+", 2}}), qn, {std::move(table)});

  std::vector<int> canonical(g);
  for (long long idx = 0; idx < g; ++idx) {
    std::vector<long long> z(g, 0);
    z[idx] = 1;
    canonical[idx] = residue_index(residue_of(std::move(z)));
  }

  TensorProduct out;
  out.factors = factors;
  out.group = std::move(group);
  out.canonical = std::move(canonical);
  out.invariant_factors = factors_from_diagonal(smith_diagonal(lat.matrix()));
  out.actor_modulus = exponent;
  return out;
}

ElementMap verify_universal(const TensorProduct& t, const std::vector<int>& g,
                            const FiniteAlgebra& target, long long budget) {
  std::vector<int> radices;
  std::vector<size_t> add(t.factors.size());
  for (size_t i = 0; i < t.factors.size(); ++i) {
    add[i] = t.factors[i].domain().require("+");
    radices.push_back(t.factors[i].size());
  }
  long long total = mixed_radix_count(radices);
  if (static_cast<long long>(g.size()) != total)
    fail(ErrorCode::shape, "polymorphism must cover the full product carrier");
  size_t target_add = target.domain().require("+");
  if (!op_is_group(target, target_add) || !op_is_commutative(target, target_add))
    fail(ErrorCode::structure, "target is not an abelian group under +");

  // Reduced polymorphism precondition under the shared integer actor.
  int e = static_cast<int>(t.actor_modulus);
  std::vector<Representation> freps;
  for (const auto& f : t.factors) freps.push_back(integer_action(f, e));
  Representation vrep = integer_action(target, e);
  if (!reduced_polymorphism_check(freps, vrep, g))
    fail(ErrorCode::precondition, "map is not a reduced polymorphism");

  // The canonical image generates T; solve for h by spanning.
  size_t tadd = t.group.domain().require("+");
  int tz = op_neutral(t.group, tadd);
  int vz = op_neutral(target, target_add);
  std::vector<int> h(t.group.size(), -1);
  h[tz] = vz;
  bool grew = true;
  while (grew) {
    grew = false;
    for (long long idx = 0; idx < total; ++idx) {
      for (int x = 0; x < t.group.size(); ++x) {
        if (h[x] < 0) continue;
        int y = t.group.apply2(tadd, x, t.canonical[idx]);
        int hy = target.apply2(target_add, h[x], g[idx]);
        if (h[y] < 0) {
          h[y] = hy;
          grew = true;
        } else if (h[y] != hy) {
          fail(ErrorCode::structure, "no factoring homomorphism exists (construction bug)");
        }
      }
    }
  }
  for (int x = 0; x < t.group.size(); ++x)
    if (h[x] < 0)
      fail(ErrorCode::structure, "canonical image does not generate the tensor group");

  ElementMap hm(t.group.size(), target.size(), h);
  if (!is_homomorphism(hm, t.group, target))
    fail(ErrorCode::structure, "factoring map is not a homomorphism (construction bug)");
  for (long long idx = 0; idx < total; ++idx)
    if (hm(t.canonical[idx]) != g[idx])
      fail(ErrorCode::structure, "factoring map does not match the polymorphism");

  if (t.group.size() <= 16) {
    int count = 0;
    for (const auto& cand : all_homomorphisms(t.group, target, budget)) {
      bool matches = true;
      for (long long idx = 0; idx < total && matches; ++idx)
        matches = cand(t.canonical[idx]) == g[idx];
      if (matches) ++count;
    }
    if (count != 1)
      fail(ErrorCode::structure, "factoring homomorphism is not unique");
  }
  return hm;
}

TensorLawReport check_tensor_laws(const TensorProduct& t, long long budget) {
  TensorLawReport report;
  std::vector<int> radices;
  std::vector<size_t> add(t.factors.size());
  for (size_t i = 0; i < t.factors.size(); ++i) {
    add[i] = t.factors[i].domain().require("+");
    radices.push_back(t.factors[i].size());
  }
  long long total = mixed_radix_count(radices);
  if (total > budget) fail(ErrorCode::resource, "tensor law check exceeds budget");
  size_t tadd = t.group.domain().require("+");

  report.additivity = true;
  report.balancing = true;
  for (long long idx = 0; idx < total; ++idx) {
    auto tuple = mixed_radix_tuple(idx, radices);
    for (size_t slot = 0; slot < t.factors.size(); ++slot) {
      for (int b2 = 0; b2 < radices[slot] && report.additivity; ++b2) {
        auto t_sum = tuple;
        t_sum[slot] = t.factors[slot].apply2(add[slot], tuple[slot], b2);
        auto t_right = tuple;
        t_right[slot] = b2;
        int lhs = t.canonical[mixed_radix_index(t_sum, radices)];
        int rhs = t.group.apply2(tadd, t.canonical[idx],
                                 t.canonical[mixed_radix_index(t_right, radices)]);
        report.additivity = lhs == rhs;
      }
      for (int k = 0; k < t.actor_modulus && report.balancing; ++k) {
        auto t_mul = tuple;
        t_mul[slot] = integer_multiple(t.factors[slot], add[slot], k, tuple[slot]);
        int lhs = t.canonical[mixed_radix_index(t_mul, radices)];
        int rhs = integer_multiple(t.group, tadd, k, t.canonical[idx]);
        report.balancing = lhs == rhs;
      }
    }
  }
  report.lines.push_back(std::string("slot additivity: ") + (report.additivity ? "ok" : "FAIL"));
  report.lines.push_back(std::string("integer balancing: ") + (report.balancing ? "ok" : "FAIL"));

  if (t.factors.size() >= 3) {
    report.associativity_checked = true;
    // Left-nested fold against the flat product.
    TensorProduct nested = tensor_abelian({t.factors[0], t.factors[1]}, budget);
    for (size_t i = 2; i < t.factors.size(); ++i)
      nested = tensor_abelian({nested.group, t.factors[i]}, budget);
    report.associativity = find_isomorphism(nested.group, t.group).has_value();
    report.lines.push_back(std::string("associativity: ") +
                           (report.associativity ? "ok" : "FAIL"));
  }
  return report;
}

}  // namespace ualg
