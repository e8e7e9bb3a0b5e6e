#include "ualg/polymorphism.hpp"

namespace ualg {

bool reduced_polymorphism_check(const std::vector<Representation>& factors,
                                const Representation& target, const std::vector<int>& r2) {
  if (factors.empty()) fail(ErrorCode::shape, "need at least one factor");
  for (const auto& f : factors)
    if (f.actor() != target.actor())
      fail(ErrorCode::precondition, "all representations must share the actor");

  std::vector<int> radices;
  for (const auto& f : factors) radices.push_back(f.space().size());
  long long total = mixed_radix_count(radices);
  if (static_cast<long long>(r2.size()) != total)
    fail(ErrorCode::shape, "map must cover the full product carrier");
  for (int v : r2)
    if (v < 0 || v >= target.space().size())
      fail(ErrorCode::shape, "map value out of target carrier");

  size_t n = factors.size();
  for (size_t slot = 0; slot < n; ++slot) {
    int m = radices[slot];
    // Enumerate the fixed values of the other slots.
    std::vector<int> other_radices;
    for (size_t i = 0; i < n; ++i)
      if (i != slot) other_radices.push_back(radices[i]);
    long long others = mixed_radix_count(other_radices);
    for (long long oidx = 0; oidx < others; ++oidx) {
      auto fixed = mixed_radix_tuple(oidx, other_radices);
      std::vector<int> tuple(n);
      for (size_t i = 0, j = 0; i < n; ++i)
        if (i != slot) tuple[i] = fixed[j++];
      // The slice as a unary map.
      std::vector<int> slice(m);
      for (int x = 0; x < m; ++x) {
        tuple[slot] = x;
        slice[x] = r2[mixed_radix_index(tuple, radices)];
      }
      ElementMap sm(m, target.space().size(), slice);
      if (!is_homomorphism(sm, factors[slot].space(), target.space())) return false;
      for (int a = 0; a < target.actor().size(); ++a)
        for (int x = 0; x < m; ++x)
          if (sm(factors[slot].apply(a, x)) != target.apply(a, sm(x))) return false;
    }
  }

  // Slot-swap identity: moving one action between slots does not change the
  // value.
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      for (long long idx = 0; idx < total; ++idx) {
        auto tuple = mixed_radix_tuple(idx, radices);
        for (int a = 0; a < target.actor().size(); ++a) {
          auto t1 = tuple;
          t1[k] = factors[k].apply(a, tuple[k]);
          auto t2 = tuple;
          t2[l] = factors[l].apply(a, tuple[l]);
          if (r2[mixed_radix_index(t1, radices)] != r2[mixed_radix_index(t2, radices)])
            fail(ErrorCode::structure, "slot-swap identity fails for a passing polymorphism");
        }
      }
    }
  return true;
}

}  // namespace ualg
