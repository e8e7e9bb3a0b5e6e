#include "ualg/representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ualg {

namespace {

std::string tuple_str(std::span<const int> args) {
  std::string s = "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(args[i]);
  }
  return s + ")";
}

}  // namespace

Representation::Representation(FiniteAlgebra actor, FiniteAlgebra space,
                               std::vector<ElementMap> action,
                               std::vector<EndCombiner> combiners, Side side)
    : actor_(std::move(actor)), space_(std::move(space)), action_(std::move(action)),
      combiners_(std::move(combiners)), side_(side) {
  if (static_cast<int>(action_.size()) != actor_.size())
    fail(ErrorCode::shape, "one transform per actor element required");
  for (const auto& m : action_)
    if (m.source_size != space_.size() || m.target_size != space_.size())
      fail(ErrorCode::shape, "transform does not act on the space carrier");
  if (combiners_.size() != actor_.domain().size())
    fail(ErrorCode::shape, "one combiner per actor operator required");
  for (size_t oi = 0; oi < combiners_.size(); ++oi) {
    const auto& c = combiners_[oi];
    const auto& op = actor_.domain().op(oi);
    switch (c.kind) {
      case EndCombiner::Kind::pointwise: {
        size_t si = space_.domain().require(c.op);
        if (space_.domain().op(si).arity != op.arity)
          fail(ErrorCode::structure, "pointwise combiner arity mismatch for " + op.symbol);
        break;
      }
      case EndCombiner::Kind::composition:
        if (op.arity != 2)
          fail(ErrorCode::structure, "composition combiner needs a binary actor operator");
        break;
      case EndCombiner::Kind::commutator: {
        if (op.arity != 2)
          fail(ErrorCode::structure, "commutator combiner needs a binary actor operator");
        size_t si = space_.domain().require(c.op);
        if (!op_is_group(space_, si))
          fail(ErrorCode::structure,
               "commutator combiner needs a group operation on the space, got " + c.op);
        break;
      }
    }
  }
}

Representation trivial_representation(FiniteAlgebra space) {
  FiniteAlgebra actor(OperatorDomain{}, 1, {});
  std::vector<ElementMap> action{ElementMap::identity(space.size())};
  return Representation(std::move(actor), std::move(space), std::move(action), {});
}

namespace {

// Combined transform for an actor operator applied to argument transforms.
ElementMap combine(const Representation& rep, size_t op_index,
                   const std::vector<const ElementMap*>& args) {
  const EndCombiner& c = rep.combiners()[op_index];
  int n = rep.space().size();
  switch (c.kind) {
    case EndCombiner::Kind::pointwise: {
      size_t si = rep.space().domain().require(c.op);
      std::vector<int> img(n);
      std::vector<int> vals(args.size());
      for (int x = 0; x < n; ++x) {
        for (size_t i = 0; i < args.size(); ++i) vals[i] = (*args[i])(x);
        img[x] = rep.space().apply(si, vals);
      }
      return ElementMap(n, n, std::move(img));
    }
    case EndCombiner::Kind::composition: {
      // Left side: f(a*b) = f(a) . f(b); right side: f(a*b) = f(b) . f(a).
      if (rep.side() == Side::left) return compose(*args[0], *args[1]);
      return compose(*args[1], *args[0]);
    }
    case EndCombiner::Kind::commutator: {
      size_t si = rep.space().domain().require(c.op);
      std::vector<int> img(n);
      for (int x = 0; x < n; ++x) {
        int ab = (*args[0])((*args[1])(x));
        int ba = (*args[1])((*args[0])(x));
        img[x] = rep.space().apply2(si, ab, op_group_inverse(rep.space(), si, ba));
      }
      return ElementMap(n, n, std::move(img));
    }
  }
  fail(ErrorCode::structure, "unknown combiner");
}

}  // namespace

ValidationReport validate(const Representation& rep) {
  const FiniteAlgebra& actor = rep.actor();
  const FiniteAlgebra& space = rep.space();
  for (int a = 0; a < actor.size(); ++a)
    if (!is_homomorphism(rep.transform(a), space, space)) {
      std::ostringstream os;
      os << "transform of actor element " << a << " is not an endomorphism of the space";
      return ValidationReport{false, os.str()};
    }
  for (size_t oi = 0; oi < actor.domain().size(); ++oi) {
    int k = actor.domain().op(oi).arity;
    long long cnt = power_count(actor.size(), k);
    std::vector<int> args(k);
    std::vector<const ElementMap*> maps(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % actor.size());
        rest /= actor.size();
      }
      for (int i = 0; i < k; ++i) maps[i] = &rep.transform(args[i]);
      ElementMap want = combine(rep, oi, maps);
      const ElementMap& got = rep.transform(actor.table(oi)[idx]);
      for (int x = 0; x < space.size(); ++x)
        if (want(x) != got(x)) {
          std::ostringstream os;
          os << "operator " << actor.domain().op(oi).symbol << " at tuple " << tuple_str(args)
             << " disagrees with its combiner at space point " << x << ": " << got(x)
             << " != " << want(x);
          return ValidationReport{false, os.str()};
        }
    }
  }
  return ValidationReport{true, {}};
}

void require_valid(const Representation& rep) {
  auto r = validate(rep);
  if (!r.ok) fail(ErrorCode::precondition, "invalid representation: " + r.message);
}

RepProperties properties(const Representation& rep) {
  require_valid(rep);
  RepProperties p;
  // Effective and free both reduce to injectivity of a -> f(a) on finite data.
  std::set<std::vector<int>> distinct;
  for (const auto& m : rep.action()) distinct.insert(m.image);
  p.effective = distinct.size() == rep.action().size();
  p.free = p.effective;
  p.transitive = true;
  int n = rep.space().size();
  for (int x = 0; x < n && p.transitive; ++x)
    for (int y = 0; y < n && p.transitive; ++y) {
      bool hit = false;
      for (int a = 0; a < rep.actor().size() && !hit; ++a) hit = rep.apply(a, x) == y;
      p.transitive = hit;
    }
  p.single_transitive = p.transitive && p.free;
  return p;
}

namespace {

void require_group_actor(const Representation& rep, std::string_view product_op,
                         size_t* op_out) {
  size_t oi = rep.actor().domain().require(product_op);
  if (!is_multiplicative_omega_group(rep.actor(), oi))
    fail(ErrorCode::structure,
         "actor is not a multiplicative Omega-group under " + std::string(product_op));
  if (rep.combiners()[oi].kind != EndCombiner::Kind::composition)
    fail(ErrorCode::structure, "product operator must use the composition combiner");
  *op_out = oi;
}

}  // namespace

OrbitsResult orbits_and_stabilizers(const Representation& rep, std::string_view product_op) {
  require_valid(rep);
  size_t oi = 0;
  require_group_actor(rep, product_op, &oi);
  int n = rep.space().size();
  std::vector<int> block(n);
  std::iota(block.begin(), block.end(), 0);
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < rep.actor().size(); ++a) {
      int y = rep.apply(a, x);
      int bx = block[x], by = block[y];
      if (bx != by) {
        int lo = std::min(bx, by), hi = std::max(bx, by);
        for (int& b : block)
          if (b == hi) b = lo;
      }
    }
  EquivalenceRelation partition(std::move(block));

  std::vector<std::vector<int>> stabilizers(n);
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < rep.actor().size(); ++a)
      if (rep.apply(a, x) == x) stabilizers[x].push_back(a);
  // Each stabilizer must be a subgroup.
  for (int x = 0; x < n; ++x) {
    const auto& st = stabilizers[x];
    for (int a : st)
      for (int b : st) {
        int ab = rep.actor().apply2(oi, a, b);
        if (!std::binary_search(st.begin(), st.end(), ab))
          fail(ErrorCode::structure, "stabilizer not closed under the product");
      }
  }
  return OrbitsResult{std::move(partition), std::move(stabilizers)};
}

bool morphism_check(MorphismKind kind, const Representation& f, const Representation& g,
                    const std::optional<ElementMap>& r1, const ElementMap& r2) {
  if (kind == MorphismKind::full) {
    if (!r1) fail(ErrorCode::precondition, "full morphism requires an actor map");
    if (!is_homomorphism(*r1, f.actor(), g.actor()))
      fail(ErrorCode::precondition, "actor map is not a homomorphism");
  } else {
    if (r1) fail(ErrorCode::precondition, "reduced morphism takes no actor map");
    if (f.actor() != g.actor())
      fail(ErrorCode::precondition, "reduced morphism requires a shared actor");
  }
  if (!is_homomorphism(r2, f.space(), g.space()))
    fail(ErrorCode::precondition, "space map is not a homomorphism");

  for (int a = 0; a < f.actor().size(); ++a) {
    int ga = kind == MorphismKind::full ? (*r1)(a) : a;
    for (int m = 0; m < f.space().size(); ++m)
      if (r2(f.apply(a, m)) != g.apply(ga, r2(m))) return false;
  }
  return true;
}

std::vector<ElementMap> automorphism_group(const Representation& rep, long long budget) {
  require_valid(rep);
  int n = rep.space().size();
  auto candidates = algebra_automorphisms(rep.space(), budget);
  std::vector<ElementMap> out;
  for (auto& r2 : candidates) {
    bool ok = true;
    for (int a = 0; a < rep.actor().size() && ok; ++a)
      for (int m = 0; m < n && ok; ++m)
        ok = r2(rep.apply(a, m)) == rep.apply(a, r2(m));
    if (ok) out.push_back(std::move(r2));
  }
  std::sort(out.begin(), out.end());
  // Group closure sanity (composition, inverse, identity).
  auto member = [&](const ElementMap& m) {
    return std::binary_search(out.begin(), out.end(), m);
  };
  if (!member(ElementMap::identity(n)))
    fail(ErrorCode::structure, "automorphism set lacks the identity");
  for (const auto& r : out) {
    if (!member(inverse(r))) fail(ErrorCode::structure, "automorphism set not inverse-closed");
    for (const auto& s : out)
      if (!member(compose(r, s)))
        fail(ErrorCode::structure, "automorphism set not composition-closed");
  }
  return out;
}

EffectivizeResult effectivize(const Representation& rep, std::string_view product_op) {
  require_valid(rep);
  size_t oi = 0;
  require_group_actor(rep, product_op, &oi);

  int e = op_neutral(rep.actor(), oi);
  std::vector<int> kernel;
  for (int a = 0; a < rep.actor().size(); ++a)
    if (rep.transform(a) == ElementMap::identity(rep.space().size())) kernel.push_back(a);
  (void)e;

  // a ~ b iff f(a) = f(b); a congruence because every actor operation maps
  // through the combiners.
  std::vector<int> block(rep.actor().size());
  {
    std::map<std::vector<int>, int> first;
    for (int a = 0; a < rep.actor().size(); ++a) {
      auto [it, fresh] = first.emplace(rep.transform(a).image, a);
      block[a] = it->second;
    }
  }
  EquivalenceRelation cong(std::move(block));
  FiniteAlgebra new_actor = quotient_algebra(rep.actor(), cong);
  auto ids = cong.block_ids();
  std::vector<ElementMap> action;
  for (int b = 0; b < new_actor.size(); ++b) action.push_back(rep.transform(ids[b]));

  std::vector<int> proj(rep.actor().size());
  for (int a = 0; a < rep.actor().size(); ++a) proj[a] = cong.block_index(a);
  ElementMap p(rep.actor().size(), new_actor.size(), std::move(proj));

  Representation out(std::move(new_actor), rep.space(), std::move(action), rep.combiners(),
                     rep.side());
  require_valid(out);
  return EffectivizeResult{std::move(kernel), std::move(out), std::move(p)};
}

QuotientRepResult quotient_representation(const Representation& rep,
                                          const EquivalenceRelation& n) {
  require_valid(rep);
  if (!is_congruence(n, rep.space()))
    fail(ErrorCode::precondition, "relation is not a congruence on the space");
  for (int a = 0; a < rep.actor().size(); ++a)
    for (int x = 0; x < rep.space().size(); ++x)
      for (int y = x + 1; y < rep.space().size(); ++y)
        if (n.same_block(x, y) && !n.same_block(rep.apply(a, x), rep.apply(a, y))) {
          std::ostringstream os;
          os << "transform of actor element " << a << " is not coordinated with the congruence"
             << " at points " << x << ", " << y;
          fail(ErrorCode::precondition, os.str());
        }

  FiniteAlgebra qspace = quotient_algebra(rep.space(), n);
  auto ids = n.block_ids();
  std::vector<ElementMap> action;
  for (int a = 0; a < rep.actor().size(); ++a) {
    std::vector<int> img(qspace.size());
    for (int b = 0; b < qspace.size(); ++b) img[b] = n.block_index(rep.apply(a, ids[b]));
    action.emplace_back(qspace.size(), qspace.size(), std::move(img));
  }
  std::vector<int> nat_img(rep.space().size());
  for (int x = 0; x < rep.space().size(); ++x) nat_img[x] = n.block_index(x);
  ElementMap nat(rep.space().size(), qspace.size(), std::move(nat_img));

  Representation out(rep.actor(), std::move(qspace), std::move(action), rep.combiners(),
                     rep.side());
  require_valid(out);
  return QuotientRepResult{std::move(out), std::move(nat)};
}

FiniteAlgebra induce_structure(const Representation& rep, int base) {
  auto props = properties(rep);
  if (!props.single_transitive)
    fail(ErrorCode::structure, "induced structure needs a single transitive representation");
  if (base < 0 || base >= rep.space().size()) fail(ErrorCode::index, "base out of carrier");

  int n = rep.space().size();
  // coordinate(b) = the unique actor element sending base to b.
  std::vector<int> coord(n, -1);
  for (int a = 0; a < rep.actor().size(); ++a) {
    int b = rep.apply(a, base);
    if (coord[b] != -1) fail(ErrorCode::structure, "representation is not free");
    coord[b] = a;
  }
  const auto& dom = rep.actor().domain();
  std::vector<std::vector<int>> tables(dom.size());
  for (size_t oi = 0; oi < dom.size(); ++oi) {
    int k = dom.op(oi).arity;
    long long cnt = power_count(n, k);
    tables[oi].resize(cnt);
    std::vector<int> args(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = coord[static_cast<int>(rest % n)];
        rest /= n;
      }
      tables[oi][idx] = rep.apply(rep.actor().apply(oi, args), base);
    }
  }
  return FiniteAlgebra(dom, n, std::move(tables));
}

std::optional<std::vector<int>> induce_sum(const Representation& rep, std::string_view add_op) {
  auto props = properties(rep);
  if (!props.effective) fail(ErrorCode::structure, "induced sum needs an effective representation");
  size_t si = rep.space().domain().require(add_op);
  if (!op_is_commutative(rep.space(), si) || !op_is_associative(rep.space(), si))
    fail(ErrorCode::structure, "space operation is not commutative-associative");

  int na = rep.actor().size();
  std::map<std::vector<int>, int> by_table;
  for (int a = 0; a < na; ++a) by_table[rep.transform(a).image] = a;

  std::vector<int> table(static_cast<size_t>(na) * na);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      std::vector<int> img(rep.space().size());
      for (int m = 0; m < rep.space().size(); ++m)
        img[m] = rep.space().apply2(si, rep.apply(a, m), rep.apply(b, m));
      auto it = by_table.find(img);
      if (it == by_table.end()) return std::nullopt;
      table[static_cast<size_t>(a) * na + b] = it->second;
    }
  return table;
}

namespace {

// Space copy with the product operator removed: shift transforms are
// endomorphisms with respect to the remaining operations only.
FiniteAlgebra strip_operator(const FiniteAlgebra& a, size_t drop) {
  std::vector<Operator> ops;
  std::vector<std::vector<int>> tables;
  for (size_t oi = 0; oi < a.domain().size(); ++oi) {
    if (oi == drop) continue;
    ops.push_back(a.domain().op(oi));
    tables.push_back(a.table(oi));
  }
  return FiniteAlgebra(OperatorDomain(std::move(ops)), a.size(), std::move(tables));
}

}  // namespace

ShiftPair shifts(const FiniteAlgebra& g, std::string_view product_op) {
  size_t oi = g.domain().require(product_op);
  if (!is_multiplicative_omega_group(g, oi))
    fail(ErrorCode::structure,
         "shifts need a multiplicative Omega-group under " + std::string(product_op));
  FiniteAlgebra space = strip_operator(g, oi);
  std::vector<EndCombiner> combiners;
  for (size_t ai = 0; ai < g.domain().size(); ++ai) {
    if (ai == oi)
      combiners.push_back(EndCombiner::composition());
    else
      combiners.push_back(EndCombiner::pointwise(g.domain().op(ai).symbol));
  }
  int n = g.size();
  std::vector<ElementMap> left, right;
  for (int b = 0; b < n; ++b) {
    std::vector<int> l(n), r(n);
    for (int a = 0; a < n; ++a) {
      l[a] = g.apply2(oi, b, a);
      r[a] = g.apply2(oi, a, b);
    }
    left.emplace_back(n, n, std::move(l));
    right.emplace_back(n, n, std::move(r));
  }
  Representation lrep(g, space, std::move(left), combiners, Side::left);
  Representation rrep(g, space, std::move(right), std::move(combiners), Side::right);
  require_valid(lrep);
  require_valid(rrep);
  return ShiftPair{std::move(lrep), std::move(rrep)};
}

Representation twin(const Representation& left_rep, std::string_view product_op) {
  auto props = properties(left_rep);
  if (!props.single_transitive)
    fail(ErrorCode::structure, "twin needs a single transitive representation");
  if (left_rep.side() != Side::left)
    fail(ErrorCode::structure, "twin input must be a left-side representation");
  size_t oi = 0;
  require_group_actor(left_rep, product_op, &oi);

  int n = left_rep.space().size();
  constexpr int kBase = 0;
  std::vector<int> coord(n, -1);
  for (int a = 0; a < left_rep.actor().size(); ++a) coord[left_rep.apply(a, kBase)] = a;

  std::vector<ElementMap> action;
  for (int a = 0; a < left_rep.actor().size(); ++a) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x)
      img[x] = left_rep.apply(left_rep.actor().apply2(oi, coord[x], a), kBase);
    action.emplace_back(n, n, std::move(img));
  }
  Representation out(left_rep.actor(), left_rep.space(), std::move(action),
                     left_rep.combiners(), Side::right);
  require_valid(out);
  return out;
}

}  // namespace ualg
