#include "ualg/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ualg {

std::string to_string(const OmegaWord& w) {
  switch (w.kind) {
    case OmegaWord::Kind::gen:
      return "Gen(" + std::to_string(w.index) + ")";
    case OmegaWord::Kind::act:
      return "Act(" + std::to_string(w.index) + ", " + to_string(w.children[0]) + ")";
    case OmegaWord::Kind::op: {
      std::string s = "Op(" + w.op + ", [";
      for (size_t i = 0; i < w.children.size(); ++i) {
        if (i) s += ", ";
        s += to_string(w.children[i]);
      }
      return s + "])";
    }
  }
  return {};
}

int eval_word(const Representation& rep, std::span<const int> gens, const OmegaWord& w) {
  switch (w.kind) {
    case OmegaWord::Kind::gen:
      if (w.index < 0 || w.index >= static_cast<int>(gens.size()))
        fail(ErrorCode::index, "generator index out of bounds");
      return gens[w.index];
    case OmegaWord::Kind::act: {
      if (w.children.size() != 1) fail(ErrorCode::shape, "action node needs one child");
      if (w.index < 0 || w.index >= rep.actor().size())
        fail(ErrorCode::index, "actor element out of bounds");
      return rep.apply(w.index, eval_word(rep, gens, w.children[0]));
    }
    case OmegaWord::Kind::op: {
      size_t oi = rep.space().domain().require(w.op);
      int k = rep.space().domain().op(oi).arity;
      if (static_cast<int>(w.children.size()) != k)
        fail(ErrorCode::shape, "operation node arity mismatch for " + w.op);
      std::vector<int> vals(k);
      for (int i = 0; i < k; ++i) vals[i] = eval_word(rep, gens, w.children[i]);
      return rep.space().apply(oi, vals);
    }
  }
  fail(ErrorCode::shape, "malformed word");
}

ClosureResult closure(const Representation& rep, std::span<const int> gens) {
  int n = rep.space().size();
  ClosureResult out;
  std::vector<char> in(n, 0);
  for (size_t i = 0; i < gens.size(); ++i) {
    int v = gens[i];
    if (v < 0 || v >= n) fail(ErrorCode::index, "generator out of carrier");
    if (!in[v]) {
      in[v] = 1;
      out.witness.emplace(v, OmegaWord::gen(static_cast<int>(i)));
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> current;
    for (int v = 0; v < n; ++v)
      if (in[v]) current.push_back(v);
    int m = static_cast<int>(current.size());
    std::vector<std::pair<int, OmegaWord>> found;

    for (size_t oi = 0; oi < rep.space().domain().size(); ++oi) {
      int k = rep.space().domain().op(oi).arity;
      if (k > 0 && m == 0) continue;
      long long cnt = power_count(std::max(m, 1), k);
      std::vector<int> args(k);
      for (long long idx = 0; idx < cnt; ++idx) {
        long long rest = idx;
        for (int i = k - 1; i >= 0; --i) {
          args[i] = current[rest % std::max(m, 1)];
          rest /= std::max(m, 1);
        }
        int r = rep.space().apply(oi, args);
        if (in[r]) continue;
        bool already = false;
        for (auto& [v, w] : found) already = already || v == r;
        if (already) continue;
        std::vector<OmegaWord> kids;
        for (int v : args) kids.push_back(out.witness.at(v));
        found.emplace_back(r, OmegaWord::make_op(rep.space().domain().op(oi).symbol,
                                                 std::move(kids)));
      }
    }
    for (int a = 0; a < rep.actor().size(); ++a)
      for (int v : current) {
        int r = rep.apply(a, v);
        if (in[r]) continue;
        bool already = false;
        for (auto& [u, w] : found) already = already || u == r;
        if (already) continue;
        found.emplace_back(r, OmegaWord::act(a, out.witness.at(v)));
      }

    for (auto& [v, w] : found) {
      in[v] = 1;
      out.witness.emplace(v, std::move(w));
      changed = true;
    }
  }

  for (int v = 0; v < n; ++v)
    if (in[v]) out.members.push_back(v);
  return out;
}

bool is_generating(const Representation& rep, std::span<const int> gens) {
  return static_cast<int>(closure(rep, gens).members.size()) == rep.space().size();
}

std::vector<int> quasibasis(const Representation& rep, std::vector<int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!is_generating(rep, gens))
    fail(ErrorCode::precondition, "seed set does not generate the representation");
  for (int i = static_cast<int>(gens.size()) - 1; i >= 0; --i) {
    std::vector<int> trial;
    for (int j = 0; j < static_cast<int>(gens.size()); ++j)
      if (j != i) trial.push_back(gens[j]);
    if (is_generating(rep, trial)) gens.erase(gens.begin() + i);
  }
  return gens;
}

OmegaWord substitute(const OmegaWord& w, std::span<const OmegaWord> assignment) {
  switch (w.kind) {
    case OmegaWord::Kind::gen:
      if (w.index < 0 || w.index >= static_cast<int>(assignment.size()))
        fail(ErrorCode::index, "no assignment for generator " + std::to_string(w.index));
      return assignment[w.index];
    case OmegaWord::Kind::act:
      return OmegaWord::act(w.index, substitute(w.children[0], assignment));
    case OmegaWord::Kind::op: {
      std::vector<OmegaWord> kids;
      for (const auto& c : w.children) kids.push_back(substitute(c, assignment));
      return OmegaWord::make_op(w.op, std::move(kids));
    }
  }
  fail(ErrorCode::shape, "malformed word");
}

ElementMap extend_map(const Representation& f, const Representation& g,
                      std::span<const int> gens, std::span<const int> images) {
  if (f.actor() != g.actor())
    fail(ErrorCode::precondition, "extension requires a shared actor");
  if (gens.size() != images.size())
    fail(ErrorCode::shape, "one image per generator required");
  for (int v : images)
    if (v < 0 || v >= g.space().size()) fail(ErrorCode::index, "image out of target carrier");

  ClosureResult cl = closure(f, gens);
  if (static_cast<int>(cl.members.size()) != f.space().size())
    fail(ErrorCode::precondition, "set does not generate the source representation");

  std::vector<int> img(f.space().size());
  for (int m = 0; m < f.space().size(); ++m) img[m] = eval_word(g, images, cl.witness.at(m));
  ElementMap r(f.space().size(), g.space().size(), std::move(img));

  // Semantic well-definedness check over the whole finite carrier; a failure
  // pinpoints a relation among the generators that the images violate.
  for (size_t oi = 0; oi < f.space().domain().size(); ++oi) {
    int k = f.space().domain().op(oi).arity;
    long long cnt = power_count(f.space().size(), k);
    std::vector<int> args(k);
    for (long long idx = 0; idx < cnt; ++idx) {
      long long rest = idx;
      for (int i = k - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % f.space().size());
        rest /= f.space().size();
      }
      int m = f.space().table(oi)[idx];
      std::vector<int> mapped(k);
      for (int i = 0; i < k; ++i) mapped[i] = r(args[i]);
      int got = g.space().apply(oi, mapped);
      if (r(m) != got) {
        std::vector<OmegaWord> kids;
        for (int v : args) kids.push_back(cl.witness.at(v));
        OmegaWord lhs = OmegaWord::make_op(f.space().domain().op(oi).symbol, std::move(kids));
        std::ostringstream os;
        os << "extension of relation " << to_string(cl.witness.at(m)) << " = "
           << to_string(lhs) << " yields " << r(m) << " != " << got;
        fail(ErrorCode::structure, os.str());
      }
    }
  }
  for (int a = 0; a < f.actor().size(); ++a)
    for (int m = 0; m < f.space().size(); ++m) {
      int fm = f.apply(a, m);
      int got = g.apply(a, r(m));
      if (r(fm) != got) {
        OmegaWord lhs = OmegaWord::act(a, cl.witness.at(m));
        std::ostringstream os;
        os << "extension of relation " << to_string(cl.witness.at(fm)) << " = "
           << to_string(lhs) << " yields " << r(fm) << " != " << got;
        fail(ErrorCode::structure, os.str());
      }
    }
  return r;
}

bool regular_on(const Representation& rep, std::span<const int> gens, const ElementMap& endo) {
  if (!morphism_check(MorphismKind::reduced, rep, rep, std::nullopt, endo))
    fail(ErrorCode::precondition, "map is not an endomorphism of the representation");
  std::vector<int> image;
  for (int v : gens) image.push_back(endo(v));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return is_generating(rep, image);
}

std::vector<std::vector<int>> basis_orbit(const Representation& rep,
                                          std::span<const int> basis, long long budget) {
  std::vector<int> b(basis.begin(), basis.end());
  std::sort(b.begin(), b.end());
  auto qb = quasibasis(rep, b);
  if (qb != b) fail(ErrorCode::precondition, "input set is not a quasibasis");

  std::set<std::vector<int>> orbit;
  for (const auto& r : automorphism_group(rep, budget)) {
    std::vector<int> image;
    for (int v : b) image.push_back(r(v));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto check = quasibasis(rep, image);
    if (check != image)
      fail(ErrorCode::structure, "automorphism image of a quasibasis is not minimal");
    orbit.insert(std::move(image));
  }
  return {orbit.begin(), orbit.end()};
}

}  // namespace ualg
