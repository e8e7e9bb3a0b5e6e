#include "ualg/document.hpp"

#include <fstream>
#include <sstream>

#include "ualg/algebra_ops.hpp"

namespace ualg {

const NamedAlgebra* Document::find_algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return &a;
  return nullptr;
}

const Representation* Document::find_rep(const std::string& name) const {
  for (const auto& [n, r] : reps)
    if (n == name) return &r;
  return nullptr;
}

const Diagram* Document::find_diagram(const std::string& name) const {
  for (const auto& [n, d] : diagrams)
    if (n == name) return &d;
  return nullptr;
}

bool Document::has_name(const std::string& name) const {
  return find_algebra(name) || find_rep(name) || find_diagram(name) ||
         std::any_of(sets.begin(), sets.end(), [&](const auto& p) { return p.first == name; });
}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const Line& line, const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(line.number, "expected an integer, got '" + tok + "'");
  }
}

struct Parser {
  const std::vector<Line>& lines;
  size_t pos = 0;
  Document doc;

  const Line& peek() const { return lines[pos]; }
  bool done() const { return pos >= lines.size(); }

  void expect_name_free(const Line& line, const std::string& name) {
    if (doc.has_name(name)) parse_fail(line.number, "duplicate object name " + name);
  }

  void expect_block_open(const Line& line) {
    if (line.tokens.size() != 3 || line.tokens[2] != "{")
      parse_fail(line.number, "expected '" + line.tokens[0] + " NAME {'");
  }

  bool block_end(const Line& line) const {
    return line.tokens.size() == 1 && line.tokens[0] == "}";
  }

  void parse_algebra() {
    const Line& head = peek();
    expect_block_open(head);
    std::string name = head.tokens[1];
    expect_name_free(head, name);
    ++pos;

    std::vector<Operator> ops;
    int size = -1;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::vector<int>>> tables;
    int head_line = head.number;
    while (!done() && !block_end(peek())) {
      const Line& l = peek();
      const auto& t = l.tokens;
      if (t[0] == "op" && t.size() == 3) {
        ops.push_back({t[1], parse_int(l, t[2])});
      } else if (t[0] == "size" && t.size() == 2) {
        size = parse_int(l, t[1]);
      } else if (t[0] == "names") {
        names.assign(t.begin() + 1, t.end());
      } else if (t[0] == "table" && t.size() >= 2) {
        std::vector<int> entries;
        for (size_t i = 2; i < t.size(); ++i) entries.push_back(parse_int(l, t[i]));
        tables.emplace_back(t[1], std::move(entries));
      } else {
        parse_fail(l.number, "unexpected '" + t[0] + "' inside algebra block");
      }
      ++pos;
    }
    if (done()) parse_fail(head_line, "unterminated algebra block");
    ++pos;  // consume '}'

    if (size <= 0) parse_fail(head_line, "algebra " + name + " needs a positive size");
    OperatorDomain domain{ops};
    std::vector<std::vector<int>> ordered(domain.size());
    std::vector<char> seen(domain.size(), 0);
    for (auto& [sym, entries] : tables) {
      auto oi = domain.index_of(sym);
      if (!oi) parse_fail(head_line, "table for unknown operator " + sym);
      if (seen[*oi]) parse_fail(head_line, "duplicate table for operator " + sym);
      seen[*oi] = 1;
      ordered[*oi] = std::move(entries);
    }
    for (size_t i = 0; i < domain.size(); ++i)
      if (!seen[i]) parse_fail(head_line, "missing table for operator " + domain.op(i).symbol);
    if (!names.empty() && static_cast<int>(names.size()) != size)
      parse_fail(head_line, "names count differs from carrier size");
    try {
      doc.algebras.emplace_back(name,
                                NamedAlgebra{FiniteAlgebra(domain, size, std::move(ordered)),
                                             std::move(names)});
    } catch (const Error& e) {
      parse_fail(head_line, std::string("algebra ") + name + ": " + e.what());
    }
  }

  void parse_product() {
    const Line& head = peek();
    expect_block_open(head);
    std::string name = head.tokens[1];
    expect_name_free(head, name);
    ++pos;

    std::vector<Operator> ops;
    std::vector<std::string> factor_names;
    bool factors_seen = false;
    int head_line = head.number;
    while (!done() && !block_end(peek())) {
      const Line& l = peek();
      const auto& t = l.tokens;
      if (t[0] == "op" && t.size() == 3) {
        ops.push_back({t[1], parse_int(l, t[2])});
      } else if (t[0] == "factors") {
        factors_seen = true;
        factor_names.assign(t.begin() + 1, t.end());
      } else {
        parse_fail(l.number, "unexpected '" + t[0] + "' inside product block");
      }
      ++pos;
    }
    if (done()) parse_fail(head_line, "unterminated product block");
    ++pos;

    if (!factors_seen) parse_fail(head_line, "product needs a factors line");
    std::vector<FiniteAlgebra> factors;
    for (const auto& fn : factor_names) {
      const NamedAlgebra* a = doc.find_algebra(fn);
      if (!a) parse_fail(head_line, "product references unknown algebra " + fn);
      factors.push_back(a->algebra);
    }
    OperatorDomain domain{ops};
    doc.algebras.emplace_back(name, NamedAlgebra{product(domain, factors).algebra, {}});
  }

  void parse_rep() {
    const Line& head = peek();
    expect_block_open(head);
    std::string name = head.tokens[1];
    expect_name_free(head, name);
    ++pos;

    std::string actor_name, space_name;
    Side side = Side::left;
    std::vector<std::pair<std::string, EndCombiner>> combiners;
    std::vector<std::vector<int>> action_rows;
    int head_line = head.number;
    while (!done() && !block_end(peek())) {
      const Line& l = peek();
      const auto& t = l.tokens;
      if (t[0] == "actor" && t.size() == 2) {
        actor_name = t[1];
      } else if (t[0] == "space" && t.size() == 2) {
        space_name = t[1];
      } else if (t[0] == "side" && t.size() == 2) {
        if (t[1] == "left")
          side = Side::left;
        else if (t[1] == "right")
          side = Side::right;
        else
          parse_fail(l.number, "side must be left or right");
      } else if (t[0] == "combiner" && t.size() >= 3) {
        if (t[2] == "pointwise" && t.size() == 4)
          combiners.emplace_back(t[1], EndCombiner::pointwise(t[3]));
        else if (t[2] == "composition" && t.size() == 3)
          combiners.emplace_back(t[1], EndCombiner::composition());
        else if (t[2] == "commutator" && t.size() == 4)
          combiners.emplace_back(t[1], EndCombiner::commutator(t[3]));
        else
          parse_fail(l.number, "bad combiner line");
      } else if (t[0] == "action" && t.size() >= 2) {
        std::vector<int> row;
        for (size_t i = 1; i < t.size(); ++i) row.push_back(parse_int(l, t[i]));
        action_rows.push_back(std::move(row));
      } else {
        parse_fail(l.number, "unexpected '" + t[0] + "' inside rep block");
      }
      ++pos;
    }
    if (done()) parse_fail(head_line, "unterminated rep block");
    ++pos;

    const NamedAlgebra* actor = doc.find_algebra(actor_name);
    const NamedAlgebra* space = doc.find_algebra(space_name);
    if (!actor) parse_fail(head_line, "rep references unknown actor " + actor_name);
    if (!space) parse_fail(head_line, "rep references unknown space " + space_name);

    std::vector<EndCombiner> ordered(actor->algebra.domain().size());
    std::vector<char> seen(ordered.size(), 0);
    for (auto& [sym, c] : combiners) {
      auto oi = actor->algebra.domain().index_of(sym);
      if (!oi) parse_fail(head_line, "combiner for unknown actor operator " + sym);
      if (seen[*oi]) parse_fail(head_line, "duplicate combiner for " + sym);
      seen[*oi] = 1;
      ordered[*oi] = c;
    }
    for (size_t i = 0; i < ordered.size(); ++i)
      if (!seen[i])
        parse_fail(head_line,
                   "missing combiner for actor operator " +
                       actor->algebra.domain().op(i).symbol);

    std::vector<ElementMap> action;
    for (auto& row : action_rows) {
      if (static_cast<int>(row.size()) != space->algebra.size())
        parse_fail(head_line, "action row length differs from space size");
      action.emplace_back(space->algebra.size(), space->algebra.size(), std::move(row));
    }
    if (static_cast<int>(action.size()) != actor->algebra.size())
      parse_fail(head_line, "one action row per actor element required");

    try {
      doc.reps.emplace_back(name, Representation(actor->algebra, space->algebra,
                                                 std::move(action), std::move(ordered), side));
    } catch (const Error& e) {
      parse_fail(head_line, std::string("rep ") + name + ": " + e.what());
    }
  }

  void parse_diagram() {
    const Line& head = peek();
    expect_block_open(head);
    std::string name = head.tokens[1];
    expect_name_free(head, name);
    ++pos;

    std::vector<std::string> vertex_names;
    std::vector<std::tuple<int, int, std::string>> edge_specs;
    int head_line = head.number;
    while (!done() && !block_end(peek())) {
      const Line& l = peek();
      const auto& t = l.tokens;
      if (t[0] == "vertices" && t.size() >= 2) {
        vertex_names.assign(t.begin() + 1, t.end());
      } else if (t[0] == "edge" && t.size() == 4) {
        edge_specs.emplace_back(parse_int(l, t[1]), parse_int(l, t[2]), t[3]);
      } else {
        parse_fail(l.number, "unexpected '" + t[0] + "' inside diagram block");
      }
      ++pos;
    }
    if (done()) parse_fail(head_line, "unterminated diagram block");
    ++pos;

    Diagram d;
    std::map<std::string, int> algebra_index;
    for (const auto& vn : vertex_names) {
      const NamedAlgebra* a = doc.find_algebra(vn);
      if (!a) parse_fail(head_line, "diagram references unknown algebra " + vn);
      auto [it, fresh] = algebra_index.emplace(vn, static_cast<int>(d.algebras.size()));
      if (fresh) d.algebras.push_back(a->algebra);
      d.vertex_algebra.push_back(it->second);
    }
    for (auto& [from, to, rn] : edge_specs) {
      const Representation* r = doc.find_rep(rn);
      if (!r) parse_fail(head_line, "diagram references unknown rep " + rn);
      if (from < 0 || from >= d.vertex_count() || to < 0 || to >= d.vertex_count())
        parse_fail(head_line, "edge endpoint out of range");
      d.edges.push_back({from, to, *r});
    }
    doc.diagrams.emplace_back(name, std::move(d));
  }

  void parse_set() {
    const Line& l = peek();
    if (l.tokens.size() < 2) parse_fail(l.number, "set needs a name");
    std::string name = l.tokens[1];
    expect_name_free(l, name);
    ElementSet s;
    for (size_t i = 2; i < l.tokens.size(); ++i) s.elements.push_back(parse_int(l, l.tokens[i]));
    doc.sets.emplace_back(name, std::move(s));
    ++pos;
  }

  Document run() {
    while (!done()) {
      const Line& l = peek();
      const std::string& kind = l.tokens[0];
      if (kind == "algebra")
        parse_algebra();
      else if (kind == "product")
        parse_product();
      else if (kind == "rep")
        parse_rep();
      else if (kind == "diagram")
        parse_diagram();
      else if (kind == "set")
        parse_set();
      else
        parse_fail(l.number, "unknown object kind '" + kind + "'");
    }
    return std::move(doc);
  }
};

}  // namespace

Document parse_document(const std::string& text) {
  auto lines = tokenize(text);
  Parser p{lines};
  return p.run();
}

Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

namespace {

void write_algebra(std::ostream& os, const std::string& name, const NamedAlgebra& na) {
  os << "algebra " << name << " {\n";
  for (const auto& op : na.algebra.domain().operators())
    os << "  op " << op.symbol << " " << op.arity << "\n";
  os << "  size " << na.algebra.size() << "\n";
  if (!na.element_names.empty()) {
    os << "  names";
    for (const auto& n : na.element_names) os << " " << n;
    os << "\n";
  }
  for (size_t oi = 0; oi < na.algebra.domain().size(); ++oi) {
    os << "  table " << na.algebra.domain().op(oi).symbol;
    for (int v : na.algebra.table(oi)) os << " " << v;
    os << "\n";
  }
  os << "}\n";
}

}  // namespace

std::string serialize_document(const Document& doc) {
  std::ostringstream os;
  std::map<const void*, std::string> algebra_names;

  for (const auto& [name, na] : doc.algebras) {
    write_algebra(os, name, na);
  }

  // Algebras embedded in reps/diagrams but not present by name are emitted
  // with derived names so the document stays self-contained.
  auto name_for = [&](const FiniteAlgebra& a, const std::string& hint,
                      std::ostream& out) -> std::string {
    for (const auto& [name, na] : doc.algebras)
      if (na.algebra == a) return name;
    std::string fresh = hint;
    write_algebra(out, fresh, NamedAlgebra{a, {}});
    return fresh;
  };

  for (const auto& [name, rep] : doc.reps) {
    std::string actor_name = name_for(rep.actor(), name + ".actor", os);
    std::string space_name = name_for(rep.space(), name + ".space", os);
    os << "rep " << name << " {\n";
    os << "  actor " << actor_name << "\n";
    os << "  space " << space_name << "\n";
    if (rep.side() == Side::right) os << "  side right\n";
    for (size_t oi = 0; oi < rep.actor().domain().size(); ++oi) {
      const auto& c = rep.combiners()[oi];
      os << "  combiner " << rep.actor().domain().op(oi).symbol << " ";
      switch (c.kind) {
        case EndCombiner::Kind::pointwise:
          os << "pointwise " << c.op;
          break;
        case EndCombiner::Kind::composition:
          os << "composition";
          break;
        case EndCombiner::Kind::commutator:
          os << "commutator " << c.op;
          break;
      }
      os << "\n";
    }
    for (const auto& m : rep.action()) {
      os << "  action";
      for (int v : m.image) os << " " << v;
      os << "\n";
    }
    os << "}\n";
  }

  for (const auto& [name, d] : doc.diagrams) {
    std::vector<std::string> alg_names;
    for (size_t i = 0; i < d.algebras.size(); ++i)
      alg_names.push_back(name_for(d.algebras[i], name + ".a" + std::to_string(i), os));
    std::vector<std::string> rep_names;
    for (size_t e = 0; e < d.edges.size(); ++e) {
      std::string rn;
      for (const auto& [n, r] : doc.reps)
        if (r == d.edges[e].rep) rn = n;
      if (rn.empty()) {
        rn = name + ".e" + std::to_string(e);
        const auto& rep = d.edges[e].rep;
        std::string actor_name = name_for(rep.actor(), rn + ".actor", os);
        std::string space_name = name_for(rep.space(), rn + ".space", os);
        os << "rep " << rn << " {\n  actor " << actor_name << "\n  space " << space_name
           << "\n";
        if (rep.side() == Side::right) os << "  side right\n";
        for (size_t oi = 0; oi < rep.actor().domain().size(); ++oi) {
          const auto& c = rep.combiners()[oi];
          os << "  combiner " << rep.actor().domain().op(oi).symbol << " ";
          switch (c.kind) {
            case EndCombiner::Kind::pointwise:
              os << "pointwise " << c.op;
              break;
            case EndCombiner::Kind::composition:
              os << "composition";
              break;
            case EndCombiner::Kind::commutator:
              os << "commutator " << c.op;
              break;
          }
          os << "\n";
        }
        for (const auto& m : rep.action()) {
          os << "  action";
          for (int v : m.image) os << " " << v;
          os << "\n";
        }
        os << "}\n";
      }
      rep_names.push_back(rn);
    }
    os << "diagram " << name << " {\n  vertices";
    for (int v : d.vertex_algebra) os << " " << alg_names[v];
    os << "\n";
    for (size_t e = 0; e < d.edges.size(); ++e)
      os << "  edge " << d.edges[e].from << " " << d.edges[e].to << " " << rep_names[e] << "\n";
    os << "}\n";
  }

  for (const auto& [name, s] : doc.sets) {
    os << "set " << name;
    for (int v : s.elements) os << " " << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace ualg
