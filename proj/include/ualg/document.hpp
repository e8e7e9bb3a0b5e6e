#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ualg/diagram.hpp"

namespace ualg {

// A named element set, usable as a closure / quasibasis seed.
struct ElementSet {
  std::vector<int> elements;
};

struct NamedAlgebra {
  FiniteAlgebra algebra;
  std::vector<std::string> element_names;  // optional, cosmetic
};

// One text file holding named objects; names unique, cross-references
// resolve to earlier entries, tables shape-checked on load.
struct Document {
  std::vector<std::pair<std::string, NamedAlgebra>> algebras;
  std::vector<std::pair<std::string, Representation>> reps;
  std::vector<std::pair<std::string, Diagram>> diagrams;
  std::vector<std::pair<std::string, ElementSet>> sets;

  const NamedAlgebra* find_algebra(const std::string& name) const;
  const Representation* find_rep(const std::string& name) const;
  const Diagram* find_diagram(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

Document parse_document(const std::string& text);
Document load_document(const std::string& path);
std::string serialize_document(const Document& doc);

}  // namespace ualg
