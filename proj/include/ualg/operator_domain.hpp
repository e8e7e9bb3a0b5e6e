#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/base.hpp"

namespace ualg {

struct Operator {
  std::string symbol;
  int arity = 0;

  bool operator==(const Operator&) const = default;
};

// The signature: an ordered list of named operators with arities.
// Symbols are pairwise distinct; arity 0 (constants) is allowed.
class OperatorDomain {
public:
  OperatorDomain() = default;

  explicit OperatorDomain(std::vector<Operator> ops) : ops_(std::move(ops)) {
    for (size_t i = 0; i < ops_.size(); ++i) {
      if (ops_[i].arity < 0)
        fail(ErrorCode::shape, "operator " + ops_[i].symbol + " has negative arity");
      if (ops_[i].symbol.empty())
        fail(ErrorCode::shape, "operator with empty symbol");
      for (size_t j = 0; j < i; ++j)
        if (ops_[j].symbol == ops_[i].symbol)
          fail(ErrorCode::shape, "duplicate operator symbol " + ops_[i].symbol);
    }
  }

  size_t size() const { return ops_.size(); }
  const Operator& op(size_t i) const { return ops_[i]; }
  const std::vector<Operator>& operators() const { return ops_; }

  std::optional<size_t> index_of(std::string_view symbol) const {
    for (size_t i = 0; i < ops_.size(); ++i)
      if (ops_[i].symbol == symbol) return i;
    return std::nullopt;
  }

  size_t require(std::string_view symbol) const {
    auto i = index_of(symbol);
    if (!i) fail(ErrorCode::shape, "no operator named " + std::string(symbol));
    return *i;
  }

  bool operator==(const OperatorDomain&) const = default;

private:
  std::vector<Operator> ops_;
};

}  // namespace ualg
