#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "slp/errors.hpp"

namespace slp {

/// Parsed arithmetic expression in the single variable x.
///
/// Grammar (highest binding first): ^ (right-assoc), unary -, * /, + -.
/// Atoms: decimal literals with optional exponent, x, sin cos exp sqrt abs,
/// parentheses. Immutable after parse; eval is pure and re-entrant.
class Expr {
 public:
  Expr() = default;

  static Expr parse(std::string_view text);

  /// IEEE double evaluation. Throws Error(errc::domain_error) on division by
  /// zero, sqrt of a negative number, or a power with no real value.
  double eval(double x) const;

  /// Canonical text form; reparsing yields a structurally identical tree.
  std::string str() const;

  bool same_tree(const Expr& other) const;
  bool empty() const noexcept { return root_ == nullptr; }

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

inline Expr parse_expression(std::string_view text) { return Expr::parse(text); }

}  // namespace slp
