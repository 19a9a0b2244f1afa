#pragma once

#include <memory>
#include <vector>

#include "causal/event.hpp"
#include "causal/rational.hpp"
#include "causal/type.hpp"

namespace causal {

/// Rows indexed by domain events, columns by codomain events, both in the
/// fixed row-major event order.
using Matrix = std::vector<std::vector<Rational>>;

struct Signature {
  TypeExpr dom;
  TypeExpr cod;

  bool operator==(const Signature&) const = default;
};

/// A string-diagram term. Terms are immutable and cheap to copy. The
/// factory functions type-check eagerly, so every Term that exists is well
/// typed and carries its signature.
class Term {
 public:
  enum class Kind { Id, Swap, Copy, Del, Lit, Const, Seq, Par, Mix, Apply, Spec };

  static Term id(TypeExpr t);
  static Term swap(TypeExpr left, TypeExpr right);
  static Term copy(TypeExpr t);
  static Term del(TypeExpr t);
  // Throws BadMatrix on a dimension or substochasticity violation.
  static Term lit(TypeExpr dom, TypeExpr cod, Matrix rows);
  static Term constant(TypeExpr t, Event value);
  // Throws TypeMismatch unless first.cod == second.dom.
  static Term seq(Term first, Term second);
  static Term par(Term left, Term right);
  // Throws BadWeight for p outside [0,1], TypeMismatch if signatures differ.
  static Term mix(Rational p, Term first, Term second);
  // code ⊗ arg -> result: runs the code given as first input.
  static Term apply(TypeExpr arg, TypeExpr result);
  // code ⊗ code -> code: fixes the leading parameter of the first code.
  static Term spec();

  Kind kind() const;
  const Signature& signature() const;
  const TypeExpr& dom() const { return signature().dom; }
  const TypeExpr& cod() const { return signature().cod; }

  // Id, Copy, Del, Const: the carried type. Swap: left. Apply: arg. Lit: dom.
  const TypeExpr& type() const;
  // Swap: right. Apply: result. Lit: cod.
  const TypeExpr& second_type() const;
  const Matrix& matrix() const;
  const Event& value() const;
  const Rational& weight() const;
  // Seq, Par, Mix children.
  const Term& first() const;
  const Term& second() const;

  friend bool operator==(const Term& lhs, const Term& rhs);

  struct Node;

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  Signature signature;
  TypeExpr type;
  TypeExpr second_type;
  Matrix matrix;
  Event value;
  Rational weight;
  std::vector<Term> children;
};

}  // namespace causal
