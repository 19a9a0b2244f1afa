#include "causal/term.hpp"

#include "causal/error.hpp"

namespace causal {

namespace {

std::shared_ptr<Term::Node> make_node(Term::Kind kind, TypeExpr dom, TypeExpr cod) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  n->signature = Signature{std::move(dom), std::move(cod)};
  return n;
}

std::string describe(const Signature& s) { return to_string(s.dom) + " -> " + to_string(s.cod); }

void check_matrix(const TypeExpr& dom, const TypeExpr& cod, const Matrix& rows) {
  if (!dom.is_finite() || !cod.is_finite())
    throw Error(ErrorCode::BadMatrix, "literal types must be finite, got " + to_string(dom) +
                                          " -> " + to_string(cod));
  std::size_t n_rows = dom.event_count();
  std::size_t n_cols = cod.event_count();
  if (rows.size() != n_rows)
    throw Error(ErrorCode::BadMatrix, "expected " + std::to_string(n_rows) + " rows for " +
                                          to_string(dom) + ", got " + std::to_string(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n_cols)
      throw Error(ErrorCode::BadMatrix, "row " + std::to_string(i) + " has " +
                                            std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(n_cols) + " for " + to_string(cod));
    Rational sum = 0;
    for (const auto& w : rows[i]) {
      if (w < 0)
        throw Error(ErrorCode::BadMatrix, "row " + std::to_string(i) + " has negative entry " + to_string(w));
      sum += w;
    }
    if (sum > 1)
      throw Error(ErrorCode::BadMatrix, "row " + std::to_string(i) + " has mass " + to_string(sum) + " > 1");
  }
}

}  // namespace

Term Term::id(TypeExpr t) {
  auto n = make_node(Kind::Id, t, t);
  n->type = std::move(t);
  return Term(std::move(n));
}

Term Term::swap(TypeExpr left, TypeExpr right) {
  auto n = make_node(Kind::Swap, left * right, right * left);
  n->type = std::move(left);
  n->second_type = std::move(right);
  return Term(std::move(n));
}

Term Term::copy(TypeExpr t) {
  auto n = make_node(Kind::Copy, t, t * t);
  n->type = std::move(t);
  return Term(std::move(n));
}

Term Term::del(TypeExpr t) {
  auto n = make_node(Kind::Del, t, TypeExpr::unit());
  n->type = std::move(t);
  return Term(std::move(n));
}

Term Term::lit(TypeExpr dom, TypeExpr cod, Matrix rows) {
  for (auto& row : rows)
    for (auto& w : row) w.canonicalize();
  check_matrix(dom, cod, rows);
  auto n = make_node(Kind::Lit, dom, cod);
  n->type = std::move(dom);
  n->second_type = std::move(cod);
  n->matrix = std::move(rows);
  return Term(std::move(n));
}

Term Term::constant(TypeExpr t, Event value) {
  if (!inhabits(value, t))
    throw Error(ErrorCode::TypeMismatch, "constant " + to_string(value) + " does not inhabit " + to_string(t));
  auto n = make_node(Kind::Const, TypeExpr::unit(), t);
  n->type = std::move(t);
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::seq(Term first, Term second) {
  if (first.cod() != second.dom())
    throw Error(ErrorCode::TypeMismatch, "cannot compose " + describe(first.signature()) + " with " +
                                             describe(second.signature()));
  auto n = make_node(Kind::Seq, first.dom(), second.cod());
  n->children = {std::move(first), std::move(second)};
  return Term(std::move(n));
}

Term Term::par(Term left, Term right) {
  auto n = make_node(Kind::Par, left.dom() * right.dom(), left.cod() * right.cod());
  n->children = {std::move(left), std::move(right)};
  return Term(std::move(n));
}

Term Term::mix(Rational p, Term first, Term second) {
  p.canonicalize();
  if (p < 0 || p > 1) throw Error(ErrorCode::BadWeight, "mix weight " + to_string(p) + " outside [0,1]");
  if (first.signature() != second.signature())
    throw Error(ErrorCode::TypeMismatch, "mix branches disagree: " + describe(first.signature()) + " vs " +
                                             describe(second.signature()));
  auto n = make_node(Kind::Mix, first.dom(), first.cod());
  n->weight = std::move(p);
  n->children = {std::move(first), std::move(second)};
  return Term(std::move(n));
}

Term Term::apply(TypeExpr arg, TypeExpr result) {
  auto n = make_node(Kind::Apply, TypeExpr::code() * arg, result);
  n->type = std::move(arg);
  n->second_type = std::move(result);
  return Term(std::move(n));
}

Term Term::spec() {
  return Term(make_node(Kind::Spec, TypeExpr::code() * TypeExpr::code(), TypeExpr::code()));
}

Term::Kind Term::kind() const { return node_->kind; }
const Signature& Term::signature() const { return node_->signature; }
const TypeExpr& Term::type() const { return node_->type; }
const TypeExpr& Term::second_type() const { return node_->second_type; }
const Matrix& Term::matrix() const { return node_->matrix; }
const Event& Term::value() const { return node_->value; }
const Rational& Term::weight() const { return node_->weight; }
const Term& Term::first() const { return node_->children.at(0); }
const Term& Term::second() const { return node_->children.at(1); }

bool operator==(const Term& lhs, const Term& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  return a.kind == b.kind && a.signature == b.signature && a.type == b.type &&
         a.second_type == b.second_type && a.matrix == b.matrix && a.value == b.value &&
         a.weight == b.weight && a.children == b.children;
}

}  // namespace causal
