#include "causal/type.hpp"

#include <limits>

#include "causal/error.hpp"

namespace causal {

TypeExpr TypeExpr::enumeration(std::string name, std::uint32_t cardinality) {
  if (cardinality == 0)
    throw Error(ErrorCode::TypeMismatch, "enum '" + name + "' has cardinality 0");
  return TypeExpr({EnumType{std::move(name), cardinality}});
}

TypeExpr TypeExpr::code() { return TypeExpr({CodeType{}}); }

bool TypeExpr::is_finite() const noexcept {
  for (const auto& f : factors_)
    if (std::holds_alternative<CodeType>(f)) return false;
  return true;
}

bool TypeExpr::leads_with_code() const noexcept {
  return !factors_.empty() && std::holds_alternative<CodeType>(factors_.front());
}

std::size_t TypeExpr::event_count() const {
  std::size_t n = 1;
  for (const auto& f : factors_) {
    const auto* e = std::get_if<EnumType>(&f);
    if (!e) throw Error(ErrorCode::NotFinite, "type " + to_string(*this) + " has infinitely many events");
    if (n > std::numeric_limits<std::size_t>::max() / e->cardinality)
      throw Error(ErrorCode::NotFinite, "type " + to_string(*this) + " is too large to enumerate");
    n *= e->cardinality;
  }
  return n;
}

TypeExpr TypeExpr::slice(std::size_t first, std::size_t count) const {
  return TypeExpr(std::vector<BaseType>(factors_.begin() + static_cast<std::ptrdiff_t>(first),
                                        factors_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

TypeExpr operator*(const TypeExpr& lhs, const TypeExpr& rhs) {
  std::vector<BaseType> out = lhs.factors_;
  out.insert(out.end(), rhs.factors_.begin(), rhs.factors_.end());
  return TypeExpr(std::move(out));
}

RawType RawType::tensor(RawType lhs, RawType rhs) {
  RawType r{Unit{}};
  r.node_ = Tensor{std::make_shared<const RawType>(std::move(lhs)),
                   std::make_shared<const RawType>(std::move(rhs))};
  return r;
}

namespace {

void flatten(const RawType& raw, std::vector<BaseType>& out) {
  const auto& node = raw.node();
  if (const auto* b = std::get_if<BaseType>(&node)) {
    out.push_back(*b);
  } else if (const auto* t = std::get_if<RawType::Tensor>(&node)) {
    flatten(*t->left, out);
    flatten(*t->right, out);
  }
}

}  // namespace

TypeExpr normalize_type(const RawType& raw) {
  std::vector<BaseType> out;
  flatten(raw, out);
  return TypeExpr(std::move(out));
}

std::string to_string(const BaseType& t) {
  if (const auto* e = std::get_if<EnumType>(&t))
    return "(enum " + e->name + " " + std::to_string(e->cardinality) + ")";
  return "code";
}

std::string to_string(const TypeExpr& t) {
  if (t.is_unit()) return "unit";
  std::string out;
  std::size_t closing = 0;
  for (std::size_t i = 0; i + 1 < t.arity(); ++i) {
    out += "(tensor " + to_string(t[i]) + " ";
    ++closing;
  }
  out += to_string(t.factors().back());
  out.append(closing, ')');
  return out;
}

}  // namespace causal
