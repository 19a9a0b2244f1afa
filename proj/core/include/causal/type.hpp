#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace causal {

struct EnumType {
  std::string name;
  std::uint32_t cardinality = 1;

  auto operator<=>(const EnumType&) const = default;
};

// The type of causal models. Its events are canonical codes.
struct CodeType {
  auto operator<=>(const CodeType&) const = default;
};

using BaseType = std::variant<EnumType, CodeType>;

/// An object of the strict monoidal universe: a flat list of base types.
/// The unit type is the empty list, so unit and associativity laws hold by
/// construction.
class TypeExpr {
 public:
  TypeExpr() = default;
  explicit TypeExpr(std::vector<BaseType> factors) : factors_(std::move(factors)) {}

  static TypeExpr unit() { return {}; }
  static TypeExpr enumeration(std::string name, std::uint32_t cardinality);
  static TypeExpr code();

  const std::vector<BaseType>& factors() const noexcept { return factors_; }
  std::size_t arity() const noexcept { return factors_.size(); }
  bool is_unit() const noexcept { return factors_.empty(); }
  const BaseType& operator[](std::size_t i) const { return factors_[i]; }

  // True when no factor is the code type.
  bool is_finite() const noexcept;
  bool leads_with_code() const noexcept;

  // Number of events; throws Error(NotFinite) when a factor is the code type.
  std::size_t event_count() const;

  TypeExpr slice(std::size_t first, std::size_t count) const;
  TypeExpr drop_front(std::size_t count) const { return slice(count, arity() - count); }

  friend TypeExpr operator*(const TypeExpr& lhs, const TypeExpr& rhs);
  auto operator<=>(const TypeExpr&) const = default;

 private:
  std::vector<BaseType> factors_;
};

// Nested tensor expression as written by a user, before flattening.
class RawType {
 public:
  struct Unit {};
  struct Tensor {
    std::shared_ptr<const RawType> left, right;
  };

  RawType(Unit u) : node_(u) {}
  RawType(BaseType b) : node_(std::move(b)) {}
  static RawType tensor(RawType lhs, RawType rhs);

  const std::variant<Unit, BaseType, Tensor>& node() const { return node_; }

 private:
  std::variant<Unit, BaseType, Tensor> node_;
};

/// Flattens associativity and drops unit factors.
TypeExpr normalize_type(const RawType& raw);

std::string to_string(const BaseType& t);
/// Canonical text: unit, a single factor, or right-nested (tensor ...).
std::string to_string(const TypeExpr& t);

}  // namespace causal
