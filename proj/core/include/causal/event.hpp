#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "causal/type.hpp"

namespace causal {

/// A value of the code type: canonical serialized term text.
struct Code {
  std::string text;

  auto operator<=>(const Code&) const = default;
};

/// One component of an event: an enum index or a code.
using Atom = std::variant<std::uint32_t, Code>;

/// An event of a TypeExpr is a tuple with one atom per factor. The unit
/// event is the empty tuple. Ordering is lexicographic, enum atoms by index
/// and codes by text.
class Event {
 public:
  Event() = default;
  explicit Event(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  static Event unit() { return {}; }
  static Event of(std::uint32_t index) { return Event({Atom{index}}); }
  static Event of(Code code) { return Event({Atom{std::move(code)}}); }

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t arity() const noexcept { return atoms_.size(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }

  Event slice(std::size_t first, std::size_t count) const;
  Event drop_front(std::size_t count) const { return slice(count, arity() - count); }

  friend Event operator*(const Event& lhs, const Event& rhs);
  auto operator<=>(const Event&) const = default;

 private:
  std::vector<Atom> atoms_;
};

bool inhabits(const Event& e, const TypeExpr& t);

/// Row-major index of e in the fixed event order of a finite type. Pair
/// (a, u) maps to a * |U| + u.
std::size_t event_index(const Event& e, const TypeExpr& t);
Event event_at(std::size_t index, const TypeExpr& t);

/// Every event of a finite type, in index order.
std::vector<Event> all_events(const TypeExpr& t);

/// Canonical VAL text: unit, NAT, (code "..."), right-nested (pair ...).
std::string to_string(const Event& e);
std::string to_string(const Atom& a);

std::string escape_code(const std::string& text);

}  // namespace causal
