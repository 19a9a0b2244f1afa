#include "causal/event.hpp"

#include "causal/error.hpp"

namespace causal {

Event Event::slice(std::size_t first, std::size_t count) const {
  return Event(std::vector<Atom>(atoms_.begin() + static_cast<std::ptrdiff_t>(first),
                                 atoms_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Event operator*(const Event& lhs, const Event& rhs) {
  std::vector<Atom> out = lhs.atoms_;
  out.insert(out.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  return Event(std::move(out));
}

bool inhabits(const Event& e, const TypeExpr& t) {
  if (e.arity() != t.arity()) return false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (const auto* en = std::get_if<EnumType>(&t[i])) {
      const auto* idx = std::get_if<std::uint32_t>(&e[i]);
      if (!idx || *idx >= en->cardinality) return false;
    } else if (!std::holds_alternative<Code>(e[i])) {
      return false;
    }
  }
  return true;
}

std::size_t event_index(const Event& e, const TypeExpr& t) {
  if (!t.is_finite())
    throw Error(ErrorCode::NotFinite, "cannot index events of " + to_string(t));
  if (!inhabits(e, t))
    throw Error(ErrorCode::InvalidEvent, to_string(e) + " does not inhabit " + to_string(t));
  std::size_t index = 0;
  for (std::size_t i = 0; i < t.arity(); ++i)
    index = index * std::get<EnumType>(t[i]).cardinality + std::get<std::uint32_t>(e[i]);
  return index;
}

Event event_at(std::size_t index, const TypeExpr& t) {
  std::vector<Atom> atoms(t.arity());
  for (std::size_t i = t.arity(); i-- > 0;) {
    const auto* en = std::get_if<EnumType>(&t[i]);
    if (!en) throw Error(ErrorCode::NotFinite, "cannot index events of " + to_string(t));
    atoms[i] = static_cast<std::uint32_t>(index % en->cardinality);
    index /= en->cardinality;
  }
  if (index != 0) throw Error(ErrorCode::InvalidEvent, "event index out of range for " + to_string(t));
  return Event(std::move(atoms));
}

std::vector<Event> all_events(const TypeExpr& t) {
  std::size_t n = t.event_count();
  std::vector<Event> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(event_at(i, t));
  return out;
}

std::string escape_code(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_string(const Atom& a) {
  if (const auto* idx = std::get_if<std::uint32_t>(&a)) return std::to_string(*idx);
  return "(code \"" + escape_code(std::get<Code>(a).text) + "\")";
}

std::string to_string(const Event& e) {
  if (e.arity() == 0) return "unit";
  std::string out;
  for (std::size_t i = 0; i + 1 < e.arity(); ++i) out += "(pair " + to_string(e[i]) + " ";
  out += to_string(e.atoms().back());
  out.append(e.arity() - 1, ')');
  return out;
}

}  // namespace causal
