#include "causal/syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "causal/error.hpp"

namespace causal {

namespace {

struct SExpr {
  enum class Kind { Atom, String, List };
  Kind kind = Kind::Atom;
  std::string text;
  std::vector<SExpr> items;
  std::size_t offset = 0;

  bool is_atom(std::string_view s) const { return kind == Kind::Atom && text == s; }
};

class Reader {
 public:
  explicit Reader(std::string_view src) : src_(src) {}

  SExpr read_all() {
    skip_space();
    if (pos_ >= src_.size()) throw Error(ErrorCode::SyntaxError, "empty input", pos_);
    SExpr e = read();
    skip_space();
    if (pos_ < src_.size()) throw Error(ErrorCode::SyntaxError, "trailing input", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  SExpr read() {
    skip_space();
    if (pos_ >= src_.size()) throw Error(ErrorCode::SyntaxError, "unexpected end of input", pos_);
    SExpr e;
    e.offset = pos_;
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      e.kind = SExpr::Kind::List;
      for (;;) {
        skip_space();
        if (pos_ >= src_.size()) throw Error(ErrorCode::SyntaxError, "unclosed '('", e.offset);
        if (src_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') throw Error(ErrorCode::SyntaxError, "unexpected ')'", pos_);
    if (c == '"') {
      ++pos_;
      e.kind = SExpr::Kind::String;
      for (;;) {
        if (pos_ >= src_.size()) throw Error(ErrorCode::SyntaxError, "unterminated string", e.offset);
        char d = src_[pos_++];
        if (d == '"') return e;
        if (d == '\\') {
          if (pos_ >= src_.size()) throw Error(ErrorCode::SyntaxError, "unterminated escape", pos_ - 1);
          char esc = src_[pos_++];
          if (esc != '"' && esc != '\\')
            throw Error(ErrorCode::SyntaxError, std::string("unknown escape '\\") + esc + "'", pos_ - 2);
          e.text += esc;
        } else {
          e.text += d;
        }
      }
    }
    while (pos_ < src_.size()) {
      char d = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"') break;
      e.text += d;
      ++pos_;
    }
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void syntax(const SExpr& e, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, what, e.offset);
}

const std::string& head(const SExpr& e) {
  if (e.kind != SExpr::Kind::List || e.items.empty() || e.items[0].kind != SExpr::Kind::Atom)
    syntax(e, "expected a keyword form");
  return e.items[0].text;
}

void expect_arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1)
    syntax(e, "'" + e.items[0].text + "' takes " + std::to_string(n) + " argument(s), got " +
                  std::to_string(e.items.size() - 1));
}

std::uint64_t to_nat(const SExpr& e) {
  if (e.kind != SExpr::Kind::Atom) syntax(e, "expected a natural number");
  std::uint64_t v = 0;
  const char* first = e.text.data();
  const char* last = first + e.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (e.text.empty() || ec != std::errc() || ptr != last) syntax(e, "expected a natural number, got '" + e.text + "'");
  return v;
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

RawType to_raw_type(const SExpr& e) {
  if (e.is_atom("unit")) return RawType(RawType::Unit{});
  if (e.is_atom("code")) return RawType(BaseType{CodeType{}});
  const std::string& h = head(e);
  if (h == "enum") {
    expect_arity(e, 2);
    const SExpr& name = e.items[1];
    if (name.kind != SExpr::Kind::Atom || !is_name(name.text)) syntax(name, "expected an enum name");
    std::uint64_t n = to_nat(e.items[2]);
    if (n == 0 || n > std::numeric_limits<std::uint32_t>::max())
      syntax(e.items[2], "enum cardinality must be in 1..2^32-1");
    return RawType(BaseType{EnumType{name.text, static_cast<std::uint32_t>(n)}});
  }
  if (h == "tensor") {
    expect_arity(e, 2);
    return RawType::tensor(to_raw_type(e.items[1]), to_raw_type(e.items[2]));
  }
  syntax(e, "unknown type form '" + h + "'");
}

TypeExpr to_type(const SExpr& e) { return normalize_type(to_raw_type(e)); }

void collect_atoms(const SExpr& e, std::vector<Atom>& out) {
  if (e.is_atom("unit")) return;
  if (e.kind == SExpr::Kind::Atom) {
    std::uint64_t n = to_nat(e);
    if (n > std::numeric_limits<std::uint32_t>::max()) syntax(e, "enum value out of range");
    out.emplace_back(static_cast<std::uint32_t>(n));
    return;
  }
  const std::string& h = head(e);
  if (h == "code") {
    expect_arity(e, 1);
    if (e.items[1].kind != SExpr::Kind::String) syntax(e.items[1], "expected a quoted code");
    out.emplace_back(Code{e.items[1].text});
    return;
  }
  if (h == "pair") {
    expect_arity(e, 2);
    collect_atoms(e.items[1], out);
    collect_atoms(e.items[2], out);
    return;
  }
  syntax(e, "unknown value form '" + h + "'");
}

Event to_event(const SExpr& e) {
  std::vector<Atom> atoms;
  collect_atoms(e, atoms);
  return Event(std::move(atoms));
}

Rational to_rational(const SExpr& e) {
  if (e.kind != SExpr::Kind::Atom) syntax(e, "expected a rational");
  try {
    return parse_rational(e.text);
  } catch (const Error& err) {
    throw err.at(e.offset);
  }
}

Matrix to_matrix(const SExpr& e) {
  if (e.kind != SExpr::Kind::List || e.items.empty()) syntax(e, "expected a non-empty matrix");
  Matrix rows;
  for (const auto& row : e.items) {
    if (row.kind != SExpr::Kind::List || row.items.empty()) syntax(row, "expected a non-empty row");
    std::vector<Rational> r;
    for (const auto& x : row.items) r.push_back(to_rational(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Term to_term(const SExpr& e) {
  const std::string& h = head(e);
  try {
    if (h == "id") { expect_arity(e, 1); return Term::id(to_type(e.items[1])); }
    if (h == "swap") { expect_arity(e, 2); return Term::swap(to_type(e.items[1]), to_type(e.items[2])); }
    if (h == "copy") { expect_arity(e, 1); return Term::copy(to_type(e.items[1])); }
    if (h == "del") { expect_arity(e, 1); return Term::del(to_type(e.items[1])); }
    if (h == "lit") {
      expect_arity(e, 3);
      return Term::lit(to_type(e.items[1]), to_type(e.items[2]), to_matrix(e.items[3]));
    }
    if (h == "const") { expect_arity(e, 2); return Term::constant(to_type(e.items[1]), to_event(e.items[2])); }
    if (h == "seq") { expect_arity(e, 2); return Term::seq(to_term(e.items[1]), to_term(e.items[2])); }
    if (h == "par") { expect_arity(e, 2); return Term::par(to_term(e.items[1]), to_term(e.items[2])); }
    if (h == "mix") {
      expect_arity(e, 3);
      return Term::mix(to_rational(e.items[1]), to_term(e.items[2]), to_term(e.items[3]));
    }
    if (h == "apply") { expect_arity(e, 2); return Term::apply(to_type(e.items[1]), to_type(e.items[2])); }
    if (h == "spec") { expect_arity(e, 0); return Term::spec(); }
  } catch (const Error& err) {
    throw err.at(e.offset);
  }
  syntax(e, "unknown term form '" + h + "'");
}

void print_matrix(const Matrix& m, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += '(';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ' ';
      out += to_string(m[i][j]);
    }
    out += ')';
  }
  out += ')';
}

void print_into(const Term& t, std::string& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Id: out += "(id " + to_string(t.type()) + ")"; return;
    case K::Swap: out += "(swap " + to_string(t.type()) + " " + to_string(t.second_type()) + ")"; return;
    case K::Copy: out += "(copy " + to_string(t.type()) + ")"; return;
    case K::Del: out += "(del " + to_string(t.type()) + ")"; return;
    case K::Lit:
      out += "(lit " + to_string(t.type()) + " " + to_string(t.second_type()) + " ";
      print_matrix(t.matrix(), out);
      out += ')';
      return;
    case K::Const: out += "(const " + to_string(t.type()) + " " + to_string(t.value()) + ")"; return;
    case K::Seq:
    case K::Par:
      out += t.kind() == K::Seq ? "(seq " : "(par ";
      print_into(t.first(), out);
      out += ' ';
      print_into(t.second(), out);
      out += ')';
      return;
    case K::Mix:
      out += "(mix " + to_string(t.weight()) + " ";
      print_into(t.first(), out);
      out += ' ';
      print_into(t.second(), out);
      out += ')';
      return;
    case K::Apply: out += "(apply " + to_string(t.type()) + " " + to_string(t.second_type()) + ")"; return;
    case K::Spec: out += "(spec)"; return;
  }
}

void flatten_chain(const Term& t, Term::Kind kind, std::vector<Term>& leaves) {
  if (t.kind() == kind) {
    flatten_chain(t.first(), kind, leaves);
    flatten_chain(t.second(), kind, leaves);
    return;
  }
  Term n = normalize(t);
  if (n.kind() == kind) {
    flatten_chain(n.first(), kind, leaves);
    flatten_chain(n.second(), kind, leaves);
    return;
  }
  leaves.push_back(std::move(n));
}

template <typename Combine>
Term right_nest(std::vector<Term> parts, Combine combine) {
  Term acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = combine(parts[i], acc);
  return acc;
}

Term normalize_seq(const Term& t) {
  std::vector<Term> leaves;
  flatten_chain(t, Term::Kind::Seq, leaves);
  std::vector<Term> kept;
  for (auto& l : leaves)
    if (l.kind() != Term::Kind::Id) kept.push_back(std::move(l));
  if (kept.empty()) return Term::id(t.dom());
  return right_nest(std::move(kept), [](const Term& a, const Term& b) { return Term::seq(a, b); });
}

Term normalize_par(const Term& t) {
  std::vector<Term> leaves;
  flatten_chain(t, Term::Kind::Par, leaves);
  std::vector<Term> kept;
  for (auto& l : leaves) {
    if (l.kind() == Term::Kind::Id) {
      if (l.type().is_unit()) continue;
      if (!kept.empty() && kept.back().kind() == Term::Kind::Id) {
        kept.back() = Term::id(kept.back().type() * l.type());
        continue;
      }
    }
    kept.push_back(std::move(l));
  }
  if (kept.empty()) return Term::id(TypeExpr::unit());
  return right_nest(std::move(kept), [](const Term& a, const Term& b) { return Term::par(a, b); });
}

}  // namespace

Term parse(std::string_view text) { return to_term(Reader(text).read_all()); }

TypeExpr parse_type(std::string_view text) { return to_type(Reader(text).read_all()); }

Event parse_value(std::string_view text) { return to_event(Reader(text).read_all()); }

std::vector<Event> parse_value_list(std::string_view text) {
  SExpr e = Reader(text).read_all();
  if (e.kind != SExpr::Kind::List) syntax(e, "expected a parenthesized list of values");
  std::vector<Event> out;
  for (const auto& item : e.items) out.push_back(to_event(item));
  return out;
}

Signature typecheck(const Term& t) { return t.signature(); }

Term normalize(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Swap:
      if (t.type().is_unit()) return Term::id(t.second_type());
      if (t.second_type().is_unit()) return Term::id(t.type());
      return t;
    case K::Copy:
    case K::Del:
      if (t.type().is_unit()) return Term::id(TypeExpr::unit());
      return t;
    case K::Seq: return normalize_seq(t);
    case K::Par: return normalize_par(t);
    case K::Mix: return Term::mix(t.weight(), normalize(t.first()), normalize(t.second()));
    default: return t;
  }
}

std::string print(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

Code serialize(const Term& t) { return Code{print(normalize(t))}; }

}  // namespace causal
