#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "causal/event.hpp"
#include "causal/term.hpp"
#include "causal/type.hpp"

namespace causal {

// Term grammar (ASCII s-expressions, whitespace-insensitive):
//
//   term := (id TY) | (swap TY TY) | (copy TY) | (del TY)
//         | (lit TY TY MAT) | (const TY VAL)
//         | (seq term term) | (par term term) | (mix RAT term term)
//         | (apply TY TY) | (spec)
//   TY   := unit | (enum NAME NAT) | code | (tensor TY TY)
//   MAT  := ( ROW+ )   ROW := ( RAT+ )   RAT := INT | INT/POSINT
//   VAL  := NAT | (code "ESCAPED") | (pair VAL VAL) | unit
//
// Failures throw Error with the byte offset of the offending expression.

Term parse(std::string_view text);
TypeExpr parse_type(std::string_view text);
Event parse_value(std::string_view text);
/// "(VAL VAL ...)"
std::vector<Event> parse_value_list(std::string_view text);

Signature typecheck(const Term& t);

/// Unit and associativity normal form: seq and par chains are flattened and
/// rebuilt right-nested, identities are dropped from seq chains, adjacent
/// identities in a par chain are merged, unit identities are dropped from
/// par chains, and swap/copy/del at the unit type become identities.
Term normalize(const Term& t);

/// Prints t as-is, without normalizing.
std::string print(const Term& t);

/// Canonical code of t: print(normalize(t)).
Code serialize(const Term& t);

}  // namespace causal
