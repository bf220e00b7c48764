#pragma once

#include <string>
#include <vector>

#include "dehn/knot.hpp"

namespace dehn {

struct SyntaxError : ParseError {
    using ParseError::ParseError;
};

struct UnknownAttributeError : ParseError {
    using ParseError::ParseError;
};

// Parses a knot expression:
//   expr  := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")"
//          | "Sat(" attrs ";" expr ")" | "Sum(" expr { "," expr } ")"
//          | "Hyp(" [attrs] ")"
//   attrs := key "=" value { "," key "=" value }
// Keys, value formats and the attribute/constructor pairing are documented in
// docs/dsl.md.  The result is validated; to_dsl(parse_expr(s)) is the
// canonical form of s and parse_expr(to_dsl(t)) == t.
KnotPtr parse_expr(const std::string& text);

// "p" or "p/q"; throws SyntaxError.
Slope parse_slope(const std::string& text);

struct QueryLine {
    std::string name;
    std::vector<Slope> slopes;
    int depth = -1;
    bool trace = false;
    bool assume_ctf_conjecture = false;
};

// A batch document: named definitions plus query lines.
//   def <name> = <expr>
//   query <name> <slope | {s1,s2,...} | p=<ints> q=<ints>> [--trace]
//         [--depth=N] [--assume-conjecture-1.6]
// '#' starts a comment.  Names are unique and queries refer to defined names.
struct DslDocument {
    std::vector<std::pair<std::string, KnotPtr>> definitions;  // in file order
    std::vector<QueryLine> queries;

    const KnotPtr* find(const std::string& name) const;
};

DslDocument parse_document(const std::string& text);

// Integer list syntax used by scan and batch grids: "1,2,5..9,-3".
std::vector<Int> parse_int_list(const std::string& text);

// The reduced slope grid {p/q : p in ps, q in qs, q != 0}, deduplicated, in
// p-major input order.
std::vector<Slope> slope_grid(const std::vector<Int>& ps, const std::vector<Int>& qs);

}  // namespace dehn
