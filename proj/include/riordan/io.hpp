#ifndef RIORDAN_IO_HPP
#define RIORDAN_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "riordan/group_ops.hpp"
#include "riordan/pair.hpp"
#include "riordan/seq_char.hpp"

namespace riordan {

/// Parse failure with 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column);
  int line;
  int column;
};

/// Comma-separated rationals, positional from t^0: "1, 1, 1/2, -3".
Series parse_series(std::string_view text);
std::string format_series(const Series& s);

/// Two labeled series lines: "g: ..." then "f: ...".
RiordanPair parse_pair(std::string_view text);
std::string format_pair(const RiordanPair& p);

/// One row per line, entries space-separated.
Triangle parse_triangle(std::string_view text);
std::string format_triangle(const Triangle& t);

using ParsedInput = std::variant<Series, RiordanPair, Triangle>;

/// Detects which of the three grammars the text is in and parses it.
ParsedInput parse_input(std::string_view text);

std::string format_verdict(const BSeqVerdict& v);
std::string format_membership(const MembershipResult& r);

}  // namespace riordan

#endif
