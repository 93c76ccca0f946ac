#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pkn/statement.hpp"

namespace pkn {

struct ParseError {
    std::string message;
    int line = 1;
    int column = 1;
    std::vector<std::string> expected;
};

/// Documents may contain statements and query lines (a line starting with a
/// quantifier keyword followed by a variable parses as a query).
using DocumentItem = std::variant<Statement, Query>;

struct ParseResult {
    std::vector<DocumentItem> items;
    std::vector<ParseError> errors;
};

/// Parses a whole document with error recovery: the first error aborts the
/// enclosing statement, parsing resumes at the next statement.
ParseResult parse_document(std::string_view text);

/// Single-construct entry points; the input must contain exactly one item.
std::variant<Statement, ParseError> parse_statement(std::string_view text);
std::variant<Query, ParseError> parse_query(std::string_view text);
std::variant<Condition, ParseError> parse_condition(std::string_view text);

}  // namespace pkn
