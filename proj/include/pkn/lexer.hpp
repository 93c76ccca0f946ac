#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pkn {

enum class TokenKind {
    Identifier,
    Keyword,
    Number,
    Variable,   // lexeme without the "?" marker; empty = anonymous
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Colon,
    DoubleColon,
    Newline,
    End,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;
    int column = 1;
};

/// Splits PKN text into tokens. Comments run from '#' to end of line.
/// "::" lexes as double-colon, single ":" as colon. Throws LexError on
/// illegal characters, with position.
std::vector<Token> tokenize(std::string_view text);

bool is_keyword(std::string_view word);

}  // namespace pkn
