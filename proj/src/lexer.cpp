#include "pkn/lexer.hpp"

#include <array>
#include <cctype>

#include "pkn/errors.hpp"

namespace pkn {

namespace {

constexpr std::array<std::string_view, 19> kKeywords = {
    "of",      "includes",  "is",           "implies",   "and",
    "for",     "where",     "from",         "which",     "count",
    "few",     "many",      "most",         "is-a",      "kind-of",
    "similar-to", "greater-than", "less-than", "excludes"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

bool ident_cont(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_keyword(std::string_view word) {
    for (auto k : kKeywords) {
        if (k == word) return true;
    }
    return false;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    size_t i = 0;
    auto emit = [&](TokenKind kind, std::string lexeme, int l, int c) {
        out.push_back(Token{kind, std::move(lexeme), l, c});
    };
    while (i < text.size()) {
        char c = text[i];
        int tl = line, tc = column;
        if (c == '\n') {
            emit(TokenKind::Newline, "\n", tl, tc);
            ++i;
            ++line;
            column = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++column;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
                ++column;
            }
            continue;
        }
        if (c == '(') { emit(TokenKind::LParen, "(", tl, tc); ++i; ++column; continue; }
        if (c == ')') { emit(TokenKind::RParen, ")", tl, tc); ++i; ++column; continue; }
        if (c == '{') { emit(TokenKind::LBrace, "{", tl, tc); ++i; ++column; continue; }
        if (c == '}') { emit(TokenKind::RBrace, "}", tl, tc); ++i; ++column; continue; }
        if (c == ',') { emit(TokenKind::Comma, ",", tl, tc); ++i; ++column; continue; }
        if (c == ':') {
            if (i + 1 < text.size() && text[i + 1] == ':') {
                emit(TokenKind::DoubleColon, "::", tl, tc);
                i += 2;
                column += 2;
            } else {
                emit(TokenKind::Colon, ":", tl, tc);
                ++i;
                ++column;
            }
            continue;
        }
        if (c == '?') {
            size_t start = ++i;
            ++column;
            while (i < text.size() && ident_cont(text[i])) {
                ++i;
                ++column;
            }
            emit(TokenKind::Variable, std::string(text.substr(start, i - start)),
                 tl, tc);
            continue;
        }
        if (ident_start(c)) {
            size_t start = i;
            while (i < text.size() && ident_cont(text[i])) {
                ++i;
                ++column;
            }
            std::string word(text.substr(start, i - start));
            TokenKind kind =
                is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            emit(kind, std::move(word), tl, tc);
            continue;
        }
        if (digit(c) || (c == '-' && i + 1 < text.size() && digit(text[i + 1]))) {
            size_t start = i;
            if (text[i] == '-') { ++i; ++column; }
            while (i < text.size() && digit(text[i])) { ++i; ++column; }
            if (i + 1 < text.size() && text[i] == '.' && digit(text[i + 1])) {
                ++i; ++column;
                while (i < text.size() && digit(text[i])) { ++i; ++column; }
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                size_t j = i + 1;
                if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
                if (j < text.size() && digit(text[j])) {
                    while (i < j) { ++i; ++column; }
                    while (i < text.size() && digit(text[i])) { ++i; ++column; }
                }
            }
            emit(TokenKind::Number, std::string(text.substr(start, i - start)),
                 tl, tc);
            continue;
        }
        throw LexError(std::string("illegal character '") + c + "'", tl, tc);
    }
    out.push_back(Token{TokenKind::End, "", line, column});
    return out;
}

}  // namespace pkn
