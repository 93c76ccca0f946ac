#include "pkn/parser.hpp"

#include <cstdlib>

#include "pkn/errors.hpp"
#include "pkn/lexer.hpp"

namespace pkn {

namespace {

bool is_quantifier_word(std::string_view w) {
    return w == "which" || w == "count" || w == "few" || w == "many" ||
           w == "most";
}

Quantifier quantifier_from_word(std::string_view w) {
    if (w == "which") return Quantifier::Which;
    if (w == "count") return Quantifier::Count;
    if (w == "few") return Quantifier::Few;
    if (w == "many") return Quantifier::Many;
    return Quantifier::Most;
}

bool is_operator_keyword(std::string_view w) {
    return w == "is" || w == "includes" || w == "excludes" ||
           w == "greater-than" || w == "less-than";
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ParseResult document() {
        ParseResult out;
        while (true) {
            skip_newlines();
            if (at(TokenKind::End)) break;
            try {
                out.items.push_back(item());
                if (!at(TokenKind::End)) expect_newline();
            } catch (ParseError& e) {
                out.errors.push_back(std::move(e));
                recover();
            }
        }
        return out;
    }

    Statement single_statement() {
        skip_newlines();
        Statement s = statement(statement_end());
        finish();
        return s;
    }

    Query single_query() {
        skip_newlines();
        Query q = query();
        finish();
        return q;
    }

    Condition single_condition() {
        skip_newlines();
        Condition c = condition(false);
        finish();
        return c;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    bool at(TokenKind k) const { return peek().kind == k; }
    bool at_word(std::string_view w) const {
        return (peek().kind == TokenKind::Keyword ||
                peek().kind == TokenKind::Identifier) &&
               peek().lexeme == w;
    }
    bool at_name() const {
        return peek().kind == TokenKind::Identifier ||
               peek().kind == TokenKind::Keyword;
    }

    [[noreturn]] void fail(std::string message,
                           std::vector<std::string> expected = {}) const {
        const Token* t = &peek();
        if (t->kind == TokenKind::End && pos_ > 0) t = &tokens_[pos_ - 1];
        throw ParseError{std::move(message), t->line, t->column,
                         std::move(expected)};
    }

    void skip_newlines() {
        while (at(TokenKind::Newline)) advance();
    }

    void expect_newline() {
        if (at(TokenKind::Newline)) {
            advance();
            return;
        }
        if (!at(TokenKind::End)) {
            fail("expected end of statement, got '" + peek().lexeme + "'",
                 {"newline"});
        }
    }

    void finish() {
        skip_newlines();
        if (!at(TokenKind::End)) {
            fail("trailing input after statement: '" + peek().lexeme + "'");
        }
    }

    /// Skips to the next newline at depth 0 (statement-level recovery).
    void recover() {
        int depth = 0;
        while (!at(TokenKind::End)) {
            TokenKind k = peek().kind;
            if (k == TokenKind::LBrace || k == TokenKind::LParen) ++depth;
            if (k == TokenKind::RBrace || k == TokenKind::RParen) --depth;
            if (k == TokenKind::Newline && depth <= 0) {
                advance();
                return;
            }
            advance();
        }
    }

    /// Index of the token ending the current statement: a newline at brace /
    /// paren depth 0, an unmatched closing brace, or End.
    size_t statement_end() const {
        int depth = 0;
        for (size_t j = pos_; j < tokens_.size(); ++j) {
            TokenKind k = tokens_[j].kind;
            if (k == TokenKind::LBrace || k == TokenKind::LParen) ++depth;
            if (k == TokenKind::RBrace || k == TokenKind::RParen) {
                if (depth == 0) return j;
                --depth;
            }
            if (k == TokenKind::Newline && depth == 0) return j;
            if (k == TokenKind::End) return j;
        }
        return tokens_.size() - 1;
    }

    bool span_has(size_t limit, TokenKind kind, std::string_view word = {}) const {
        int depth = 0;
        for (size_t j = pos_; j < limit; ++j) {
            TokenKind k = tokens_[j].kind;
            if (k == TokenKind::LBrace || k == TokenKind::LParen) ++depth;
            else if (k == TokenKind::RBrace || k == TokenKind::RParen) --depth;
            else if (depth == 0 && k == kind &&
                     (word.empty() || tokens_[j].lexeme == word)) {
                return true;
            }
        }
        return false;
    }

    DocumentItem item() {
        if (peek().kind == TokenKind::Keyword &&
            is_quantifier_word(peek().lexeme) &&
            peek(1).kind == TokenKind::Variable) {
            return query();
        }
        return statement(statement_end());
    }

    // Disambiguation: analogy (contains ::), implication (contains implies),
    // else property / relation from the first term onward.
    Statement statement(size_t limit) {
        if (span_has(limit, TokenKind::DoubleColon)) return analogy();
        if (span_has(limit, TokenKind::Keyword, "implies")) return implication();
        return to_statement(condition(true));
    }

    Statement analogy() {
        AnalogyStatement a;
        a.a = analogy_atom(false);
        expect_colon();
        a.b = analogy_atom(false);
        if (!at(TokenKind::DoubleColon)) {
            fail("expected '::' in analogy", {"::"});
        }
        advance();
        a.c = analogy_atom(false);
        expect_colon();
        a.d = analogy_atom(true);
        return make_statement(std::move(a));
    }

    void expect_colon() {
        if (!at(TokenKind::Colon)) fail("expected ':' in analogy", {":"});
        advance();
    }

    Term analogy_atom(bool allow_anonymous) {
        if (at(TokenKind::Variable)) {
            std::string name = advance().lexeme;
            if (name.empty() && !allow_anonymous) {
                fail("anonymous '?' is only allowed in the final analogy position");
            }
            return Variable(std::move(name));
        }
        if (at(TokenKind::Number)) return number();
        if (at_name()) return Name(advance().lexeme);
        fail("expected analogy term", {"name", "number", "variable"});
    }

    Statement implication() {
        ImplicationStatement imp;
        imp.antecedents.push_back(condition(false));
        while (at_word("and")) {
            advance();
            imp.antecedents.push_back(condition(false));
        }
        if (!at_word("implies")) fail("expected 'implies'", {"implies"});
        advance();
        imp.consequents.push_back(condition(false));
        while (at_word("and")) {
            advance();
            imp.consequents.push_back(condition(false));
        }
        if (at(TokenKind::LParen)) imp.metadata = metadata();
        return make_statement(std::move(imp));
    }

    Condition condition(bool allow_metadata) {
        Term first = term();
        if (at_word("of")) {
            advance();
            if (!is_name(first)) {
                fail("property descriptor must be a name");
            }
            PropertyStatement p;
            p.descriptor = std::move(first);
            p.argument = term();
            p.op = operator_word();
            p.referent.push_back(term());
            while (at(TokenKind::Comma)) {
                advance();
                p.referent.push_back(term());
            }
            if (at_word("for")) {
                advance();
                p.scope = scope_names();
            }
            if (allow_metadata && at(TokenKind::LParen)) p.metadata = metadata();
            return p;
        }
        RelationStatement r;
        r.subject = std::move(first);
        if (!at_name()) {
            fail("expected relationship name after '" + serialize_head(r.subject) +
                     "'",
                 {"name"});
        }
        r.relationship = name_chain();
        r.object = term();
        if (at_word("for")) {
            advance();
            r.scope = scope_names();
        }
        if (allow_metadata && at(TokenKind::LParen)) r.metadata = metadata();
        return r;
    }

    static std::string serialize_head(const Term& t) {
        if (const auto* n = std::get_if<Name>(&t)) return n->full();
        return "term";
    }

    std::string operator_word() {
        if (peek().kind == TokenKind::Identifier ||
            (peek().kind == TokenKind::Keyword &&
             is_operator_keyword(peek().lexeme))) {
            return advance().lexeme;
        }
        fail("expected property operator", {"is", "includes", "operator name"});
    }

    std::vector<Term> scope_names() {
        std::vector<Term> out;
        if (!at_name()) fail("expected scope name after 'for'", {"name"});
        out.push_back(name_chain());
        while (at(TokenKind::Comma)) {
            advance();
            if (!at_name()) fail("expected scope name", {"name"});
            out.push_back(name_chain());
        }
        return out;
    }

    Metadata metadata() {
        advance();  // (
        Metadata m;
        skip_newlines();
        while (!at(TokenKind::RParen)) {
            if (!at_name()) fail("expected parameter name", {"name"});
            std::string name = advance().lexeme;
            if (!at_name()) {
                fail("expected qualitative value for parameter '" + name + "'",
                     {"none", "very-low", "low", "medium", "high", "very-high",
                      "certain"});
            }
            Token value = advance();
            auto q = qualitative_from_string(value.lexeme);
            if (!q) {
                throw ParseError{"unknown qualitative value '" + value.lexeme + "'",
                                 value.line,
                                 value.column,
                                 {"none", "very-low", "low", "medium", "high",
                                  "very-high", "certain"}};
            }
            if (!m.set(std::move(name), *q)) {
                throw ParseError{
                    "duplicate metadata parameter", value.line, value.column, {}};
            }
            skip_newlines();
            if (at(TokenKind::Comma)) {
                advance();
                skip_newlines();
            } else {
                break;
            }
        }
        if (!at(TokenKind::RParen)) fail("expected ')'", {")"});
        advance();
        return m;
    }

    Term term() {
        if (at(TokenKind::Variable)) {
            std::string name = advance().lexeme;
            if (name.empty()) {
                fail("variables outside analogies require a name");
            }
            return Variable(std::move(name));
        }
        if (at(TokenKind::Number)) return number();
        if (at(TokenKind::LBrace)) return subgraph();
        if (at_name()) return name_chain();
        fail("expected term, got '" + peek().lexeme + "'",
             {"name", "number", "variable", "{"});
    }

    Term number() {
        const Token& t = advance();
        return Number(std::strtod(t.lexeme.c_str(), nullptr));
    }

    Term name_chain() {
        Name n;
        n.base = advance().lexeme;
        while (at(TokenKind::Colon) &&
               (peek(1).kind == TokenKind::Identifier ||
                peek(1).kind == TokenKind::Keyword)) {
            advance();
            n.prefixes.push_back(std::move(n.base));
            n.base = advance().lexeme;
        }
        return n;
    }

    Term subgraph() {
        advance();  // {
        SubGraph sg;
        skip_newlines();
        while (!at(TokenKind::RBrace)) {
            if (at(TokenKind::End)) fail("unterminated sub-graph", {"}"});
            sg.statements.push_back(statement(statement_end()));
            skip_newlines();
        }
        advance();  // }
        if (sg.statements.empty()) {
            fail("sub-graph must contain at least one statement");
        }
        return Term(std::move(sg));
    }

    Query query() {
        Query q;
        q.quantifier = quantifier_from_word(advance().lexeme);
        if (!at(TokenKind::Variable) || peek().lexeme.empty()) {
            fail("expected query head variable", {"?name"});
        }
        q.head = advance().lexeme;
        if (!at_word("where")) fail("expected 'where'", {"where"});
        advance();
        q.where.push_back(condition(false));
        while (at_word("and")) {
            advance();
            q.where.push_back(condition(false));
        }
        if (at_word("from")) {
            advance();
            q.from.push_back(condition(false));
            while (at_word("and")) {
                advance();
                q.from.push_back(condition(false));
            }
        }
        bool needs_from = q.quantifier == Quantifier::Few ||
                          q.quantifier == Quantifier::Many ||
                          q.quantifier == Quantifier::Most;
        if (needs_from && q.from.empty()) {
            fail("missing from clause: '" + std::string(to_string(q.quantifier)) +
                     "' needs a reference class",
                 {"from"});
        }
        std::set<std::string> where_vars;
        for (const auto& c : q.where) collect_variables(c, where_vars);
        if (!where_vars.count(q.head)) {
            fail("head variable ?" + q.head + " does not occur in the where clause");
        }
        if (!q.from.empty()) {
            std::set<std::string> from_vars;
            for (const auto& c : q.from) collect_variables(c, from_vars);
            if (!from_vars.count(q.head)) {
                fail("head variable ?" + q.head +
                     " does not occur in the from clause");
            }
        }
        return q;
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

ParseError from_lex_error(const LexError& e) {
    return ParseError{e.what(), e.line, e.column, {}};
}

}  // namespace

ParseResult parse_document(std::string_view text) {
    std::vector<Token> tokens;
    try {
        tokens = tokenize(text);
    } catch (const LexError& e) {
        return ParseResult{{}, {from_lex_error(e)}};
    }
    return Parser(std::move(tokens)).document();
}

std::variant<Statement, ParseError> parse_statement(std::string_view text) {
    try {
        return Parser(tokenize(text)).single_statement();
    } catch (const LexError& e) {
        return from_lex_error(e);
    } catch (ParseError& e) {
        return std::move(e);
    }
}

std::variant<Query, ParseError> parse_query(std::string_view text) {
    try {
        return Parser(tokenize(text)).single_query();
    } catch (const LexError& e) {
        return from_lex_error(e);
    } catch (ParseError& e) {
        return std::move(e);
    }
}

std::variant<Condition, ParseError> parse_condition(std::string_view text) {
    try {
        return Parser(tokenize(text)).single_condition();
    } catch (const LexError& e) {
        return from_lex_error(e);
    } catch (ParseError& e) {
        return std::move(e);
    }
}

}  // namespace pkn
