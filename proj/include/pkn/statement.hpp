#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pkn/term.hpp"

namespace pkn {

/// descriptor of argument OPERATOR referent[, referent...] [for scope] (meta)
struct PropertyStatement {
    Term descriptor;              // Name in asserted facts
    Term argument;
    std::string op;               // is, includes, excludes, greater-than, ...
    std::vector<Term> referent;   // order preserved, non-empty
    std::vector<Term> scope;      // Names; empty = context-free
    Metadata metadata;

    bool operator==(const PropertyStatement&) const = default;
};

/// subject RELATIONSHIP object [for scope] (meta)
struct RelationStatement {
    Term subject;
    Term relationship;            // Name, prefix chain allowed
    Term object;
    std::vector<Term> scope;
    Metadata metadata;

    bool operator==(const RelationStatement&) const = default;
};

/// A property or relation pattern, possibly containing variables.
using Condition = std::variant<PropertyStatement, RelationStatement>;

struct ImplicationStatement {
    std::vector<Condition> antecedents;   // non-empty
    std::vector<Condition> consequents;   // non-empty
    Metadata metadata;

    /// All variable names appearing anywhere in the statement.
    std::set<std::string> variables() const;
    /// Variables appearing in consequents only (skolemized by the reasoner).
    std::set<std::string> free_consequent_variables() const;

    bool operator==(const ImplicationStatement&) const = default;
};

/// a:b::c:d — at most one of the four positions may be a variable.
struct AnalogyStatement {
    Term a, b, c, d;

    bool operator==(const AnalogyStatement&) const = default;
};

struct Statement {
    std::variant<PropertyStatement, RelationStatement, ImplicationStatement,
                 AnalogyStatement>
        node;

    bool operator==(const Statement&) const = default;
};

inline Statement make_statement(PropertyStatement s) { return Statement{std::move(s)}; }
inline Statement make_statement(RelationStatement s) { return Statement{std::move(s)}; }
inline Statement make_statement(ImplicationStatement s) { return Statement{std::move(s)}; }
inline Statement make_statement(AnalogyStatement s) { return Statement{std::move(s)}; }

Statement to_statement(const Condition& c);
/// Property/relation statements convert to conditions; others have no
/// condition form and return nullopt.
std::optional<Condition> as_condition(const Statement& s);

/// Variable names occurring anywhere in a term / condition.
void collect_variables(const Term& t, std::set<std::string>& out);
void collect_variables(const Condition& c, std::set<std::string>& out);
bool is_ground(const Condition& c);

enum class Quantifier { Which, Count, Few, Many, Most };

std::string_view to_string(Quantifier q);

/// which/count/few/many/most ?x where ... [from ...]
struct Query {
    Quantifier quantifier = Quantifier::Which;
    std::string head;                 // head variable, without the "?" marker
    std::vector<Condition> where;
    std::vector<Condition> from;      // required for few/many/most

    bool operator==(const Query&) const = default;
};

}  // namespace pkn
