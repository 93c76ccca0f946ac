#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pkn/statement.hpp"

namespace pkn {

using StatementId = std::size_t;

/// Variable name -> concrete term.
using Binding = std::map<std::string, Term>;

/// One-way unification of a pattern term against a concrete term, extending
/// the binding. Anonymous variables match anything without binding.
bool unify_term(const Term& pattern, const Term& value, Binding& binding);

/// Unifies a condition pattern against a stored statement. For includes and
/// excludes the pattern referent list matches as a sub-multiset of the stored
/// list; for all other operators referents match positionally. An empty
/// pattern scope matches any stored scope; otherwise every pattern scope name
/// must appear in the stored scope. Metadata is ignored.
bool unify_condition(const Condition& pattern, const Condition& value,
                     Binding& binding);

Term substitute(const Term& t, const Binding& binding);
Condition substitute(const Condition& c, const Binding& binding);

/// Immutable, indexed snapshot of PKN statements. Mutation returns a new
/// snapshot; snapshots are safely shareable across threads.
class KnowledgeGraph {
public:
    struct Match {
        StatementId id;
        Binding binding;
    };

    KnowledgeGraph() = default;

    /// Validates and dedups; throws InvalidStatement.
    static KnowledgeGraph from_statements(const std::vector<Statement>& stmts);

    /// New snapshot containing s. Duplicate structural adds return the
    /// existing id and leave the statement list unchanged.
    std::pair<KnowledgeGraph, StatementId> with_statement(const Statement& s) const;

    std::size_t size() const { return statements_.size(); }
    const std::vector<Statement>& statements() const { return statements_; }
    const Statement& statement(StatementId id) const { return statements_.at(id); }
    std::optional<StatementId> find(const Statement& s) const;

    /// Every stored property statement unifiable with the pattern, in
    /// insertion order. Throws UnindexablePattern when both descriptor and
    /// argument are variables.
    std::vector<Match> match_properties(const PropertyStatement& pattern) const;

    /// Relation counterpart; falls back to a scan when nothing is indexable.
    std::vector<Match> match_relations(const RelationStatement& pattern) const;

    const std::vector<StatementId>& implications() const { return implications_; }
    const std::vector<StatementId>& analogies() const { return analogies_; }
    std::vector<StatementId> relations_by_name(const std::string& relationship) const;
    std::vector<StatementId> properties_by_descriptor(const std::string& descriptor) const;

    /// Transitive closure over kind-of relations, breadth-first, cycle-safe.
    /// The start concept is never reported.
    std::vector<Term> kind_of_ancestors(const Term& start) const;
    std::vector<Term> kind_of_descendants(const Term& start) const;

    /// Index consistency audit: every stored statement is reachable through
    /// each index that should cover it and no index entry is stale.
    bool audit_indexes(std::string* why = nullptr) const;

private:
    StatementId add_in_place(Statement s);
    static void validate(const Statement& s);

    std::vector<Statement> statements_;
    std::map<std::string, StatementId> by_key_;
    std::unordered_map<std::string, std::vector<StatementId>> by_descriptor_op_;
    std::unordered_map<std::string, std::vector<StatementId>> by_relationship_;
    std::unordered_map<std::string, std::vector<StatementId>> by_head_;
    std::vector<StatementId> implications_;
    std::vector<StatementId> analogies_;
};

}  // namespace pkn
