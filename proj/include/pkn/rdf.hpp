#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pkn/graph.hpp"

namespace pkn {
namespace rdf {

/// Project-owned namespace; PKN names map to IRIs under it by
/// percent-encoding (prefixed names keep an encoded colon, never a fake
/// namespace).
inline constexpr std::string_view kNamespace = "http://pkn.example.org/ns#";
inline constexpr std::string_view kRdfNamespace =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

struct Node {
    enum class Kind {
        Blank,    // statement reification node, label bN
        List,     // collection chain node, label lN
        Vocab,    // prefixed vocabulary term: pkn:descriptor, rdf:first, ...
        Resource, // full IRI
        Literal,  // string literal
        NumberLit // plain numeric literal
    };
    Kind kind = Kind::Vocab;
    std::string value;

    bool operator==(const Node&) const = default;
};

struct Triple {
    Node subject;
    Node predicate;
    Node object;

    bool operator==(const Triple&) const = default;
};

std::string percent_encode(std::string_view s);

/// Reifies every statement (including nested sub-graph and implication
/// condition statements) as one blank node _:bN; referent/scope/antecedent
/// lists become RDF collections chained through _:lN nodes.
std::vector<Triple> to_triples(const KnowledgeGraph& graph);

/// Deterministic Turtle: prefix header, blank nodes as _:bN, collections in
/// ( ... ) syntax, numbers as plain literals.
std::string to_turtle(const KnowledgeGraph& graph);

/// Number of reification nodes the mapping must mint for a graph (statement
/// count including nested statements).
std::size_t expected_blank_nodes(const KnowledgeGraph& graph);

}  // namespace rdf
}  // namespace pkn
